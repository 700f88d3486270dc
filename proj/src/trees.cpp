#include "assoc/trees.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace assoc {

// ===== zag sequences =====

bool is_zag_sequence(const ZagSequence& d) {
    if (d.empty() || d[0] != 0) return false;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d[i] < 1 || d[i] > d[i - 1] + 1) return false;
    }
    return true;
}

std::string zag_to_string(const ZagSequence& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out;
}

// ===== Bracketing =====

Bracketing Bracketing::leaf(int index) {
    if (index < 1) throw std::invalid_argument("leaf index must be >= 1");
    Bracketing b;
    b.nodes_.push_back(Node{index, -1, -1});
    b.root_ = 0;
    b.leaf_count_ = 1;
    return b;
}

Bracketing Bracketing::combine(const Bracketing& left, const Bracketing& right) {
    if (left.root_ < 0 || right.root_ < 0)
        throw std::invalid_argument("combine of empty bracketing");
    Bracketing b;
    b.nodes_ = left.nodes_;
    const int shift = static_cast<int>(b.nodes_.size());
    for (const Node& n : right.nodes_) {
        Node m = n;
        if (!m.is_leaf()) {
            m.left += shift;
            m.right += shift;
        }
        b.nodes_.push_back(m);
    }
    b.nodes_.push_back(Node{0, left.root_, right.root_ + shift});
    b.root_ = static_cast<int>(b.nodes_.size()) - 1;
    b.leaf_count_ = left.leaf_count_ + right.leaf_count_;
    return b;
}

std::vector<int> Bracketing::leaf_sequence() const {
    std::vector<int> out;
    out.reserve(leaf_count_);
    // Iterative preorder; left child before right gives left-to-right leaves.
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        const Node& n = nodes_[id];
        if (n.is_leaf()) {
            out.push_back(n.leaf);
        } else {
            stack.push_back(n.right);
            stack.push_back(n.left);
        }
    }
    return out;
}

bool Bracketing::is_canonical() const {
    const std::vector<int> seq = leaf_sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

namespace {

bool nodes_equal(const Bracketing& a, int ia, const Bracketing& b, int ib) {
    const Bracketing::Node& na = a.node(ia);
    const Bracketing::Node& nb = b.node(ib);
    if (na.is_leaf() != nb.is_leaf()) return false;
    if (na.is_leaf()) return na.leaf == nb.leaf;
    return nodes_equal(a, na.left, b, nb.left) && nodes_equal(a, na.right, b, nb.right);
}

}  // namespace

bool operator==(const Bracketing& a, const Bracketing& b) {
    if (a.size() != b.size()) return false;
    return nodes_equal(a, a.root(), b, b.root());
}

// ===== DfsTree =====

DfsTree::DfsTree(std::vector<int> parents) : parents_(std::move(parents)) {
    const int n = static_cast<int>(parents_.size());
    if (n < 1) throw std::invalid_argument("DfsTree must have at least one vertex");
    parents_[0] = -1;
    depths_.assign(n, 0);
    for (int v = 1; v < n; ++v) {
        const int p = parents_[v];
        if (p < 0 || p >= v)
            throw std::invalid_argument("DfsTree: parent of vertex " + std::to_string(v + 1) +
                                        " must precede it");
        depths_[v] = depths_[p] + 1;
        height_ = std::max(height_, depths_[v]);
        // Interval property: parent of v is v-1 or one of its ancestors.
        int a = v - 1;
        while (a != p && a > 0) a = parents_[a];
        if (a != p)
            throw std::invalid_argument("DfsTree: vertex " + std::to_string(v + 1) +
                                        " breaks the contiguous-subtree property");
    }
}

std::vector<std::vector<int>> DfsTree::children_lists() const {
    std::vector<std::vector<int>> kids(parents_.size());
    for (int v = 1; v < size(); ++v) kids[parents_[v]].push_back(v);
    return kids;  // ascending by construction
}

std::vector<int> DfsTree::leaf_vertices() const {
    std::vector<char> has_child(parents_.size(), 0);
    for (int v = 1; v < size(); ++v) has_child[parents_[v]] = 1;
    std::vector<int> leaves;
    for (int v = 0; v < size(); ++v)
        if (!has_child[v]) leaves.push_back(v);
    return leaves;
}

// ===== term syntax =====

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    Bracketing run() {
        skip_ws();
        Bracketing first = parse_term();
        skip_ws();
        if (!at_end() && peek() != ')') {
            // Second top-level factor: the outermost parentheses are optional.
            Bracketing second = parse_term();
            first = Bracketing::combine(first, second);
            skip_ws();
        }
        if (!at_end()) fail("unexpected trailing input");
        return first;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("term syntax error at offset " + std::to_string(pos_) + ": " + msg,
                         pos_);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Bracketing parse_term() {
        skip_ws();
        if (at_end()) fail("expected a variable or '('");
        if (peek() == '(') {
            ++pos_;
            Bracketing left = parse_term();
            Bracketing right = parse_term();
            skip_ws();
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
            return Bracketing::combine(left, right);
        }
        if (peek() == 'x') {
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected digits after 'x'");
            long value = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                value = value * 10 + (peek() - '0');
                if (value > 1'000'000'000L) fail("variable index out of range");
                ++pos_;
            }
            if (value < 1) fail("variable index must be >= 1");
            return Bracketing::leaf(static_cast<int>(value));
        }
        fail("expected a variable or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Bracketing parse_bracketing(std::string_view text) {
    TermParser parser(text);
    Bracketing b = parser.run();
    const std::vector<int> seq = b.leaf_sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] != static_cast<int>(i) + 1)
            throw ParseError("variable indices must read x1..xn left to right; leaf " +
                                 std::to_string(i + 1) + " is x" + std::to_string(seq[i]),
                             i);
    }
    return b;
}

namespace {

void render(const Bracketing& t, int id, bool outermost, std::string& out) {
    const Bracketing::Node& n = t.node(id);
    if (n.is_leaf()) {
        out += 'x';
        out += std::to_string(n.leaf);
        return;
    }
    if (!outermost) out += '(';
    render(t, n.left, false, out);
    render(t, n.right, false, out);
    if (!outermost) out += ')';
}

}  // namespace

std::string format_bracketing(const Bracketing& t) {
    std::string out;
    render(t, t.root(), true, out);
    return out;
}

// ===== bijections =====

namespace {

// Returns the leftmost leaf (0-based vertex) of the subterm, recording the
// edge leftmost(left) -> leftmost(right) of every internal node.
int leftmost_and_edges(const Bracketing& t, int id, std::vector<int>& parents) {
    const Bracketing::Node& n = t.node(id);
    if (n.is_leaf()) return n.leaf - 1;
    const int l = leftmost_and_edges(t, n.left, parents);
    const int r = leftmost_and_edges(t, n.right, parents);
    parents[r] = l;
    return l;
}

}  // namespace

DfsTree bracketing_to_dfs(const Bracketing& t) {
    if (!t.is_canonical())
        throw std::invalid_argument("bracketing_to_dfs requires leaves numbered 1..n");
    std::vector<int> parents(t.size(), -1);
    leftmost_and_edges(t, t.root(), parents);
    return DfsTree(std::move(parents));
}

namespace {

Bracketing build_term(const std::vector<std::vector<int>>& kids, int v) {
    Bracketing acc = Bracketing::leaf(v + 1);
    for (const int c : kids[v]) acc = Bracketing::combine(acc, build_term(kids, c));
    return acc;
}

}  // namespace

Bracketing dfs_to_bracketing(const DfsTree& tree) {
    return build_term(tree.children_lists(), 0);
}

ZagSequence depth_sequence(const DfsTree& tree) { return tree.depths(); }

DfsTree zag_to_dfs(const ZagSequence& d) {
    if (!is_zag_sequence(d)) throw std::invalid_argument("not a zag sequence: " + zag_to_string(d));
    const int n = static_cast<int>(d.size());
    std::vector<int> parents(n, -1);
    std::vector<int> path{0};  // path[k] = current vertex at depth k
    for (int v = 1; v < n; ++v) {
        parents[v] = path[d[v] - 1];
        path.resize(d[v]);
        path.push_back(v);
    }
    return DfsTree(std::move(parents));
}

DyckPath dfs_to_dyck(const DfsTree& tree) {
    const std::vector<int>& d = tree.depths();
    const int n = tree.size();
    std::string steps;
    steps.reserve(2 * (n - 1));
    for (int v = 1; v < n; ++v) {
        steps.append(static_cast<std::size_t>(d[v - 1] - d[v] + 1), 'D');
        steps += 'U';
    }
    steps.append(static_cast<std::size_t>(d[n - 1]), 'D');
    return DyckPath{std::move(steps)};
}

DfsTree dyck_to_dfs(const DyckPath& path) {
    const std::string& s = path.steps;
    if (s.size() % 2 != 0)
        throw ParseError("Dyck path has odd length", s.size());
    const int n = static_cast<int>(s.size()) / 2 + 1;
    std::vector<int> parents(n, -1);
    int cur = 0;
    int next = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'U') {
            if (next >= n) throw ParseError("Dyck path is unbalanced (too many 'U')", i);
            parents[next] = cur;
            cur = next++;
        } else if (s[i] == 'D') {
            if (cur == 0) throw ParseError("Dyck path dips below the axis", i);
            cur = parents[cur];
        } else {
            throw ParseError(std::string("Dyck path step must be 'U' or 'D', got '") + s[i] + "'",
                             i);
        }
    }
    if (next != n || cur != 0)
        throw ParseError("Dyck path is unbalanced", s.size());
    return DfsTree(std::move(parents));
}

// ===== enumeration =====

mpz_class catalan(unsigned long k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
    c /= static_cast<unsigned long>(k + 1);
    return c;
}

mpz_class total_dfs_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree size must be >= 1");
    return catalan(static_cast<unsigned long>(n - 1));
}

DfsTreeEnumerator::DfsTreeEnumerator(int n, std::uint64_t max_trees) : n_(n) {
    if (n < 1) throw std::invalid_argument("tree size must be >= 1");
    const mpz_class total = total_dfs_trees(n);
    if (total > mpz_class(static_cast<unsigned long>(max_trees)))
        throw BudgetError("enumerating B_" + std::to_string(n) + " would produce " +
                          total.get_str() + " trees, over the cap of " +
                          std::to_string(max_trees));
    zag_.assign(n, 1);
    zag_[0] = 0;
}

std::optional<DfsTree> DfsTreeEnumerator::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return zag_to_dfs(zag_);
    }
    // Advance to the lexicographic successor: bump the last position that can
    // still grow, reset the tail to its minimum.
    int i = n_ - 1;
    while (i >= 2 && zag_[i] == zag_[i - 1] + 1) --i;
    if (i < 2) {
        done_ = true;
        return std::nullopt;
    }
    ++zag_[i];
    std::fill(zag_.begin() + i + 1, zag_.end(), 1);
    return zag_to_dfs(zag_);
}

}  // namespace assoc
