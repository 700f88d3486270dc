#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "assoc/errors.hpp"

namespace assoc {

// Depth sequence of a DFS tree: starts 0,1 and each step rises by at most
// one while staying >= 1. Sequences of length 1 are just (0).
using ZagSequence = std::vector<int>;

bool is_zag_sequence(const ZagSequence& d);
std::string zag_to_string(const ZagSequence& d);  // "0,1,2,1"

// Balanced lattice path over steps 'U' (towards the leaves) and 'D'
// (backtrack); never dips below the axis.
struct DyckPath {
    std::string steps;
    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

// Full binary term tree over variables x_1..x_n. Leaves read left to right
// carry indices 1..n exactly once (enforced by parse_bracketing and by the
// tree conversions; structural builders below do not renumber).
class Bracketing {
public:
    struct Node {
        int leaf = 0;  // 1-based variable index; 0 for internal nodes
        int left = -1;
        int right = -1;
        bool is_leaf() const { return leaf != 0; }
    };

    static Bracketing leaf(int index);
    static Bracketing combine(const Bracketing& left, const Bracketing& right);

    int root() const { return root_; }
    const Node& node(int id) const { return nodes_[id]; }
    // Number of leaves, i.e. the size n of the bracketing.
    int size() const { return leaf_count_; }

    // Leaf indices in left-to-right order.
    std::vector<int> leaf_sequence() const;
    // True when leaf_sequence() is exactly 1..n.
    bool is_canonical() const;

    friend bool operator==(const Bracketing& a, const Bracketing& b);

private:
    std::vector<Node> nodes_;
    int root_ = -1;
    int leaf_count_ = 0;
};

// Rooted directed tree on x_1..x_n whose rooted subtrees occupy contiguous
// index intervals. Stored as a parent array: parent_of(v) < v for v >= 1,
// vertex 0 is the root. The constructor validates the interval property
// (parent of v+1 must be v or an ancestor of v) and throws
// std::invalid_argument otherwise.
class DfsTree {
public:
    // parents[0] is ignored (stored as -1); parents[v] for v in [1, n) is the
    // 0-based parent index.
    explicit DfsTree(std::vector<int> parents);

    int size() const { return static_cast<int>(parents_.size()); }
    int parent_of(int v) const { return parents_[v]; }  // v in [1, size())
    int depth_of(int v) const { return depths_[v]; }
    int height() const { return height_; }
    const std::vector<int>& parents() const { return parents_; }
    const std::vector<int>& depths() const { return depths_; }

    // Children of each vertex in increasing index order.
    std::vector<std::vector<int>> children_lists() const;
    // Vertices with no children.
    std::vector<int> leaf_vertices() const;

    friend bool operator==(const DfsTree& a, const DfsTree& b) {
        return a.parents_ == b.parents_;
    }

private:
    std::vector<int> parents_;
    std::vector<int> depths_;
    int height_ = 0;
};

// ===== term syntax =====
//
// Variables are written x<k> (k >= 1, decimal); juxtaposition is the product;
// parentheses are mandatory on every internal node except the outermost.
// Example: "((x1((x2x3)x4))x5)(x6(x7x8))".

Bracketing parse_bracketing(std::string_view text);   // throws ParseError
std::string format_bracketing(const Bracketing& t);   // canonical rendering

// ===== the bijection stack =====

// The graph G(t): edge x_i -> x_j iff some subterm (t1 t2) has leftmost
// variables x_i and x_j. Requires a canonical bracketing.
DfsTree bracketing_to_dfs(const Bracketing& t);
// The unique bracketing t with G(t) = T.
Bracketing dfs_to_bracketing(const DfsTree& tree);

ZagSequence depth_sequence(const DfsTree& tree);
DfsTree zag_to_dfs(const ZagSequence& d);  // throws std::invalid_argument

// Depth-first traversal with backtracking, children in increasing index
// order; parent->child steps are 'U', backtracks 'D'.
DyckPath dfs_to_dyck(const DfsTree& tree);
DfsTree dyck_to_dfs(const DyckPath& path);  // throws ParseError

// ===== enumeration =====

mpz_class catalan(unsigned long k);
// Number of DFS trees of size n (= catalan(n - 1)).
mpz_class total_dfs_trees(int n);

inline constexpr std::uint64_t kDefaultTreeCap = 1'000'000;

// Streams every DFS tree of size n exactly once, in lexicographic order of
// zag sequences. Throws BudgetError on construction when the total count
// would pass the cap.
class DfsTreeEnumerator {
public:
    explicit DfsTreeEnumerator(int n, std::uint64_t max_trees = kDefaultTreeCap);

    std::optional<DfsTree> next();
    // Zag sequence of the tree most recently returned by next().
    const ZagSequence& zag() const { return zag_; }

private:
    int n_ = 0;
    ZagSequence zag_;
    bool fresh_ = true;
    bool done_ = false;
};

}  // namespace assoc
