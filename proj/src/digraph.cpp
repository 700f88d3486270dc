#include "assoc/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace assoc {

// ===== Digraph =====

int Digraph::add_vertex(std::string label) {
    if (index_of(label)) throw std::invalid_argument("duplicate vertex label: " + label);
    labels_.push_back(std::move(label));
    out_.emplace_back();
    return vertex_count() - 1;
}

int Digraph::ensure_vertex(std::string_view label) {
    if (auto idx = index_of(label)) return *idx;
    return add_vertex(std::string(label));
}

bool Digraph::add_edge(int u, int v) {
    auto& row = out_.at(static_cast<std::size_t>(u));
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("edge endpoint out of range");
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it != row.end() && *it == v) return false;
    row.insert(it, v);
    ++edge_count_;
    return true;
}

bool Digraph::has_edge(int u, int v) const {
    const auto& row = out_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::optional<int> Digraph::index_of(std::string_view label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u]) out.emplace_back(u, v);
    return out;
}

bool Digraph::is_symmetric() const {
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u])
            if (!has_edge(v, u)) return false;
    return true;
}

Digraph parse_digraph(std::string_view text, std::ostream* diagnostics) {
    Digraph g;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            g.ensure_vertex(tokens[0]);
        } else if (tokens.size() == 2) {
            const int u = g.ensure_vertex(tokens[0]);
            const int v = g.ensure_vertex(tokens[1]);
            if (!g.add_edge(u, v) && diagnostics)
                *diagnostics << "warning: duplicate edge '" << tokens[0] << ' ' << tokens[1]
                             << "' on line " << line_no << " ignored\n";
        } else {
            throw ParseError("graph line " + std::to_string(line_no) +
                                 ": expected 'u v' or a single vertex label",
                             line_no);
        }
        if (end == text.size()) break;
    }
    return g;
}

// ===== SCC (Kosaraju) =====

namespace {

void dfs_finish_order(const Digraph& g, int start, std::vector<char>& seen,
                      std::vector<int>& order) {
    // Iterative DFS recording finish times.
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    seen[start] = 1;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& out = g.out_neighbors(v);
        if (next < out.size()) {
            const int w = out[next++];
            if (!seen[w]) {
                seen[w] = 1;
                stack.emplace_back(w, 0);
            }
        } else {
            order.push_back(v);
            stack.pop_back();
        }
    }
}

}  // namespace

SccDecomposition scc(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v)
        if (!seen[v]) dfs_finish_order(g, v, seen, order);

    std::vector<std::vector<int>> in(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.out_neighbors(u)) in[v].push_back(u);

    SccDecomposition d;
    d.component_of.assign(n, -1);
    // Processing in decreasing finish time yields components in topological
    // order of the condensation.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (d.component_of[*it] != -1) continue;
        const int id = d.count();
        d.components.emplace_back();
        std::vector<int> stack{*it};
        d.component_of[*it] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            d.components[id].push_back(v);
            for (int u : in[v]) {
                if (d.component_of[u] == -1) {
                    d.component_of[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(d.components[id].begin(), d.components[id].end());
    }

    d.nontrivial.resize(d.count());
    for (int c = 0; c < d.count(); ++c) {
        const auto& verts = d.components[c];
        d.nontrivial[c] = verts.size() > 1 || g.has_edge(verts[0], verts[0]);
    }

    // Condensation reachability closure.
    const int k = d.count();
    d.reaches.assign(k, std::vector<bool>(k, false));
    std::vector<std::vector<int>> cond(k);
    for (int u = 0; u < n; ++u)
        for (int v : g.out_neighbors(u))
            if (d.component_of[u] != d.component_of[v])
                cond[d.component_of[u]].push_back(d.component_of[v]);
    for (int c = k - 1; c >= 0; --c) {  // reverse topological order
        d.reaches[c][c] = true;
        for (int b : cond[c])
            for (int t = 0; t < k; ++t)
                if (d.reaches[b][t]) d.reaches[c][t] = true;
    }
    return d;
}

// ===== whirls =====

namespace {

// Shortest path lengths from src within the induced subgraph on `member`.
std::vector<int> bfs_within(const Digraph& g, const std::vector<char>& member, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.out_neighbors(v)) {
            if (member[w] && dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<WhirlCert> whirl_certificate(const Digraph& g, const std::vector<int>& component) {
    if (component.empty()) throw std::invalid_argument("empty component");
    std::vector<char> member(g.vertex_count(), 0);
    for (int v : component) member[v] = 1;
    if (component.size() == 1 && !g.has_edge(component[0], component[0]))
        throw std::invalid_argument("whirl_certificate requires a nontrivial component");

    // m := length of a shortest cycle inside the component.
    int m = -1;
    for (int v : component) {
        const std::vector<int> dist = bfs_within(g, member, v);
        for (int u : component) {
            if (dist[u] >= 0 && g.has_edge(u, v)) {
                const int len = dist[u] + 1;
                if (m == -1 || len < m) m = len;
            }
        }
    }
    if (m == -1) return std::nullopt;  // unreachable for a nontrivial SCC

    // In a whirl every walk from a fixed root to v has the same length mod m,
    // so BFS distances pin the blocks once the root's block is fixed.
    WhirlCert cert;
    cert.m = m;
    cert.block_of.assign(g.vertex_count(), -1);
    const std::vector<int> dist = bfs_within(g, member, component[0]);
    for (int v : component) {
        if (dist[v] < 0) return std::nullopt;
        cert.block_of[v] = dist[v] % m;
    }
    std::vector<int> block_size(m, 0);
    for (int v : component) ++block_size[cert.block_of[v]];
    for (int b = 0; b < m; ++b)
        if (block_size[b] == 0) return std::nullopt;
    for (int u : component) {
        for (int v : component) {
            const bool expect = cert.block_of[v] == (cert.block_of[u] + 1) % m;
            if (g.has_edge(u, v) != expect) return std::nullopt;
        }
    }
    return cert;
}

// ===== pleasant paths =====

int longest_pleasant_path(const Digraph& g) { return longest_pleasant_path(g, scc(g)); }

int longest_pleasant_path(const Digraph& g, const SccDecomposition& comps) {
    const int n = g.vertex_count();
    std::vector<char> pleasant(n, 0);
    bool any = false;
    for (int v = 0; v < n; ++v) {
        pleasant[v] = !comps.nontrivial[comps.component_of[v]];
        any |= pleasant[v] != 0;
    }
    if (!any) return -1;

    // The pleasant subgraph is acyclic (a cycle would make its component
    // nontrivial), so longest path is a DFS-memo DP.
    std::vector<int> best(n, -1);
    std::vector<char> visiting(n, 0);
    auto longest_from = [&](auto&& self, int v) -> int {
        if (best[v] >= 0) return best[v];
        if (visiting[v]) throw std::logic_error("pleasant subgraph has a cycle");
        visiting[v] = 1;
        int r = 0;
        for (int w : g.out_neighbors(v))
            if (pleasant[w]) r = std::max(r, 1 + self(self, w));
        visiting[v] = 0;
        return best[v] = r;
    };
    int result = 0;
    for (int v = 0; v < n; ++v)
        if (pleasant[v]) result = std::max(result, longest_from(longest_from, v));
    return result;
}

// ===== undirected analyses =====

std::string_view to_string(ComponentShape s) {
    switch (s) {
        case ComponentShape::Trivial: return "trivial";
        case ComponentShape::CompleteWithLoops: return "complete-with-loops";
        case ComponentShape::CompleteBipartite: return "complete-bipartite";
        case ComponentShape::Other: return "other";
    }
    return "?";
}

namespace {

ComponentShape classify_component(const Digraph& g, const std::vector<int>& verts) {
    if (verts.size() == 1 && !g.has_edge(verts[0], verts[0])) return ComponentShape::Trivial;

    bool complete = true;
    for (int u : verts) {
        for (int v : verts) {
            if (!g.has_edge(u, v)) {
                complete = false;
                break;
            }
        }
        if (!complete) break;
    }
    if (complete) return ComponentShape::CompleteWithLoops;

    for (int v : verts)
        if (g.has_edge(v, v)) return ComponentShape::Other;

    // Loop-free: try the 2-coloring; then demand all cross pairs.
    std::vector<int> color(g.vertex_count(), -1);
    std::queue<int> q;
    color[verts[0]] = 0;
    q.push(verts[0]);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.out_neighbors(v)) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                q.push(w);
            } else if (color[w] == color[v]) {
                return ComponentShape::Other;
            }
        }
    }
    for (int u : verts)
        for (int v : verts)
            if (color[u] == 0 && color[v] == 1 && !g.has_edge(u, v))
                return ComponentShape::Other;
    return ComponentShape::CompleteBipartite;
}

}  // namespace

UndirectedShapeReport undirected_shape(const Digraph& g) {
    if (!g.is_symmetric())
        throw std::invalid_argument("undirected_shape requires a symmetric edge relation");
    UndirectedShapeReport report;
    report.comps = scc(g);
    report.shapes.reserve(report.comps.count());
    for (const auto& verts : report.comps.components)
        report.shapes.push_back(classify_component(g, verts));
    return report;
}

bool has_inter_scc_path(const Digraph& g) { return has_inter_scc_path(scc(g)); }

bool has_inter_scc_path(const SccDecomposition& comps) {
    for (int a = 0; a < comps.count(); ++a) {
        if (!comps.nontrivial[a]) continue;
        for (int b = 0; b < comps.count(); ++b)
            if (b != a && comps.nontrivial[b] && comps.reaches[a][b]) return true;
    }
    return false;
}

}  // namespace assoc
