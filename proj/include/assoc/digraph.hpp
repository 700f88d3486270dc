#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assoc/errors.hpp"

namespace assoc {

// Finite digraph with labeled vertices; loops allowed, edge relation is a
// set. Immutable in practice: built once (by parsing or by add_* calls),
// then only queried.
class Digraph {
public:
    int add_vertex(std::string label);           // throws on duplicate label
    int ensure_vertex(std::string_view label);   // add-or-get
    bool add_edge(int u, int v);                 // false when already present

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& out_neighbors(int u) const { return out_[u]; }  // ascending
    const std::string& label(int v) const { return labels_[v]; }
    std::optional<int> index_of(std::string_view label) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted
    bool is_symmetric() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> out_;
    int edge_count_ = 0;
};

// Edge-list format: one "u v" edge per line, a single label declares an
// isolated vertex, '#' starts a comment. Vertices appear in first-appearance
// order. Duplicate edges are dropped with a note on `diagnostics` when given.
Digraph parse_digraph(std::string_view text, std::ostream* diagnostics = nullptr);

// ===== strongly connected components =====

struct SccDecomposition {
    std::vector<int> component_of;             // vertex -> component id
    std::vector<std::vector<int>> components;  // id -> sorted vertices; ids in topological order
    std::vector<bool> nontrivial;              // singleton-without-loop components are trivial
    std::vector<std::vector<bool>> reaches;    // condensation reachability closure (reflexive)

    int count() const { return static_cast<int>(components.size()); }
};

SccDecomposition scc(const Digraph& g);

// ===== whirls =====

// Witness that an induced subgraph is an m-whirl: vertices partition into
// blocks B_0..B_{m-1} and the edges are exactly B_i x B_{i+1 mod m}.
struct WhirlCert {
    int m = 0;
    std::vector<int> block_of;  // indexed by global vertex id; -1 outside the component
};

// K must be a nontrivial SCC of g (throws std::invalid_argument otherwise).
// Returns the certificate with minimal m (= shortest cycle length in K), or
// nullopt when K is not a whirl.
std::optional<WhirlCert> whirl_certificate(const Digraph& g, const std::vector<int>& component);

// ===== pleasant paths =====

// Maximum number of edges on a path whose vertices all lie in trivial SCCs;
// -1 when no vertex does. Always finite: the pleasant subgraph is acyclic.
int longest_pleasant_path(const Digraph& g);
int longest_pleasant_path(const Digraph& g, const SccDecomposition& comps);

// ===== undirected analyses =====

enum class ComponentShape { Trivial, CompleteWithLoops, CompleteBipartite, Other };

std::string_view to_string(ComponentShape s);

struct UndirectedShapeReport {
    SccDecomposition comps;  // connected components (edge relation is symmetric)
    std::vector<ComponentShape> shapes;
};

// Requires a symmetric edge relation; throws std::invalid_argument otherwise.
UndirectedShapeReport undirected_shape(const Digraph& g);

// True iff some nontrivial SCC reaches a distinct nontrivial SCC.
bool has_inter_scc_path(const Digraph& g);
bool has_inter_scc_path(const SccDecomposition& comps);

}  // namespace assoc
