#include "assoc/algebra.hpp"

#include <stdexcept>
#include <string>

namespace assoc {

AlgebraElement product(const Digraph& g, AlgebraElement x, AlgebraElement y) {
    if (x.is_infinity() || y.is_infinity()) return AlgebraElement::infinity();
    if (x.vertex_index() >= g.vertex_count() || y.vertex_index() >= g.vertex_count())
        throw std::out_of_range("algebra element does not index into the graph");
    return g.has_edge(x.vertex_index(), y.vertex_index()) ? x : AlgebraElement::infinity();
}

namespace {

AlgebraElement eval_node(const Digraph& g, const Bracketing& t, int id, const Assignment& a) {
    const Bracketing::Node& n = t.node(id);
    if (n.is_leaf()) return a[static_cast<std::size_t>(n.leaf - 1)];
    return product(g, eval_node(g, t, n.left, a), eval_node(g, t, n.right, a));
}

}  // namespace

AlgebraElement eval_bracketing(const Digraph& g, const Bracketing& t, const Assignment& a) {
    const std::vector<int> leaves = t.leaf_sequence();
    for (int leaf : leaves)
        if (static_cast<std::size_t>(leaf) > a.size())
            throw std::invalid_argument("assignment does not cover x" + std::to_string(leaf));
    return eval_node(g, t, t.root(), a);
}

HomSet homomorphisms(const DfsTree& tree, const Digraph& g, std::uint64_t cap) {
    const int n = tree.size();
    HomSet out;
    out.tree_size = n;
    std::vector<int> image(n);

    auto extend = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (out.size() >= cap)
                throw BudgetError("homomorphism set exceeds the cap of " + std::to_string(cap));
            out.flat.insert(out.flat.end(), image.begin(), image.end());
            return;
        }
        for (int w : g.out_neighbors(image[tree.parent_of(i)])) {
            image[i] = w;
            self(self, i + 1);
        }
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        image[0] = v;
        extend(extend, 1);
    }
    return out;
}

bool satisfies_identity(const Digraph& g, const Bracketing& t, const Bracketing& u,
                        std::uint64_t cap) {
    if (t.size() != u.size())
        throw std::invalid_argument("identity sides must have the same size");
    const HomSet a = homomorphisms(bracketing_to_dfs(t), g, cap);
    const HomSet b = homomorphisms(bracketing_to_dfs(u), g, cap);
    if (a.size() != b.size()) return false;
    return a.flat == b.flat;  // both lexicographically ordered
}

std::vector<int> collapse_on_walk(const Digraph& g, const DfsTree& tree,
                                  std::span<const int> walk) {
    if (static_cast<int>(walk.size()) < tree.height() + 1)
        throw std::invalid_argument("walk shorter than the tree height");
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.has_edge(walk[i], walk[i + 1]))
            throw std::invalid_argument("not a walk in the graph");
    std::vector<int> map(tree.size());
    for (int v = 0; v < tree.size(); ++v) map[v] = walk[tree.depth_of(v)];
    return map;
}

std::vector<int> collapse_on_closed_walk(const Digraph& g, const DfsTree& tree,
                                         std::span<const int> cycle) {
    if (cycle.empty()) throw std::invalid_argument("closed walk must have length >= 1");
    const int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % len]))
            throw std::invalid_argument("not a closed walk in the graph");
    std::vector<int> map(tree.size());
    for (int v = 0; v < tree.size(); ++v) map[v] = cycle[tree.depth_of(v) % len];
    return map;
}

}  // namespace assoc
