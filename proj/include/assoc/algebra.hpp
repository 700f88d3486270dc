#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "assoc/digraph.hpp"
#include "assoc/errors.hpp"
#include "assoc/trees.hpp"

namespace assoc {

// Carrier element of the graph algebra A(G) = (V(G) + {infinity}; product).
class AlgebraElement {
public:
    static AlgebraElement vertex(int index) { return AlgebraElement(index); }
    static AlgebraElement infinity() { return AlgebraElement(-1); }

    bool is_infinity() const { return v_ < 0; }
    int vertex_index() const { return v_; }  // valid when !is_infinity()

    friend bool operator==(AlgebraElement, AlgebraElement) = default;

private:
    explicit AlgebraElement(int v) : v_(v) {}
    int v_ = -1;
};

// x * y = x when (x, y) is an edge, infinity otherwise; infinity absorbs.
AlgebraElement product(const Digraph& g, AlgebraElement x, AlgebraElement y);

// Assignment of values to x_1..x_n: a[i] is the value of x_{i+1}.
using Assignment = std::vector<AlgebraElement>;

AlgebraElement eval_bracketing(const Digraph& g, const Bracketing& t, const Assignment& a);

// ===== homomorphism sets =====

inline constexpr std::uint64_t kDefaultHomCap = 10'000'000;

// All digraph homomorphisms of a DFS tree into G, each one a vector of
// vertex indices, stored flat in lexicographic order.
struct HomSet {
    int tree_size = 0;
    std::vector<int> flat;

    std::size_t size() const {
        return tree_size ? flat.size() / static_cast<std::size_t>(tree_size) : 0;
    }
    std::span<const int> map(std::size_t i) const {
        return {flat.data() + i * static_cast<std::size_t>(tree_size),
                static_cast<std::size_t>(tree_size)};
    }

    friend bool operator==(const HomSet&, const HomSet&) = default;
};

// Enumerates by extending tree vertices in index order: each vertex's parent
// is already assigned, so its candidates are the out-neighbours of the
// parent's image. Throws BudgetError past `cap` maps.
HomSet homomorphisms(const DfsTree& tree, const Digraph& g, std::uint64_t cap = kDefaultHomCap);

// Poeschel-Wessel criterion: A(G) satisfies t = t' iff the two trees have
// the same homomorphism set into G. Sizes must match.
bool satisfies_identity(const Digraph& g, const Bracketing& t, const Bracketing& u,
                        std::uint64_t cap = kDefaultHomCap);

// ===== collapsing maps =====

// x_i -> walk[depth(x_i)]; the walk must live in g and reach depth h(tree).
std::vector<int> collapse_on_walk(const Digraph& g, const DfsTree& tree,
                                  std::span<const int> walk);
// x_i -> cycle[depth(x_i) mod len]; cycle[i] -> cycle[(i+1) mod len] must all
// be edges of g.
std::vector<int> collapse_on_closed_walk(const Digraph& g, const DfsTree& tree,
                                         std::span<const int> cycle);

}  // namespace assoc
