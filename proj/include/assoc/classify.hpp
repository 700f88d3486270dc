#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "assoc/algebra.hpp"
#include "assoc/digraph.hpp"
#include "assoc/trees.hpp"

namespace assoc {

// Numerical parameters of a pair of distinct DFS trees of the same size:
//   min_height         H = min(h(T), h(T'))
//   depth_modulus      M = largest m with all depths congruent mod m
//   common_prefix_level L = largest m up to which the trees are identical
struct TreePairParams {
    int min_height = 0;
    int depth_modulus = 1;
    int common_prefix_level = 0;
};

// Throws std::invalid_argument when the trees are equal or sized differently.
TreePairParams tree_pair_params(const DfsTree& t, const DfsTree& u);

// Poomsa-ard's criterion: for every edge (u,v) and vertex w,
// (u,w) in E iff (v,w) in E.
bool is_associative(const Digraph& g);

// ===== undirected trichotomy =====

enum class UndirectedClassTag { Constant1, PowersOfTwo, Catalan };

std::string_view to_string(UndirectedClassTag t);

struct UndirectedClass {
    UndirectedClassTag tag = UndirectedClassTag::Constant1;
    UndirectedShapeReport evidence;

    // The spectrum the tag predicts: 1, 2^(n-2), or C_{n-1}.
    mpz_class predicted_s(int n) const;
};

// Requires a symmetric edge relation.
UndirectedClass classify_undirected(const Digraph& g);

// ===== antiassociativity =====

struct AntiassocReport {
    bool antiassociative = false;
    bool cond_whirls = false;              // (i) every nontrivial SCC is a whirl
    bool cond_no_inter_scc = false;        // (ii) no path between nontrivial SCCs
    bool cond_pleasant_bounded = true;     // (iii) automatic for finite graphs
    bool cond_whirl_sizes_bounded = true;  // (iv) automatic for finite graphs

    std::vector<int> nontrivial_components;             // SCC ids
    std::vector<std::optional<WhirlCert>> whirl_certs;  // aligned with the ids
    int pleasant_bound = 0;  // P = max(0, longest pleasant path)
    int whirl_lcm = 1;       // M = lcm of certified whirl sizes (lcm {} = 1)

    // Present and verified whenever the verdict is not antiassociative.
    std::optional<std::pair<Bracketing, Bracketing>> witness;
};

AntiassocReport is_antiassociative(const Digraph& g);

// The witness pair of size n = 3P + M + 6: two chains joined by one edge,
// placed at x_{P+2} in t and at x_{P+M+2} in t'. Requires conditions (i) and
// (ii); the result always satisfies the identity in A(G).
std::pair<Bracketing, Bracketing> witness_identity(const Digraph& g);

}  // namespace assoc
