#include "assoc/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace assoc {

TreePairParams tree_pair_params(const DfsTree& t, const DfsTree& u) {
    if (t.size() != u.size())
        throw std::invalid_argument("tree pair must have equal size");
    if (t == u) throw std::invalid_argument("tree pair parameters are undefined for equal trees");

    TreePairParams p;
    p.min_height = std::min(t.height(), u.height());
    int g = 0;
    int first_diff_level = -1;  // min over differing vertices of min(d, d')
    for (int v = 0; v < t.size(); ++v) {
        const int dt = t.depth_of(v);
        const int du = u.depth_of(v);
        g = std::gcd(g, std::abs(dt - du));
        if (dt != du) {
            const int lvl = std::min(dt, du);
            if (first_diff_level == -1 || lvl < first_diff_level) first_diff_level = lvl;
        }
    }
    p.depth_modulus = g;  // nonzero: distinct trees have distinct depth sequences
    p.common_prefix_level = first_diff_level - 1;
    return p;
}

bool is_associative(const Digraph& g) {
    for (const auto& [u, v] : g.edges())
        for (int w = 0; w < g.vertex_count(); ++w)
            if (g.has_edge(u, w) != g.has_edge(v, w)) return false;
    return true;
}

// ===== undirected trichotomy =====

std::string_view to_string(UndirectedClassTag t) {
    switch (t) {
        case UndirectedClassTag::Constant1: return "constant-1";
        case UndirectedClassTag::PowersOfTwo: return "powers-of-two";
        case UndirectedClassTag::Catalan: return "catalan";
    }
    return "?";
}

mpz_class UndirectedClass::predicted_s(int n) const {
    if (n < 1) throw std::invalid_argument("spectrum index must be >= 1");
    switch (tag) {
        case UndirectedClassTag::Constant1: return 1;
        case UndirectedClassTag::PowersOfTwo: {
            if (n == 1) return 1;
            mpz_class r = 1;
            r <<= (n - 2);
            return r;
        }
        case UndirectedClassTag::Catalan: return catalan(static_cast<unsigned long>(n - 1));
    }
    throw std::logic_error("unreachable");
}

UndirectedClass classify_undirected(const Digraph& g) {
    UndirectedClass result;
    result.evidence = undirected_shape(g);
    bool any_bipartite = false;
    bool any_other = false;
    for (ComponentShape s : result.evidence.shapes) {
        any_bipartite |= s == ComponentShape::CompleteBipartite;
        any_other |= s == ComponentShape::Other;
    }
    result.tag = any_other         ? UndirectedClassTag::Catalan
                 : any_bipartite   ? UndirectedClassTag::PowersOfTwo
                                   : UndirectedClassTag::Constant1;
    return result;
}

// ===== antiassociativity =====

namespace {

// Chains 1..a and a+1..n joined by the edge attach -> a+1 (all 1-based).
DfsTree two_chain_tree(int n, int first_chain_len, int attach) {
    std::vector<int> parents(n, -1);
    for (int v = 1; v < first_chain_len; ++v) parents[v] = v - 1;
    parents[first_chain_len] = attach - 1;
    for (int v = first_chain_len + 1; v < n; ++v) parents[v] = v - 1;
    return DfsTree(std::move(parents));
}

struct WitnessInput {
    bool conditions_hold = false;
    int pleasant_bound = 0;
    int whirl_lcm = 1;
};

WitnessInput witness_input(const Digraph& g, const SccDecomposition& comps,
                           const std::vector<std::optional<WhirlCert>>& certs,
                           bool no_inter_scc) {
    WitnessInput in;
    in.conditions_hold =
        no_inter_scc &&
        std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.has_value(); });
    in.pleasant_bound = std::max(0, longest_pleasant_path(g, comps));
    in.whirl_lcm = 1;
    for (const auto& c : certs)
        if (c) in.whirl_lcm = std::lcm(in.whirl_lcm, c->m);
    return in;
}

std::pair<Bracketing, Bracketing> build_witness(int pleasant_bound, int whirl_lcm) {
    const int p = pleasant_bound;
    const int m = whirl_lcm;
    const int n = 3 * p + m + 6;
    const DfsTree t = two_chain_tree(n, 2 * p + m + 4, p + 2);
    const DfsTree u = two_chain_tree(n, 2 * p + m + 4, p + m + 2);
    return {dfs_to_bracketing(t), dfs_to_bracketing(u)};
}

}  // namespace

AntiassocReport is_antiassociative(const Digraph& g) {
    AntiassocReport r;
    const SccDecomposition comps = scc(g);
    for (int c = 0; c < comps.count(); ++c) {
        if (!comps.nontrivial[c]) continue;
        r.nontrivial_components.push_back(c);
        r.whirl_certs.push_back(whirl_certificate(g, comps.components[c]));
    }
    r.cond_whirls = std::all_of(r.whirl_certs.begin(), r.whirl_certs.end(),
                                [](const auto& c) { return c.has_value(); });
    r.cond_no_inter_scc = !has_inter_scc_path(comps);

    const WitnessInput in = witness_input(g, comps, r.whirl_certs, r.cond_no_inter_scc);
    r.pleasant_bound = in.pleasant_bound;
    r.whirl_lcm = in.whirl_lcm;
    r.antiassociative = !in.conditions_hold;
    if (!r.antiassociative) {
        auto witness = build_witness(in.pleasant_bound, in.whirl_lcm);
        if (!satisfies_identity(g, witness.first, witness.second))
            throw std::logic_error("witness identity failed verification");
        r.witness = std::move(witness);
    }
    return r;
}

std::pair<Bracketing, Bracketing> witness_identity(const Digraph& g) {
    const SccDecomposition comps = scc(g);
    std::vector<std::optional<WhirlCert>> certs;
    for (int c = 0; c < comps.count(); ++c)
        if (comps.nontrivial[c]) certs.push_back(whirl_certificate(g, comps.components[c]));
    const WitnessInput in = witness_input(g, comps, certs, !has_inter_scc_path(comps));
    if (!in.conditions_hold)
        throw std::invalid_argument(
            "witness_identity: graph is antiassociative (whirl or path condition fails)");
    return build_witness(in.pleasant_bound, in.whirl_lcm);
}

}  // namespace assoc
