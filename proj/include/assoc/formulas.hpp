#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "assoc/digraph.hpp"
#include "assoc/trees.hpp"

namespace assoc {

// ===== bounded-height tree counts T_h(n) =====

// Memoized T_h(n) = number of DFS trees of size n with height at most h,
// computed by DP over zag sequences bounded by h. Build is single-threaded;
// concurrent reads are fine once no more values are requested.
class BoundedHeightTable {
public:
    const mpz_class& value(int h, int n);

private:
    std::map<int, std::vector<mpz_class>> rows_;      // h -> T_h(0..)
    std::map<int, std::vector<mpz_class>> dp_state_;  // h -> counts per depth
};

mpz_class bounded_height_count(int h, int n);

// Same numbers through the linear recurrence
//   T_h(n+1) = sum_k (-1)^k C(h-k, k+1) T_h(n-k)
// (the generating function is rational), seeded by DP values for
// n <= max(h, 1). A cross-check route.
mpz_class bounded_height_count_recurrence(int h, int n);

// ===== modular Catalan numbers =====

// C_{m,n} = s_{n+1}(A(C_m)): zag sequences of length n+1 whose steps lie in
// {2-m, .., 0, 1} (drops of at most m-2).
mpz_class modular_catalan(int m, int n);
// Independent route: Dyck paths of semilength n with no D^m U factor.
mpz_class modular_catalan_dyck(int m, int n);

// ===== closed-form spectra =====

// Directed path of length l: T_l(n), plus 1 once n >= l+2.
mpz_class path_spectrum(int length, int n);
// Directed path of length l >= 1 with a loop on the last vertex: T_l(n).
mpz_class path_with_loop_spectrum(int length, int n);

// Levels 0..h coincide: the truncation beta caps every entry at h+1.
mpz_class level_equivalence_count(int h, int n);  // = T_{h+1}(n)
ZagSequence beta_truncate(const ZagSequence& d, int h);

class ClosedFormSpectrum {
public:
    enum class Family { Path, PathWithFinalLoop, Cycle, TwoVertex, ThreeVertex };
    // How s_n behaves for n >= 3 (s_1 = s_2 = 1 throughout).
    enum class Kind { ConstantOne, EventuallyTwo, PowerOfTwo, Catalan, BoundedHeight };

    Family family;
    Kind kind;
    int param = 0;             // path length, cycle length, or table case (1-based)
    std::string description;   // e.g. "2^(n-2)"

    mpz_class eval(int n) const;
};

// The ten two-vertex digraphs up to isomorphism. `g` must have exactly two
// vertices; identification canonicalizes under the vertex swap.
ClosedFormSpectrum two_vertex_spectrum(const Digraph& g);
// Case index 1..10 in the table's order.
ClosedFormSpectrum two_vertex_case(int case_id);
// Canonical representative of each case (labels "u", "v").
Digraph two_vertex_case_graph(int case_id);

enum class ThreeVertexCase { OutStarWithSinkLoops, LoopPathTwoCycle };

ClosedFormSpectrum three_vertex_special_spectrum(ThreeVertexCase c);
Digraph three_vertex_case_graph(ThreeVertexCase c);

}  // namespace assoc
