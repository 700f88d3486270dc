#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "assoc/algebra.hpp"
#include "assoc/digraph.hpp"
#include "assoc/trees.hpp"

namespace assoc {

// Canonical fingerprint of Hom(T, G): a 128-bit digest of the sorted
// homomorphism vectors plus the exact set size. Equal signatures are only
// trusted after a full comparison of the underlying sets (the fine-spectrum
// accumulator keeps one representative set per class for that check).
struct HomSignature {
    std::uint64_t digest_hi = 0;
    std::uint64_t digest_lo = 0;
    std::uint64_t size = 0;

    friend bool operator==(const HomSignature&, const HomSignature&) = default;
};

HomSignature hom_signature(const HomSet& homs);

// A partition of B_n, every class a list of zag sequences. Classes ordered
// by their lexicographically least member, members in lexicographic order
// (both fall out of the lex enumeration of trees).
struct Partition {
    int n = 0;
    std::vector<std::vector<ZagSequence>> classes;

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct FineClass {
    ZagSequence representative;  // lexicographically least member
    std::uint64_t hom_set_size = 0;
    std::vector<ZagSequence> members;
};

struct FineSpectrum {
    int n = 0;
    std::vector<FineClass> classes;

    Partition to_partition() const;
};

// Partition of all DFS trees of size n by hom-signature (= sigma_n classes).
FineSpectrum fine_spectrum(const Digraph& g, int n, std::uint64_t tree_cap = kDefaultTreeCap,
                           std::uint64_t hom_cap = kDefaultHomCap);

enum class SpectrumMethod { HomSignature, TermTable, ClosedForm };

std::string_view to_string(SpectrumMethod m);

struct SpectrumEntry {
    int n = 0;
    mpz_class s;
    std::vector<ZagSequence> class_reps;  // empty unless representatives kept
    SpectrumMethod method = SpectrumMethod::HomSignature;
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;  // n = 1 .. max completed
    bool budget_exceeded = false;

    int max_completed_n() const { return static_cast<int>(entries.size()); }
};

// s_n for n = 1..max_n via hom signatures. On a blown budget the result
// holds the completed prefix and sets budget_exceeded.
SpectrumResult spectrum(const Digraph& g, int max_n, bool keep_representatives = false,
                        std::uint64_t tree_cap = kDefaultTreeCap,
                        std::uint64_t hom_cap = kDefaultHomCap);

inline constexpr std::uint64_t kDefaultAssignmentCap = 1'000'000;

// Independent oracle: the number of distinct full value tables of
// eval_bracketing over all (|V|+1)^n assignments. Throws BudgetError when
// the assignment count passes the cap.
std::uint64_t spectrum_via_term_tables(const Digraph& g, int n,
                                       std::uint64_t assignment_cap = kDefaultAssignmentCap,
                                       std::uint64_t tree_cap = kDefaultTreeCap);

// ===== special-purpose partitions =====

// Depth-congruence mod 2 classes of B_n; count is 2^(n-2) for n >= 2.
mpz_class parity_class_count(int n);
Partition parity_classes(int n, std::uint64_t tree_cap = kDefaultTreeCap);

// Leaf-set classes of B_n; count is 2^(n-2) for n >= 2. Every leaf set
// contains x_n and excludes x_1.
mpz_class leaf_equivalence_count(int n);
Partition leaf_classes(int n, std::uint64_t tree_cap = kDefaultTreeCap);

}  // namespace assoc
