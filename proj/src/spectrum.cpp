#include "assoc/spectrum.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace assoc {

// ===== signatures =====

namespace {

// 128-bit FNV-1a over little-endian 32-bit words.
struct Fnv128 {
    unsigned __int128 state = (static_cast<unsigned __int128>(0x6c62272e07bb0142ULL) << 64) |
                              0x62b821756295c58dULL;
    static constexpr unsigned __int128 prime() {
        return (static_cast<unsigned __int128>(0x0000000001000000ULL) << 64) | 0x000000000000013BULL;
    }
    void feed(std::uint32_t word) {
        for (int b = 0; b < 4; ++b) {
            state ^= (word >> (8 * b)) & 0xFF;
            state *= prime();
        }
    }
};

}  // namespace

HomSignature hom_signature(const HomSet& homs) {
    Fnv128 h;
    h.feed(static_cast<std::uint32_t>(homs.tree_size));
    for (int v : homs.flat) h.feed(static_cast<std::uint32_t>(v));
    HomSignature sig;
    sig.digest_hi = static_cast<std::uint64_t>(h.state >> 64);
    sig.digest_lo = static_cast<std::uint64_t>(h.state);
    sig.size = homs.size();
    return sig;
}

// ===== fine spectrum =====

Partition FineSpectrum::to_partition() const {
    Partition p;
    p.n = n;
    p.classes.reserve(classes.size());
    for (const FineClass& c : classes) p.classes.push_back(c.members);
    return p;
}

namespace {

struct SigKey {
    std::uint64_t hi, lo, size;
    friend bool operator==(const SigKey&, const SigKey&) = default;
};

struct SigKeyHash {
    std::size_t operator()(const SigKey& k) const {
        return static_cast<std::size_t>(k.hi ^ (k.lo * 0x9e3779b97f4a7c15ULL) ^ k.size);
    }
};

// Streams the trees of size n and groups them by hom set. Keeps one
// representative HomSet per class so that digest matches are verified by
// full comparison. `keep_members` controls whether class member lists are
// materialized.
FineSpectrum fine_classes(const Digraph& g, int n, std::uint64_t tree_cap,
                          std::uint64_t hom_cap, bool keep_members) {
    if (n < 1) throw std::invalid_argument("fine spectrum needs n >= 1");
    FineSpectrum fs;
    fs.n = n;
    std::vector<HomSet> class_homs;
    std::unordered_map<SigKey, std::vector<int>, SigKeyHash> buckets;

    DfsTreeEnumerator trees(n, tree_cap);
    while (auto t = trees.next()) {
        HomSet homs = homomorphisms(*t, g, hom_cap);
        const HomSignature sig = hom_signature(homs);
        const SigKey key{sig.digest_hi, sig.digest_lo, sig.size};
        int cls = -1;
        for (int candidate : buckets[key]) {
            if (class_homs[candidate] == homs) {
                cls = candidate;
                break;
            }
        }
        if (cls == -1) {
            cls = static_cast<int>(fs.classes.size());
            buckets[key].push_back(cls);
            FineClass fc;
            fc.representative = trees.zag();
            fc.hom_set_size = homs.size();
            fs.classes.push_back(std::move(fc));
            class_homs.push_back(std::move(homs));
        }
        if (keep_members) fs.classes[cls].members.push_back(trees.zag());
    }
    return fs;
}

}  // namespace

FineSpectrum fine_spectrum(const Digraph& g, int n, std::uint64_t tree_cap,
                           std::uint64_t hom_cap) {
    return fine_classes(g, n, tree_cap, hom_cap, /*keep_members=*/true);
}

// ===== spectrum =====

std::string_view to_string(SpectrumMethod m) {
    switch (m) {
        case SpectrumMethod::HomSignature: return "hom-signature";
        case SpectrumMethod::TermTable: return "term-table";
        case SpectrumMethod::ClosedForm: return "closed-form";
    }
    return "?";
}

SpectrumResult spectrum(const Digraph& g, int max_n, bool keep_representatives,
                        std::uint64_t tree_cap, std::uint64_t hom_cap) {
    if (max_n < 1) throw std::invalid_argument("spectrum needs max size >= 1");
    SpectrumResult result;
    for (int n = 1; n <= max_n; ++n) {
        try {
            FineSpectrum fs = fine_classes(g, n, tree_cap, hom_cap, /*keep_members=*/false);
            SpectrumEntry e;
            e.n = n;
            e.s = static_cast<unsigned long>(fs.classes.size());
            e.method = SpectrumMethod::HomSignature;
            if (keep_representatives)
                for (FineClass& c : fs.classes) e.class_reps.push_back(std::move(c.representative));
            result.entries.push_back(std::move(e));
        } catch (const BudgetError&) {
            result.budget_exceeded = true;
            break;
        }
    }
    return result;
}

// ===== term-table oracle =====

std::uint64_t spectrum_via_term_tables(const Digraph& g, int n, std::uint64_t assignment_cap,
                                       std::uint64_t tree_cap) {
    if (n < 1) throw std::invalid_argument("term tables need n >= 1");
    const int base = g.vertex_count() + 1;  // element 0 encodes infinity
    std::uint64_t assignments = 1;
    for (int i = 0; i < n; ++i) {
        if (assignments > assignment_cap / static_cast<std::uint64_t>(base))
            throw BudgetError("term-table oracle: (|V|+1)^n exceeds the cap of " +
                              std::to_string(assignment_cap));
        assignments *= static_cast<std::uint64_t>(base);
    }

    std::map<std::vector<int>, int> distinct;
    DfsTreeEnumerator trees(n, tree_cap);
    while (auto t = trees.next()) {
        const Bracketing term = dfs_to_bracketing(*t);
        std::vector<int> table;
        table.reserve(assignments);
        // Mixed-radix counter over (infinity, v_0, .., v_{|V|-1})^n.
        Assignment a(n, AlgebraElement::infinity());
        std::vector<int> digits(n, 0);
        for (;;) {
            const AlgebraElement r = eval_bracketing(g, term, a);
            table.push_back(r.is_infinity() ? -1 : r.vertex_index());
            int i = 0;
            while (i < n) {
                if (++digits[i] < base) break;
                digits[i] = 0;
                ++i;
            }
            if (i == n) break;
            for (int j = 0; j <= i; ++j)
                a[j] = digits[j] == 0 ? AlgebraElement::infinity()
                                      : AlgebraElement::vertex(digits[j] - 1);
        }
        distinct.emplace(std::move(table), 0);
    }
    return distinct.size();
}

// ===== parity and leaf partitions =====

mpz_class parity_class_count(int n) {
    if (n < 2) throw std::invalid_argument("parity classes need n >= 2");
    mpz_class r = 1;
    r <<= (n - 2);
    return r;
}

namespace {

template <typename KeyFn>
Partition partition_by(int n, std::uint64_t tree_cap, KeyFn&& key_of) {
    Partition p;
    p.n = n;
    std::map<std::vector<int>, int> index;
    DfsTreeEnumerator trees(n, tree_cap);
    while (auto t = trees.next()) {
        auto [it, inserted] = index.emplace(key_of(*t), static_cast<int>(p.classes.size()));
        if (inserted) p.classes.emplace_back();
        p.classes[it->second].push_back(trees.zag());
    }
    return p;
}

}  // namespace

Partition parity_classes(int n, std::uint64_t tree_cap) {
    if (n < 2) throw std::invalid_argument("parity classes need n >= 2");
    return partition_by(n, tree_cap, [](const DfsTree& t) {
        std::vector<int> key(t.depths());
        for (int& d : key) d &= 1;
        return key;
    });
}

mpz_class leaf_equivalence_count(int n) {
    if (n < 2) throw std::invalid_argument("leaf classes need n >= 2");
    mpz_class r = 1;
    r <<= (n - 2);
    return r;
}

Partition leaf_classes(int n, std::uint64_t tree_cap) {
    if (n < 2) throw std::invalid_argument("leaf classes need n >= 2");
    return partition_by(n, tree_cap, [](const DfsTree& t) { return t.leaf_vertices(); });
}

}  // namespace assoc
