#pragma once

#include <random>
#include <string>
#include <vector>

#include "ccwg/algebra.hpp"
#include "ccwg/braid.hpp"
#include "ccwg/catalog.hpp"
#include "ccwg/field.hpp"
#include "ccwg/wordmatrix.hpp"

namespace ccwg {

struct SuiteReport {
    std::string id;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;  // first few failure descriptions

    bool ok() const { return failures == 0; }
    void fail(const std::string& what) {
        ++failures;
        if (notes.size() < 8) notes.push_back(what);
    }
};

namespace suite_detail {

inline mpq_class random_rational(std::mt19937_64& rng) {
    long num = 0;
    while (num == 0) num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 4) + 1;
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

// Random matrix supported on a random subset of the positions accepted by
// `keep`, with random small rational entries.
template <class Keep>
WordMatrix<RationalField> random_supported(std::mt19937_64& rng, const RationalField& f, int N,
                                           int n, double density, Keep keep) {
    WordMatrix<RationalField> m(f, N, n, n);
    const std::uint64_t d = m.cod_size();
    std::vector<long> bw(N), bv(N);
    for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t c = 0; c < d; ++c) {
            if (!keep(N, n, r, c, bw.data(), bv.data())) continue;
            if (static_cast<double>(rng() % 1000) / 1000.0 >= density) continue;
            m.push(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                   random_rational(rng));
        }
    m.normalize();
    return m;
}

inline bool keep_ccwg(int N, int n, std::uint64_t r, std::uint64_t c, long* bw, long* bv) {
    return detail::classify_entry(N, n, n, r, c, bw, bv) != PositionClass::Forbidden;
}
inline bool keep_glue(int N, int n, std::uint64_t r, std::uint64_t c, long* bw, long* bv) {
    return detail::classify_entry(N, n, n, r, c, bw, bv) == PositionClass::Glue;
}
inline bool keep_parity(int N, int n, std::uint64_t r, std::uint64_t c, long*, long*) {
    return parity_of_index(N, n, r) == parity_of_index(N, n, c);
}

inline Word random_word(std::mt19937_64& rng, int N, int len) {
    std::vector<int> ls(len);
    for (int i = 0; i < len; ++i) ls[i] = static_cast<int>(rng() % N) + 1;
    return Word(N, std::move(ls));
}

}  // namespace suite_detail

// Monoidal closure: compose and kron of CCwg matrices stay CCwg.
inline SuiteReport suite_closure(std::uint64_t seed, std::uint64_t cases) {
    SuiteReport rep{"closure"};
    RationalField f;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < cases; ++i) {
        int N = static_cast<int>(rng() % 3) + 1;
        int n = static_cast<int>(rng() % 3) + 1;
        int m = static_cast<int>(rng() % 3) + 1;
        auto L = suite_detail::random_supported(rng, f, N, n, 0.35, suite_detail::keep_ccwg);
        auto M = suite_detail::random_supported(rng, f, N, n, 0.35, suite_detail::keep_ccwg);
        auto K = suite_detail::random_supported(rng, f, N, m, 0.35, suite_detail::keep_ccwg);
        ++rep.cases;
        if (!is_ccwg(compose(L, M))) rep.fail("compose left CCwg at N=" + std::to_string(N));
        if (!is_ccwg(kron(L, K))) rep.fail("kron left CCwg at N=" + std::to_string(N));
    }
    return rep;
}

// Products and Kronecker products of parity-preserving matrices stay
// parity-preserving.
inline SuiteReport suite_parity(std::uint64_t seed, std::uint64_t cases) {
    SuiteReport rep{"parity"};
    RationalField f;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < cases; ++i) {
        int N = static_cast<int>(rng() % 3) + 1;
        int n = static_cast<int>(rng() % 3) + 1;
        int m = static_cast<int>(rng() % 3) + 1;
        auto L = suite_detail::random_supported(rng, f, N, n, 0.35, suite_detail::keep_parity);
        auto M = suite_detail::random_supported(rng, f, N, n, 0.35, suite_detail::keep_parity);
        auto K = suite_detail::random_supported(rng, f, N, m, 0.35, suite_detail::keep_parity);
        ++rep.cases;
        if (!is_parity_preserving(compose(L, M))) rep.fail("compose broke parity");
        if (!is_parity_preserving(kron(L, K))) rep.fail("kron broke parity");
    }
    return rep;
}

// De-glue homomorphism K(LM) = K(L)K(M); glue nilpotency at small shapes;
// and the factor-classification of Kronecker entries (CC entries with
// equal-charge splits factor through CC entries, glue entries have a glue
// factor).
inline SuiteReport suite_hog(std::uint64_t seed, std::uint64_t cases) {
    SuiteReport rep{"hog"};
    RationalField f;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < cases; ++i) {
        int N = static_cast<int>(rng() % 3) + 1;
        int n = static_cast<int>(rng() % 3) + 1;
        auto L = suite_detail::random_supported(rng, f, N, n, 0.35, suite_detail::keep_ccwg);
        auto M = suite_detail::random_supported(rng, f, N, n, 0.35, suite_detail::keep_ccwg);
        ++rep.cases;
        if (!(deglue(compose(L, M)) == compose(deglue(L), deglue(M))))
            rep.fail("de-glue is not multiplicative at N=" + std::to_string(N));
    }
    // glue nilpotency: a product of |Lambda^N_n| pure-glue factors vanishes
    for (auto [N, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        const std::size_t chain = compositions_sorted(N, n).size();
        for (int rep_i = 0; rep_i < 32; ++rep_i) {
            auto acc = suite_detail::random_supported(rng, f, N, n, 0.6, suite_detail::keep_glue);
            for (std::size_t s = 1; s < chain; ++s)
                acc = compose(acc,
                              suite_detail::random_supported(rng, f, N, n, 0.6, suite_detail::keep_glue));
            ++rep.cases;
            if (!acc.is_zero_matrix())
                rep.fail("glue chain of length " + std::to_string(chain) + " nonzero at N=" +
                         std::to_string(N) + ", n=" + std::to_string(n));
        }
    }
    // Kronecker entry factor classes
    for (std::uint64_t i = 0; i < cases / 4 + 1; ++i) {
        int N = static_cast<int>(rng() % 2) + 2;
        int n = static_cast<int>(rng() % 2) + 1;
        int m = static_cast<int>(rng() % 2) + 1;
        auto L = suite_detail::random_supported(rng, f, N, n, 0.5, suite_detail::keep_ccwg);
        auto M = suite_detail::random_supported(rng, f, N, m, 0.5, suite_detail::keep_ccwg);
        auto K = kron(L, M);
        ++rep.cases;
        for (const auto& e : K.ents) {
            Word rw = word_at(N, n + m, e.row), cw = word_at(N, n + m, e.col);
            auto [rl, rr] = split(rw, n);
            auto [cl, cr] = split(cw, n);
            auto whole = position_class(rw, cw);
            auto left = position_class(rl, cl);
            auto right = position_class(rr, cr);
            if (whole == PositionClass::CC && left == PositionClass::CC &&
                right != PositionClass::CC)
                rep.fail("CC kron entry with equal-charge left split has non-CC right factor");
            if (whole == PositionClass::Glue && left != PositionClass::Glue &&
                right != PositionClass::Glue)
                rep.fail("glue kron entry without a glue factor");
        }
    }
    return rep;
}

// Order-theoretic checks: the first-difference order matches the
// first-instance enumeration order; order axioms hold; and concatenation
// splits respect the order as in the splitting proposition.
inline SuiteReport suite_orders(std::uint64_t seed, std::uint64_t split_cases = 100000) {
    SuiteReport rep{"orders"};
    std::mt19937_64 rng(seed);
    for (int N = 2; N <= 4; ++N)
        for (int n = 1; n <= 6; ++n) {
            auto comps = compositions_sorted(N, n);
            for (std::size_t i = 0; i < comps.size(); ++i)
                for (std::size_t j = 0; j < comps.size(); ++j) {
                    ++rep.cases;
                    bool lt = comp_less(comps[i], comps[j]);
                    if (lt != (i < j)) rep.fail("sorted order disagrees with comp_less");
                    if (pow_u64(N, n) <= 100000 || (N <= 3 && n <= 6)) {
                        if (lt != comp_less_oracle(comps[i], comps[j]))
                            rep.fail("comp_less disagrees with the enumeration oracle at N=" +
                                     std::to_string(N) + " n=" + std::to_string(n));
                    }
                    if (i == j && lt) rep.fail("comp_less not irreflexive");
                    if (i != j && !(comp_less(comps[i], comps[j]) || comp_less(comps[j], comps[i])))
                        rep.fail("comp_less not trichotomous");
                }
            // transitivity on a subsample for the larger levels
            for (int t = 0; t < 2000; ++t) {
                std::size_t a = rng() % comps.size(), b = rng() % comps.size(),
                            c = rng() % comps.size();
                ++rep.cases;
                if (comp_less(comps[a], comps[b]) && comp_less(comps[b], comps[c]) &&
                    !comp_less(comps[a], comps[c]))
                    rep.fail("comp_less not transitive");
            }
            // orbit representative is revlex-first
            if (pow_u64(N, n) <= 5000) {
                std::vector<char> seen(comps.size(), 0);
                for (std::uint64_t w = 0; w < pow_u64(N, n); ++w) {
                    Word wd = word_at(N, n, w);
                    auto fw = charge(wd);
                    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
                        if (comps[ci] == fw) {
                            if (!seen[ci]) {
                                seen[ci] = 1;
                                ++rep.cases;
                                if (!(orbit_rep(fw) == wd))
                                    rep.fail("orbit_rep is not the revlex-first instance");
                            }
                            break;
                        }
                    }
                }
            }
        }
    // split order propositions
    for (std::uint64_t t = 0; t < split_cases; ++t) {
        int N = static_cast<int>(rng() % 3) + 2;
        int total = static_cast<int>(rng() % 9) + 2;
        int n = static_cast<int>(rng() % (total - 1)) + 1;
        Word v = suite_detail::random_word(rng, N, total);
        Word w = suite_detail::random_word(rng, N, total);
        auto [vl, vr] = split(v, n);
        auto [wl, wr] = split(w, n);
        int whole = comp_compare(charge(v), charge(w));
        int left = comp_compare(charge(vl), charge(wl));
        int right = comp_compare(charge(vr), charge(wr));
        ++rep.cases;
        if (whole < 0 && !(left < 0 || right < 0)) rep.fail("split proposition (I) fails");
        if (whole == 0 && !((left == 0 && right == 0) || (left < 0 && right > 0) ||
                            (left > 0 && right < 0)))
            rep.fail("split proposition (II) fails");
        if (whole > 0 && !(left > 0 || right > 0)) rep.fail("split proposition (III) fails");
    }
    return rep;
}

// Skew-transpose intertwining for the skew-invariant fixed catalog YBOs.
inline SuiteReport suite_skew() {
    SuiteReport rep{"skew"};
    RationalField f;
    for (const auto& fe : catalog::fixed_entries()) {
        auto r = catalog::build_fixed(f, fe);
        if (!skew_invariance_check(r)) continue;
        for (int n = 3; n <= 4; ++n) {
            ++rep.cases;
            if (!j_intertwiner_check(r, n))
                rep.fail("J conjugation missed the transposed tower for " + fe.name);
        }
    }
    return rep;
}

}  // namespace ccwg
