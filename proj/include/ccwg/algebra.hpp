#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccwg/braid.hpp"
#include "ccwg/echelon.hpp"
#include "ccwg/wordmatrix.hpp"

namespace ccwg {

// Ambient (rank, level) square matrix space with an echelonized basis of
// flattened matrices. Keys are row*N^level + col in the fixed index order.
template <class F>
struct Subspace {
    F field;
    int N;
    int level;
    EchelonBasis<F> basis;

    Subspace(const F& f, int rank, int lvl) : field(f), N(rank), level(lvl), basis(f) {}

    std::size_t dim() const { return basis.dim(); }

    WordMatrix<F> basis_matrix(std::size_t i) const {
        return WordMatrix<F>::unflatten(field, N, level, level, basis.rows[i]);
    }

    bool contains(const WordMatrix<F>& m) const { return basis.contains(m.flatten()); }
};

// Unital matrix algebra tracked as a subspace plus its generators.
template <class F>
struct MatrixAlgebra {
    Subspace<F> span;
    std::vector<WordMatrix<F>> gens;

    std::size_t dim() const { return span.dim(); }
};

namespace detail {

// CSR view of a square word matrix for fast vector*matrix products.
template <class F>
struct Csr {
    std::uint64_t d;
    std::vector<std::uint32_t> row_ptr;
    std::vector<std::pair<std::uint32_t, typename F::Elem>> cells;

    explicit Csr(const WordMatrix<F>& m) : d(m.dom_size()), row_ptr(m.cod_size() + 1, 0) {
        for (const auto& e : m.ents) row_ptr[e.row + 1]++;
        for (std::size_t i = 1; i < row_ptr.size(); ++i) row_ptr[i] += row_ptr[i - 1];
        cells.resize(m.ents.size());
        std::vector<std::uint32_t> at(m.cod_size(), 0);
        for (const auto& e : m.ents) {
            auto pos = row_ptr[e.row] + at[e.row]++;
            cells[pos] = {e.col, e.val};
        }
    }
};

// (flattened matrix vector) * G, entries keyed row*d + col.
template <class F>
SparseVec<F> vec_times(const F& f, const SparseVec<F>& v, const Csr<F>& g) {
    SparseVec<F> out;
    out.e.reserve(v.e.size() * 2);
    for (const auto& [key, val] : v.e) {
        const std::uint64_t r = key / g.d, c = key % g.d;
        for (std::uint32_t t = g.row_ptr[c]; t < g.row_ptr[c + 1]; ++t)
            out.e.emplace_back(r * g.d + g.cells[t].first, f.mul(val, g.cells[t].second));
    }
    out.sort_combine(f);
    return out;
}

}  // namespace detail

// Smallest unital algebra containing the generators: breadth-first products
// of current basis elements with generators, echelon-reducing as we go.
template <class F>
MatrixAlgebra<F> closure(const F& f, const std::vector<WordMatrix<F>>& gens) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    const int N = gens[0].N, level = gens[0].cod_len;
    for (const auto& g : gens) {
        if (!g.is_square()) throw std::invalid_argument("generators must be square");
        check_same_shape(g, gens[0]);
    }
    MatrixAlgebra<F> alg{Subspace<F>(f, N, level), gens};
    std::vector<detail::Csr<F>> csr;
    csr.reserve(gens.size());
    for (const auto& g : gens) csr.emplace_back(g);

    auto& basis = alg.span.basis;
    basis.insert(WordMatrix<F>::identity(f, N, level).flatten());
    std::size_t next = 0;
    while (next < basis.rows.size()) {
        SparseVec<F> v = basis.rows[next++];  // copy: storage may grow under us
        for (const auto& g : csr) basis.insert(detail::vec_times(f, v, g));
    }
    return alg;
}

// Dickson trace-form radical of the span of an algebra: the null space of
// the Gram matrix of (x, y) -> tr(xy) on the basis. Valid over Q, or over
// F_p with p greater than the ambient matrix dimension.
template <class F>
Subspace<F> radical(const Subspace<F>& span) {
    const F& f = span.field;
    if constexpr (requires(const F& ff) { ff.p; }) {
        if (f.p <= pow_u64(span.N, span.level))
            throw std::domain_error("prime must exceed the ambient matrix dimension");
    }
    const std::size_t d = span.dim();
    const std::uint64_t dsz = pow_u64(span.N, span.level);
    // transpose-keyed copies so tr(xy) becomes a sparse dot product
    std::vector<SparseVec<F>> tvecs(d);
    for (std::size_t j = 0; j < d; ++j) {
        const auto& bj = span.basis.rows[j];
        tvecs[j].e.reserve(bj.e.size());
        for (const auto& [key, val] : bj.e)
            tvecs[j].e.emplace_back((key % dsz) * dsz + key / dsz, val);
        std::sort(tvecs[j].e.begin(), tvecs[j].e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    auto dot = [&](const SparseVec<F>& a, const SparseVec<F>& b) {
        auto acc = f.zero();
        std::size_t i = 0, j = 0;
        while (i < a.e.size() && j < b.e.size()) {
            if (a.e[i].first < b.e[j].first)
                ++i;
            else if (a.e[i].first > b.e[j].first)
                ++j;
            else
                acc = f.add(acc, f.mul(a.e[i++].second, b.e[j++].second));
        }
        return acc;
    };
    std::vector<SparseVec<F>> gram(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            auto t = dot(span.basis.rows[i], tvecs[j]);
            if (!f.is_zero(t)) {
                gram[i].e.emplace_back(j, t);
                if (i != j) gram[j].e.emplace_back(i, t);
            }
        }
    for (auto& row : gram) row.sort_combine(f);
    auto null = nullspace(f, std::move(gram), d);
    Subspace<F> rad(f, span.N, span.level);
    for (const auto& coeffs : null) {
        SparseVec<F> m;
        for (const auto& [j, c] : coeffs.e)
            for (const auto& [key, val] : span.basis.rows[j].e)
                m.e.emplace_back(key, f.mul(c, val));
        m.sort_combine(f);
        rad.basis.insert(std::move(m));
    }
    return rad;
}

template <class F>
Subspace<F> radical(const MatrixAlgebra<F>& alg) {
    return radical(alg.span);
}

// Dimension of the span of all k-fold products of radical basis elements.
template <class F>
std::size_t radical_power_dim(const Subspace<F>& rad, int k) {
    if (k < 1) throw std::invalid_argument("radical power needs k >= 1");
    const F& f = rad.field;
    if (k == 1) return rad.dim();
    std::vector<detail::Csr<F>> csr;
    for (std::size_t i = 0; i < rad.dim(); ++i) csr.emplace_back(rad.basis_matrix(i));
    EchelonBasis<F> cur = rad.basis;
    for (int step = 1; step < k; ++step) {
        EchelonBasis<F> next(f);
        for (const auto& v : cur.rows)
            for (const auto& g : csr) next.insert(detail::vec_times(f, v, g));
        cur = std::move(next);
    }
    return cur.dim();
}

// Tower generators embed(R, i, n) for i = 1..n-1.
template <class F>
std::vector<WordMatrix<F>> tower(const WordMatrix<F>& r, int n) {
    std::vector<WordMatrix<F>> gens;
    gens.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i) gens.push_back(embed(r, i, n));
    return gens;
}

// All X with Xg = gX for every generator, by direct sparse elimination over
// the d^2 matrix entries. Guarded: use the tower route (intertwiner_space)
// for large towers.
template <class F>
MatrixAlgebra<F> commutant(const F& f, int N, int level, const std::vector<WordMatrix<F>>& gens,
                           std::uint64_t guard = default_enumeration_guard()) {
    for (const auto& g : gens) {
        if (!g.is_square() || g.N != N || g.cod_len != level)
            throw std::invalid_argument("generator shape mismatch");
    }
    const std::uint64_t d = pow_u64(N, level);
    if (d * d > guard) throw std::length_error("commutant system exceeds guard; use the tower route");
    std::vector<SparseVec<F>> rows;
    for (const auto& g : gens) {
        detail::Csr<F> byrow(g);
        detail::Csr<F> bycol(transpose(g));
        for (std::uint64_t w = 0; w < d; ++w)
            for (std::uint64_t v = 0; v < d; ++v) {
                SparseVec<F> row;
                for (std::uint32_t t = bycol.row_ptr[v]; t < bycol.row_ptr[v + 1]; ++t)
                    row.e.emplace_back(w * d + bycol.cells[t].first, bycol.cells[t].second);
                for (std::uint32_t t = byrow.row_ptr[w]; t < byrow.row_ptr[w + 1]; ++t)
                    row.e.emplace_back(std::uint64_t{byrow.cells[t].first} * d + v,
                                       f.neg(byrow.cells[t].second));
                row.sort_combine(f);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    }
    auto null = nullspace(f, std::move(rows), d * d);
    MatrixAlgebra<F> out{Subspace<F>(f, N, level), gens};
    for (auto& v : null) out.span.basis.insert(std::move(v));
    return out;
}

template <class F>
MatrixAlgebra<F> commutant(const F& f, const std::vector<WordMatrix<F>>& gens,
                           std::uint64_t guard = default_enumeration_guard()) {
    if (gens.empty()) throw std::invalid_argument("commutant of an empty list needs an explicit shape");
    return commutant(f, gens[0].N, gens[0].cod_len, gens, guard);
}

// Intertwiners X with X embed(R,i,n) = embed(S,i,n) X for i = 1..n-1.
//
// Computed by recursion on n: for the generators with i >= 2 the conditions
// decouple over the first tensor leg, so X decomposes into N x N blocks each
// lying in the level-(n-1) space; the R_1 condition then couples the blocks.
// The coupled system lives on N^2 * dim(H_{n-1}) unknowns, which keeps level
// 6 towers cheap.
template <class F>
Subspace<F> intertwiner_space(const WordMatrix<F>& r, const WordMatrix<F>& s, int n) {
    check_level2(r);
    check_level2(s);
    if (r.N != s.N) throw std::invalid_argument("rank mismatch");
    const F& f = r.field;
    const int N = r.N;
    if (n < 2) throw std::invalid_argument("intertwiner level must be >= 2");

    Subspace<F> cur(f, N, 1);
    // level 1: no generator constraints, the full N x N space
    for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(N); ++p)
        for (std::uint64_t q = 0; q < static_cast<std::uint64_t>(N); ++q) {
            SparseVec<F> v;
            v.e.emplace_back(p * N + q, f.one());
            cur.basis.insert(std::move(v));
        }

    for (int lvl = 2; lvl <= n; ++lvl) {
        const std::uint64_t dprev = pow_u64(N, lvl - 1);
        const std::uint64_t d = pow_u64(N, lvl);
        const std::size_t h = cur.dim();
        // candidate generators: E_{pq} placed as first-leg block times basis
        // element B_k; under first-letter-fastest indexing the flat position
        // of block (p,q), inner (a,b) is (a + dprev*... ) -- note the first
        // leg is the FAST index, so flat row = p + N*a block-maps to
        // row index p + N*a_row? See kron(): left factor strides fastest.
        // Here X = sum c_{pqk} (E_pq (x) B_k) with E on the first leg:
        // X[(p,a),(q,b)] entries at row p + N*a, col q + N*b... but kron(L,M)
        // places L on the first letters; we want E on letter 1 and B on the
        // remaining letters, i.e. X = kron(E_pq, B_k).
        auto r1 = embed(r, 1, lvl);
        auto s1 = embed(s, 1, lvl);
        EchelonBasis<F> ech(f);
        const std::uint64_t base = d * d;  // augmentation keys
        std::vector<std::tuple<int, int, std::size_t>> unknowns;
        for (int p = 0; p < N; ++p)
            for (int q = 0; q < N; ++q)
                for (std::size_t k = 0; k < h; ++k) unknowns.emplace_back(p, q, k);
        std::vector<SparseVec<F>> kernel;
        for (std::size_t uidx = 0; uidx < unknowns.size(); ++uidx) {
            auto [p, q, k] = unknowns[uidx];
            WordMatrix<F> e1(f, N, 1, 1);
            e1.push(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q), f.one());
            auto xb = kron(e1, cur.basis_matrix(k));
            auto viol = sub(compose(xb, r1), compose(s1, xb));
            SparseVec<F> v = viol.flatten();
            v.e.emplace_back(base + uidx, f.one());
            ech.reduce(v);
            if (v.e.empty() || v.e.front().first >= base) {
                kernel.push_back(std::move(v));  // relation: a kernel element
            } else {
                auto lead_inv = f.inv(v.e.front().second);
                for (auto& kv : v.e) kv.second = f.mul(kv.second, lead_inv);
                ech.pivot_of.emplace(v.e.front().first, static_cast<std::uint32_t>(ech.rows.size()));
                ech.rows.push_back(std::move(v));
            }
        }
        Subspace<F> next(f, N, lvl);
        for (const auto& rel : kernel) {
            SparseVec<F> m;
            for (const auto& [key, c] : rel.e) {
                if (key < base) continue;
                auto [p, q, k] = unknowns[key - base];
                WordMatrix<F> e1(f, N, 1, 1);
                e1.push(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q), f.one());
                auto xb = kron(e1, cur.basis_matrix(k));
                for (const auto& [kk, vv] : xb.flatten().e) m.e.emplace_back(kk, f.mul(c, vv));
            }
            m.sort_combine(f);
            next.basis.insert(std::move(m));
        }
        cur = std::move(next);
    }
    return cur;
}

// Rational (in-field) roots of a monic polynomial, by trial evaluation over
// small integers and the coefficient set, with deflation.
template <class F>
std::vector<typename F::Elem> rational_roots(const F& f, std::vector<typename F::Elem> poly) {
    std::vector<typename F::Elem> roots;
    auto eval = [&](const std::vector<typename F::Elem>& p, const typename F::Elem& x) {
        auto acc = f.zero();
        for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
        return acc;
    };
    auto deflate = [&](std::vector<typename F::Elem>& p, const typename F::Elem& r) {
        std::vector<typename F::Elem> q(p.size() - 1, f.zero());
        auto carry = f.zero();
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = f.add(p[i], f.mul(carry, r));
            q[i - 1] = carry;
        }
        p = std::move(q);
    };
    std::vector<typename F::Elem> candidates;
    for (long v = -16; v <= 16; ++v) candidates.push_back(f.from_long(v));
    for (const auto& c : poly) {
        candidates.push_back(c);
        candidates.push_back(f.neg(c));
    }
    bool changed = true;
    while (poly.size() > 1 && changed) {
        changed = false;
        for (const auto& cand : candidates) {
            while (poly.size() > 1 && f.is_zero(eval(poly, cand))) {
                bool fresh = true;
                for (const auto& r : roots) fresh = fresh && !f.eq(r, cand);
                if (fresh) roots.push_back(cand);
                deflate(poly, cand);
                changed = true;
            }
        }
    }
    return roots;
}

struct SummandReport {
    bool determinate = false;
    long count = 0;                  // valid when determinate
    std::vector<long> summand_dims;  // sorted; filled when a split element is found
    std::size_t commutant_dim = 0;
    std::size_t commutant_radical_dim = 0;
    std::string note;
};

// Shared tail of summand counting once the commutant span E is known.
template <class F>
SummandReport summand_analysis(const Subspace<F>& E, std::uint64_t seed) {
    const F& f = E.field;
    SummandReport rep;
    auto radE = radical(E);
    rep.commutant_dim = E.dim();
    rep.commutant_radical_dim = radE.dim();
    const std::size_t ssdim = E.dim() - radE.dim();

    for (std::size_t i = 0; i < E.dim(); ++i) {
        auto mi = E.basis_matrix(i);
        for (std::size_t j = i + 1; j < E.dim(); ++j) {
            auto mj = E.basis_matrix(j);
            if (!radE.contains(sub(compose(mi, mj), compose(mj, mi)))) {
                rep.determinate = false;
                rep.note = "semisimple quotient of the commutant is not commutative";
                return rep;
            }
        }
    }
    rep.determinate = true;
    rep.count = static_cast<long>(ssdim);

    const std::uint64_t d = pow_u64(E.N, E.level);
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < 64 + E.dim(); ++attempt) {
        WordMatrix<F> x(f, E.N, E.level, E.level);
        if (attempt < E.dim()) {
            x = E.basis_matrix(attempt);
        } else {
            for (std::size_t i = 0; i < E.dim(); ++i) {
                long c = static_cast<long>(rng() % 19) - 9;
                if (c) x = add(x, scale(E.basis_matrix(i), f.from_long(c)));
            }
        }
        auto roots = rational_roots(f, minimal_polynomial(x));
        if (roots.size() != ssdim) continue;
        std::vector<long> dims;
        std::uint64_t total = 0;
        for (const auto& lam : roots) {
            auto shifted = sub(x, scale(WordMatrix<F>::identity(f, x.N, x.cod_len), lam));
            WordMatrix<F> pw = shifted;
            std::uint64_t prev = d, curr = rank_of(pw);
            while (curr != prev) {
                prev = curr;
                pw = compose(pw, shifted);
                curr = rank_of(pw);
            }
            dims.push_back(static_cast<long>(d - curr));
            total += d - curr;
        }
        if (total != d) continue;
        std::sort(dims.begin(), dims.end());
        rep.summand_dims = std::move(dims);
        break;
    }
    return rep;
}

template <class F>
SummandReport summand_count(const F& f, int N, int level, const std::vector<WordMatrix<F>>& gens,
                            std::uint64_t seed = 1) {
    return summand_analysis(commutant(f, N, level, gens).span, seed);
}

// Tower form: commutant through the intertwiner recursion, so level-6 cases
// stay cheap.
template <class F>
SummandReport summand_count_tower(const WordMatrix<F>& r, int n, std::uint64_t seed = 1) {
    return summand_analysis(intertwiner_space(r, r, n), seed);
}

enum class EquivVerdict { Equivalent, Inequivalent, ProbablyInequivalent };

struct EquivReport {
    EquivVerdict verdict = EquivVerdict::ProbablyInequivalent;
    std::vector<std::size_t> intertwiner_dims;  // per n = 2..k
    int failed_at = 0;                          // n where an obstruction was found
    std::string note;
};

// k-equivalence: intertwiner spaces for n = 2..k with an invertibility
// search (32 seeded random combinations, plus a small exhaustive grid when
// the space dimension is at most 4).
template <class F>
EquivReport k_equivalent(const WordMatrix<F>& r, const WordMatrix<F>& s, int k,
                         std::uint64_t seed = 1) {
    if (k < 2) throw std::invalid_argument("k-equivalence needs k >= 2");
    EquivReport rep;
    const F& f = r.field;
    if (r == s) {
        rep.verdict = EquivVerdict::Equivalent;
        rep.note = "identical R-matrices";
        return rep;
    }
    {
        auto mr = minimal_polynomial(r), ms = minimal_polynomial(s);
        bool same = mr.size() == ms.size();
        for (std::size_t i = 0; same && i < mr.size(); ++i) same = f.eq(mr[i], ms[i]);
        if (!same) {
            rep.verdict = EquivVerdict::Inequivalent;
            rep.failed_at = 2;
            rep.note = "minimal polynomials differ";
            return rep;
        }
    }
    std::mt19937_64 rng(seed);
    bool all_witnessed = true;
    for (int n = 2; n <= k; ++n) {
        auto space = intertwiner_space(r, s, n);
        rep.intertwiner_dims.push_back(space.dim());
        if (space.dim() == 0) {
            rep.verdict = EquivVerdict::Inequivalent;
            rep.failed_at = n;
            rep.note = "intertwiner space is zero";
            return rep;
        }
        bool found = false;
        for (int t = 0; t < 32 && !found; ++t) {
            WordMatrix<F> x(f, space.N, space.level, space.level);
            for (std::size_t i = 0; i < space.dim(); ++i) {
                long c = static_cast<long>(rng() % 41) - 20;
                if (c) x = add(x, scale(space.basis_matrix(i), f.from_long(c)));
            }
            found = is_invertible(x);
        }
        if (!found && space.dim() <= 4) {
            std::vector<long> grid{0, 1, -1, 2, -2, 3, -3};
            std::vector<std::size_t> at(space.dim(), 0);
            while (!found) {
                WordMatrix<F> x(f, space.N, space.level, space.level);
                for (std::size_t i = 0; i < space.dim(); ++i)
                    if (grid[at[i]]) x = add(x, scale(space.basis_matrix(i), f.from_long(grid[at[i]])));
                found = is_invertible(x);
                std::size_t i = 0;
                for (; i < at.size(); ++i) {
                    if (++at[i] < grid.size()) break;
                    at[i] = 0;
                }
                if (i == at.size()) break;
            }
        }
        if (!found) all_witnessed = false;
    }
    rep.verdict = all_witnessed ? EquivVerdict::Equivalent : EquivVerdict::ProbablyInequivalent;
    if (!all_witnessed) rep.note = "no invertible intertwiner found at some level";
    return rep;
}

}  // namespace ccwg
