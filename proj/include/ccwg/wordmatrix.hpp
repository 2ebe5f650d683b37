#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccwg/echelon.hpp"
#include "ccwg/words.hpp"

namespace ccwg {

// Sparse matrix over an exact field with rows/columns labelled by words of
// fixed lengths over {1..N}. Entries are kept sorted by (row, col) with no
// explicit zeros.
template <class F>
struct WordMatrix {
    using Elem = typename F::Elem;
    struct Entry {
        std::uint32_t row, col;
        Elem val;
    };

    F field;
    int N = 1;
    int cod_len = 0;  // row word length
    int dom_len = 0;  // column word length
    std::vector<Entry> ents;

    WordMatrix(const F& f, int rank, int cod, int dom)
        : field(f), N(rank), cod_len(cod), dom_len(dom) {
        if (rank < 1 || cod < 0 || dom < 0) throw std::invalid_argument("bad matrix shape");
        if (cod_size() > (std::uint64_t{1} << 31) || dom_size() > (std::uint64_t{1} << 31))
            throw std::length_error("matrix side exceeds 2^31");
    }

    std::uint64_t cod_size() const { return pow_u64(N, cod_len); }
    std::uint64_t dom_size() const { return pow_u64(N, dom_len); }
    bool is_square() const { return cod_len == dom_len; }

    static WordMatrix identity(const F& f, int rank, int len) {
        WordMatrix m(f, rank, len, len);
        std::uint64_t d = m.cod_size();
        m.ents.reserve(d);
        for (std::uint64_t i = 0; i < d; ++i)
            m.ents.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), f.one()});
        return m;
    }

    static WordMatrix zero(const F& f, int rank, int cod, int dom) {
        return WordMatrix(f, rank, cod, dom);
    }

    void push(std::uint32_t r, std::uint32_t c, Elem v) { ents.push_back({r, c, std::move(v)}); }

    void push_words(const Word& w, const Word& v, Elem x) {
        push(static_cast<std::uint32_t>(revlex_index(w)), static_cast<std::uint32_t>(revlex_index(v)),
             std::move(x));
    }

    void normalize() {
        std::sort(ents.begin(), ents.end(), [](const Entry& a, const Entry& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        std::size_t out = 0;
        for (std::size_t i = 0; i < ents.size();) {
            auto r = ents[i].row, c = ents[i].col;
            Elem acc = ents[i].val;
            for (++i; i < ents.size() && ents[i].row == r && ents[i].col == c; ++i)
                acc = field.add(acc, ents[i].val);
            if (!field.is_zero(acc)) ents[out++] = {r, c, std::move(acc)};
        }
        ents.resize(out);
    }

    Elem get(std::uint32_t r, std::uint32_t c) const {
        auto it = std::lower_bound(ents.begin(), ents.end(), std::pair<std::uint32_t, std::uint32_t>{r, c},
                                   [](const Entry& e, const auto& k) {
                                       return e.row != k.first ? e.row < k.first : e.col < k.second;
                                   });
        if (it != ents.end() && it->row == r && it->col == c) return it->val;
        return field.zero();
    }

    bool operator==(const WordMatrix& o) const {
        if (N != o.N || cod_len != o.cod_len || dom_len != o.dom_len || ents.size() != o.ents.size())
            return false;
        for (std::size_t i = 0; i < ents.size(); ++i)
            if (ents[i].row != o.ents[i].row || ents[i].col != o.ents[i].col ||
                !field.eq(ents[i].val, o.ents[i].val))
                return false;
        return true;
    }

    bool is_zero_matrix() const { return ents.empty(); }

    SparseVec<F> flatten() const {
        SparseVec<F> v;
        v.e.reserve(ents.size());
        const std::uint64_t dsz = dom_size();
        for (const auto& e : ents) v.e.emplace_back(std::uint64_t{e.row} * dsz + e.col, e.val);
        return v;
    }

    static WordMatrix unflatten(const F& f, int rank, int cod, int dom, const SparseVec<F>& v) {
        WordMatrix m(f, rank, cod, dom);
        const std::uint64_t dsz = m.dom_size();
        m.ents.reserve(v.e.size());
        for (const auto& kv : v.e)
            m.ents.push_back({static_cast<std::uint32_t>(kv.first / dsz),
                              static_cast<std::uint32_t>(kv.first % dsz), kv.second});
        return m;
    }
};

template <class F>
void check_same_shape(const WordMatrix<F>& a, const WordMatrix<F>& b) {
    if (a.N != b.N) throw std::invalid_argument("rank mismatch");
    if (a.cod_len != b.cod_len || a.dom_len != b.dom_len)
        throw std::invalid_argument("shape mismatch");
}

template <class F>
WordMatrix<F> add(const WordMatrix<F>& a, const WordMatrix<F>& b) {
    check_same_shape(a, b);
    WordMatrix<F> out = a;
    out.ents.insert(out.ents.end(), b.ents.begin(), b.ents.end());
    out.normalize();
    return out;
}

template <class F>
WordMatrix<F> scale(const WordMatrix<F>& a, const typename F::Elem& c) {
    WordMatrix<F> out(a.field, a.N, a.cod_len, a.dom_len);
    if (a.field.is_zero(c)) return out;
    out.ents.reserve(a.ents.size());
    for (const auto& e : a.ents) out.ents.push_back({e.row, e.col, a.field.mul(e.val, c)});
    return out;
}

template <class F>
WordMatrix<F> sub(const WordMatrix<F>& a, const WordMatrix<F>& b) {
    return add(a, scale(b, a.field.neg(a.field.one())));
}

// Matrix product <w|LM|v> = sum_u <w|L|u><u|M|v>.
template <class F>
WordMatrix<F> compose(const WordMatrix<F>& L, const WordMatrix<F>& M) {
    if (L.N != M.N) throw std::invalid_argument("rank mismatch");
    if (L.dom_len != M.cod_len) throw std::invalid_argument("composition shape mismatch");
    WordMatrix<F> out(L.field, L.N, L.cod_len, M.dom_len);
    // row ranges of M
    for (const auto& e : L.ents) {
        auto lo = std::lower_bound(M.ents.begin(), M.ents.end(), e.col,
                                   [](const auto& me, std::uint32_t r) { return me.row < r; });
        for (auto it = lo; it != M.ents.end() && it->row == e.col; ++it)
            out.ents.push_back({e.row, it->col, L.field.mul(e.val, it->val)});
    }
    out.normalize();
    return out;
}

// Monoidal product under the fixed first-letter-fastest indexing:
// <w|L(x)M|v> = <w_{n-}|L|v_{n-}> <w_{-m}|M|v_{-m}> with n = cod_len(L),
// so the concatenated word index is idx(L part) + N^len * idx(M part).
template <class F>
WordMatrix<F> kron(const WordMatrix<F>& L, const WordMatrix<F>& M) {
    if (L.N != M.N) throw std::invalid_argument("rank mismatch");
    WordMatrix<F> out(L.field, L.N, L.cod_len + M.cod_len, L.dom_len + M.dom_len);
    const std::uint64_t rstride = L.cod_size(), cstride = L.dom_size();
    out.ents.reserve(L.ents.size() * M.ents.size());
    for (const auto& em : M.ents)
        for (const auto& el : L.ents)
            out.ents.push_back({static_cast<std::uint32_t>(el.row + rstride * em.row),
                                static_cast<std::uint32_t>(el.col + cstride * em.col),
                                L.field.mul(el.val, em.val)});
    out.normalize();
    return out;
}

template <class F>
WordMatrix<F> transpose(const WordMatrix<F>& a) {
    WordMatrix<F> out(a.field, a.N, a.dom_len, a.cod_len);
    out.ents.reserve(a.ents.size());
    for (const auto& e : a.ents) out.ents.push_back({e.col, e.row, e.val});
    out.normalize();
    return out;
}

template <class F>
typename F::Elem trace(const WordMatrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("trace needs a square matrix");
    auto t = a.field.zero();
    for (const auto& e : a.ents)
        if (e.row == e.col) t = a.field.add(t, e.val);
    return t;
}

namespace detail {

// position class of an entry from raw indices
inline PositionClass classify_entry(int N, int cod_len, int dom_len, std::uint64_t r,
                                    std::uint64_t c, long* bufw, long* bufv) {
    if (cod_len != dom_len) return PositionClass::Forbidden;
    charge_of_index(N, cod_len, r, bufw);
    charge_of_index(N, dom_len, c, bufv);
    int cmp = charge_vec_compare(bufw, bufv, N);
    if (cmp == 0) return PositionClass::CC;
    return cmp < 0 ? PositionClass::Glue : PositionClass::Forbidden;
}

}  // namespace detail

template <class F>
bool is_cc(const WordMatrix<F>& a) {
    std::vector<long> bw(a.N), bv(a.N);
    for (const auto& e : a.ents)
        if (detail::classify_entry(a.N, a.cod_len, a.dom_len, e.row, e.col, bw.data(), bv.data()) !=
            PositionClass::CC)
            return false;
    return true;
}

template <class F>
bool is_ccwg(const WordMatrix<F>& a) {
    std::vector<long> bw(a.N), bv(a.N);
    for (const auto& e : a.ents)
        if (detail::classify_entry(a.N, a.cod_len, a.dom_len, e.row, e.col, bw.data(), bv.data()) ==
            PositionClass::Forbidden)
            return false;
    return true;
}

template <class F>
bool is_parity_preserving(const WordMatrix<F>& a) {
    for (const auto& e : a.ents)
        if (parity_of_index(a.N, a.cod_len, e.row) != parity_of_index(a.N, a.dom_len, e.col))
            return false;
    return true;
}

// De-gluing projection K': zero all glue positions.
template <class F>
WordMatrix<F> deglue(const WordMatrix<F>& a) {
    WordMatrix<F> out(a.field, a.N, a.cod_len, a.dom_len);
    std::vector<long> bw(a.N), bv(a.N);
    for (const auto& e : a.ents)
        if (detail::classify_entry(a.N, a.cod_len, a.dom_len, e.row, e.col, bw.data(), bv.data()) !=
            PositionClass::Glue)
            out.ents.push_back(e);
    return out;
}

// Complementary projection: keep only glue positions.
template <class F>
WordMatrix<F> glue_part(const WordMatrix<F>& a) {
    WordMatrix<F> out(a.field, a.N, a.cod_len, a.dom_len);
    std::vector<long> bw(a.N), bv(a.N);
    for (const auto& e : a.ents)
        if (detail::classify_entry(a.N, a.cod_len, a.dom_len, e.row, e.col, bw.data(), bv.data()) ==
            PositionClass::Glue)
            out.ents.push_back(e);
    return out;
}

// a gamma b iff a - b is supported only on glue positions.
template <class F>
bool gamma_equiv(const WordMatrix<F>& a, const WordMatrix<F>& b) {
    return deglue(sub(a, b)).is_zero_matrix();
}

// Count of entries per position class: {cc, glue, forbidden}.
template <class F>
std::array<std::size_t, 3> entry_class_counts(const WordMatrix<F>& a) {
    std::array<std::size_t, 3> out{0, 0, 0};
    std::vector<long> bw(a.N), bv(a.N);
    for (const auto& e : a.ents) {
        auto pc = detail::classify_entry(a.N, a.cod_len, a.dom_len, e.row, e.col, bw.data(), bv.data());
        out[static_cast<int>(pc)]++;
    }
    return out;
}

// bar(w): letterwise j -> N+1-j applied to an index.
inline std::uint64_t bar_index(int N, int len, std::uint64_t idx) {
    std::uint64_t out = 0, stride = 1;
    for (int j = 0; j < len; ++j) {
        out += (static_cast<std::uint64_t>(N) - 1 - idx % N) * stride;
        idx /= N;
        stride *= static_cast<std::uint64_t>(N);
    }
    return out;
}

// J at level n: |w> -> |bar w>, i.e. J^{(x)n} of the antidiagonal J.
template <class F>
WordMatrix<F> j_matrix(const F& f, int N, int n) {
    WordMatrix<F> out(f, N, n, n);
    std::uint64_t d = out.cod_size();
    for (std::uint64_t i = 0; i < d; ++i)
        out.ents.push_back({static_cast<std::uint32_t>(i),
                            static_cast<std::uint32_t>(bar_index(N, n, i)), f.one()});
    out.normalize();
    return out;
}

// Entry map M_{v,w} -> M_{bar v, bar w}; equals conjugation by J^{(x)n}.
template <class F>
WordMatrix<F> skew_conjugate(const WordMatrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("skew_conjugate needs a square matrix");
    WordMatrix<F> out(a.field, a.N, a.cod_len, a.dom_len);
    out.ents.reserve(a.ents.size());
    for (const auto& e : a.ents)
        out.ents.push_back({static_cast<std::uint32_t>(bar_index(a.N, a.cod_len, e.row)),
                            static_cast<std::uint32_t>(bar_index(a.N, a.dom_len, e.col)), e.val});
    out.normalize();
    return out;
}

// Skew transpose: R_{ij,kl} -> R_{bar(kl),bar(ij)} (transpose + bar both).
template <class F>
WordMatrix<F> skew_transpose(const WordMatrix<F>& a) {
    return skew_conjugate(transpose(a));
}

template <class F>
std::uint64_t rank_of(const WordMatrix<F>& a) {
    EchelonBasis<F> ech(a.field);
    SparseVec<F> row;
    std::uint32_t cur = UINT32_MAX;
    for (const auto& e : a.ents) {
        if (e.row != cur && !row.e.empty()) {
            ech.insert(std::move(row));
            row = SparseVec<F>{};
        }
        cur = e.row;
        row.e.emplace_back(e.col, e.val);
    }
    if (!row.e.empty()) ech.insert(std::move(row));
    return ech.dim();
}

// Inverse by sparse Gauss-Jordan on [M | I]. Throws on singular input.
template <class F>
WordMatrix<F> inverse(const WordMatrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse needs a square matrix");
    const std::uint64_t d = a.cod_size();
    std::vector<SparseVec<F>> rows(d);
    for (const auto& e : a.ents) rows[e.row].e.emplace_back(e.col, e.val);
    for (std::uint64_t i = 0; i < d; ++i) rows[i].e.emplace_back(d + i, a.field.one());

    EchelonBasis<F> ech(a.field);
    for (auto& r : rows)
        ech.insert(std::move(r));
    for (const auto& r : ech.rows)
        if (r.e.front().first >= d) throw std::domain_error("matrix is singular");
    if (ech.dim() != d) throw std::domain_error("matrix is singular");

    // full back substitution
    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return ech.rows[x].e.front().first > ech.rows[y].e.front().first;
    });
    EchelonBasis<F> solved(a.field);
    std::vector<std::pair<std::uint64_t, typename F::Elem>> scratch;
    for (std::size_t i : order) {
        SparseVec<F> r = ech.rows[i];
        std::size_t at = 1;
        while (at < r.e.size() && r.e[at].first < d) {
            auto it = solved.pivot_of.find(r.e[at].first);
            if (it == solved.pivot_of.end()) {
                ++at;
                continue;
            }
            auto c = r.e[at].second;
            axpy_sub(a.field, r, c, solved.rows[it->second], scratch);
        }
        solved.pivot_of.emplace(r.e.front().first, static_cast<std::uint32_t>(solved.rows.size()));
        solved.rows.push_back(std::move(r));
    }
    WordMatrix<F> out(a.field, a.N, a.cod_len, a.dom_len);
    for (const auto& r : solved.rows) {
        std::uint32_t i = static_cast<std::uint32_t>(r.e.front().first);
        for (std::size_t k = 1; k < r.e.size(); ++k)
            if (r.e[k].first >= d)
                out.ents.push_back({i, static_cast<std::uint32_t>(r.e[k].first - d), r.e[k].second});
    }
    out.normalize();
    return out;
}

// Least-degree monic annihilator, by echelonizing I, M, M^2, ... with
// coefficient tracking. Coefficients returned low degree first.
template <class F>
std::vector<typename F::Elem> minimal_polynomial(const WordMatrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal polynomial needs a square matrix");
    const std::uint64_t d = m.dom_size();
    const std::uint64_t base = d * d;
    EchelonBasis<F> ech(m.field);
    WordMatrix<F> power = WordMatrix<F>::identity(m.field, m.N, m.cod_len);
    for (std::uint64_t k = 0;; ++k) {
        SparseVec<F> v = power.flatten();
        v.e.emplace_back(base + k, m.field.one());
        ech.reduce(v);
        if (v.e.empty() || v.e.front().first >= base) {
            std::vector<typename F::Elem> coeffs(k + 1, m.field.zero());
            for (const auto& kv : v.e) coeffs[kv.first - base] = kv.second;
            return coeffs;  // monic: leading coefficient untouched by reduction
        }
        // normalize and store
        auto lead_inv = m.field.inv(v.e.front().second);
        for (auto& kv : v.e) kv.second = m.field.mul(kv.second, lead_inv);
        ech.pivot_of.emplace(v.e.front().first, static_cast<std::uint32_t>(ech.rows.size()));
        ech.rows.push_back(std::move(v));
        power = compose(power, m);
    }
}

struct JordanBlockEntry {
    std::string eigenvalue;  // field-serialized
    int block_size;
    long multiplicity;
};
using JordanProfile = std::vector<JordanBlockEntry>;

// Block structure from ranks of (M - lambda I)^k. The supplied eigenvalues
// must account for the full dimension.
template <class F>
JordanProfile jordan_profile(const WordMatrix<F>& m, const std::vector<typename F::Elem>& eigenvalues) {
    if (!m.is_square()) throw std::invalid_argument("jordan profile needs a square matrix");
    const std::uint64_t d = m.dom_size();
    JordanProfile out;
    std::uint64_t accounted = 0;
    for (const auto& lam : eigenvalues) {
        WordMatrix<F> shifted = sub(m, scale(WordMatrix<F>::identity(m.field, m.N, m.cod_len), lam));
        std::vector<std::uint64_t> ranks{d};
        WordMatrix<F> p = shifted;
        while (true) {
            std::uint64_t r = rank_of(p);
            ranks.push_back(r);
            if (r == ranks[ranks.size() - 2]) break;
            p = compose(p, shifted);
        }
        // number of blocks of size exactly s: r_{s-1} - 2 r_s + r_{s+1}
        for (std::size_t s = 1; s < ranks.size(); ++s) {
            std::uint64_t rm1 = ranks[s - 1];
            std::uint64_t rs = ranks[s];
            std::uint64_t rp1 = s + 1 < ranks.size() ? ranks[s + 1] : rs;
            long cnt = static_cast<long>(rm1 + rp1) - 2 * static_cast<long>(rs);
            if (cnt > 0) {
                out.push_back({m.field.to_string(lam), static_cast<int>(s), cnt});
                accounted += static_cast<std::uint64_t>(cnt) * s;
            }
        }
    }
    if (accounted != d)
        throw std::domain_error("supplied eigenvalues do not account for the full dimension");
    return out;
}

}  // namespace ccwg
