#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ccwg/wordmatrix.hpp"

namespace ccwg {

// A braid word on n strands: signed generator indices, |i| in 1..n-1.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
        for (int l : letters)
            if (l == 0 || l > strands - 1 || l < -(strands - 1))
                throw std::invalid_argument("braid generator index out of range");
    }
};

// "1,2,-1"
inline BraidWord parse_braid(int strands, const std::string& s) {
    std::vector<int> ls;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        ls.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return BraidWord(strands, std::move(ls));
}

template <class F>
void check_level2(const WordMatrix<F>& r) {
    if (r.cod_len != 2 || r.dom_len != 2)
        throw std::invalid_argument("R-matrix candidate must be a level-2 endomorphism");
}

// R_i = Id^{(x)(i-1)} (x) R (x) Id^{(x)(n-i-1)}
template <class F>
WordMatrix<F> embed(const WordMatrix<F>& r, int i, int n) {
    check_level2(r);
    if (i < 1 || i > n - 1) throw std::out_of_range("embed index out of range");
    WordMatrix<F> out = r;
    if (i > 1) out = kron(WordMatrix<F>::identity(r.field, r.N, i - 1), out);
    if (n - i - 1 > 0) out = kron(out, WordMatrix<F>::identity(r.field, r.N, n - i - 1));
    return out;
}

// Braid anomaly R1 R2 R1 - R2 R1 R2 at level 3.
template <class F>
WordMatrix<F> anomaly(const WordMatrix<F>& r) {
    check_level2(r);
    auto r1 = embed(r, 1, 3);
    auto r2 = embed(r, 2, 3);
    return sub(compose(compose(r1, r2), r1), compose(compose(r2, r1), r2));
}

template <class F>
bool is_invertible(const WordMatrix<F>& r) {
    if (!r.is_square()) return false;
    return rank_of(r) == r.cod_size();
}

// Yang-Baxter operator: vanishing anomaly together with invertibility.
template <class F>
bool is_ybo(const WordMatrix<F>& r) {
    check_level2(r);
    return is_invertible(r) && anomaly(r).is_zero_matrix();
}

// The ordinary representation of B_n: product of embedded generators.
template <class F>
WordMatrix<F> rho(const WordMatrix<F>& r, const BraidWord& beta) {
    check_level2(r);
    const int n = beta.strands;
    auto out = WordMatrix<F>::identity(r.field, r.N, n);
    std::optional<WordMatrix<F>> rinv;
    for (int l : beta.letters) {
        if (l > 0) {
            out = compose(out, embed(r, l, n));
        } else {
            if (!rinv) rinv = inverse(r);  // throws on singular R
            out = compose(out, embed(*rinv, -l, n));
        }
    }
    return out;
}

// Keep the entries whose four letters all lie in the subalphabet, relabelled
// order-preservingly onto {1..k}.
template <class F>
WordMatrix<F> restrict_alphabet(const WordMatrix<F>& r, const std::vector<int>& sub) {
    if (sub.empty()) throw std::invalid_argument("empty subalphabet");
    for (std::size_t i = 0; i + 1 < sub.size(); ++i)
        if (sub[i] >= sub[i + 1]) throw std::invalid_argument("subalphabet must be strictly increasing");
    if (sub.front() < 1 || sub.back() > r.N) throw std::invalid_argument("subalphabet out of range");
    std::vector<int> relabel(r.N + 1, 0);
    for (std::size_t i = 0; i < sub.size(); ++i) relabel[sub[i]] = static_cast<int>(i) + 1;
    const int k = static_cast<int>(sub.size());
    WordMatrix<F> out(r.field, k, r.cod_len, r.dom_len);
    std::vector<int> lw(r.cod_len), lv(r.dom_len);
    for (const auto& e : r.ents) {
        letters_of_index(r.N, r.cod_len, e.row, lw.data());
        letters_of_index(r.N, r.dom_len, e.col, lv.data());
        bool ok = true;
        for (int c : lw) ok = ok && relabel[c] != 0;
        for (int c : lv) ok = ok && relabel[c] != 0;
        if (!ok) continue;
        for (int& c : lw) c = relabel[c];
        for (int& c : lv) c = relabel[c];
        out.ents.push_back({static_cast<std::uint32_t>(index_of_letters(k, r.cod_len, lw.data())),
                            static_cast<std::uint32_t>(index_of_letters(k, r.dom_len, lv.data())),
                            e.val});
    }
    out.normalize();
    return out;
}

// Local (gauge) equivalence: (A(x)A) R (A(x)A)^{-1} for invertible level-1 A.
template <class F>
WordMatrix<F> gauge_apply(const WordMatrix<F>& a, const WordMatrix<F>& r) {
    check_level2(r);
    if (a.cod_len != 1 || a.dom_len != 1) throw std::invalid_argument("gauge matrix must be level 1");
    auto aa = kron(a, a);
    return compose(compose(aa, r), inverse(aa));
}

// DS transform (T(x)I) R (T(x)I)^{-1}; requires [T(x)T, R] = 0.
template <class F>
WordMatrix<F> ds_transform(const WordMatrix<F>& t, const WordMatrix<F>& r) {
    check_level2(r);
    if (t.cod_len != 1 || t.dom_len != 1) throw std::invalid_argument("T must be level 1");
    auto tt = kron(t, t);
    if (!(compose(tt, r) == compose(r, tt)))
        throw std::domain_error("DS hypothesis fails: T(x)T does not commute with R");
    auto ti = kron(t, WordMatrix<F>::identity(r.field, r.N, 1));
    return compose(compose(ti, r), inverse(ti));
}

// X-symmetry with a local diagonal: (d(x)d) R (d(x)d)^{-1}.
template <class F>
WordMatrix<F> xsym_apply(const WordMatrix<F>& d, const WordMatrix<F>& r) {
    check_level2(r);
    if (d.cod_len != 1 || d.dom_len != 1) throw std::invalid_argument("d must be level 1");
    for (const auto& e : d.ents)
        if (e.row != e.col) throw std::invalid_argument("d must be diagonal");
    return gauge_apply(d, r);
}

// Conjugation by a level-2 diagonal (diagonal in the word basis). This is
// the channelwise form of X-symmetry; it fixes all diagonal-word entries.
template <class F>
WordMatrix<F> xsym_apply_channel(const WordMatrix<F>& delta, const WordMatrix<F>& r) {
    check_level2(r);
    check_same_shape(delta, r);
    for (const auto& e : delta.ents)
        if (e.row != e.col) throw std::invalid_argument("delta must be diagonal");
    if (delta.ents.size() != delta.cod_size()) throw std::domain_error("delta is singular");
    return compose(compose(delta, r), inverse(delta));
}

// Solve for a level-2 diagonal delta with delta R delta^{-1} = S from the
// multiplicative constraints R_{wv} * d_w / d_v = S_{wv}, entry by entry.
// Returns nothing when the constraint graph is inconsistent or a required
// ratio is undetermined-inconsistent ("no diagonal witness").
template <class F>
std::optional<WordMatrix<F>> xsym_witness(const WordMatrix<F>& r, const WordMatrix<F>& s) {
    check_level2(r);
    check_same_shape(r, s);
    const F& f = r.field;
    const std::uint64_t d = r.cod_size();
    if (r.ents.size() != s.ents.size()) return std::nullopt;
    // support must match; ratio_{wv} = S_{wv}/R_{wv} = d_w/d_v
    std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> ratios;
    for (const auto& e : r.ents) {
        auto sv = s.get(e.row, e.col);
        if (f.is_zero(sv)) return std::nullopt;
        ratios.emplace_back(e.row, e.col, f.div(sv, e.val));
    }
    // propagate d values over the constraint graph, component by component
    std::vector<typename F::Elem> dval(d, f.zero());
    std::vector<char> known(d, 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [w, v, ratio] : ratios) {
            if (known[w] && !known[v]) {
                dval[v] = f.div(dval[w], ratio);
                known[v] = 1;
                progress = true;
            } else if (!known[w] && known[v]) {
                dval[w] = f.mul(dval[v], ratio);
                known[w] = 1;
                progress = true;
            } else if (!known[w] && !known[v]) {
                dval[v] = f.one();
                dval[w] = ratio;
                known[v] = known[w] = 1;
                progress = true;
            }
        }
    }
    for (std::uint64_t i = 0; i < d; ++i)
        if (!known[i]) {
            dval[i] = f.one();
            known[i] = 1;
        }
    for (const auto& [w, v, ratio] : ratios)
        if (!f.eq(f.div(dval[w], dval[v]), ratio)) return std::nullopt;
    WordMatrix<F> delta(f, r.N, 2, 2);
    for (std::uint64_t i = 0; i < d; ++i)
        delta.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), dval[i]);
    delta.normalize();
    return delta;
}

// R equals its own skew transpose.
template <class F>
bool skew_invariance_check(const WordMatrix<F>& r) {
    if (!r.is_square()) return false;
    return r == skew_transpose(r);
}

// J_{N^n} conjugates each embedded generator to the embedded transpose.
template <class F>
bool j_intertwiner_check(const WordMatrix<F>& r, int n) {
    check_level2(r);
    auto j = j_matrix(r.field, r.N, n);
    auto rt = transpose(r);
    for (int i = 1; i <= n - 1; ++i) {
        auto lhs = compose(compose(j, embed(r, i, n)), j);
        if (!(lhs == embed(rt, i, n))) return false;
    }
    return true;
}

}  // namespace ccwg
