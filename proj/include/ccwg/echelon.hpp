#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccwg {

// Sparse coordinate vector: (key, value) pairs sorted by key, no zeros.
template <class F>
struct SparseVec {
    using Elem = typename F::Elem;
    std::vector<std::pair<std::uint64_t, Elem>> e;

    bool empty() const { return e.empty(); }
    std::size_t nnz() const { return e.size(); }

    void sort_combine(const F& f) {
        std::sort(e.begin(), e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < e.size();) {
            std::uint64_t k = e[i].first;
            Elem acc = e[i].second;
            for (++i; i < e.size() && e[i].first == k; ++i) acc = f.add(acc, e[i].second);
            if (!f.is_zero(acc)) e[out++] = {k, std::move(acc)};
        }
        e.resize(out);
    }
};

// v <- v - c * w, both sorted; result sorted. Scratch buffer supplied to cut
// allocations in the echelon inner loop.
template <class F>
void axpy_sub(const F& f, SparseVec<F>& v, const typename F::Elem& c, const SparseVec<F>& w,
              std::vector<std::pair<std::uint64_t, typename F::Elem>>& scratch) {
    scratch.clear();
    scratch.reserve(v.e.size() + w.e.size());
    std::size_t i = 0, j = 0;
    while (i < v.e.size() && j < w.e.size()) {
        if (v.e[i].first < w.e[j].first) {
            scratch.push_back(v.e[i++]);
        } else if (v.e[i].first > w.e[j].first) {
            scratch.emplace_back(w.e[j].first, f.neg(f.mul(c, w.e[j].second)));
            ++j;
        } else {
            auto nv = f.sub(v.e[i].second, f.mul(c, w.e[j].second));
            if (!f.is_zero(nv)) scratch.emplace_back(v.e[i].first, std::move(nv));
            ++i;
            ++j;
        }
    }
    for (; i < v.e.size(); ++i) scratch.push_back(v.e[i]);
    for (; j < w.e.size(); ++j) scratch.emplace_back(w.e[j].first, f.neg(f.mul(c, w.e[j].second)));
    v.e.swap(scratch);
}

// Row echelon basis over an abstract u64 key space. Each stored vector is
// normalized (leading coefficient 1) and reduced against earlier pivots;
// pivots are the smallest keys, all distinct.
template <class F>
struct EchelonBasis {
    using Elem = typename F::Elem;
    F field;
    std::vector<SparseVec<F>> rows;
    std::unordered_map<std::uint64_t, std::uint32_t> pivot_of;

    explicit EchelonBasis(const F& f) : field(f) {}

    std::size_t dim() const { return rows.size(); }

    // Reduces v against the basis in place; returns the residue.
    void reduce(SparseVec<F>& v) const {
        std::vector<std::pair<std::uint64_t, Elem>> scratch;
        while (!v.e.empty()) {
            auto it = pivot_of.find(v.e.front().first);
            if (it == pivot_of.end()) return;
            Elem c = v.e.front().second;
            axpy_sub(field, v, c, rows[it->second], scratch);
        }
    }

    // Reduce fully, i.e. also eliminate non-leading entries that match pivots.
    void reduce_full(SparseVec<F>& v) const {
        std::vector<std::pair<std::uint64_t, Elem>> scratch;
        std::size_t at = 0;
        while (at < v.e.size()) {
            auto it = pivot_of.find(v.e[at].first);
            if (it == pivot_of.end()) {
                ++at;
                continue;
            }
            Elem c = v.e[at].second;
            axpy_sub(field, v, c, rows[it->second], scratch);
        }
    }

    // Returns true (and stores the normalized residue) if v extends the span.
    bool insert(SparseVec<F> v) {
        reduce(v);
        if (v.e.empty()) return false;
        Elem lead_inv = field.inv(v.e.front().second);
        for (auto& kv : v.e) kv.second = field.mul(kv.second, lead_inv);
        pivot_of.emplace(v.e.front().first, static_cast<std::uint32_t>(rows.size()));
        rows.push_back(std::move(v));
        return true;
    }

    bool contains(SparseVec<F> v) const {
        reduce(v);
        return v.e.empty();
    }
};

// Nullspace of a list of sparse linear constraints over unknowns 0..n-1.
// Returns one basis vector per free unknown, each with value 1 at the free
// position (echelonized in the fixed coordinate order).
template <class F>
std::vector<SparseVec<F>> nullspace(const F& f, std::vector<SparseVec<F>> rows,
                                    std::uint64_t n_unknowns) {
    EchelonBasis<F> ech(f);
    for (auto& r : rows) ech.insert(std::move(r));

    // back-substitute pivot rows into fully reduced form
    std::vector<std::uint64_t> pivot_keys;
    pivot_keys.reserve(ech.rows.size());
    for (const auto& r : ech.rows) pivot_keys.push_back(r.e.front().first);
    std::vector<std::size_t> order(ech.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_keys[a] > pivot_keys[b]; });
    std::vector<std::pair<std::uint64_t, typename F::Elem>> scratch;
    EchelonBasis<F> solved(f);
    for (std::size_t i : order) {
        SparseVec<F> r = ech.rows[i];
        // eliminate later pivots from the tail
        std::size_t at = 1;
        while (at < r.e.size()) {
            auto it = solved.pivot_of.find(r.e[at].first);
            if (it == solved.pivot_of.end()) {
                ++at;
                continue;
            }
            auto c = r.e[at].second;
            axpy_sub(f, r, c, solved.rows[it->second], scratch);
        }
        solved.pivot_of.emplace(r.e.front().first, static_cast<std::uint32_t>(solved.rows.size()));
        solved.rows.push_back(std::move(r));
    }

    std::vector<SparseVec<F>> out;
    for (std::uint64_t j = 0; j < n_unknowns; ++j) {
        if (solved.pivot_of.count(j)) continue;
        SparseVec<F> x;
        x.e.emplace_back(j, f.one());
        for (const auto& r : solved.rows) {
            // pivot value = -coefficient of unknown j in the solved row
            auto it = std::lower_bound(r.e.begin(), r.e.end(), j,
                                       [](const auto& kv, std::uint64_t key) { return kv.first < key; });
            if (it != r.e.end() && it->first == j)
                x.e.emplace_back(r.e.front().first, f.neg(it->second));
        }
        x.sort_combine(f);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace ccwg
