#pragma once

#include <string>
#include <vector>

#include "ccwg/wordmatrix.hpp"

namespace ccwg {

// Words over {A,B,C,D}, each letter standing for a 4x4 sign-diagonal block:
//   A = diag(1,-1,1,1)   B = diag(1,1,-1,1)
//   C = diag(-1,-1,1,-1) D = diag(-1,1,-1,-1)
using CombWord = std::string;

// The substitution A->BA, B->AC, C->DB, D->CD, extended multiplicatively.
CombWord comb_next(const CombWord& w);

// w_1 = A, w_n = comb_next(w_{n-1}).
CombWord comb_word(int n);

// Sign digits of a comb word (4 per letter).
std::vector<int> comb_signs(const CombWord& w);

// Iterated odd/even decodability: true iff every odd/even position
// subsequence of the sign string decodes back to letters, recursively down
// to single letters.
bool well_combed_check(const CombWord& w);

// The 2^n sign diagonal built from w_{n-1}; intertwines the fI and diamond
// towers generator by generator.
template <class F>
WordMatrix<F> comb_intertwiner(const F& f, int n) {
    if (n < 2) throw std::invalid_argument("comb intertwiner needs n >= 2");
    auto signs = comb_signs(comb_word(n - 1));
    WordMatrix<F> out(f, 2, n, n);
    for (std::uint64_t i = 0; i < signs.size(); ++i)
        out.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i),
                 f.from_long(signs[i]));
    out.normalize();
    return out;
}

}  // namespace ccwg
