#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ccwg {

// Alphabet size N >= 1. Words are finite sequences over {1..N}.
struct Rank {
    int N = 1;
    explicit Rank(int n);
};

struct Word {
    int rank = 1;
    std::vector<int> letters;  // each in 1..rank

    Word() = default;
    Word(int N, std::vector<int> ls);
    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word&) const = default;
};

// Nonnegative integer vector of length N; the charge of a word.
struct Composition {
    int rank = 1;
    std::vector<long> parts;

    Composition() = default;
    Composition(int N, std::vector<long> ps);
    long level() const;
    bool operator==(const Composition&) const = default;
};

enum class PositionClass { CC, Glue, Forbidden };
enum class Parity { Even, Odd };

// Enumeration guard, overridable through the CCWG_GUARD environment variable.
std::uint64_t default_enumeration_guard();

// N^n with an overflow check.
std::uint64_t pow_u64(std::uint64_t base, int exp);

// f(w)_i = number of occurrences of letter i in w.
Composition charge(const Word& w);

// Revlex index: first letter varies fastest, index = sum (w_j - 1) N^(j-1).
std::uint64_t revlex_index(const Word& w);

// Inverse of revlex_index. Throws std::out_of_range for i >= N^n.
Word word_at(int N, int n, std::uint64_t i);

// Strict order on compositions: at the first differing index the larger part
// comes first. Different levels are incomparable (false both ways).
bool comp_less(const Composition& a, const Composition& b);

// -1 if a < b, 0 if equal, +1 if a > b. Throws on rank mismatch or when
// levels differ (incomparable).
int comp_compare(const Composition& a, const Composition& b);

// Brute-force order by first-instance position in the revlex enumeration of
// all words of the common level. Guarded: throws if N^n exceeds `guard`.
bool comp_less_oracle(const Composition& a, const Composition& b,
                      std::uint64_t guard = default_enumeration_guard());

// The revlex-first word with the given charge: weakly decreasing letters.
Word orbit_rep(const Composition& c);

// (first n letters, rest).
std::pair<Word, Word> split(const Word& w, int n);

// Parity of the letter sum.
Parity parity(const Word& w);

// CC if charges equal, Glue if f(w) < f(v), Forbidden otherwise.
// Words of different lengths are Forbidden (incomparable convention).
PositionClass position_class(const Word& w, const Word& v);

// Serialization: digit string "1211" for N <= 9, comma-separated otherwise.
std::string word_str(const Word& w);
Word parse_word(int N, const std::string& s);
std::string comp_str(const Composition& c);
Composition parse_comp(const std::string& s);

// --- index-level helpers used by the matrix layer (no allocation) ---

// Writes the charge of the word with revlex index `idx` into counts[0..N-1].
void charge_of_index(int N, int len, std::uint64_t idx, long* counts);

// Order of charges a, b (length N, equal levels assumed): -1 a<b, 0, +1.
int charge_vec_compare(const long* a, const long* b, int N);

// Parity (0 even, 1 odd) of the letter sum of the word with index `idx`.
int parity_of_index(int N, int len, std::uint64_t idx);

// Letters of an indexed word written into out[0..len-1].
void letters_of_index(int N, int len, std::uint64_t idx, int* out);

std::uint64_t index_of_letters(int N, int len, const int* letters);

// All compositions of level n into N parts, sorted by comp_less.
std::vector<Composition> compositions_sorted(int N, int n);

// charge_id[idx] = rank of charge(word idx) in the sorted composition order.
// Throws if N^n exceeds the guard.
std::vector<std::uint32_t> charge_id_table(int N, int n,
                                           std::uint64_t guard = default_enumeration_guard());

}  // namespace ccwg
