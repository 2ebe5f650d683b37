#include "ccwg/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace ccwg {

Rank::Rank(int n) : N(n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

Word::Word(int N, std::vector<int> ls) : rank(N), letters(std::move(ls)) {
    if (N < 1) throw std::invalid_argument("rank must be >= 1");
    for (int c : letters)
        if (c < 1 || c > N) throw std::invalid_argument("letter out of range 1..N");
}

Composition::Composition(int N, std::vector<long> ps) : rank(N), parts(std::move(ps)) {
    if (N < 1) throw std::invalid_argument("rank must be >= 1");
    if (static_cast<int>(parts.size()) != N)
        throw std::invalid_argument("composition must have exactly N parts");
    for (long p : parts)
        if (p < 0) throw std::invalid_argument("composition parts must be >= 0");
}

long Composition::level() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

std::uint64_t default_enumeration_guard() {
    static const std::uint64_t g = [] {
        if (const char* env = std::getenv("CCWG_GUARD")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1000000};
    }();
    return g;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("N^n overflows");
        r *= base;
    }
    return r;
}

Composition charge(const Word& w) {
    std::vector<long> counts(w.rank, 0);
    for (int c : w.letters) counts[c - 1]++;
    return Composition(w.rank, std::move(counts));
}

std::uint64_t revlex_index(const Word& w) {
    std::uint64_t idx = 0, stride = 1;
    for (int c : w.letters) {
        idx += static_cast<std::uint64_t>(c - 1) * stride;
        stride *= static_cast<std::uint64_t>(w.rank);
    }
    return idx;
}

Word word_at(int N, int n, std::uint64_t i) {
    if (N < 1 || n < 0) throw std::invalid_argument("bad shape");
    if (i >= pow_u64(N, n)) throw std::out_of_range("word index out of range");
    std::vector<int> ls(n);
    for (int j = 0; j < n; ++j) {
        ls[j] = static_cast<int>(i % N) + 1;
        i /= N;
    }
    return Word(N, std::move(ls));
}

int comp_compare(const Composition& a, const Composition& b) {
    if (a.rank != b.rank) throw std::invalid_argument("composition rank mismatch");
    if (a.level() != b.level()) throw std::domain_error("compositions of different level are incomparable");
    for (int i = 0; i < a.rank; ++i) {
        if (a.parts[i] != b.parts[i]) return a.parts[i] > b.parts[i] ? -1 : 1;
    }
    return 0;
}

bool comp_less(const Composition& a, const Composition& b) {
    if (a.rank != b.rank) throw std::invalid_argument("composition rank mismatch");
    if (a.level() != b.level()) return false;  // incomparable
    return comp_compare(a, b) < 0;
}

bool comp_less_oracle(const Composition& a, const Composition& b, std::uint64_t guard) {
    if (a.rank != b.rank) throw std::invalid_argument("composition rank mismatch");
    if (a.level() != b.level()) return false;
    const int N = a.rank;
    const int n = static_cast<int>(a.level());
    const std::uint64_t total = pow_u64(N, n);
    if (total > guard) throw std::length_error("enumeration exceeds guard");
    std::uint64_t first_a = total, first_b = total;
    std::vector<long> counts(N);
    for (std::uint64_t i = 0; i < total; ++i) {
        charge_of_index(N, n, i, counts.data());
        if (first_a == total && std::equal(counts.begin(), counts.end(), a.parts.begin()))
            first_a = i;
        if (first_b == total && std::equal(counts.begin(), counts.end(), b.parts.begin()))
            first_b = i;
        if (first_a < total && first_b < total) break;
    }
    return first_a < first_b;
}

Word orbit_rep(const Composition& c) {
    std::vector<int> ls;
    ls.reserve(static_cast<std::size_t>(c.level()));
    for (int letter = c.rank; letter >= 1; --letter)
        for (long j = 0; j < c.parts[letter - 1]; ++j) ls.push_back(letter);
    return Word(c.rank, std::move(ls));
}

std::pair<Word, Word> split(const Word& w, int n) {
    if (n < 0 || n > w.length()) throw std::out_of_range("split point out of range");
    std::vector<int> head(w.letters.begin(), w.letters.begin() + n);
    std::vector<int> tail(w.letters.begin() + n, w.letters.end());
    return {Word(w.rank, std::move(head)), Word(w.rank, std::move(tail))};
}

Parity parity(const Word& w) {
    long s = 0;
    for (int c : w.letters) s += c;
    return (s % 2 == 0) ? Parity::Even : Parity::Odd;
}

PositionClass position_class(const Word& w, const Word& v) {
    if (w.rank != v.rank) throw std::invalid_argument("word rank mismatch");
    if (w.length() != v.length()) return PositionClass::Forbidden;
    Composition fw = charge(w), fv = charge(v);
    int c = comp_compare(fw, fv);
    if (c == 0) return PositionClass::CC;
    return c < 0 ? PositionClass::Glue : PositionClass::Forbidden;
}

std::string word_str(const Word& w) {
    std::string out;
    bool commas = w.rank >= 10;
    for (int i = 0; i < w.length(); ++i) {
        if (commas && i) out += ',';
        out += std::to_string(w.letters[i]);
    }
    return out;
}

Word parse_word(int N, const std::string& s) {
    std::vector<int> ls;
    if (N >= 10 || s.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            ls.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad word digit");
            ls.push_back(c - '0');
        }
    }
    return Word(N, std::move(ls));
}

std::string comp_str(const Composition& c) {
    std::string out = "[";
    for (int i = 0; i < c.rank; ++i) {
        if (i) out += ',';
        out += std::to_string(c.parts[i]);
    }
    return out + "]";
}

Composition parse_comp(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("composition must look like [a,b,...]");
    std::vector<long> parts;
    std::size_t pos = 1;
    while (pos < s.size() - 1) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos || next > s.size() - 1) next = s.size() - 1;
        parts.push_back(std::stol(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    const int rank = static_cast<int>(parts.size());
    return Composition(rank, std::move(parts));
}

void charge_of_index(int N, int len, std::uint64_t idx, long* counts) {
    for (int i = 0; i < N; ++i) counts[i] = 0;
    for (int j = 0; j < len; ++j) {
        counts[idx % N]++;
        idx /= N;
    }
}

int charge_vec_compare(const long* a, const long* b, int N) {
    for (int i = 0; i < N; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

int parity_of_index(int N, int len, std::uint64_t idx) {
    long s = 0;
    for (int j = 0; j < len; ++j) {
        s += static_cast<long>(idx % N) + 1;
        idx /= N;
    }
    return static_cast<int>(s & 1);
}

void letters_of_index(int N, int len, std::uint64_t idx, int* out) {
    for (int j = 0; j < len; ++j) {
        out[j] = static_cast<int>(idx % N) + 1;
        idx /= N;
    }
}

std::uint64_t index_of_letters(int N, int len, const int* letters) {
    std::uint64_t idx = 0, stride = 1;
    for (int j = 0; j < len; ++j) {
        idx += static_cast<std::uint64_t>(letters[j] - 1) * stride;
        stride *= static_cast<std::uint64_t>(N);
    }
    return idx;
}

std::vector<Composition> compositions_sorted(int N, int n) {
    std::vector<Composition> out;
    std::vector<long> cur(N, 0);
    // enumerate all length-N compositions of n
    auto rec = [&](auto&& self, int pos, long rest) -> void {
        if (pos == N - 1) {
            cur[pos] = rest;
            out.emplace_back(N, cur);
            return;
        }
        for (long v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        return comp_compare(a, b) < 0;
    });
    return out;
}

std::vector<std::uint32_t> charge_id_table(int N, int n, std::uint64_t guard) {
    const std::uint64_t total = pow_u64(N, n);
    if (total > guard) throw std::length_error("enumeration exceeds guard");
    auto comps = compositions_sorted(N, n);
    std::map<std::vector<long>, std::uint32_t> rank_of;
    for (std::uint32_t i = 0; i < comps.size(); ++i) rank_of[comps[i].parts] = i;
    std::vector<std::uint32_t> table(total);
    std::vector<long> counts(N);
    for (std::uint64_t i = 0; i < total; ++i) {
        charge_of_index(N, n, i, counts.data());
        table[i] = rank_of.at(counts);
    }
    return table;
}

}  // namespace ccwg
