#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccwg/words.hpp"

using namespace ccwg;

namespace {
Word w(int N, std::initializer_list<int> ls) { return Word(N, std::vector<int>(ls)); }
Composition cp(std::initializer_list<long> ps) {
    return Composition(static_cast<int>(ps.size()), std::vector<long>(ps));
}
}  // namespace

TEST_CASE("charge counts letters") {
    CHECK(charge(w(3, {2, 1, 1, 1})) == cp({3, 1, 0}));
    CHECK(charge(w(2, {1, 1, 2, 1})) == cp({3, 1}));
    CHECK(charge(w(2, {1, 1, 2, 1})).parts[1] == 1);
    CHECK(charge(Word(2, {})) == cp({0, 0}));
    CHECK(charge(Word(2, {})).level() == 0);
}

TEST_CASE("revlex index: first letter fastest") {
    CHECK(revlex_index(w(3, {1, 1, 1, 1})) == 0);
    CHECK(revlex_index(w(3, {2, 1, 1, 1})) == 1);
    CHECK(revlex_index(w(3, {3, 1, 1, 1})) == 2);
    CHECK(revlex_index(w(3, {1, 2, 1, 1})) == 3);
    CHECK(revlex_index(w(2, {1, 1})) == 0);
    CHECK(revlex_index(w(2, {2, 1})) == 1);
    CHECK(revlex_index(w(2, {1, 2})) == 2);
    CHECK(revlex_index(w(2, {2, 2})) == 3);
    for (int k = 1; k <= 5; ++k) CHECK(revlex_index(w(5, {k})) == static_cast<std::uint64_t>(k - 1));
}

TEST_CASE("word_at inverts revlex_index") {
    CHECK(word_at(3, 4, 3) == w(3, {1, 2, 1, 1}));
    CHECK(word_at(2, 2, 0) == w(2, {1, 1}));
    CHECK(word_at(2, 2, 3) == w(2, {2, 2}));
    for (std::uint64_t i = 0; i < 81; ++i) CHECK(revlex_index(word_at(3, 4, i)) == i);
    CHECK_THROWS_AS(word_at(2, 2, 4), std::out_of_range);
}

TEST_CASE("composition order: first difference, larger part first") {
    // 53104 comes after 53203: first difference at index 3 (1 < 2)
    CHECK(comp_less(cp({5, 3, 2, 0, 3}), cp({5, 3, 1, 0, 4})));
    CHECK_FALSE(comp_less(cp({5, 3, 1, 0, 4}), cp({5, 3, 2, 0, 3})));
    // the first instances at N=3, n=4: 400 < 310 < 301 < 220 < 211 < 202
    std::vector<Composition> chain = {cp({4, 0, 0}), cp({3, 1, 0}), cp({3, 0, 1}),
                                      cp({2, 2, 0}), cp({2, 1, 1}), cp({2, 0, 2})};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(comp_less(chain[i], chain[i + 1]));
        CHECK_FALSE(comp_less(chain[i + 1], chain[i]));
    }
    CHECK_FALSE(comp_less(cp({2, 1}), cp({2, 1})));
    // different levels are incomparable both ways
    CHECK_FALSE(comp_less(cp({1, 0}), cp({1, 1})));
    CHECK_FALSE(comp_less(cp({1, 1}), cp({1, 0})));
    CHECK_THROWS_AS(comp_less(cp({1, 0}), Composition(3, {1, 0, 0})), std::invalid_argument);
}

TEST_CASE("brute-force order oracle agrees with comp_less") {
    CHECK(comp_less_oracle(cp({4, 0, 0}), cp({2, 2, 0})));
    CHECK_FALSE(comp_less_oracle(cp({2, 2, 0}), cp({2, 2, 0})));
    for (int n = 1; n <= 6; ++n) {
        auto comps = compositions_sorted(2, n);
        for (const auto& a : comps)
            for (const auto& b : comps) CHECK(comp_less(a, b) == comp_less_oracle(a, b));
    }
    CHECK_THROWS_AS(comp_less_oracle(Composition(2, {30, 0}), Composition(2, {29, 1}), 1000),
                    std::length_error);
}

TEST_CASE("orbit representative is the weakly decreasing word") {
    CHECK(orbit_rep(cp({5, 3, 1, 0, 4})) == w(5, {5, 5, 5, 5, 3, 2, 2, 2, 1, 1, 1, 1, 1}));
    CHECK(orbit_rep(cp({5, 3, 2, 0, 3})) == w(5, {5, 5, 5, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1}));
    CHECK(orbit_rep(cp({4, 0, 0})) == w(3, {1, 1, 1, 1}));
    CHECK(charge(orbit_rep(cp({2, 5, 1}))) == cp({2, 5, 1}));
    // revlex-first property: no earlier word has the same charge
    for (int n = 1; n <= 5; ++n) {
        for (const auto& c : compositions_sorted(3, n)) {
            auto rep = orbit_rep(c);
            auto ri = revlex_index(rep);
            for (std::uint64_t i = 0; i < ri; ++i) CHECK_FALSE(charge(word_at(3, n, i)) == c);
        }
    }
}

TEST_CASE("split and charge additivity") {
    auto [a, b] = split(w(3, {1, 2, 3, 2, 1}), 2);
    CHECK(a == w(3, {1, 2}));
    CHECK(b == w(3, {3, 2, 1}));
    auto [e, full] = split(w(2, {1, 2}), 0);
    CHECK(e.length() == 0);
    CHECK(full == w(2, {1, 2}));
    CHECK_THROWS_AS(split(w(2, {1}), 2), std::out_of_range);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 10000; ++t) {
        int N = static_cast<int>(rng() % 4) + 1;
        int len = static_cast<int>(rng() % 9);
        std::vector<int> ls(len);
        for (auto& c : ls) c = static_cast<int>(rng() % N) + 1;
        Word word(N, ls);
        int at = len ? static_cast<int>(rng() % (len + 1)) : 0;
        auto [l, r] = split(word, at);
        auto cl = charge(l), cr = charge(r), cw = charge(word);
        for (int i = 0; i < N; ++i) CHECK(cl.parts[i] + cr.parts[i] == cw.parts[i]);
    }
}

TEST_CASE("parity of the letter sum") {
    CHECK(parity(w(3, {1, 2, 3})) == parity(w(3, {2, 2, 2})));
    CHECK(parity(w(2, {1, 1})) == parity(w(2, {2, 2})));
    CHECK(parity(w(2, {1, 1})) != parity(w(2, {1, 2})));
    CHECK(parity(Word(2, {})) == Parity::Even);
}

TEST_CASE("position classes") {
    CHECK(position_class(w(2, {1, 1}), w(2, {2, 1})) == PositionClass::Glue);
    CHECK(position_class(w(2, {2, 1}), w(2, {1, 2})) == PositionClass::CC);
    CHECK(position_class(w(2, {2, 2}), w(2, {1, 2})) == PositionClass::Forbidden);
    CHECK(position_class(w(2, {1}), w(2, {1, 1})) == PositionClass::Forbidden);
    // glue/forbidden are swapped under transposition; CC is symmetric
    for (std::uint64_t i = 0; i < 27; ++i)
        for (std::uint64_t j = 0; j < 27; ++j) {
            auto wi = word_at(3, 3, i), wj = word_at(3, 3, j);
            auto ab = position_class(wi, wj), ba = position_class(wj, wi);
            if (ab == PositionClass::CC) CHECK(ba == PositionClass::CC);
            if (ab == PositionClass::Glue) CHECK(ba == PositionClass::Forbidden);
            if (ab == PositionClass::Forbidden) CHECK(ba == PositionClass::Glue);
        }
}

TEST_CASE("word and composition serialization") {
    CHECK(word_str(w(3, {1, 2, 1, 1})) == "1211");
    CHECK(parse_word(3, "1211") == w(3, {1, 2, 1, 1}));
    CHECK(word_str(w(12, {1, 2, 11})) == "1,2,11");
    CHECK(parse_word(12, "1,2,11") == w(12, {1, 2, 11}));
    CHECK(comp_str(cp({3, 1, 0})) == "[3,1,0]");
    CHECK(parse_comp("[3,1,0]") == cp({3, 1, 0}));
}
