#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccwg/field.hpp"
#include "ccwg/wordmatrix.hpp"

using namespace ccwg;

namespace {

const RationalField Q;
using M = WordMatrix<RationalField>;

M from_rows(int N, int len, const std::vector<std::vector<long>>& rows) {
    M m(Q, N, len, len);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) m.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                   mpq_class(rows[i][j]));
    m.normalize();
    return m;
}

// the running upper-triangular example: basis order 11, 21, 12, 22
M morange(long a, long b, long c, long d, long f, long g, long h, long k, long l, long m, long r) {
    return from_rows(2, 2,
                     {{a, b, c, d}, {0, f, g, h}, {0, k, l, m}, {0, 0, 0, r}});
}

M rfI() { return from_rows(2, 2, {{1, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}}); }

M random_ccwg(std::mt19937_64& rng, int N, int n, double density = 0.4) {
    M m(Q, N, n, n);
    std::vector<long> bw(N), bv(N);
    const std::uint64_t dsz = m.cod_size();
    for (std::uint64_t r = 0; r < dsz; ++r)
        for (std::uint64_t c = 0; c < dsz; ++c) {
            if (detail::classify_entry(N, n, n, r, c, bw.data(), bv.data()) ==
                PositionClass::Forbidden)
                continue;
            if (static_cast<double>(rng() % 1000) / 1000.0 >= density) continue;
            long num = static_cast<long>(rng() % 19) - 9;
            if (!num) continue;
            m.push(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), mpq_class(num));
        }
    m.normalize();
    return m;
}

std::uint32_t widx(int N, const std::string& s) {
    return static_cast<std::uint32_t>(revlex_index(parse_word(N, s)));
}

}  // namespace

TEST_CASE("compose matches the bra-ket expansion") {
    auto m = morange(2, 3, 5, 7, 11, 13, 29, 17, 19, 23, 31);
    CHECK(m.get(widx(2, "22"), widx(2, "12")) == 0);  // f(22) > f(12) position
    auto id = M::identity(Q, 2, 2);
    CHECK(compose(id, m) == m);
    CHECK(compose(m, id) == m);

    // product of two pure-glue matrices is supported only at (11,22):
    // the only strict charge chain at N=2, n=2 is 20 < 11 < 02
    M g1(Q, 2, 2, 2), g2(Q, 2, 2, 2);
    long v = 2;
    for (const char* rw : {"11", "21", "12", "22"})
        for (const char* cw : {"11", "21", "12", "22"}) {
            if (position_class(parse_word(2, rw), parse_word(2, cw)) != PositionClass::Glue)
                continue;
            g1.push(widx(2, rw), widx(2, cw), mpq_class(v));
            g2.push(widx(2, rw), widx(2, cw), mpq_class(v + 1));
            v += 2;
        }
    g1.normalize();
    g2.normalize();
    auto prod = compose(g1, g2);
    REQUIRE(prod.ents.size() == 1);
    CHECK(prod.ents[0].row == widx(2, "11"));
    CHECK(prod.ents[0].col == widx(2, "22"));
}

TEST_CASE("kron reproduces the level-1 tensor square") {
    // D = [[alpha, beta], [0, gamma]] with alpha=2, beta=3, gamma=5
    M d(Q, 2, 1, 1);
    d.push(0, 0, mpq_class(2));
    d.push(0, 1, mpq_class(3));
    d.push(1, 1, mpq_class(5));
    d.normalize();
    auto dd = kron(d, d);
    CHECK(dd.get(widx(2, "11"), widx(2, "22")) == 9);   // beta*beta
    CHECK(dd.get(widx(2, "11"), widx(2, "11")) == 4);   // alpha*alpha
    CHECK(dd.get(widx(2, "21"), widx(2, "21")) == 10);  // alpha*gamma
    CHECK(dd.get(widx(2, "12"), widx(2, "12")) == 10);
    CHECK(dd.get(widx(2, "22"), widx(2, "22")) == 25);
    auto i2 = M::identity(Q, 2, 2);
    CHECK(kron(M::identity(Q, 2, 1), M::identity(Q, 2, 1)) == i2);
}

TEST_CASE("kron satisfies the split identity entrywise") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 10000) {
        int N = static_cast<int>(rng() % 3) + 1;
        int n = static_cast<int>(rng() % 3) + 1;
        int m = static_cast<int>(rng() % 3) + 1;
        auto L = random_ccwg(rng, N, n), R = random_ccwg(rng, N, m);
        auto K = kron(L, R);
        const std::uint64_t dn = pow_u64(N, n + m);
        for (int t = 0; t < 40; ++t, ++checked) {
            auto r = rng() % dn, c = rng() % dn;
            Word rw = word_at(N, n + m, r), cw = word_at(N, n + m, c);
            auto [rl, rr] = split(rw, n);
            auto [cl, cr] = split(cw, n);
            mpq_class expect = L.get(static_cast<std::uint32_t>(revlex_index(rl)),
                                     static_cast<std::uint32_t>(revlex_index(cl))) *
                               R.get(static_cast<std::uint32_t>(revlex_index(rr)),
                                     static_cast<std::uint32_t>(revlex_index(cr)));
            CHECK(K.get(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)) == expect);
        }
    }
    // associativity on a few random triples
    for (int t = 0; t < 10; ++t) {
        auto A = random_ccwg(rng, 2, 1), B = random_ccwg(rng, 2, 2), C = random_ccwg(rng, 2, 1);
        CHECK(kron(kron(A, B), C) == kron(A, kron(B, C)));
    }
}

TEST_CASE("CC / CCwg / parity predicates") {
    auto example = from_rows(2, 2, {{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 0, 1}});
    CHECK(is_ccwg(example));
    CHECK_FALSE(is_cc(example));
    CHECK_FALSE(is_ccwg(transpose(example)));
    auto id = M::identity(Q, 3, 2);
    CHECK(is_cc(id));
    CHECK(is_ccwg(id));
    CHECK(is_parity_preserving(id));
    // non-square matrices are CCwg only when zero
    M ns(Q, 2, 1, 2);
    CHECK(is_ccwg(ns));
    ns.push(0, 0, mpq_class(1));
    ns.normalize();
    CHECK_FALSE(is_ccwg(ns));
}

TEST_CASE("deglue keeps exactly the CC entries") {
    auto m = morange(2, 3, 5, 7, 11, 13, 29, 17, 19, 23, 31);
    auto k = deglue(m);
    CHECK(k.ents.size() == 6);  // a f g k l r
    CHECK(k.get(widx(2, "11"), widx(2, "11")) == 2);
    CHECK(k.get(widx(2, "21"), widx(2, "21")) == 11);
    CHECK(k.get(widx(2, "21"), widx(2, "12")) == 13);
    CHECK(k.get(widx(2, "12"), widx(2, "21")) == 17);
    CHECK(k.get(widx(2, "12"), widx(2, "12")) == 19);
    CHECK(k.get(widx(2, "22"), widx(2, "22")) == 31);
    CHECK(deglue(k) == k);
    CHECK(add(deglue(m), glue_part(m)) == m);

    auto r = rfI();
    auto dr = deglue(r);
    CHECK(dr == from_rows(2, 2, {{1, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}}));
    CHECK(gamma_equiv(m, deglue(m)));
    CHECK(gamma_equiv(r, dr));
    CHECK_FALSE(gamma_equiv(r, M::identity(Q, 2, 2)));
}

TEST_CASE("inverse") {
    auto id = M::identity(Q, 2, 2);
    CHECK(inverse(id) == id);
    auto r = rfI();
    CHECK(compose(r, inverse(r)) == id);
    CHECK(compose(inverse(r), r) == id);
    // the triangular example is invertible iff a*r*(f*l - g*k) != 0
    auto m = morange(2, 3, 5, 7, 11, 13, 29, 17, 19, 23, 31);
    CHECK(compose(m, inverse(m)) == id);
    auto sing = morange(2, 3, 5, 7, 13, 19, 29, 13, 19, 23, 31);  // f*l - g*k = 0
    CHECK_THROWS_AS(inverse(sing), std::domain_error);
    auto sing2 = morange(0, 3, 5, 7, 11, 13, 29, 17, 19, 23, 31);  // a = 0
    CHECK_THROWS_AS(inverse(sing2), std::domain_error);
}

TEST_CASE("minimal polynomials") {
    auto id = M::identity(Q, 2, 2);
    CHECK(minimal_polynomial(id) == std::vector<mpq_class>{-1, 1});  // x - 1
    // (x-1)^2 (x+1) = x^3 - x^2 - x + 1
    CHECK(minimal_polynomial(rfI()) == std::vector<mpq_class>{1, -1, -1, 1});
    auto heart = from_rows(2, 2, {{1, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    // (x-1)^3 (x+1) = x^4 - 2 x^3 + 2 x - 1
    CHECK(minimal_polynomial(heart) == std::vector<mpq_class>{-1, 2, 0, -2, 1});
    // annihilation and minimality
    for (const auto& m : {rfI(), heart}) {
        auto p = minimal_polynomial(m);
        M acc(Q, 2, 2, 2);
        auto pw = M::identity(Q, 2, 2);
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc = add(acc, scale(pw, p[i]));
            if (i + 1 < p.size()) pw = compose(pw, m);
        }
        CHECK(acc.is_zero_matrix());
    }
}

TEST_CASE("jordan profiles from rank sequences") {
    auto id = M::identity(Q, 2, 3);
    auto prof = jordan_profile(id, {mpq_class(1)});
    REQUIRE(prof.size() == 1);
    CHECK(prof[0].block_size == 1);
    CHECK(prof[0].multiplicity == 8);

    auto asl = from_rows(3, 2,
                         {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                          {0, 2, 0, 1, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 1, 0, 0},
                          {0, -1, 0, 0, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 1, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 0, 1, 0},
                          {0, 0, 1, 0, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 1, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 0, 0, 1}});
    auto p1 = jordan_profile(asl, {mpq_class(1), mpq_class(-1)});
    // one 2x2 with eigenvalue 1, five 1x1 with 1, two 1x1 with -1
    long n2 = 0, n1 = 0, nm1 = 0;
    for (const auto& b : p1) {
        if (b.eigenvalue == "1" && b.block_size == 2) n2 += b.multiplicity;
        if (b.eigenvalue == "1" && b.block_size == 1) n1 += b.multiplicity;
        if (b.eigenvalue == "-1") nm1 += b.multiplicity;
    }
    CHECK(n2 == 1);
    CHECK(n1 == 5);
    CHECK(nm1 == 2);
    CHECK_THROWS_AS(jordan_profile(asl, {mpq_class(1)}), std::domain_error);
}

TEST_CASE("J conjugation and skew maps") {
    auto j1 = j_matrix(Q, 2, 1);
    CHECK(j1.get(0, 1) == 1);
    CHECK(j1.get(1, 0) == 1);
    CHECK(j1.ents.size() == 2);

    std::mt19937_64 rng(3);
    auto m = random_ccwg(rng, 3, 2, 0.5);
    auto conj = compose(compose(j_matrix(Q, 3, 2), m), j_matrix(Q, 3, 2));
    // (J M J)_{13,23} = M_{31,21}
    CHECK(conj.get(widx(3, "13"), widx(3, "23")) == m.get(widx(3, "31"), widx(3, "21")));
    CHECK(skew_conjugate(m) == conj);
    CHECK(skew_conjugate(skew_conjugate(m)) == m);
    CHECK(skew_transpose(skew_transpose(m)) == m);
}
