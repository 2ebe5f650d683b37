#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccwg {

// Exact rationals backed by GMP. Canonical form (lowest terms, positive
// denominator) is maintained by mpq arithmetic.
struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }
    Elem from_rational(const mpq_class& v) const { return v; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    // "p/q" with "/q" omitted for integers
    std::string to_string(const Elem& a) const {
        if (a.get_den() == 1) return a.get_num().get_str();
        return a.get_num().get_str() + "/" + a.get_den().get_str();
    }
    Elem parse(const std::string& s) const {
        mpq_class v(s);
        v.canonicalize();
        return v;
    }
    std::string name() const { return "Q"; }
};

// Z/p for an odd prime p < 2^62. Elements are raw residues in 0..p-1.
struct PrimeField {
    std::uint64_t p;
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (p < 3 || p >= (std::uint64_t{1} << 62))
            throw std::invalid_argument("prime must be odd and < 2^62");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }
    Elem from_rational(const mpq_class& v) const {
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class n = v.get_num() % pz;
        if (n < 0) n += pz;
        mpz_class d = v.get_den() % pz;
        if (d == 0) throw std::domain_error("denominator vanishes mod p");
        Elem ne = static_cast<Elem>(mpz_get_ui(n.get_mpz_t()));
        Elem de = static_cast<Elem>(mpz_get_ui(d.get_mpz_t()));
        return mul(ne, inv(de));
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        if (s >= p || s < a) s -= p;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return pow(a, p - 2);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    std::string to_string(const Elem& a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const {
        if (s.find('/') != std::string::npos) {
            mpq_class v(s);
            v.canonicalize();
            return from_rational(v);
        }
        mpq_class v(s);
        v.canonicalize();
        return from_rational(v);
    }
    std::string name() const { return "Fp:" + std::to_string(p); }
};

// The two default primes for dual-prime certification (both > 2^60, both
// with 2 a quadratic residue).
inline constexpr std::uint64_t kPrime1 = 2305843009213693951ULL;  // 2^61 - 1
inline constexpr std::uint64_t kPrime2 = 2305843009213693967ULL;  // 2^61 + 15
inline constexpr std::uint64_t kSqrt2ModPrime1 = 2147483648ULL;
inline constexpr std::uint64_t kSqrt2ModPrime2 = 45272681091486666ULL;

}  // namespace ccwg
