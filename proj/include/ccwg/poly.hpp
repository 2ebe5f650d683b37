#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace ccwg {

// Sparse multivariate polynomial with integer coefficients over named
// variables. Monomials are exponent maps. Enough for the catalog entry
// expressions: parse, evaluate, print.
struct Poly {
    using Monomial = std::map<std::string, int>;
    std::map<Monomial, long> terms;  // monomial -> coefficient, no zeros

    static Poly constant(long c);
    static Poly variable(const std::string& name, int exp = 1);

    bool is_zero() const { return terms.empty(); }
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;

    mpq_class eval(const std::map<std::string, mpq_class>& point) const;
    std::vector<std::string> variables() const;
    std::string str() const;
};

// Parses integer-coefficient polynomial expressions with + - * ^ and
// parentheses, e.g. "b*m1^2*m2^2 - a*(m1 - 2)^2".
Poly parse_poly(const std::string& src);

// num/den pair; den must be listed among the family constraints.
struct RationalExpr {
    Poly num;
    Poly den = Poly::constant(1);

    mpq_class eval(const std::map<std::string, mpq_class>& point) const;
    std::string str() const;
};

// "num" or "num | den", both polynomial expressions.
RationalExpr parse_rational_expr(const std::string& src);

}  // namespace ccwg
