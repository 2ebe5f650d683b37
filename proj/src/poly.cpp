#include "ccwg/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace ccwg {

Poly Poly::constant(long c) {
    Poly p;
    if (c != 0) p.terms[{}] = c;
    return p;
}

Poly Poly::variable(const std::string& name, int exp) {
    Poly p;
    Monomial m;
    if (exp != 0) m[name] = exp;
    p.terms[m] = 1;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms) {
        long v = (out.terms.count(m) ? out.terms[m] : 0) + c;
        if (v == 0)
            out.terms.erase(m);
        else
            out.terms[m] = v;
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms) out.terms[m] = -c;
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            Monomial m = m1;
            for (const auto& [v, e] : m2) {
                m[v] += e;
                if (m[v] == 0) m.erase(v);
            }
            long v = (out.terms.count(m) ? out.terms[m] : 0) + c1 * c2;
            if (v == 0)
                out.terms.erase(m);
            else
                out.terms[m] = v;
        }
    return out;
}

mpq_class Poly::eval(const std::map<std::string, mpq_class>& point) const {
    mpq_class acc = 0;
    for (const auto& [m, c] : terms) {
        mpq_class t = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw std::invalid_argument("missing parameter: " + v);
            for (int i = 0; i < e; ++i) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

std::vector<std::string> Poly::variables() const {
    std::map<std::string, int> seen;
    for (const auto& [m, c] : terms)
        for (const auto& [v, e] : m) seen[v] = 1;
    std::vector<std::string> out;
    for (const auto& [v, _] : seen) out.push_back(v);
    return out;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string t;
        bool neg = c < 0;
        long a = neg ? -c : c;
        if (a != 1 || m.empty()) t = std::to_string(a);
        for (const auto& [v, e] : m) {
            if (!t.empty()) t += "*";
            t += v;
            if (e != 1) t += "^" + std::to_string(e);
        }
        if (out.empty())
            out = (neg ? "-" : "") + t;
        else
            out += (neg ? " - " : " + ") + t;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t at = 0;

    void skip() {
        while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    }
    bool eat(char c) {
        skip();
        if (at < s.size() && s[at] == c) {
            ++at;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return at < s.size() ? s[at] : '\0';
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }
    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = at;
            while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
            if (start == at) throw std::invalid_argument("exponent expected in polynomial");
            int e = std::stoi(s.substr(start, at - start));
            Poly acc = Poly::constant(1);
            for (int i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }
    Poly atom() {
        skip();
        if (eat('-')) return -atom();
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) throw std::invalid_argument("missing ) in polynomial");
            return p;
        }
        if (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) {
            std::size_t start = at;
            while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
            return Poly::constant(std::stol(s.substr(start, at - start)));
        }
        if (at < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[at])) || s[at] == '_')) {
            std::size_t start = at;
            while (at < s.size() && (std::isalnum(static_cast<unsigned char>(s[at])) || s[at] == '_'))
                ++at;
            return Poly::variable(s.substr(start, at - start));
        }
        throw std::invalid_argument("unexpected character in polynomial: " + s.substr(at, 8));
    }
};

}  // namespace

Poly parse_poly(const std::string& src) {
    Parser p{src};
    Poly out = p.expr();
    p.skip();
    if (p.at != src.size()) throw std::invalid_argument("trailing characters in polynomial: " + src);
    return out;
}

mpq_class RationalExpr::eval(const std::map<std::string, mpq_class>& point) const {
    mpq_class d = den.eval(point);
    if (d == 0) throw std::domain_error("entry denominator vanished: " + den.str());
    return num.eval(point) / d;
}

std::string RationalExpr::str() const {
    if (den.terms.size() == 1 && den.terms.count({}) && den.terms.at({}) == 1) return num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
}

RationalExpr parse_rational_expr(const std::string& src) {
    auto bar = src.find('|');
    if (bar == std::string::npos) return {parse_poly(src), Poly::constant(1)};
    return {parse_poly(src.substr(0, bar)), parse_poly(src.substr(bar + 1))};
}

}  // namespace ccwg
