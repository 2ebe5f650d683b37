#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ccwg/braid.hpp"
#include "ccwg/poly.hpp"
#include "ccwg/wordmatrix.hpp"

namespace ccwg::catalog {

// A fixed R-matrix: integer entries keyed by word labels.
struct FixedEntry {
    std::string name;
    int rank;
    std::vector<std::tuple<std::string, std::string, long>> entries;  // (row word, col word, value)
    std::string note;
};

struct Constraint {
    Poly poly;
    std::string why;
};

// A named symbolic R-matrix family: rational-function entries over the
// listed parameters, plus the polynomials that must not vanish at an
// evaluation point.
struct ParametricFamily {
    std::string name;
    int rank;
    std::vector<std::string> params;
    std::vector<std::tuple<std::string, std::string, RationalExpr>> entries;
    std::vector<Constraint> constraints;
    std::string note;
};

const std::vector<FixedEntry>& fixed_entries();
const std::vector<ParametricFamily>& families();

std::vector<std::string> list_fixed();
std::vector<std::string> list_families();

const FixedEntry& get_fixed(const std::string& name);
const ParametricFamily& get_family(const std::string& name);
bool has_fixed(const std::string& name);
bool has_family(const std::string& name);

using Assignment = std::map<std::string, mpq_class>;

// Deterministic constraint-respecting rational point (numerators in
// [-20,20], denominators in [1,7]); throws if the retry budget runs out.
Assignment sample(const ParametricFamily& fam, std::uint64_t seed);

std::string manifest_json();

template <class F>
WordMatrix<F> build_fixed(const F& f, const FixedEntry& fe) {
    int len = 2;
    WordMatrix<F> m(f, fe.rank, len, len);
    for (const auto& [rw, cw, v] : fe.entries)
        m.push_words(parse_word(fe.rank, rw), parse_word(fe.rank, cw), f.from_long(v));
    m.normalize();
    return m;
}

template <class F>
WordMatrix<F> get(const F& f, const std::string& name) {
    return build_fixed(f, get_fixed(name));
}

// Exact evaluation at a parameter point. The assignment must cover exactly
// the family parameters; all constraint polynomials must be nonzero.
template <class F>
WordMatrix<F> evaluate(const F& f, const ParametricFamily& fam, const Assignment& point) {
    for (const auto& p : fam.params)
        if (!point.count(p)) throw std::invalid_argument("missing parameter: " + p);
    for (const auto& [k, v] : point)
        if (std::find(fam.params.begin(), fam.params.end(), k) == fam.params.end())
            throw std::invalid_argument("unknown parameter: " + k);
    for (const auto& c : fam.constraints)
        if (c.poly.eval(point) == 0)
            throw std::domain_error("constraint violated (" + c.why + "): " + c.poly.str());
    WordMatrix<F> m(f, fam.rank, 2, 2);
    for (const auto& [rw, cw, expr] : fam.entries) {
        mpq_class v = expr.eval(point);
        if (v != 0) m.push_words(parse_word(fam.rank, rw), parse_word(fam.rank, cw), f.from_rational(v));
    }
    m.normalize();
    return m;
}

struct FamilyVerification {
    std::string family;
    int trials = 0;
    int passed = 0;
    std::vector<std::pair<Assignment, bool>> points;
};

// Evaluates at `trials` seeded sample points and checks is_ybo at each.
template <class F>
FamilyVerification verify_family(const F& f, const ParametricFamily& fam, int trials,
                                 std::uint64_t seed = 0) {
    if (trials < 1) throw std::invalid_argument("verify_family needs trials >= 1");
    FamilyVerification rep{fam.name, trials, 0, {}};
    for (int t = 0; t < trials; ++t) {
        auto point = sample(fam, seed + static_cast<std::uint64_t>(t));
        bool ok = is_ybo(evaluate(f, fam, point));
        rep.passed += ok ? 1 : 0;
        rep.points.emplace_back(std::move(point), ok);
    }
    return rep;
}

}  // namespace ccwg::catalog
