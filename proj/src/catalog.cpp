#include "ccwg/catalog.hpp"

#include <json.hpp>

#include <random>
#include <set>
#include <stdexcept>

namespace ccwg::catalog {

namespace {

// Rank-2 word order: 11, 21, 12, 22. Rank-3: 11,21,31,12,22,32,13,23,33.
const char* kWords2[4] = {"11", "21", "12", "22"};
const char* kWords3[9] = {"11", "21", "31", "12", "22", "32", "13", "23", "33"};

FixedEntry fixed_from_rows(const std::string& name, int rank,
                           const std::vector<std::vector<long>>& rows, const std::string& note) {
    FixedEntry fe{name, rank, {}, note};
    const char** ws = rank == 2 ? kWords2 : kWords3;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != 0) fe.entries.emplace_back(ws[i], ws[j], rows[i][j]);
    return fe;
}

ParametricFamily family_from_rows(const std::string& name, int rank,
                                  std::vector<std::string> params,
                                  const std::vector<std::vector<const char*>>& rows,
                                  std::vector<std::pair<const char*, const char*>> constraints,
                                  const std::string& note) {
    ParametricFamily fam{name, rank, std::move(params), {}, {}, note};
    const char** ws = rank == 2 ? kWords2 : kWords3;
    std::set<std::string> cset;
    for (auto& [poly, why] : constraints) {
        fam.constraints.push_back({parse_poly(poly), why});
        cset.insert(fam.constraints.back().poly.str());
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const char* src = rows[i][j];
            if (!src || std::string(src) == "0") continue;
            RationalExpr e = parse_rational_expr(src);
            // every entry denominator must be covered by a constraint
            if (!(e.den.terms.size() == 1 && e.den.terms.count({}))) {
                if (!cset.count(e.den.str())) {
                    fam.constraints.push_back({e.den, "entry denominator"});
                    cset.insert(e.den.str());
                }
            }
            fam.entries.emplace_back(ws[i], ws[j], std::move(e));
        }
    return fam;
}

std::vector<FixedEntry> make_fixed() {
    std::vector<FixedEntry> out;
    out.push_back(fixed_from_rows("R_fI", 2,
                                  {{1, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}},
                                  "f-glue-I: CC part of f type with a single glue entry at (11,22)"));
    out.push_back(fixed_from_rows("Ising", 2,
                                  {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}, {-1, 0, 0, 1}},
                                  "Ising case; not CCwg (entry in a forbidden position)"));
    out.push_back(fixed_from_rows("R_diamond", 2,
                                  {{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}},
                                  "point of the fII family at q=p=0, s=1"));
    out.push_back(fixed_from_rows(
        "R_spade", 2, {{1, 1, -1, 1}, {0, 0, 1, 1}, {0, 1, 0, -1}, {0, 0, 0, 1}},
        "point of the fII family at q=1, p=-1, s=1; the q=-p locus is where the "
        "local relation stays (x-1)^2(x+1), matching the reference table for this case"));
    out.push_back(fixed_from_rows("R_heart", 2,
                                  {{1, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 1}},
                                  "point of the fII family at q=1, p=0, s=1; local relation (x-1)^3(x+1)"));
    out.push_back(fixed_from_rows("R_unip2_0", 2,
                                  {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 2, 0}, {0, 0, 0, 1}},
                                  "rank-2 unipotent f case (Temperley-Lieb at [2]=0), glue-free"));
    out.push_back(fixed_from_rows("R_unip2_glue", 2,
                                  {{1, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 2, 0}, {0, 0, 0, 1}},
                                  "rank-2 unipotent case with the single glue entry at (11,22)"));
    out.push_back(fixed_from_rows("R_fff_0", 3,
                                  {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 2, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 0, 2, 0, 0, 0, 1, 0, 0},
                                   {0, -1, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 2, 0, 1, 0},
                                   {0, 0, -1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, -1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                                  "rank-3 unipotent fff case, glue-free"));
    out.push_back(fixed_from_rows("R_fff_glue", 3,
                                  {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 2, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 0, 2, 0, 0, 0, 1, 0, 0},
                                   {0, -1, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0, 1},
                                   {0, 0, 0, 0, 0, 2, 0, 1, 0},
                                   {0, 0, -1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, -1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                                  "rank-3 unipotent fff case with a single glue entry at (22,33)"));
    out.push_back(fixed_from_rows("R_asl_cc", 3,
                                  {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 2, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 1, 0, 0},
                                   {0, -1, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 1, 0},
                                   {0, 0, 1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                                  "a// CC case used for the glue extension study"));
    out.push_back(fixed_from_rows("R_asl_glue", 3,
                                  {{1, 0, 0, 0, 4, -2, 0, -2, 1},
                                   {0, 2, -1, 1, -2, 1, 0, -2, 1},
                                   {0, 0, 0, 0, 0, 0, 1, 0, 0},
                                   {0, -1, 1, 0, 2, -1, 0, 2, -1},
                                   {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 1, 0},
                                   {0, 0, 1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                                  "a// glue solution; not locally gaugeable to a CC matrix"));
    out.push_back(fixed_from_rows("aa0_unipotent", 3,
                                  {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 2, 0, 1, 0, 0, 0, 0, -1},
                                   {0, 0, 1, 0, 0, 0, 0, 0, 0},
                                   {0, -1, 0, 0, 0, 0, 0, 0, 1},
                                   {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 0, -1, 0, 2, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                                  "unipotent point of the equal-eigenvalue aa0 glue family; "
                                  "cannot be locally gauged to a CC matrix"));
    return out;
}

std::vector<ParametricFamily> make_families() {
    std::vector<ParametricFamily> out;
    out.push_back(family_from_rows(
        "R_slash", 2, {"k", "p", "q", "s"},
        {{"k", 0, 0, 0}, {0, 0, "p", 0}, {0, "q", 0, 0}, {0, 0, 0, "s"}},
        {{"k", "invertibility"}, {"p", "invertibility"}, {"q", "invertibility"}, {"s", "invertibility"}},
        "slash type, CC"));
    out.push_back(family_from_rows(
        "R_antislash", 2, {"k", "p", "q"},
        {{0, 0, 0, "p"}, {0, "k", 0, 0}, {0, 0, "k", 0}, {"q", 0, 0, 0}},
        {{"k", "invertibility"}, {"p", "invertibility"}, {"q", "invertibility"}},
        "antislash type; DS transform of the slash family at s=k"));
    out.push_back(family_from_rows(
        "R_f", 2, {"k", "p", "q"},
        {{"k^2", 0, 0, 0}, {0, 0, "k*q", 0}, {0, "k*p", "k^2 - p*q", 0}, {0, 0, 0, "k^2"}},
        {{"k", "invertibility"}, {"p", "invertibility"}, {"q", "invertibility"}},
        "f type (ferromagnetic), CC"));
    out.push_back(family_from_rows(
        "R_fII", 2, {"k", "q", "p", "s"},
        {{"k", "q", "p", "s"}, {0, 0, "k", "q"}, {0, "k", 0, "p"}, {0, 0, 0, "k"}},
        {{"k", "invertibility"}},
        "f-glue-II"));
    out.push_back(family_from_rows(
        "R_fIII", 2, {"k", "p", "q"},
        {{"k^2", "-k*p", "k*p", "p*q"}, {0, 0, "k^2", "k*q"}, {0, "k^2", 0, "-k*q"}, {0, 0, 0, "k^2"}},
        {{"k", "invertibility"}},
        "f-glue-III"));
    out.push_back(family_from_rows(
        "R_a", 2, {"k", "p", "q"},
        {{"k^2", 0, 0, 0}, {0, 0, "k*q", 0}, {0, "k*p", "k^2 - p*q", 0}, {0, 0, 0, "-p*q"}},
        {{"k", "invertibility"}, {"p", "invertibility"}, {"q", "invertibility"}},
        "a type (antiferromagnetic), CC"));
    out.push_back(family_from_rows(
        "R_ag", 2, {"p", "q", "k"},
        {{"p", 0, 0, "k"}, {0, 0, "q", 0}, {0, "p", "p - q", 0}, {0, 0, 0, "-q"}},
        {{"p", "invertibility"}, {"q", "invertibility"}},
        "a-glue; the (21,12)/(12,21) entries are q and p respectively (the other "
        "placement has nonzero anomaly k*(p^2-q^2))"));
    out.push_back(family_from_rows(
        "eightvertex", 2, {"p", "q"},
        {{"p^2 + 2*p*q - q^2", 0, 0, "p^2 - q^2"},
         {0, "p^2 - q^2", "p^2 + q^2", 0},
         {0, "p^2 + q^2", "p^2 - q^2", 0},
         {"p^2 - q^2", 0, 0, "p^2 - 2*p*q - q^2"}},
        {{"p", "invertibility"}, {"q", "invertibility"}},
        "8-vertex case; not CCwg"));
    out.push_back(family_from_rows(
        "R_ag_x", 2, {"a", "b", "x"},
        {{"a", 0, 0, 0}, {0, 0, "a*x", 0}, {0, "-b | x", "a + b", 0}, {0, 0, 0, "b"}},
        {{"a", "invertibility"}, {"b", "invertibility"}, {"x", "entry denominator"}},
        "x-orbit CC core of the a type; covers R_a at a=k^2, b=-p*q, x=q/k, and the "
        "diagonal-transformed form at x=1"));
    out.push_back(family_from_rows(
        "xsym2", 2, {"b", "q", "t", "x"},
        {{"b*q - b*t*x | t*x^2 + q*x", "-q | x", "q",
          "t^2*x^3 + t^2*x^2 - q^2*x + 2*t*q*x + q^2 | 4*x*b"},
         {0, 0, "b*q - b*t*x | t*x + q", "t*x"},
         {0, "-b | x", "b*q - b*t*x + b*t*x^2 + b*q*x | t*x^2 + q*x", "t"},
         {0, 0, 0, "b"}},
        {{"b", "invertibility"},
         {"x", "entry denominator"},
         {"t*x + q", "entry denominator"},
         {"q - t*x", "invertibility"}},
        "second x-orbit solution; gauges to a CC form by a unitriangular T (x) T"));
    out.push_back(family_from_rows(
        "xsym3", 2, {"a", "b", "r", "t"},
        {{"a", 0, 0, "r"}, {0, 0, "-b", "-b*t | a"}, {0, "a", "a + b", "t"}, {0, 0, 0, "b"}},
        {{"a", "invertibility"}, {"b", "invertibility"}},
        "third x-orbit solution (x = -a/b)"));
    out.push_back(family_from_rows(
        "xsym4", 2, {"a", "b", "q", "r"},
        {{"a", "-a*q | b", "q", "r"}, {0, 0, "b", 0}, {0, "-a", "a + b", 0}, {0, 0, 0, "b"}},
        {{"a", "invertibility"}, {"b", "invertibility"}},
        "fourth x-orbit solution (x = a/b)"));
    out.push_back(family_from_rows(
        "xsym3_gauged", 2, {"a", "b", "r", "t"},
        {{"a", 0, 0, "4*a^2*r + a*t^2 - b*t^2 | 4*a^2"},
         {0, 0, "-b", 0},
         {0, "a", "a + b", 0},
         {0, 0, 0, "b"}},
        {{"a", "invertibility"}, {"b", "invertibility"}},
        "unitriangular gauge of the third solution; only the (11,22) entry is free"));
    out.push_back(family_from_rows(
        "xsym4_gauged", 2, {"a", "b", "q", "r"},
        {{"a", 0, 0, "4*b^2*r + b*q^2 - a*q^2 | 4*b^2"},
         {0, 0, "b", 0},
         {0, "-a", "a + b", 0},
         {0, 0, 0, "b"}},
        {{"a", "invertibility"}, {"b", "invertibility"}},
        "unitriangular gauge of the fourth solution; only the (11,22) entry is free"));
    out.push_back(family_from_rows(
        "R_ab", 2, {"a", "b"},
        {{"a", 0, 0, "1"}, {0, 0, "-b", 0}, {0, "a", "a + b", 0}, {0, 0, 0, "b"}},
        {{"a", "invertibility"}, {"b", "invertibility"}},
        "normal form with the (11,22) entry gauged to 1; diagonalisable iff a != b"));
    out.push_back(family_from_rows(
        "R_ag_x_solved", 2, {"a", "b", "x", "p"},
        {{"a", "p", "-p*x", "p^2*b*x - p^2*a*x^3 | a^2*x^2 + 2*a*b*x + b^2"},
         {0, 0, "a*x", "p*a*x^2 - p*b*x | a*x + b"},
         {0, "-b | x", "a + b", "p*a*x - p*b | a*x + b"},
         {0, 0, 0, "b"}},
        {{"a", "invertibility"},
         {"b", "invertibility"},
         {"x", "entry denominator"},
         {"a*x + b", "entry denominator"},
         {"x - 1", "case condition of the solved branch"}},
        "solved glue extension on the x != 1 branch: q=-p*x, s and t determined, "
        "and the (11,22) entry equals -p^2*x*(a*x^2-b)/(a*x+b)^2"));
    out.push_back(family_from_rows(
        "aa0_glue", 3, {"a", "b", "m1", "m2", "m3"},
        {{"a", 0, 0, 0, "b*m1^2 - a*m1^2 | a^2",
          "a*m1^2*m2 - 2*b*m1^2*m2 - a^2*m1*m3 | a^3", 0, "m1^2*m2 + a*m1*m3 | a^2",
          "b*m1^2*m2^2 - a*m1^2*m2^2 | a^4"},
         {0, "a + b", "-b*m2 | a", "a", "-2*m1", "a*m1*m2 - b*m1*m2 - a^2*m3 | a^2", "-m2",
          "3*m1*m2 | a", "b*m1*m2^2 - 2*a*m1*m2^2 + a^2*m2*m3 | a^3"},
         {0, 0, "a", 0, 0, "-m1", 0, "m1", 0},
         {0, "-b", "b*m2 | a", 0, "2*b*m1 | a", "-3*b*m1*m2 | a^2", "m2", "m3",
          "b*m1*m2^2 - a^2*m2*m3 | a^3"},
         {0, 0, 0, 0, "b", "-2*b*m2 | a", 0, "2*m2", "b*m2^2 - a*m2^2 | a^2"},
         {0, 0, 0, 0, 0, 0, 0, "a", 0},
         {0, 0, 0, 0, 0, "-b*m1 | a", "a", "b*m1 | a", 0},
         {0, 0, 0, 0, 0, "-b", 0, "a + b", 0},
         {0, 0, 0, 0, 0, 0, 0, 0, "a"}},
        {{"a", "invertibility and entry denominator"}, {"b", "invertibility"}},
        "glue extension over the aa0 CC case; the glue is generically gaugeable away"));
    out.push_back(family_from_rows(
        "aa0_glue_ab", 3, {"b", "m1", "m2", "m3", "m4", "m5"},
        {{"b", 0, 0, 0, 0, "-m1", 0, "m1", 0},
         {0, "2*b", "-m3", "b", "-2*m2", "-m4", "-m3", "3*m3*m2 | b", "-m5"},
         {0, 0, "b", 0, 0, "-m2", 0, "m2", 0},
         {0, "-b", "m3", 0, "2*m2", "-3*m3*m2 | b", "m3", "m4", "m5"},
         {0, 0, 0, 0, "b", "-2*m3", 0, "2*m3", 0},
         {0, 0, 0, 0, 0, 0, 0, "b", 0},
         {0, 0, 0, 0, 0, "-m2", "b", "m2", 0},
         {0, 0, 0, 0, 0, "-b", 0, "2*b", 0},
         {0, 0, 0, 0, 0, 0, 0, 0, "b"}},
        {{"b", "invertibility and entry denominator"}},
        "equal-eigenvalue (a=b) aa0 glue family with a single eigenvalue; contains "
        "points not locally gaugeable to CC, e.g. the unipotent catalog point"));
    return out;
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> a = {
        {"fI", "R_fI"},           {"diamond", "R_diamond"}, {"spade", "R_spade"},
        {"heart", "R_heart"},     {"ising", "Ising"},       {"fff0", "R_fff_0"},
        {"fff_glue", "R_fff_glue"}, {"R_g", "R_asl_glue"},  {"8vertex", "eightvertex"},
    };
    return a;
}

std::string resolve(const std::string& name) {
    auto it = aliases().find(name);
    return it == aliases().end() ? name : it->second;
}

}  // namespace

const std::vector<FixedEntry>& fixed_entries() {
    static const std::vector<FixedEntry> v = make_fixed();
    return v;
}

const std::vector<ParametricFamily>& families() {
    static const std::vector<ParametricFamily> v = make_families();
    return v;
}

std::vector<std::string> list_fixed() {
    std::vector<std::string> out;
    for (const auto& fe : fixed_entries()) out.push_back(fe.name);
    return out;
}

std::vector<std::string> list_families() {
    std::vector<std::string> out;
    for (const auto& f : families()) out.push_back(f.name);
    return out;
}

bool has_fixed(const std::string& name) {
    for (const auto& fe : fixed_entries())
        if (fe.name == resolve(name)) return true;
    return false;
}

bool has_family(const std::string& name) {
    for (const auto& f : families())
        if (f.name == resolve(name)) return true;
    return false;
}

const FixedEntry& get_fixed(const std::string& name) {
    for (const auto& fe : fixed_entries())
        if (fe.name == resolve(name)) return fe;
    throw std::invalid_argument("unknown catalog entry: " + name);
}

const ParametricFamily& get_family(const std::string& name) {
    for (const auto& f : families())
        if (f.name == resolve(name)) return f;
    throw std::invalid_argument("unknown catalog family: " + name);
}

Assignment sample(const ParametricFamily& fam, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : fam.name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    std::mt19937_64 rng(h ^ (seed * 0x9e3779b97f4a7c15ULL + 1));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Assignment a;
        for (const auto& p : fam.params) {
            long num = static_cast<long>(rng() % 41) - 20;
            long den = static_cast<long>(rng() % 7) + 1;
            mpq_class v(num, den);
            v.canonicalize();
            a[p] = v;
        }
        bool ok = true;
        for (const auto& c : fam.constraints) ok = ok && c.poly.eval(a) != 0;
        if (ok) return a;
    }
    throw std::runtime_error("sample retry budget exhausted; family looks over-constrained: " +
                             fam.name);
}

std::string manifest_json() {
    nlohmann::json j;
    j["fixed"] = nlohmann::json::array();
    for (const auto& fe : fixed_entries()) {
        nlohmann::json e;
        e["name"] = fe.name;
        e["rank"] = fe.rank;
        e["note"] = fe.note;
        e["entries"] = nlohmann::json::array();
        for (const auto& [rw, cw, v] : fe.entries)
            e["entries"].push_back({rw, cw, std::to_string(v)});
        j["fixed"].push_back(e);
    }
    j["families"] = nlohmann::json::array();
    for (const auto& f : families()) {
        nlohmann::json e;
        e["name"] = f.name;
        e["rank"] = f.rank;
        e["note"] = f.note;
        e["parameters"] = f.params;
        e["constraints"] = nlohmann::json::array();
        for (const auto& c : f.constraints)
            e["constraints"].push_back({{"poly", c.poly.str()}, {"why", c.why}});
        e["entries"] = nlohmann::json::array();
        for (const auto& [rw, cw, ex] : f.entries) e["entries"].push_back({rw, cw, ex.str()});
        j["families"].push_back(e);
    }
    return j.dump(2);
}

}  // namespace ccwg::catalog
