#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "ccwg/field.hpp"
#include "ccwg/wordmatrix.hpp"

namespace ccwg {

// Matrix wire format:
// {"N": int, "cod_len": int, "dom_len": int, "field": "Q" | "Fp:<p>",
//  "entries": [["row_word","col_word","num/den"], ...]}
// Round trips are bit-exact: entries are emitted in the canonical
// (row, col) order and scalars in canonical form.
template <class F>
nlohmann::json matrix_to_json(const WordMatrix<F>& m) {
    nlohmann::json j;
    j["N"] = m.N;
    j["cod_len"] = m.cod_len;
    j["dom_len"] = m.dom_len;
    j["field"] = m.field.name();
    auto entries = nlohmann::json::array();
    for (const auto& e : m.ents) {
        Word rw = word_at(m.N, m.cod_len, e.row);
        Word cw = word_at(m.N, m.dom_len, e.col);
        entries.push_back({word_str(rw), word_str(cw), m.field.to_string(e.val)});
    }
    j["entries"] = std::move(entries);
    return j;
}

inline std::string field_name_of_json(const nlohmann::json& j) {
    if (!j.contains("field")) return "Q";
    return j.at("field").get<std::string>();
}

template <class F>
WordMatrix<F> matrix_from_json(const F& f, const nlohmann::json& j) {
    const int N = j.at("N").get<int>();
    WordMatrix<F> m(f, N, j.at("cod_len").get<int>(), j.at("dom_len").get<int>());
    for (const auto& e : j.at("entries")) {
        Word rw = parse_word(N, e.at(0).get<std::string>());
        Word cw = parse_word(N, e.at(1).get<std::string>());
        if (rw.length() != m.cod_len || cw.length() != m.dom_len)
            throw std::invalid_argument("entry word length does not match the declared shape");
        m.push_words(rw, cw, f.parse(e.at(2).get<std::string>()));
    }
    m.normalize();
    return m;
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace ccwg
