#include "ccwg/comb.hpp"

#include <optional>
#include <stdexcept>

namespace ccwg {

namespace {

const int kSigns[4][4] = {
    {1, -1, 1, 1},    // A
    {1, 1, -1, 1},    // B
    {-1, -1, 1, -1},  // C
    {-1, 1, -1, -1},  // D
};

int letter_index(char c) {
    if (c < 'A' || c > 'D') throw std::invalid_argument("comb letters are A..D");
    return c - 'A';
}

std::optional<CombWord> decode(const std::vector<int>& digs) {
    if (digs.size() % 4) return std::nullopt;
    CombWord out;
    for (std::size_t i = 0; i < digs.size(); i += 4) {
        int found = -1;
        for (int l = 0; l < 4; ++l) {
            bool ok = true;
            for (int j = 0; j < 4; ++j) ok = ok && digs[i + j] == kSigns[l][j];
            if (ok) {
                found = l;
                break;
            }
        }
        if (found < 0) return std::nullopt;
        out += static_cast<char>('A' + found);
    }
    return out;
}

}  // namespace

CombWord comb_next(const CombWord& w) {
    static const char* phi[4] = {"BA", "AC", "DB", "CD"};
    CombWord out;
    out.reserve(w.size() * 2);
    for (char c : w) out += phi[letter_index(c)];
    return out;
}

CombWord comb_word(int n) {
    if (n < 1) throw std::invalid_argument("comb word index starts at 1");
    CombWord w = "A";
    for (int i = 1; i < n; ++i) w = comb_next(w);
    return w;
}

std::vector<int> comb_signs(const CombWord& w) {
    std::vector<int> out;
    out.reserve(w.size() * 4);
    for (char c : w) {
        int l = letter_index(c);
        for (int j = 0; j < 4; ++j) out.push_back(kSigns[l][j]);
    }
    return out;
}

bool well_combed_check(const CombWord& w) {
    if (w.empty()) throw std::invalid_argument("comb word must be nonempty");
    if (w.size() == 1) return true;
    auto digs = comb_signs(w);
    std::vector<int> odd, even;
    for (std::size_t i = 0; i < digs.size(); ++i) (i % 2 ? even : odd).push_back(digs[i]);
    auto wo = decode(odd), we = decode(even);
    if (!wo || !we) return false;
    return well_combed_check(*wo) && well_combed_check(*we);
}

}  // namespace ccwg
