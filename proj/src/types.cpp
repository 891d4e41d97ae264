#include "isoform/types.hpp"

#include <algorithm>
#include <cctype>

#include "isoform/errors.hpp"

namespace isoform {

bool buildable(const Component& c) {
    switch (c.series) {
        case Series::A: return c.rank >= 1;
        case Series::B: return c.rank >= 2;
        case Series::C: return c.rank >= 2;
        case Series::D: return c.rank >= 2;
        case Series::E: return c.rank >= 6 && c.rank <= 8;
        case Series::F: return c.rank == 4;
        case Series::G: return c.rank == 2;
    }
    return false;
}

bool weyl_admissible(const Component& c) {
    if (buildable(c)) return true;
    return (c.series == Series::B || c.series == Series::C) && c.rank == 1;
}

int rank_of(const TypeList& t) {
    int r = 0;
    for (const Component& c : t) r += c.rank;
    return r;
}

Series parse_series(const std::string& s) {
    if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'G') return static_cast<Series>(s[0]);
    throw input_error("unsupported type: unknown series '" + s + "'");
}

std::string to_string(const Component& c) {
    return std::string(1, static_cast<char>(c.series)) + std::to_string(c.rank);
}

std::string to_string(const TypeList& t) {
    if (t.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += "+";
        s += to_string(t[i]);
    }
    return s;
}

Component parse_component(const std::string& text) {
    if (text.size() < 2) throw input_error("unsupported type: '" + text + "'");
    Series s = parse_series(text.substr(0, 1));
    for (size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw input_error("unsupported type: '" + text + "'");
    return Component{s, std::stoi(text.substr(1))};
}

TypeList canonical_type(const TypeList& t) {
    TypeList out;
    for (const Component& c : t) {
        if (c.series == Series::C && c.rank == 2) {
            out.push_back({Series::B, 2});
        } else if (c.series == Series::D && c.rank == 3) {
            out.push_back({Series::A, 3});
        } else if (c.series == Series::D && c.rank == 2) {
            out.push_back({Series::A, 1});
            out.push_back({Series::A, 1});
        } else if ((c.series == Series::B || c.series == Series::C) && c.rank == 1) {
            out.push_back({Series::A, 1});
        } else {
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace isoform
