#pragma once

#include <string>
#include <vector>

namespace isoform {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One irreducible factor of a (possibly reducible) type, e.g. (B, 3).
struct Component {
    Series series;
    int rank;

    bool operator==(const Component& o) const { return series == o.series && rank == o.rank; }
    bool operator!=(const Component& o) const { return !(*this == o); }
    bool operator<(const Component& o) const {
        if (series != o.series) return static_cast<char>(series) < static_cast<char>(o.series);
        return rank < o.rank;
    }
};

using TypeList = std::vector<Component>;

// Admissibility for building a standard realization:
// A n>=1, B n>=2, C n>=2, D n>=2, E n in {6,7,8}, F n=4, G n=2.
bool buildable(const Component& c);

// Admissibility for the closed-form Weyl order table. Slightly wider than
// `buildable`: B1 and C1 (both of order 2) occur as factors of isotropy
// algebras such as so(3) and are accepted here.
bool weyl_admissible(const Component& c);

int rank_of(const TypeList& t);

Series parse_series(const std::string& s); // "A".."G"
std::string to_string(const Component& c);            // "B3"
std::string to_string(const TypeList& t);             // "B1+B2", "-" if empty

// Parses "B3" or "A1+B2"; throws input_error on malformed text.
Component parse_component(const std::string& text);

// Canonical name for comparing classifier output with constructed types:
// low-rank coincidences are renamed (C2 -> B2, D3 -> A3, D2 -> A1+A1,
// B1/C1 -> A1) and the factors are sorted.
TypeList canonical_type(const TypeList& t);

} // namespace isoform
