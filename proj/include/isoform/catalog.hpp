#pragma once

#include <map>
#include <string>
#include <vector>

#include "isoform/types.hpp"

namespace isoform {

enum class Regime { equal_rank, split_rank, outer_nonsplit, group_type_II };

std::string to_string(Regime r);
Regime parse_regime(const std::string& s);

// One symmetric pair at the Lie-algebra level. The Weyl order of k is
// catalog data (derived from k_type), never computed from the fold: distinct
// pairs such as su(2m)/so(2m) and su(2m)/sp(m) share one diagram
// automorphism and are told apart only by k.
struct SymmetricPairEntry {
    std::string label;
    std::map<std::string, long long> params;
    TypeList g_type;
    std::string involution_spec; // identity | flip | fork-swap | factor-swap
    TypeList k_type;             // semisimple part of k; torus factors contribute order 1
    long long k_weyl_order = 1;
    int rank_g = 0;
    int rank_k = 0;
    int rank_space = 0;
    Regime regime = Regime::equal_rank;
    std::string dim_formula; // equal_rank_quotient | split_rank_power | two_pow_m | two_binom | const:<int>
    std::string provenance;

    std::string params_string() const; // "n=4", "p=1,q=2", "-"
};

// Builds and validates one entry from its family. Known families:
//   AI(n>=2)        su(n)/so(n)
//   AII(n>=2)       su(2n)/sp(n)
//   BDI-odd(p,q>=1) so(2p+2q+2)/so(2p+1)+so(2q+1)
//   EI              e6/sp(4)
//   EIV             e6/f4
//   CI(n>=2)        sp(n)/u(n)
//   DIII(n>=3)      so(2n)/u(n)
//   G               g2/so(4)
//   TypeII-<X>      the group of type X as (X+X)/diagonal, e.g. TypeII-G2
// Validation runs the involution machinery: rank_k must match dim t_k and
// the declared regime must match the computed one. Throws input_error for
// unknown labels or out-of-range params, invariant_error ("catalog
// inconsistency") when validation fails.
SymmetricPairEntry instantiate(const std::string& label,
                               const std::map<std::string, long long>& params);

// The built-in verification suite, in catalog order.
std::vector<SymmetricPairEntry> enumerate_suite();

// Parses a catalog JSON document (an array of entry rows; unknown keys are
// rejected) and validates every row against the generated entry.
std::vector<SymmetricPairEntry> parse_catalog_json(const std::string& text);

// Reads and parses a catalog file.
std::vector<SymmetricPairEntry> load_catalog(const std::string& path);

// The embedded catalog document (JSON text).
const char* embedded_catalog_json();

} // namespace isoform
