#pragma once

#include "isoform/catalog.hpp"
#include "isoform/restricted.hpp"

namespace isoform {

// The certificate for one symmetric pair: the fixed set of a maximal torus
// of k has r components, each a torus of dimension rank g - rank k, so its
// cohomology has dimension 2^(rank g - rank k) r. The action is certified
// equivariantly formal exactly when that equals dim H*(M).
struct FormalityReport {
    SymmetricPairEntry entry;
    long long r = 0;
    int fixed_component_dim = 0; // rank_g - rank_k
    long long dim_fixed_set = 0; // 2^fixed_component_dim * r
    long long dim_M = 0;
    bool formal = false;
    TypeList kprime_type;
    std::string kprime_display; // "BC2" style name for nonreduced factors
    bool nonreduced = false;
};

// r = |W(k')| / |W(k)|, computed by folding the diagram and counting the
// chambers of the restricted arrangement. Non-divisibility means k is not a
// symmetric subgroup compatible with the fold and raises invariant_error
// ("catalog inconsistency").
long long compartments_per_chamber(const SymmetricPairEntry& entry);

// 2^(rank_g - rank_k) * r.
long long fixed_set_dimension(const SymmetricPairEntry& entry, long long r);

// Evaluates the entry's dim_M_formula tag:
//   equal_rank_quotient  |W(g)| / |W(k)|
//   split_rank_power     2^rank_space  (requires rank_space = rank_g - rank_k)
//   two_pow_m            2^[n/2]       (requires parameter n)
//   two_binom            2 C(p+q, p)   (requires parameters p, q)
//   const:<int>          the literal value
long long target_dimension(const SymmetricPairEntry& entry);

// Assembles the full report. Checks the Hsiang inequality
// dim_fixed_set <= dim_M before the equality test and hard-fails
// (invariant_error "Hsiang violation") when it is broken.
FormalityReport check_formality(const SymmetricPairEntry& entry);

long long binomial(long long n, long long k);

} // namespace isoform
