#pragma once

#include <string>
#include <vector>

#include "isoform/linalg.hpp"
#include "isoform/root_system.hpp"

namespace isoform {

// A Dynkin diagram automorphism of order <= 2 together with the unique
// isometric extension to the ambient space that fixes the orthogonal
// complement of the root span pointwise.
struct DiagramInvolution {
    RootSystem base;
    std::vector<int> perm; // 0-based involutive permutation of simple-root indices
    Mat ambient_map;

    Vec sigma(const Vec& v) const { return ambient_map.apply(v); }
};

// Eigenspace bases of the ambient map restricted to the root span:
// t_k is the +1 eigenspace, t_p the -1 eigenspace.
struct TorusSplit {
    std::vector<Vec> t_k_basis;
    std::vector<Vec> t_p_basis;
};

enum class PairCase { Fixed, Orthogonal, Minus1 };

// Validates Cartan compatibility of the permutation, solves for the ambient
// map, and verifies it is an isometric involution permuting the roots.
// Throws input_error ("not a diagram automorphism") on any failure.
DiagramInvolution make_involution(RootSystem rs, std::vector<int> perm);

TorusSplit split_torus(const DiagramInvolution& inv);

// The vector representing alpha restricted to t_k: (alpha + sigma(alpha))/2.
// Never zero for a valid involution; a zero result throws invariant_error.
Vec restrict_root(const DiagramInvolution& inv, const Vec& alpha);

// Trichotomy for a root alpha: Fixed when sigma(alpha) = alpha; otherwise
// either <alpha, sigma(alpha)> = 0 with |H^p|^2 = |H^k|^2, or the Cartan
// integer is -1 with |H^p|^2 = 3 |H^k|^2 and alpha + sigma(alpha) a root.
// Any other configuration throws invariant_error ("lemma violation").
PairCase pair_case(const DiagramInvolution& inv, const Vec& alpha);

// Number of orbits of an involutive permutation (= dim t_k).
int orbit_count(const std::vector<int>& perm);

// Resolves a named automorphism on the simple roots of the given type:
//   identity     any type
//   flip         a single A_n (index reversal) or E6 (the unique nontrivial one)
//   fork-swap    a single D_n (exchange the two fork nodes)
//   factor-swap  exactly two identical components (exchange them)
// Throws input_error when the name does not apply to the type.
std::vector<int> involution_permutation(const TypeList& type, const std::string& name);

} // namespace isoform
