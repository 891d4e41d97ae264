#pragma once

#include <vector>

#include "isoform/linalg.hpp"
#include "isoform/types.hpp"

namespace isoform {

// A reduced root system realized in exact rational coordinates. `roots` is
// kept sorted lexicographically so membership tests are binary searches and
// every construction is deterministic.
struct RootSystem {
    int ambient_dim = 0;
    std::vector<Vec> simple_roots;
    std::vector<Vec> roots;
    TypeList components;

    int rank() const { return static_cast<int>(simple_roots.size()); }
    bool contains(const Vec& v) const;
};

// The integer 2<beta,alpha>/<alpha,alpha>. Throws input_error with
// "zero root" if alpha = 0 and "not Cartan-integral" if the quotient is
// not an integer (the pair is then not from a common root system).
long long cartan_integer(const Vec& alpha, const Vec& beta);

// x - (2<x,alpha>/<alpha,alpha>) alpha. Throws input_error on alpha = 0.
Vec reflect(const Vec& x, const Vec& alpha);

// Orbit of the given vectors under the reflections they generate,
// sorted and deduplicated.
std::vector<Vec> reflection_closure(const std::vector<Vec>& simple_roots);

// Orthogonal direct sum of the standard realizations: A_n in dimension n+1
// (e_i - e_{i+1}); B, C, D in dimension n; E6/E7/E8, F4, G2 in Bourbaki
// coordinates. Roots are computed by reflection closure of the simple roots.
RootSystem build_root_system(const TypeList& components);

// Checks every root-system axiom explicitly (reflection closure, +-symmetry,
// reducedness, Cartan integrality, uniform-sign integer coordinates in the
// simple roots). Throws invariant_error naming the failed axiom.
void validate_root_system(const RootSystem& rs);

// Simple roots of the standard realization of one component, offset into a
// larger ambient space. Exposed for tests.
std::vector<Vec> standard_simple_roots(const Component& c, int ambient_dim, int offset);

// Ambient dimension the standard realization of one component occupies.
int standard_ambient_dim(const Component& c);

} // namespace isoform
