#pragma once

#include <set>
#include <string>
#include <vector>

#include "isoform/involution.hpp"
#include "isoform/root_system.hpp"

namespace isoform {

// The set of restrictions of the base roots to t_k. Possibly nonreduced:
// a component containing both some beta and 2 beta is recorded in
// `nonreduced_components` (indices into `kprime_type`), and `reduced` holds
// the subsystem of roots whose half is not a root.
struct RestrictedRootSystem {
    TorusSplit carrier;
    std::vector<Vec> restricted_roots;  // sorted, deduplicated
    std::vector<Vec> restricted_simple; // restrictions of the simple roots, first-occurrence order
    std::set<int> nonreduced_components;
    RootSystem reduced;
    TypeList kprime_type;

    bool contains(const Vec& v) const;
    bool nonreduced() const { return !nonreduced_components.empty(); }

    // "BC2" style display name: nonreduced factors print as BC<rank>.
    std::string display_type() const;
};

// Builds the restricted system and checks every axiom explicitly
// (+-symmetry, reflection closure, Cartan integrality, simple-root basis
// property, uniform-sign integer coordinates, and agreement of the reduced
// subsystem with the reflection closure of the restricted simple roots).
// Throws invariant_error ("restriction axiom violation") on any failure.
RestrictedRootSystem build_restricted(const DiagramInvolution& inv);

// Number of chambers of the restricted arrangement: the order of the Weyl
// group of the reduced subsystem (a nonreduced system has the same one).
long long total_compartments(const RestrictedRootSystem& rrs);

struct PositivityRow {
    Vec root;
    std::vector<long long> coeffs; // integer coordinates in restricted_simple
};
struct PositivityReport {
    std::vector<PositivityRow> rows; // in restricted_roots order
};

// Solves the integer coordinates of every restricted root in the restricted
// simple roots and confirms a uniform sign. Throws invariant_error
// ("positivity violation") otherwise.
PositivityReport check_simple_positivity(const RestrictedRootSystem& rrs);

// One diagram fold: base system, involution, and the restricted system.
struct FoldResult {
    TypeList base_type;
    std::string involution_name;
    DiagramInvolution inv;
    RestrictedRootSystem rrs;
    long long compartments = 0;
};

FoldResult fold_diagram(const TypeList& type, const std::string& involution_name);

} // namespace isoform
