#include "isoform/restricted.hpp"

#include <algorithm>

#include "isoform/dynkin.hpp"
#include "isoform/errors.hpp"
#include "isoform/weyl.hpp"

namespace isoform {

bool RestrictedRootSystem::contains(const Vec& v) const {
    return std::binary_search(restricted_roots.begin(), restricted_roots.end(), v);
}

std::string RestrictedRootSystem::display_type() const {
    if (kprime_type.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < kprime_type.size(); ++i) {
        if (i) s += "+";
        if (nonreduced_components.count(static_cast<int>(i)))
            s += "BC" + std::to_string(kprime_type[i].rank);
        else
            s += to_string(kprime_type[i]);
    }
    return s;
}

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw invariant_error("restriction axiom violation: " + what);
}

} // namespace

RestrictedRootSystem build_restricted(const DiagramInvolution& inv) {
    RestrictedRootSystem rrs;
    rrs.carrier = split_torus(inv);

    std::vector<Vec> all;
    all.reserve(inv.base.roots.size());
    for (const Vec& alpha : inv.base.roots) all.push_back(restrict_root(inv, alpha));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    rrs.restricted_roots = std::move(all);

    for (const Vec& alpha : inv.base.simple_roots) {
        Vec beta = restrict_root(inv, alpha);
        if (std::find(rrs.restricted_simple.begin(), rrs.restricted_simple.end(), beta) ==
            rrs.restricted_simple.end())
            rrs.restricted_simple.push_back(std::move(beta));
    }

    // Basis property: the restricted simple roots span t_k*.
    if (rrs.restricted_simple.size() != rrs.carrier.t_k_basis.size())
        fail("restricted simple roots do not number dim t_k");
    if (!linearly_independent(rrs.restricted_simple))
        fail("restricted simple roots are linearly dependent");

    const auto& R = rrs.restricted_roots;
    for (const Vec& beta : R) {
        if (beta.is_zero()) fail("zero restricted root");
        if (!rrs.contains(-beta)) fail("restricted set is not symmetric");
    }
    for (const Vec& beta : R) {
        for (const Vec& gamma : R) {
            try {
                cartan_integer(beta, gamma);
            } catch (const input_error& err) {
                fail(std::string("Cartan integrality: ") + err.what());
            }
            if (!rrs.contains(reflect(gamma, beta)))
                fail("restricted set not closed under the reflection in " + beta.to_string());
        }
    }

    // Every restricted root has integer coordinates of one sign in the
    // restricted simple roots.
    for (const Vec& beta : R) {
        auto coords = coordinates_in(rrs.restricted_simple, beta);
        if (!coords) fail("restricted root outside the span of the restricted simple roots");
        int sign = 0;
        for (const Rat& c : *coords) {
            if (!c.is_integer()) fail("non-integer coordinate for " + beta.to_string());
            if (c.is_zero()) continue;
            if (sign == 0) sign = c.sign();
            else if (sign != c.sign()) fail("mixed-sign coordinates for " + beta.to_string());
        }
    }

    Classification cls = classify_with_partition(rrs.restricted_simple);
    rrs.kprime_type = cls.types;

    // Reduced subsystem: roots whose half is not a restricted root. It must
    // coincide with the reflection closure of the restricted simple roots.
    std::vector<Vec> reduced_roots;
    for (const Vec& beta : R)
        if (!rrs.contains(beta.scaled(Rat(1, 2)))) reduced_roots.push_back(beta);
    std::vector<Vec> closure = reflection_closure(rrs.restricted_simple);
    if (closure != reduced_roots)
        fail("reduced subsystem does not match the closure of the restricted simple roots");

    rrs.reduced.ambient_dim = inv.base.ambient_dim;
    rrs.reduced.simple_roots = rrs.restricted_simple;
    rrs.reduced.roots = std::move(reduced_roots);
    rrs.reduced.components = rrs.kprime_type;
    validate_root_system(rrs.reduced);

    // Multipliable roots mark their factor as nonreduced (BC type).
    for (const Vec& beta : R) {
        if (!rrs.contains(beta.scaled(Rat(2)))) continue;
        auto coords = coordinates_in(rrs.restricted_simple, beta);
        for (size_t comp = 0; comp < cls.node_partition.size(); ++comp) {
            for (int node : cls.node_partition[comp]) {
                if (!(*coords)[static_cast<size_t>(node)].is_zero()) {
                    rrs.nonreduced_components.insert(static_cast<int>(comp));
                    break;
                }
            }
        }
    }

    return rrs;
}

long long total_compartments(const RestrictedRootSystem& rrs) {
    return weyl_order_closed_form(rrs.kprime_type).value;
}

PositivityReport check_simple_positivity(const RestrictedRootSystem& rrs) {
    PositivityReport report;
    for (const Vec& beta : rrs.restricted_roots) {
        auto coords = coordinates_in(rrs.restricted_simple, beta);
        if (!coords) throw invariant_error("positivity violation: root outside the simple span");
        PositivityRow row;
        row.root = beta;
        int sign = 0;
        for (const Rat& c : *coords) {
            if (!c.is_integer())
                throw invariant_error("positivity violation: non-integer coordinate for " +
                                      beta.to_string());
            if (!c.is_zero()) {
                if (sign == 0) sign = c.sign();
                else if (sign != c.sign())
                    throw invariant_error("positivity violation: mixed signs for " + beta.to_string());
            }
            row.coeffs.push_back(c.as_integer());
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

FoldResult fold_diagram(const TypeList& type, const std::string& involution_name) {
    FoldResult result;
    result.base_type = type;
    result.involution_name = involution_name;
    RootSystem rs = build_root_system(type);
    std::vector<int> perm = involution_permutation(type, involution_name);
    result.inv = make_involution(std::move(rs), std::move(perm));
    result.rrs = build_restricted(result.inv);
    result.compartments = total_compartments(result.rrs);
    return result;
}

} // namespace isoform
