#include "isoform/formality.hpp"

#include "isoform/errors.hpp"
#include "isoform/weyl.hpp"

namespace isoform {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = detail::checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

namespace {

RestrictedRootSystem restricted_of(const SymmetricPairEntry& entry) {
    RootSystem rs = build_root_system(entry.g_type);
    std::vector<int> perm = involution_permutation(entry.g_type, entry.involution_spec);
    return build_restricted(make_involution(std::move(rs), std::move(perm)));
}

long long divide_weyl_orders(long long total, const SymmetricPairEntry& entry) {
    if (entry.k_weyl_order <= 0 || total % entry.k_weyl_order != 0)
        throw invariant_error("catalog inconsistency: |W(k')| = " + std::to_string(total) +
                              " is not divisible by |W(k)| = " +
                              std::to_string(entry.k_weyl_order) + " for " + entry.label);
    return total / entry.k_weyl_order;
}

long long pow2_checked(int n) {
    if (n < 0 || n >= 63) throw std::overflow_error("2^" + std::to_string(n) + " out of range");
    return 1LL << n;
}

} // namespace

long long compartments_per_chamber(const SymmetricPairEntry& entry) {
    return divide_weyl_orders(total_compartments(restricted_of(entry)), entry);
}

long long fixed_set_dimension(const SymmetricPairEntry& entry, long long r) {
    if (r < 1) throw input_error("fixed_set_dimension requires r >= 1");
    return detail::checked_mul(pow2_checked(entry.rank_g - entry.rank_k), r);
}

long long target_dimension(const SymmetricPairEntry& entry) {
    const std::string& tag = entry.dim_formula;
    if (tag == "equal_rank_quotient") {
        long long wg = weyl_order_closed_form(entry.g_type).value;
        return divide_weyl_orders(wg, entry);
    }
    if (tag == "split_rank_power") {
        if (entry.rank_space != entry.rank_g - entry.rank_k)
            throw invariant_error("catalog inconsistency: split_rank_power used but "
                                  "rank_space != rank_g - rank_k for " + entry.label);
        return pow2_checked(entry.rank_space);
    }
    if (tag == "two_pow_m") {
        auto it = entry.params.find("n");
        if (it == entry.params.end())
            throw input_error("two_pow_m formula requires parameter n");
        return pow2_checked(static_cast<int>(it->second / 2));
    }
    if (tag == "two_binom") {
        auto p = entry.params.find("p");
        auto q = entry.params.find("q");
        if (p == entry.params.end() || q == entry.params.end())
            throw input_error("two_binom formula requires parameters p and q");
        return detail::checked_mul(2, binomial(p->second + q->second, p->second));
    }
    if (tag.rfind("const:", 0) == 0) {
        try {
            return std::stoll(tag.substr(6));
        } catch (const std::exception&) {
            throw input_error("malformed formula tag '" + tag + "'");
        }
    }
    throw input_error("unknown formula tag '" + tag + "'");
}

FormalityReport check_formality(const SymmetricPairEntry& entry) {
    FormalityReport report;
    report.entry = entry;

    RestrictedRootSystem rrs = restricted_of(entry);
    report.kprime_type = rrs.kprime_type;
    report.kprime_display = rrs.display_type();
    report.nonreduced = rrs.nonreduced();
    report.r = divide_weyl_orders(total_compartments(rrs), entry);
    report.fixed_component_dim = entry.rank_g - entry.rank_k;
    report.dim_fixed_set = fixed_set_dimension(entry, report.r);
    report.dim_M = target_dimension(entry);

    if (report.dim_fixed_set > report.dim_M)
        throw invariant_error("Hsiang violation: dim H*(fixed set) = " +
                              std::to_string(report.dim_fixed_set) + " exceeds dim H*(M) = " +
                              std::to_string(report.dim_M) + " for " + entry.label);
    report.formal = report.dim_fixed_set == report.dim_M;
    return report;
}

} // namespace isoform
