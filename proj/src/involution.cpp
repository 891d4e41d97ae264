#include "isoform/involution.hpp"

#include <algorithm>
#include <numeric>

#include "isoform/errors.hpp"

namespace isoform {

int orbit_count(const std::vector<int>& perm) {
    int fixed = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == static_cast<int>(i)) ++fixed;
    return fixed + (static_cast<int>(perm.size()) - fixed) / 2;
}

DiagramInvolution make_involution(RootSystem rs, std::vector<int> perm) {
    const int n = rs.rank();
    if (static_cast<int>(perm.size()) != n)
        throw input_error("permutation size does not match the rank");
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[static_cast<size_t>(p)])
            throw input_error("not a permutation of the simple-root indices");
        hit[static_cast<size_t>(p)] = true;
    }
    for (int i = 0; i < n; ++i)
        if (perm[static_cast<size_t>(perm[static_cast<size_t>(i)])] != i)
            throw input_error("permutation is not involutive");

    const auto& simple = rs.simple_roots;
    auto image = [&](int i) -> const Vec& { return simple[static_cast<size_t>(perm[static_cast<size_t>(i)])]; };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cartan_integer(image(i), image(j)) !=
                cartan_integer(simple[static_cast<size_t>(i)], simple[static_cast<size_t>(j)]))
                throw input_error("not a diagram automorphism: Cartan integers not preserved");

    // Solve M [S | C] = [S_perm | C] where the columns of C span the
    // orthogonal complement of the root span.
    std::vector<Vec> complement = Mat::from_rows(simple).kernel_basis();
    std::vector<Vec> domain = simple;
    domain.insert(domain.end(), complement.begin(), complement.end());
    std::vector<Vec> target;
    for (int i = 0; i < n; ++i) target.push_back(image(i));
    target.insert(target.end(), complement.begin(), complement.end());

    Mat M = Mat::from_columns(target) * Mat::from_columns(domain).inverse();

    if (!(M * M).is_identity())
        throw input_error("not a diagram automorphism: induced map is not involutive");
    if (!(M.transpose() * M).is_identity())
        throw input_error("not a diagram automorphism: induced map is not an isometry");
    for (const Vec& root : rs.roots)
        if (!rs.contains(M.apply(root)))
            throw input_error("not a diagram automorphism: roots are not permuted");

    return {std::move(rs), std::move(perm), std::move(M)};
}

TorusSplit split_torus(const DiagramInvolution& inv) {
    TorusSplit split;
    const auto& simple = inv.base.simple_roots;
    for (size_t i = 0; i < simple.size(); ++i) {
        int j = inv.perm[i];
        if (j == static_cast<int>(i)) {
            split.t_k_basis.push_back(simple[i]);
        } else if (j > static_cast<int>(i)) {
            split.t_k_basis.push_back(simple[i] + simple[static_cast<size_t>(j)]);
            split.t_p_basis.push_back(simple[i] - simple[static_cast<size_t>(j)]);
        }
    }

    // The eigenvector and orthogonality properties are consequences of the
    // ambient map being an isometric involution; verify them anyway.
    for (const Vec& v : split.t_k_basis)
        if (inv.sigma(v) != v) throw invariant_error("t_k basis vector not fixed by sigma");
    for (const Vec& w : split.t_p_basis)
        if (inv.sigma(w) != -w) throw invariant_error("t_p basis vector not negated by sigma");
    for (const Vec& v : split.t_k_basis)
        for (const Vec& w : split.t_p_basis)
            if (!v.dot(w).is_zero()) throw invariant_error("t_k and t_p are not orthogonal");
    if (static_cast<int>(split.t_k_basis.size()) != orbit_count(inv.perm))
        throw invariant_error("dim t_k does not equal the orbit count");
    if (split.t_k_basis.size() + split.t_p_basis.size() != inv.base.simple_roots.size())
        throw invariant_error("eigenspace dimensions do not sum to the rank");

    return split;
}

Vec restrict_root(const DiagramInvolution& inv, const Vec& alpha) {
    if (!inv.base.contains(alpha))
        throw input_error("restrict_root: not a root of the base system");
    Vec restricted = (alpha + inv.sigma(alpha)).scaled(Rat(1, 2));
    if (restricted.is_zero())
        throw invariant_error("root vanishes on t_k: " + alpha.to_string());
    return restricted;
}

PairCase pair_case(const DiagramInvolution& inv, const Vec& alpha) {
    if (!inv.base.contains(alpha))
        throw input_error("pair_case: not a root of the base system");
    Vec sigma_alpha = inv.sigma(alpha);
    if (sigma_alpha == alpha) return PairCase::Fixed;

    Rat hk2 = (alpha + sigma_alpha).scaled(Rat(1, 2)).norm2();
    Rat hp2 = (alpha - sigma_alpha).scaled(Rat(1, 2)).norm2();

    if (alpha.dot(sigma_alpha).is_zero()) {
        if (hp2 != hk2)
            throw invariant_error("lemma violation: orthogonal pair with |H^p|^2 != |H^k|^2 for " +
                                  alpha.to_string());
        return PairCase::Orthogonal;
    }
    if (cartan_integer(alpha, sigma_alpha) == -1) {
        if (hp2 != Rat(3) * hk2)
            throw invariant_error("lemma violation: Cartan -1 pair with |H^p|^2 != 3|H^k|^2 for " +
                                  alpha.to_string());
        if (!inv.base.contains(alpha + sigma_alpha))
            throw invariant_error("lemma violation: alpha + sigma(alpha) is not a root for " +
                                  alpha.to_string());
        return PairCase::Minus1;
    }
    throw invariant_error("lemma violation: pairing of " + alpha.to_string() +
                          " with its image falls outside the trichotomy");
}

std::vector<int> involution_permutation(const TypeList& type, const std::string& name) {
    const int rank = rank_of(type);
    std::vector<int> perm(static_cast<size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    if (name == "identity") return perm;

    if (name == "flip") {
        if (type.size() != 1)
            throw input_error("involution 'flip' applies to a single component");
        const Component& c = type.front();
        if (c.series == Series::A) {
            std::reverse(perm.begin(), perm.end());
            return perm;
        }
        if (c.series == Series::E && c.rank == 6) {
            // Bourbaki numbering: swap nodes 1<->6 and 3<->5; 2 and 4 stay.
            perm = {5, 1, 4, 3, 2, 0};
            return perm;
        }
        throw input_error("involution 'flip' is not a diagram automorphism of " + to_string(c));
    }

    if (name == "fork-swap") {
        if (type.size() != 1 || type.front().series != Series::D)
            throw input_error("involution 'fork-swap' applies to a single D-series component");
        std::swap(perm[static_cast<size_t>(rank - 2)], perm[static_cast<size_t>(rank - 1)]);
        return perm;
    }

    if (name == "factor-swap") {
        if (type.size() != 2 || type[0] != type[1])
            throw input_error("involution 'factor-swap' applies to a pair of identical components");
        const int half = type[0].rank;
        for (int i = 0; i < half; ++i) {
            perm[static_cast<size_t>(i)] = i + half;
            perm[static_cast<size_t>(i + half)] = i;
        }
        return perm;
    }

    throw input_error("unknown involution name '" + name + "'");
}

} // namespace isoform
