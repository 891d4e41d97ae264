#include <doctest.h>

#include "isoform/errors.hpp"
#include "isoform/involution.hpp"

using namespace isoform;

namespace {

Vec vec(std::vector<Rat> coords) { return Vec(std::move(coords)); }

DiagramInvolution flip_of(const TypeList& t) {
    return make_involution(build_root_system(t), involution_permutation(t, "flip"));
}

// Every involution exercised by the catalog families.
std::vector<DiagramInvolution> sample_involutions() {
    std::vector<DiagramInvolution> out;
    for (int n : {2, 3, 4, 5, 6}) out.push_back(flip_of({{Series::A, n}}));
    out.push_back(flip_of({{Series::E, 6}}));
    for (int n : {3, 4, 5}) {
        TypeList t{{Series::D, n}};
        out.push_back(make_involution(build_root_system(t), involution_permutation(t, "fork-swap")));
    }
    for (Component c : {Component{Series::A, 1}, Component{Series::A, 2}, Component{Series::B, 2},
                        Component{Series::G, 2}}) {
        TypeList t{c, c};
        out.push_back(
            make_involution(build_root_system(t), involution_permutation(t, "factor-swap")));
    }
    for (Component c : {Component{Series::C, 2}, Component{Series::C, 3}, Component{Series::D, 3},
                        Component{Series::G, 2}, Component{Series::B, 3}}) {
        TypeList t{c};
        out.push_back(make_involution(build_root_system(t), involution_permutation(t, "identity")));
    }
    return out;
}

} // namespace

TEST_SUITE_BEGIN("involution");

TEST_CASE("A3 flip is a valid diagram automorphism") {
    DiagramInvolution inv = flip_of({{Series::A, 3}});
    CHECK(inv.perm == std::vector<int>{2, 1, 0});
    CHECK(inv.sigma(inv.base.simple_roots[0]) == inv.base.simple_roots[2]);
    CHECK(inv.sigma(inv.base.simple_roots[1]) == inv.base.simple_roots[1]);
}

TEST_CASE("identity works on any system and fixes everything") {
    RootSystem rs = build_root_system({{Series::B, 3}});
    DiagramInvolution inv = make_involution(rs, {0, 1, 2});
    for (const Vec& root : rs.roots) CHECK(inv.sigma(root) == root);
    TorusSplit split = split_torus(inv);
    CHECK(split.t_k_basis.size() == 3);
    CHECK(split.t_p_basis.empty());
}

TEST_CASE("non-automorphism permutations are rejected") {
    RootSystem a3 = build_root_system({{Series::A, 3}});
    // (1 2) does not preserve Cartan integers: c(a2,a3) = -1 but c(a1,a3) = 0.
    CHECK_THROWS_AS(make_involution(a3, {1, 0, 2}), input_error);
    // A 3-cycle is not involutive.
    CHECK_THROWS_AS(make_involution(a3, {1, 2, 0}), input_error);
    // Not a permutation.
    CHECK_THROWS_AS(make_involution(a3, {0, 0, 2}), input_error);
    CHECK_THROWS_AS(make_involution(a3, {0, 1}), input_error);
}

TEST_CASE("a Cartan-compatible non-isometry is rejected") {
    // Crossing B2 with C2 swaps roots of different lengths while preserving
    // all Cartan integers; the solved map fails the isometry check.
    RootSystem rs = build_root_system({{Series::B, 2}, {Series::C, 2}});
    CHECK_THROWS_AS(make_involution(rs, {3, 2, 1, 0}), input_error);
}

TEST_CASE("split dimensions count permutation orbits") {
    TorusSplit a3 = split_torus(flip_of({{Series::A, 3}}));
    CHECK(a3.t_k_basis.size() == 2);
    CHECK(a3.t_p_basis.size() == 1);

    TorusSplit e6 = split_torus(flip_of({{Series::E, 6}}));
    CHECK(e6.t_k_basis.size() == 4);
    CHECK(e6.t_p_basis.size() == 2);
}

TEST_CASE("ambient map properties across all catalog involutions") {
    for (const DiagramInvolution& inv : sample_involutions()) {
        CHECK((inv.ambient_map * inv.ambient_map).is_identity());
        CHECK((inv.ambient_map.transpose() * inv.ambient_map).is_identity());
        for (const Vec& root : inv.base.roots) {
            CHECK(inv.base.contains(inv.sigma(root)));
            CHECK(restrict_root(inv, root) == restrict_root(inv, inv.sigma(root)));
            CHECK_FALSE(restrict_root(inv, root).is_zero());
            CHECK_NOTHROW(pair_case(inv, root)); // the trichotomy always applies
        }
    }
}

TEST_CASE("restrict_root on the A3 flip") {
    DiagramInvolution inv = flip_of({{Series::A, 3}});
    CHECK(restrict_root(inv, inv.base.simple_roots[1]) == inv.base.simple_roots[1]);
    Vec r = restrict_root(inv, inv.base.simple_roots[0]);
    CHECK(r == vec({Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)}));
    CHECK(r.norm2() == Rat(1));
    CHECK_THROWS_AS(restrict_root(inv, vec({1, 1, 0, 0})), input_error); // not a root
}

TEST_CASE("restrict_root on the A2 flip halves the squared length") {
    DiagramInvolution inv = flip_of({{Series::A, 2}});
    Vec r = restrict_root(inv, inv.base.simple_roots[0]);
    CHECK(r.norm2() == Rat(1, 2));
}

TEST_CASE("pair cases with their length identities") {
    DiagramInvolution a3 = flip_of({{Series::A, 3}});
    CHECK(pair_case(a3, a3.base.simple_roots[0]) == PairCase::Orthogonal);
    CHECK(pair_case(a3, a3.base.simple_roots[1]) == PairCase::Fixed);
    {
        const Vec& alpha = a3.base.simple_roots[0];
        Vec hk = (alpha + a3.sigma(alpha)).scaled(Rat(1, 2));
        Vec hp = (alpha - a3.sigma(alpha)).scaled(Rat(1, 2));
        CHECK(hk.norm2() == Rat(1));
        CHECK(hp.norm2() == Rat(1));
    }

    DiagramInvolution a2 = flip_of({{Series::A, 2}});
    const Vec& alpha = a2.base.simple_roots[0];
    CHECK(pair_case(a2, alpha) == PairCase::Minus1);
    CHECK(cartan_integer(alpha, a2.sigma(alpha)) == -1);
    CHECK(a2.base.contains(alpha + a2.sigma(alpha)));
    Vec hk = (alpha + a2.sigma(alpha)).scaled(Rat(1, 2));
    Vec hp = (alpha - a2.sigma(alpha)).scaled(Rat(1, 2));
    CHECK(hk.norm2() == Rat(1, 2));
    CHECK(hp.norm2() == Rat(3, 2));
}

TEST_CASE("named involutions resolve or reject per type") {
    CHECK(involution_permutation({{Series::A, 1}}, "flip") == std::vector<int>{0});
    CHECK(involution_permutation({{Series::A, 4}}, "flip") == std::vector<int>{3, 2, 1, 0});
    CHECK(involution_permutation({{Series::E, 6}}, "flip") == std::vector<int>{5, 1, 4, 3, 2, 0});
    CHECK(involution_permutation({{Series::D, 4}}, "fork-swap") == std::vector<int>{0, 1, 3, 2});
    CHECK(involution_permutation({{Series::A, 1}, {Series::A, 1}}, "factor-swap") ==
          std::vector<int>{1, 0});
    CHECK_THROWS_AS(involution_permutation({{Series::B, 3}}, "flip"), input_error);
    CHECK_THROWS_AS(involution_permutation({{Series::E, 7}}, "flip"), input_error);
    CHECK_THROWS_AS(involution_permutation({{Series::A, 3}}, "fork-swap"), input_error);
    CHECK_THROWS_AS(involution_permutation({{Series::A, 1}, {Series::A, 2}}, "factor-swap"),
                    input_error);
    CHECK_THROWS_AS(involution_permutation({{Series::A, 3}}, "triality"), input_error);
}

TEST_CASE("E6 flip permutation really is an automorphism") {
    CHECK_NOTHROW(flip_of({{Series::E, 6}}));
}

TEST_SUITE_END();
