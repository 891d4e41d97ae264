#include <doctest.h>

#include <algorithm>

#include "isoform/errors.hpp"
#include "isoform/restricted.hpp"
#include "isoform/weyl.hpp"

using namespace isoform;

namespace {

Vec vec(std::vector<Rat> coords) { return Vec(std::move(coords)); }

RestrictedRootSystem fold_of(const TypeList& t, const std::string& name) {
    return fold_diagram(t, name).rrs;
}

} // namespace

TEST_SUITE_BEGIN("restricted");

TEST_CASE("A3 flip collapses 12 roots onto the 8 of B2") {
    RestrictedRootSystem rrs = fold_of({{Series::A, 3}}, "flip");
    CHECK(rrs.restricted_roots.size() == 8);
    CHECK(rrs.kprime_type == TypeList{{Series::B, 2}});
    CHECK(rrs.nonreduced_components.empty());
    CHECK_FALSE(rrs.nonreduced());
    CHECK(rrs.display_type() == "B2");

    // The eight vectors, frozen from the coordinates of the fold:
    // +-b1, +-b2, +-(b1+b2), +-(2b1+b2) with b1 = (a1+a3)/2, b2 = a2.
    Vec b1 = vec({Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)});
    Vec b2 = vec({0, 1, -1, 0});
    std::vector<Vec> expected = {b1, b2, b1 + b2, b1 + b1 + b2};
    for (const Vec& v : expected) {
        CHECK(rrs.contains(v));
        CHECK(rrs.contains(-v));
    }
    CHECK(rrs.restricted_simple == std::vector<Vec>{b1, b2});
    CHECK(rrs.reduced.roots == rrs.restricted_roots);
}

TEST_CASE("A2 flip gives the nonreduced BC1") {
    RestrictedRootSystem rrs = fold_of({{Series::A, 2}}, "flip");
    REQUIRE(rrs.restricted_simple.size() == 1);
    const Vec& beta = rrs.restricted_simple[0];
    CHECK(rrs.restricted_roots.size() == 4); // {+-beta, +-2beta}
    CHECK(rrs.contains(beta));
    CHECK(rrs.contains(beta.scaled(Rat(2))));
    CHECK(rrs.nonreduced());
    CHECK(rrs.nonreduced_components == std::set<int>{0});
    CHECK(rrs.kprime_type == TypeList{{Series::A, 1}});
    CHECK(rrs.display_type() == "BC1");
    CHECK(rrs.reduced.roots.size() == 2);
}

TEST_CASE("identity involution restricts to the system itself") {
    FoldResult fold = fold_diagram({{Series::G, 2}}, "identity");
    CHECK(fold.rrs.restricted_roots == fold.inv.base.roots);
    CHECK(fold.rrs.kprime_type == TypeList{{Series::G, 2}});
    CHECK_FALSE(fold.rrs.nonreduced());
    CHECK(total_compartments(fold.rrs) == 12);
}

TEST_CASE("fold table across the catalog families") {
    CHECK(fold_of({{Series::A, 3}}, "flip").kprime_type == TypeList{{Series::B, 2}});
    CHECK(fold_of({{Series::A, 5}}, "flip").kprime_type == TypeList{{Series::C, 3}});
    CHECK(fold_of({{Series::A, 2}}, "flip").display_type() == "BC1");
    CHECK(fold_of({{Series::A, 4}}, "flip").display_type() == "BC2");
    CHECK(fold_of({{Series::A, 4}}, "flip").kprime_type == TypeList{{Series::B, 2}});
    CHECK(fold_of({{Series::D, 3}}, "fork-swap").kprime_type == TypeList{{Series::B, 2}});
    CHECK(fold_of({{Series::D, 4}}, "fork-swap").kprime_type == TypeList{{Series::B, 3}});
    CHECK(fold_of({{Series::D, 5}}, "fork-swap").kprime_type == TypeList{{Series::B, 4}});
    CHECK(fold_of({{Series::E, 6}}, "flip").kprime_type == TypeList{{Series::F, 4}});
}

TEST_CASE("type II factor swap restricts to a scaled copy of the factor") {
    RestrictedRootSystem rrs = fold_of({{Series::G, 2}, {Series::G, 2}}, "factor-swap");
    CHECK(rrs.kprime_type == TypeList{{Series::G, 2}});
    CHECK(rrs.restricted_roots.size() == 12);
    CHECK_FALSE(rrs.nonreduced());
}

TEST_CASE("total compartments") {
    CHECK(total_compartments(fold_of({{Series::A, 3}}, "flip")) == 8);
    CHECK(total_compartments(fold_of({{Series::E, 6}}, "flip")) == 1152);
    CHECK(total_compartments(fold_of({{Series::A, 2}}, "flip")) == 2);
}

TEST_CASE("restricted axioms hold on every catalog fold") {
    std::vector<FoldResult> folds;
    for (int n : {2, 3, 4, 5, 6}) folds.push_back(fold_diagram({{Series::A, n}}, "flip"));
    folds.push_back(fold_diagram({{Series::E, 6}}, "flip"));
    for (int n : {3, 4, 5}) folds.push_back(fold_diagram({{Series::D, n}}, "fork-swap"));
    for (Component c : {Component{Series::A, 1}, Component{Series::A, 2}, Component{Series::B, 2},
                        Component{Series::G, 2}})
        folds.push_back(fold_diagram({c, c}, "factor-swap"));
    for (Component c : {Component{Series::C, 2}, Component{Series::C, 3}, Component{Series::D, 3},
                        Component{Series::G, 2}})
        folds.push_back(fold_diagram({c}, "identity"));

    for (const FoldResult& fold : folds) {
        const RestrictedRootSystem& rrs = fold.rrs;
        INFO(to_string(fold.base_type), " / ", fold.involution_name);

        // +-symmetry, no zero, closure, integrality.
        for (const Vec& beta : rrs.restricted_roots) {
            CHECK_FALSE(beta.is_zero());
            CHECK(rrs.contains(-beta));
            for (const Vec& gamma : rrs.restricted_roots) {
                CHECK_NOTHROW(cartan_integer(beta, gamma));
                CHECK(rrs.contains(reflect(gamma, beta)));
            }
        }

        // Nonreduced components appear exactly when some pair is Minus1.
        bool has_minus1 = false;
        for (const Vec& alpha : fold.inv.base.roots)
            if (pair_case(fold.inv, alpha) == PairCase::Minus1) has_minus1 = true;
        CHECK(rrs.nonreduced() == has_minus1);

        // The closed-form order of the reduced system matches the BFS oracle.
        CHECK(weyl_order_bfs(rrs.reduced).value ==
              weyl_order_closed_form(rrs.kprime_type).value);
    }
}

TEST_CASE("positivity report") {
    RestrictedRootSystem rrs = fold_of({{Series::A, 3}}, "flip");
    PositivityReport report = check_simple_positivity(rrs);
    CHECK(report.rows.size() == rrs.restricted_roots.size());

    Vec b1 = vec({Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)});
    Vec b2 = vec({0, 1, -1, 0});
    Vec high = b1 + b1 + b2;
    for (const PositivityRow& row : report.rows) {
        if (row.root == high) CHECK(row.coeffs == std::vector<long long>{2, 1});
        if (row.root == b1) CHECK(row.coeffs == std::vector<long long>{1, 0});
        if (row.root == b2) CHECK(row.coeffs == std::vector<long long>{0, 1});
    }

    // Nonreduced multiple: 2 beta has coefficient vector (2).
    RestrictedRootSystem bc1 = fold_of({{Series::A, 2}}, "flip");
    PositivityReport bc_report = check_simple_positivity(bc1);
    const Vec twice = bc1.restricted_simple[0].scaled(Rat(2));
    bool found = false;
    for (const PositivityRow& row : bc_report.rows)
        if (row.root == twice) {
            CHECK(row.coeffs == std::vector<long long>{2});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("fold_diagram rejects involutions that do not apply") {
    CHECK_THROWS_AS(fold_diagram({{Series::B, 3}}, "flip"), input_error);
    CHECK_THROWS_AS(fold_diagram({{Series::A, 3}}, "no-such-involution"), input_error);
}

TEST_SUITE_END();
