#include <doctest.h>

#include "isoform/linalg.hpp"

using isoform::Mat;
using isoform::Rat;
using isoform::Vec;

namespace {

Vec vec(std::vector<Rat> coords) { return Vec(std::move(coords)); }

} // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("vector arithmetic and dot products") {
    Vec a = vec({1, 2, Rat(1, 2)});
    Vec b = vec({0, -1, Rat(3, 2)});
    CHECK(a + b == vec({1, 1, 2}));
    CHECK(a - b == vec({1, 3, -1}));
    CHECK(a.scaled(Rat(2)) == vec({2, 4, 1}));
    CHECK(a.dot(b) == Rat(-2) + Rat(3, 4));
    CHECK(a.norm2() == Rat(21, 4));
    CHECK(Vec::zero(3).is_zero());
    CHECK_FALSE(a.is_zero());
    CHECK(a.to_string() == "(1, 2, 1/2)");
}

TEST_CASE("matrix inverse round trip") {
    Mat m(3, 3);
    m.at(0, 0) = Rat(2);
    m.at(0, 1) = Rat(1);
    m.at(1, 1) = Rat(1, 2);
    m.at(1, 2) = Rat(-1);
    m.at(2, 0) = Rat(1);
    m.at(2, 2) = Rat(3);
    Mat inv = m.inverse();
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
}

TEST_CASE("singular matrix is rejected") {
    Mat m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(2);
    m.at(1, 1) = Rat(4);
    CHECK_THROWS_AS(m.inverse(), std::domain_error);
    CHECK(m.rank() == 1);
}

TEST_CASE("kernel basis spans the null space") {
    // x + y + z = 0 has a two-dimensional kernel.
    Mat m(1, 3);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(1);
    m.at(0, 2) = Rat(1);
    auto basis = m.kernel_basis();
    REQUIRE(basis.size() == 2);
    for (const Vec& v : basis) CHECK(m.apply(v).is_zero());
    CHECK(isoform::linearly_independent(basis));
}

TEST_CASE("coordinates_in solves exactly") {
    std::vector<Vec> basis = {vec({1, 0, 1}), vec({0, 1, -1})};
    Vec target = vec({2, 3, -1});
    auto coords = isoform::coordinates_in(basis, target);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Rat(2));
    CHECK((*coords)[1] == Rat(3));
    CHECK_FALSE(isoform::coordinates_in(basis, vec({0, 0, 1})).has_value());
}

TEST_CASE("linear independence") {
    CHECK(isoform::linearly_independent({vec({1, 0}), vec({1, 1})}));
    CHECK_FALSE(isoform::linearly_independent({vec({1, 2}), vec({2, 4})}));
    CHECK(isoform::linearly_independent({}));
}

TEST_SUITE_END();
