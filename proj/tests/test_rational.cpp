#include <doctest.h>

#include <limits>
#include <unordered_set>

#include "isoform/rational.hpp"

using isoform::Rat;

TEST_SUITE_BEGIN("rational");

TEST_CASE("normalization") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(-1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0, -7).den() == 1);
    CHECK(Rat(6, 3).is_integer());
    CHECK(Rat(6, 3).as_integer() == 2);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1, 2).as_integer(), std::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(1, 2) / Rat(3, 4) == Rat(2, 3));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("field axioms on a small grid") {
    std::vector<Rat> values;
    for (int n = -4; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d) values.emplace_back(n, d);
    for (const Rat& a : values) {
        CHECK(a + Rat(0) == a);
        CHECK(a * Rat(1) == a);
        CHECK(a - a == Rat(0));
        if (!a.is_zero()) CHECK(a / a == Rat(1));
        for (const Rat& b : values) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("ordering by cross multiplication") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(7, 5) > Rat(4, 3));
    CHECK(Rat(2, 4) <= Rat(1, 2));
    CHECK(Rat(2, 4) >= Rat(1, 2));
}

TEST_CASE("to_string") {
    CHECK(Rat(3, 2).to_string() == "3/2");
    CHECK(Rat(-1, 2).to_string() == "-1/2");
    CHECK(Rat(5).to_string() == "5");
    CHECK(Rat(0).to_string() == "0");
}

TEST_CASE("overflow is detected, not wrapped") {
    Rat big(std::numeric_limits<long long>::max() - 1, 1);
    CHECK_THROWS_AS(big * Rat(8), std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("hash agrees with equality") {
    std::unordered_set<Rat> set;
    set.insert(Rat(1, 2));
    set.insert(Rat(2, 4));
    set.insert(Rat(3, 6));
    CHECK(set.size() == 1);
}

TEST_SUITE_END();
