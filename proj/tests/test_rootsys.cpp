#include <doctest.h>

#include <map>

#include "isoform/dynkin.hpp"
#include "isoform/errors.hpp"
#include "isoform/root_system.hpp"

using namespace isoform;

namespace {

Vec vec(std::vector<Rat> coords) { return Vec(std::move(coords)); }

// Closed-form root counts, the independent oracle for the closure computation.
long long expected_root_count(const Component& c) {
    long long n = c.rank;
    switch (c.series) {
        case Series::A: return n * (n + 1);
        case Series::B:
        case Series::C: return 2 * n * n;
        case Series::D: return 2 * n * (n - 1);
        case Series::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
        case Series::F: return 48;
        case Series::G: return 12;
    }
    return -1;
}

std::vector<TypeList> all_irreducible_up_to_rank_8() {
    std::vector<TypeList> out;
    for (int n = 1; n <= 8; ++n) out.push_back({{Series::A, n}});
    for (int n = 2; n <= 8; ++n) out.push_back({{Series::B, n}});
    for (int n = 2; n <= 8; ++n) out.push_back({{Series::C, n}});
    for (int n = 2; n <= 8; ++n) out.push_back({{Series::D, n}});
    for (int n = 6; n <= 8; ++n) out.push_back({{Series::E, n}});
    out.push_back({{Series::F, 4}});
    out.push_back({{Series::G, 2}});
    return out;
}

} // namespace

TEST_SUITE_BEGIN("rootsys");

TEST_CASE("rank-1 system") {
    RootSystem rs = build_root_system({{Series::A, 1}});
    CHECK(rs.roots.size() == 2);
    CHECK(rs.contains(rs.simple_roots[0]));
    CHECK(rs.contains(-rs.simple_roots[0]));
}

TEST_CASE("root counts match the closed forms") {
    for (const TypeList& t : all_irreducible_up_to_rank_8()) {
        RootSystem rs = build_root_system(t);
        CHECK_MESSAGE(static_cast<long long>(rs.roots.size()) == expected_root_count(t[0]),
                      to_string(t));
        CHECK(rs.ambient_dim == standard_ambient_dim(t[0]));
    }
}

TEST_CASE("direct sums concatenate components") {
    RootSystem rs = build_root_system({{Series::B, 2}, {Series::A, 1}});
    CHECK(rs.roots.size() == 10);
    CHECK(rs.rank() == 3);
    CHECK(rs.ambient_dim == 4);
    CHECK(rs.components == TypeList{{Series::B, 2}, {Series::A, 1}});
}

TEST_CASE("inadmissible types are rejected") {
    CHECK_THROWS_AS(build_root_system({{Series::A, 0}}), input_error);
    CHECK_THROWS_AS(build_root_system({{Series::B, 1}}), input_error);
    CHECK_THROWS_AS(build_root_system({{Series::D, 1}}), input_error);
    CHECK_THROWS_AS(build_root_system({{Series::E, 5}}), input_error);
    CHECK_THROWS_AS(build_root_system({{Series::E, 9}}), input_error);
    CHECK_THROWS_AS(build_root_system({{Series::F, 3}}), input_error);
    CHECK_THROWS_AS(build_root_system({{Series::G, 1}}), input_error);
    CHECK_THROWS_AS(build_root_system({}), input_error);
}

TEST_CASE("cartan_integer basics") {
    RootSystem a2 = build_root_system({{Series::A, 2}});
    const Vec& a = a2.simple_roots[0];
    const Vec& b = a2.simple_roots[1];
    CHECK(cartan_integer(a, a) == 2);
    CHECK(cartan_integer(a, b) == -1);
    CHECK(cartan_integer(b, a) == -1);
    CHECK(cartan_integer(vec({1, 0}), vec({0, 1})) == 0);
    CHECK_THROWS_AS(cartan_integer(Vec::zero(2), vec({1, 0})), input_error);
    // 2*3/9 = 2/3 is not an integer.
    CHECK_THROWS_AS(cartan_integer(vec({3, 0}), vec({1, 0})), input_error);
}

TEST_CASE("cartan_integer never errs within one system") {
    for (const TypeList& t : {TypeList{{Series::G, 2}}, TypeList{{Series::F, 4}},
                              TypeList{{Series::B, 3}}, TypeList{{Series::A, 4}}}) {
        RootSystem rs = build_root_system(t);
        for (const Vec& a : rs.roots)
            for (const Vec& b : rs.roots) CHECK_NOTHROW(cartan_integer(a, b));
    }
}

TEST_CASE("reflect") {
    RootSystem a2 = build_root_system({{Series::A, 2}});
    const Vec& a1 = a2.simple_roots[0];
    const Vec& a2r = a2.simple_roots[1];
    CHECK(reflect(a1, a1) == -a1);
    CHECK(reflect(a1, a2r) == a1 + a2r);
    Vec orth = vec({1, 1, 1});
    CHECK(reflect(orth, a1) == orth);
    CHECK_THROWS_AS(reflect(a1, Vec::zero(3)), input_error);
}

TEST_CASE("reflections are involutive on a rational grid") {
    Vec alpha = vec({1, Rat(-1, 2), Rat(1, 3)});
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            for (int z = -2; z <= 2; ++z) {
                Vec v = vec({Rat(x), Rat(y, 2), Rat(z, 3)});
                CHECK(reflect(reflect(v, alpha), alpha) == v);
            }
}

TEST_CASE("reflection closure is a full symmetry of the root set") {
    for (const TypeList& t : {TypeList{{Series::F, 4}}, TypeList{{Series::E, 6}},
                              TypeList{{Series::B, 4}}, TypeList{{Series::G, 2}},
                              TypeList{{Series::D, 4}}}) {
        RootSystem rs = build_root_system(t);
        for (const Vec& a : rs.roots)
            for (const Vec& b : rs.roots) CHECK(rs.contains(reflect(b, a)));
    }
}

TEST_CASE("classification round trip for every admissible type up to rank 8") {
    for (const TypeList& t : all_irreducible_up_to_rank_8()) {
        RootSystem rs = build_root_system(t);
        CHECK_MESSAGE(classify_simple_roots(rs.simple_roots) == canonical_type(t), to_string(t));
    }
}

TEST_CASE("classification round trip for sums") {
    for (const TypeList& t :
         {TypeList{{Series::B, 2}, {Series::A, 1}}, TypeList{{Series::A, 2}, {Series::A, 2}},
          TypeList{{Series::G, 2}, {Series::D, 4}, {Series::A, 3}},
          TypeList{{Series::C, 3}, {Series::B, 3}}}) {
        RootSystem rs = build_root_system(t);
        CHECK(classify_simple_roots(rs.simple_roots) == canonical_type(t));
    }
}

TEST_CASE("rank coincidences get canonical names") {
    CHECK(classify_simple_roots(build_root_system({{Series::C, 2}}).simple_roots) ==
          TypeList{{Series::B, 2}});
    CHECK(classify_simple_roots(build_root_system({{Series::D, 3}}).simple_roots) ==
          TypeList{{Series::A, 3}});
    CHECK(classify_simple_roots(build_root_system({{Series::D, 2}}).simple_roots) ==
          TypeList{{Series::A, 1}, {Series::A, 1}});
}

TEST_CASE("classification is order-independent") {
    for (const TypeList& t : {TypeList{{Series::F, 4}}, TypeList{{Series::E, 7}},
                              TypeList{{Series::B, 3}}, TypeList{{Series::E, 8}}}) {
        std::vector<Vec> simple = build_root_system(t).simple_roots;
        std::reverse(simple.begin(), simple.end());
        CHECK(classify_simple_roots(simple) == canonical_type(t));
        std::swap(simple[0], simple[simple.size() / 2]);
        CHECK(classify_simple_roots(simple) == canonical_type(t));
    }
}

TEST_CASE("the A3 fold example classifies as B2") {
    std::vector<Vec> folded = {vec({Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)}),
                               vec({0, 1, -1, 0})};
    CHECK(cartan_integer(folded[0], folded[1]) == -2);
    CHECK(cartan_integer(folded[1], folded[0]) == -1);
    CHECK(classify_simple_roots(folded) == TypeList{{Series::B, 2}});
}

TEST_CASE("classifier rejects bad simple systems") {
    // Linearly dependent.
    CHECK_THROWS_AS(classify_simple_roots({vec({1, 0}), vec({-1, 0})}), input_error);
    // Positive Cartan integer (not a simple system).
    CHECK_THROWS_AS(classify_simple_roots({vec({1, -1, 0}), vec({1, 0, 0})}), input_error);
    // Cartan integer -4.
    CHECK_THROWS_AS(classify_simple_roots({vec({1, 0}), vec({-2, 1})}), input_error);
    CHECK_THROWS_AS(classify_simple_roots({}), input_error);
}

TEST_CASE("built systems pass the axiom validator") {
    for (const TypeList& t : all_irreducible_up_to_rank_8())
        CHECK_NOTHROW(validate_root_system(build_root_system(t)));
}

TEST_CASE("validator catches corrupted systems") {
    RootSystem rs = build_root_system({{Series::A, 2}});
    RootSystem broken = rs;
    broken.roots.erase(broken.roots.begin()); // drop one root
    CHECK_THROWS_AS(validate_root_system(broken), invariant_error);
}

TEST_SUITE_END();
