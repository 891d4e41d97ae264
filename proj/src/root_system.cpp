#include "isoform/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "isoform/errors.hpp"

namespace isoform {

bool RootSystem::contains(const Vec& v) const {
    return std::binary_search(roots.begin(), roots.end(), v);
}

long long cartan_integer(const Vec& alpha, const Vec& beta) {
    if (alpha.is_zero()) throw input_error("zero root");
    Rat q = (Rat(2) * beta.dot(alpha)) / alpha.norm2();
    if (!q.is_integer())
        throw input_error("not Cartan-integral: 2<beta,alpha>/<alpha,alpha> = " + q.to_string());
    return q.as_integer();
}

Vec reflect(const Vec& x, const Vec& alpha) {
    if (alpha.is_zero()) throw input_error("zero root");
    Rat factor = (Rat(2) * x.dot(alpha)) / alpha.norm2();
    return x - alpha.scaled(factor);
}

std::vector<Vec> reflection_closure(const std::vector<Vec>& simple_roots) {
    std::set<Vec> seen(simple_roots.begin(), simple_roots.end());
    std::deque<Vec> frontier(simple_roots.begin(), simple_roots.end());
    while (!frontier.empty()) {
        Vec v = std::move(frontier.front());
        frontier.pop_front();
        for (const Vec& s : simple_roots) {
            Vec w = reflect(v, s);
            if (seen.insert(w).second) frontier.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

int standard_ambient_dim(const Component& c) {
    switch (c.series) {
        case Series::A: return c.rank + 1;
        case Series::B:
        case Series::C:
        case Series::D: return c.rank;
        case Series::E: return 8;
        case Series::F: return 4;
        case Series::G: return 3;
    }
    return 0;
}

namespace {

Vec unit(int dim, int i, int offset) {
    std::vector<Rat> v(static_cast<size_t>(dim));
    v[static_cast<size_t>(offset + i)] = Rat(1);
    return Vec(std::move(v));
}

Vec coords(int dim, int offset, std::vector<Rat> local) {
    std::vector<Rat> v(static_cast<size_t>(dim));
    for (size_t i = 0; i < local.size(); ++i) v[static_cast<size_t>(offset) + i] = local[i];
    return Vec(std::move(v));
}

} // namespace

std::vector<Vec> standard_simple_roots(const Component& c, int ambient_dim, int offset) {
    if (!buildable(c)) throw input_error("unsupported type: " + to_string(c));
    const int n = c.rank;
    std::vector<Vec> simple;
    auto chain = [&](int count) {
        // e_i - e_{i+1} for i = 1..count
        for (int i = 0; i < count; ++i)
            simple.push_back(unit(ambient_dim, i, offset) - unit(ambient_dim, i + 1, offset));
    };
    switch (c.series) {
        case Series::A:
            chain(n);
            break;
        case Series::B:
            chain(n - 1);
            simple.push_back(unit(ambient_dim, n - 1, offset));
            break;
        case Series::C:
            chain(n - 1);
            simple.push_back(unit(ambient_dim, n - 1, offset).scaled(Rat(2)));
            break;
        case Series::D:
            chain(n - 1);
            simple.push_back(unit(ambient_dim, n - 2, offset) + unit(ambient_dim, n - 1, offset));
            break;
        case Series::E: {
            const Rat h(1, 2);
            simple.push_back(coords(ambient_dim, offset, {h, -h, -h, -h, -h, -h, -h, h}));
            simple.push_back(coords(ambient_dim, offset, {1, 1, 0, 0, 0, 0, 0, 0}));
            for (int i = 1; i < n - 1; ++i)
                simple.push_back(unit(ambient_dim, i, offset) - unit(ambient_dim, i - 1, offset));
            break;
        }
        case Series::F: {
            const Rat h(1, 2);
            simple.push_back(unit(ambient_dim, 1, offset) - unit(ambient_dim, 2, offset));
            simple.push_back(unit(ambient_dim, 2, offset) - unit(ambient_dim, 3, offset));
            simple.push_back(unit(ambient_dim, 3, offset));
            simple.push_back(coords(ambient_dim, offset, {h, -h, -h, -h}));
            break;
        }
        case Series::G:
            simple.push_back(unit(ambient_dim, 0, offset) - unit(ambient_dim, 1, offset));
            simple.push_back(coords(ambient_dim, offset, {-2, 1, 1}));
            break;
    }
    return simple;
}

RootSystem build_root_system(const TypeList& components) {
    if (components.empty()) throw input_error("unsupported type: empty type list");
    int total_dim = 0;
    for (const Component& c : components) {
        if (!buildable(c)) throw input_error("unsupported type: " + to_string(c));
        total_dim += standard_ambient_dim(c);
    }

    RootSystem rs;
    rs.ambient_dim = total_dim;
    rs.components = components;

    std::set<Vec> all_roots;
    int offset = 0;
    for (const Component& c : components) {
        std::vector<Vec> simple = standard_simple_roots(c, total_dim, offset);
        for (const Vec& v : reflection_closure(simple)) all_roots.insert(v);
        for (Vec& v : simple) rs.simple_roots.push_back(std::move(v));
        offset += standard_ambient_dim(c);
    }
    rs.roots.assign(all_roots.begin(), all_roots.end());

    validate_root_system(rs);
    return rs;
}

void validate_root_system(const RootSystem& rs) {
    auto fail = [](const std::string& what) { throw invariant_error("root system axiom violation: " + what); };

    if (rs.roots.empty()) fail("empty root set");
    if (!std::is_sorted(rs.roots.begin(), rs.roots.end())) fail("root set not sorted");

    for (const Vec& a : rs.roots) {
        if (a.is_zero()) fail("0 is listed as a root");
        if (!rs.contains(-a)) fail("missing negative of " + a.to_string());
        if (rs.contains(a.scaled(Rat(2)))) fail("not reduced: both " + a.to_string() + " and its double are roots");
    }

    for (const Vec& a : rs.roots) {
        for (const Vec& b : rs.roots) {
            try {
                cartan_integer(a, b);
            } catch (const input_error& err) {
                fail(std::string("Cartan integrality: ") + err.what());
            }
            if (!rs.contains(reflect(b, a)))
                fail("not closed under reflection of " + b.to_string() + " in " + a.to_string());
        }
    }

    if (!linearly_independent(rs.simple_roots)) fail("simple roots are linearly dependent");
    for (const Vec& a : rs.roots) {
        auto coords = coordinates_in(rs.simple_roots, a);
        if (!coords) fail("root " + a.to_string() + " outside the span of the simple roots");
        int sign = 0;
        for (const Rat& c : *coords) {
            if (!c.is_integer()) fail("non-integer simple-root coordinate for " + a.to_string());
            if (c.is_zero()) continue;
            if (sign == 0) sign = c.sign();
            else if (sign != c.sign()) fail("mixed-sign simple-root coordinates for " + a.to_string());
        }
        if (sign == 0) fail("root with zero coordinates");
    }
}

} // namespace isoform
