#include "isoform/weyl.hpp"

#include <cstdint>
#include <deque>
#include <unordered_set>

#include "isoform/errors.hpp"

namespace isoform {

namespace {

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r = detail::checked_mul(r, i);
    return r;
}

long long pow2(int n) {
    if (n < 0 || n >= 63) throw std::overflow_error("2^" + std::to_string(n) + " out of range");
    return 1LL << n;
}

long long component_order(const Component& c) {
    if (!weyl_admissible(c)) throw input_error("unsupported type: " + to_string(c));
    switch (c.series) {
        case Series::A: return factorial(c.rank + 1);
        case Series::B:
        case Series::C: return detail::checked_mul(pow2(c.rank), factorial(c.rank));
        case Series::D: return detail::checked_mul(pow2(c.rank - 1), factorial(c.rank));
        case Series::E:
            return c.rank == 6 ? 51840LL : c.rank == 7 ? 2903040LL : 696729600LL;
        case Series::F: return 1152;
        case Series::G: return 12;
    }
    throw input_error("unsupported type: " + to_string(c));
}

struct MatrixHash {
    size_t operator()(const std::vector<int64_t>& m) const noexcept {
        uint64_t h = 1469598103934665603ULL;
        for (int64_t v : m) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace

WeylOrder weyl_order_closed_form(const TypeList& components) {
    long long order = 1;
    for (const Component& c : components) order = detail::checked_mul(order, component_order(c));
    return {order, WeylOrder::Method::closed_form};
}

WeylOrder weyl_order_bfs(const RootSystem& rs) {
    const int n = rs.rank();
    long long predicted = weyl_order_closed_form(rs.components).value;
    if (n > 6 || predicted > 1000000)
        throw input_error("oracle too large: rank " + std::to_string(n) + ", predicted order " +
                          std::to_string(predicted));

    // Simple reflection s_i in the basis of simple roots: an integer matrix
    // equal to the identity except in row i, where s_i(a_c) = a_c - K_ic a_i
    // with K_ic = cartan_integer(a_i, a_c).
    std::vector<std::vector<int64_t>> generators;
    for (int i = 0; i < n; ++i) {
        std::vector<int64_t> g(static_cast<size_t>(n * n), 0);
        for (int c = 0; c < n; ++c) g[static_cast<size_t>(c * n + c)] = 1;
        for (int c = 0; c < n; ++c) {
            long long k = cartan_integer(rs.simple_roots[static_cast<size_t>(i)],
                                         rs.simple_roots[static_cast<size_t>(c)]);
            g[static_cast<size_t>(i * n + c)] = (c == i ? 1 : 0) - k;
        }
        generators.push_back(std::move(g));
    }

    auto multiply = [n](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
        std::vector<int64_t> out(static_cast<size_t>(n * n), 0);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                int64_t v = a[static_cast<size_t>(r * n + k)];
                if (v == 0) continue;
                for (int c = 0; c < n; ++c)
                    out[static_cast<size_t>(r * n + c)] += v * b[static_cast<size_t>(k * n + c)];
            }
        return out;
    };

    std::vector<int64_t> id(static_cast<size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i * n + i)] = 1;

    std::unordered_set<std::vector<int64_t>, MatrixHash> seen;
    seen.reserve(static_cast<size_t>(predicted) * 2);
    seen.insert(id);
    std::deque<std::vector<int64_t>> frontier{id};
    while (!frontier.empty()) {
        std::vector<int64_t> w = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            std::vector<int64_t> next = multiply(w, g);
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }

    return {static_cast<long long>(seen.size()), WeylOrder::Method::bfs};
}

std::vector<OracleRow> run_oracle(int max_rank) {
    if (max_rank < 1 || max_rank > 6)
        throw input_error("oracle max rank must be between 1 and 6");

    std::vector<Component> todo;
    for (int n = 1; n <= max_rank; ++n) todo.push_back({Series::A, n});
    for (int n = 2; n <= max_rank; ++n) todo.push_back({Series::B, n});
    for (int n = 2; n <= max_rank; ++n) todo.push_back({Series::C, n});
    for (int n = 2; n <= max_rank; ++n) todo.push_back({Series::D, n});
    if (max_rank >= 6) todo.push_back({Series::E, 6});
    if (max_rank >= 4) todo.push_back({Series::F, 4});
    if (max_rank >= 2) todo.push_back({Series::G, 2});

    std::vector<OracleRow> rows;
    for (const Component& c : todo) {
        OracleRow row;
        row.type = c;
        row.closed_form = weyl_order_closed_form({c}).value;
        try {
            row.bfs = weyl_order_bfs(build_root_system({c})).value;
            row.match = *row.bfs == row.closed_form;
        } catch (const input_error&) {
            row.skipped = true;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace isoform
