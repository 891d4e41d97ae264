#pragma once

#include <optional>
#include <vector>

#include "isoform/root_system.hpp"
#include "isoform/types.hpp"

namespace isoform {

struct WeylOrder {
    enum class Method { closed_form, bfs };
    long long value = 1;
    Method method = Method::closed_form;
};

// Product over components of the classical orders: A_n -> (n+1)!,
// B_n/C_n -> 2^n n!, D_n -> 2^{n-1} n!, E6 -> 51840, E7 -> 2903040,
// E8 -> 696729600, F4 -> 1152, G2 -> 12. An empty list (torus factor
// only) has order 1.
WeylOrder weyl_order_closed_form(const TypeList& components);

// Independent oracle: breadth-first closure of the group generated by the
// simple reflections, represented as exact integer matrices in the basis of
// simple roots. Guarded to rank <= 6 and predicted order <= 10^6; exceeding
// the guard throws input_error ("oracle too large").
WeylOrder weyl_order_bfs(const RootSystem& rs);

// One row of the oracle comparison table.
struct OracleRow {
    Component type;
    long long closed_form = 0;
    std::optional<long long> bfs; // empty when skipped by the guard
    bool match = false;
    bool skipped = false;
};

// Compares closed form against BFS for every irreducible type of rank
// <= max_rank. Guard-exceeding entries are reported as skipped.
std::vector<OracleRow> run_oracle(int max_rank);

} // namespace isoform
