#include "isoform/dynkin.hpp"

#include <algorithm>
#include <numeric>

#include "isoform/errors.hpp"
#include "isoform/root_system.hpp"

namespace isoform {

DynkinDiagram diagram_of(const std::vector<Vec>& simple_roots) {
    if (simple_roots.empty()) throw input_error("not a simple system: no roots given");
    if (!linearly_independent(simple_roots))
        throw input_error("not a simple system: linearly dependent");

    const int n = static_cast<int>(simple_roots.size());
    DynkinDiagram d;
    d.node_count = n;
    d.adjacency.assign(static_cast<size_t>(n), {});
    d.norm2.reserve(static_cast<size_t>(n));
    for (const Vec& v : simple_roots) d.norm2.push_back(v.norm2());

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            long long cij = cartan_integer(simple_roots[static_cast<size_t>(i)],
                                           simple_roots[static_cast<size_t>(j)]);
            long long cji = cartan_integer(simple_roots[static_cast<size_t>(j)],
                                           simple_roots[static_cast<size_t>(i)]);
            if (cij > 0 || cji > 0 || cij < -3 || cji < -3)
                throw input_error("not a simple system: Cartan integer " + std::to_string(cij) +
                                  " outside {0,-1,-2,-3}");
            if ((cij == 0) != (cji == 0))
                throw input_error("not a simple system: asymmetric orthogonality");
            if (cij == 0) continue;
            DynkinDiagram::Edge e;
            e.a = i;
            e.b = j;
            e.multiplicity = static_cast<int>(cij * cji);
            if (e.multiplicity > 3)
                throw input_error("not a simple system: bond multiplicity " +
                                  std::to_string(e.multiplicity));
            if (e.multiplicity > 1)
                e.longer = d.norm2[static_cast<size_t>(i)] > d.norm2[static_cast<size_t>(j)] ? i : j;
            d.edges.push_back(e);
            d.adjacency[static_cast<size_t>(i)].push_back(j);
            d.adjacency[static_cast<size_t>(j)].push_back(i);
        }
    }
    return d;
}

namespace {

std::vector<std::vector<int>> connected_components(const DynkinDiagram& d) {
    std::vector<int> comp(static_cast<size_t>(d.node_count), -1);
    int count = 0;
    for (int start = 0; start < d.node_count; ++start) {
        if (comp[static_cast<size_t>(start)] >= 0) continue;
        std::vector<int> stack{start};
        comp[static_cast<size_t>(start)] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : d.adjacency[static_cast<size_t>(v)]) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<int>> out(static_cast<size_t>(count));
    for (int v = 0; v < d.node_count; ++v) out[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(v);
    return out;
}

[[noreturn]] void no_match() { throw input_error("not a Dynkin diagram"); }

// Orders the nodes of a path component from one endpoint to the other.
std::vector<int> chain_order(const DynkinDiagram& d, const std::vector<int>& nodes) {
    int endpoint = -1;
    for (int v : nodes) {
        if (d.adjacency[static_cast<size_t>(v)].size() <= 1) {
            endpoint = v;
            break;
        }
    }
    if (endpoint < 0) no_match(); // a cycle
    std::vector<int> order{endpoint};
    int prev = -1;
    while (order.size() < nodes.size()) {
        int cur = order.back();
        int next = -1;
        for (int w : d.adjacency[static_cast<size_t>(cur)]) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        if (next < 0) no_match();
        prev = cur;
        order.push_back(next);
    }
    return order;
}

Component classify_component(const DynkinDiagram& d, const std::vector<int>& nodes) {
    const int m = static_cast<int>(nodes.size());
    if (m == 1) return {Series::A, 1};

    int edge_count = 0;
    std::vector<const DynkinDiagram::Edge*> multibonds;
    for (const auto& e : d.edges) {
        if (std::find(nodes.begin(), nodes.end(), e.a) == nodes.end()) continue;
        ++edge_count;
        if (e.multiplicity > 1) multibonds.push_back(&e);
    }
    if (edge_count != m - 1) no_match(); // not a tree

    int max_degree = 0;
    int branch_node = -1;
    int branch_count = 0;
    for (int v : nodes) {
        int deg = static_cast<int>(d.adjacency[static_cast<size_t>(v)].size());
        max_degree = std::max(max_degree, deg);
        if (deg >= 3) {
            branch_node = v;
            ++branch_count;
        }
    }
    if (max_degree > 3 || branch_count > 1 || multibonds.size() > 1) no_match();
    if (!multibonds.empty() && branch_count > 0) no_match();

    if (multibonds.empty()) {
        // Simply laced: A, D, or E.
        if (branch_count == 0) return {Series::A, m};
        // Arm lengths from the branch node, sorted ascending.
        std::vector<int> arms;
        for (int w : d.adjacency[static_cast<size_t>(branch_node)]) {
            int len = 1;
            int prev = branch_node, cur = w;
            while (d.adjacency[static_cast<size_t>(cur)].size() == 2) {
                int next = d.adjacency[static_cast<size_t>(cur)][0] == prev
                               ? d.adjacency[static_cast<size_t>(cur)][1]
                               : d.adjacency[static_cast<size_t>(cur)][0];
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) no_match();
        if (arms[0] == 1 && arms[1] == 1) return {Series::D, m};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
            return {Series::E, m};
        no_match();
    }

    // Exactly one multiple bond on a chain.
    const DynkinDiagram::Edge& bond = *multibonds.front();
    if (bond.multiplicity == 3) {
        if (m == 2) return {Series::G, 2};
        no_match();
    }
    if (m == 2) return {Series::B, 2}; // canonical name for the B2 = C2 coincidence

    std::vector<int> order = chain_order(d, nodes);
    int pos = -1;
    for (int i = 0; i + 1 < m; ++i) {
        if ((order[static_cast<size_t>(i)] == bond.a && order[static_cast<size_t>(i) + 1] == bond.b) ||
            (order[static_cast<size_t>(i)] == bond.b && order[static_cast<size_t>(i) + 1] == bond.a)) {
            pos = i;
            break;
        }
    }
    if (pos < 0) no_match();
    if (m == 4 && pos == 1) return {Series::F, 4};
    if (pos == 0 || pos == m - 2) {
        // Terminal double bond: B if the end node is short, C if it is long.
        int end_node = pos == 0 ? order.front() : order.back();
        return {bond.longer == end_node ? Series::C : Series::B, m};
    }
    no_match();
}

} // namespace

Classification classify_with_partition(const std::vector<Vec>& simple_roots) {
    DynkinDiagram d = diagram_of(simple_roots);

    struct Factor {
        Component type;
        std::vector<int> nodes;
    };
    std::vector<Factor> factors;
    for (const std::vector<int>& nodes : connected_components(d))
        factors.push_back({classify_component(d, nodes), nodes});

    std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) {
        if (x.type != y.type) return x.type < y.type;
        return x.nodes.front() < y.nodes.front();
    });

    Classification out;
    for (Factor& f : factors) {
        out.types.push_back(f.type);
        out.node_partition.push_back(std::move(f.nodes));
    }
    return out;
}

TypeList classify_simple_roots(const std::vector<Vec>& simple_roots) {
    return classify_with_partition(simple_roots).types;
}

} // namespace isoform
