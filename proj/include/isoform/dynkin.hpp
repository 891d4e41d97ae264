#pragma once

#include <vector>

#include "isoform/linalg.hpp"
#include "isoform/types.hpp"

namespace isoform {

// Dynkin diagram of a linearly independent simple system: nodes are the
// given roots, edges carry bond multiplicities 1..3. For a multiple bond
// the `longer` endpoint has strictly larger squared length.
struct DynkinDiagram {
    struct Edge {
        int a = 0;
        int b = 0;
        int multiplicity = 1;
        int longer = -1; // endpoint index with the larger norm; -1 for single bonds
    };
    int node_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency;
    std::vector<Rat> norm2;
};

// Builds the diagram, enforcing the preconditions: linear independence and
// all pairwise Cartan integers in {0, -1, -2, -3}. Throws input_error.
DynkinDiagram diagram_of(const std::vector<Vec>& simple_roots);

struct Classification {
    TypeList types;                               // canonically sorted
    std::vector<std::vector<int>> node_partition; // node indices per factor, aligned with types
};

// Matches each connected component of the diagram against the finite-type
// classification. Rank-2 coincidences are canonicalized: a rank-2 double
// bond is reported as B2, and a D3-shaped input classifies as the chain A3.
// Factors are sorted canonically. Throws input_error ("not a Dynkin
// diagram") if a component matches no type.
Classification classify_with_partition(const std::vector<Vec>& simple_roots);

TypeList classify_simple_roots(const std::vector<Vec>& simple_roots);

} // namespace isoform
