#pragma once

#include <vector>

#include "matroidlab/tangle.hpp"

namespace matroidlab {

// Undo the removal of z: from the minor m/C\D, put back the elements of z.
matroid restore(const matroid& m, subset c, subset d, subset z);

// Bipartite graph on C u D recording which single contract/delete pairs can be
// restored together while keeping 3-connectivity.
struct restoration_graph {
    subset contract_side;  // C, in host indices
    subset delete_side;    // D
    subset privileged;     // vertices whose solo restoration is 3-connected
    std::vector<std::pair<int, int>> edges;  // (c, d), sorted
    std::vector<subset> adj;                 // neighbor mask per host element

    subset neighbors(subset s) const {
        subset out;
        for (int v : s) out = out | adj[v];
        return out;
    }
    int degree(int v) const { return adj[v].size(); }
};

// Build the graph by direct 3-connectivity tests and check that no
// non-privileged vertex is isolated (which the tangle independence of C u D
// guarantees).
restoration_graph build_restoration_graph(const matroid& m, const tangle& t, subset c, subset d);

// Whether restoring s keeps 3-connectivity, decided purely from the graph:
// the induced subgraph on s has no isolated non-privileged vertex.
bool restorable(const restoration_graph& g, subset s);

}  // namespace matroidlab
