#pragma once

#include <memory>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

// Unrooted cubic tree over the ground set, stored rooted at the edge next to
// element 0. A node is a leaf (element >= 0) or has exactly two children.
struct bd_node {
    int element = -1;
    std::vector<bd_node> kids;  // empty or size 2

    bool leaf() const { return kids.empty(); }
};

struct branch_decomposition {
    int width = 0;
    bd_node root;  // for n >= 2 the root is an internal split; for n == 1 a leaf
};

// Width of a given tree: max lambda over the element sets displayed by its
// edges (0 when there are no edges).
int decomposition_width(const matroid& m, const bd_node& root);

// Minimum width over all cubic trees with leaves E(M), reported as max-lambda
// so that it coincides with the maximum tangle order. Exhaustive up to n = 8,
// branch and bound up to n = 12.
branch_decomposition branch_width_by_decomposition(const matroid& m);

}  // namespace matroidlab
