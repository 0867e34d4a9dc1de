#pragma once

#include <optional>
#include <vector>

#include "matroidlab/connectivity.hpp"
#include "matroidlab/matroid.hpp"

namespace matroidlab {

// A tangle of the given order, stored extensionally: members are exactly the
// "small side" subsets the tangle selects.
struct tangle {
    matroid host;
    int order = 0;
    std::vector<subset> members;  // sorted by mask
};

struct tangle_check {
    bool valid = true;
    int violated_axiom = 0;  // 1..4 when invalid
    subset witness{};        // a set witnessing the violation
};

tangle_check validate_tangle(const matroid& m, const std::vector<subset>& family, int order);

// All tangles of exactly the given order; deterministic sorted output.
// Exponential backtracking over complementary pairs, capped at n <= 12.
std::vector<tangle> enumerate_tangles(const matroid& m, int order);

bool tangle_exists(const matroid& m, int order);

// Maximum order of a tangle (0 when only the empty tangle exists).
int branch_width(const matroid& m);

// Rank function of the tangle matroid: least lambda over members containing
// x, capped at the order.
int tangle_rank(const tangle& t, subset x);
subset tangle_closure(const tangle& t, subset x);
bool tangle_independent(const tangle& t, subset x);
bool tangle_closed(const tangle& t, subset x);

// Rank-2 closed sets of the tangle matroid with at least three elements,
// found by closing each tangle-independent pair.
std::vector<subset> long_lines(const tangle& t);

// Tangle of the minor inherited from t: members restricted to the minor,
// kept when their connectivity there stays below order - |removed|.
tangle inherit_tangle(const tangle& t, const minor_spec& removed);

}  // namespace matroidlab
