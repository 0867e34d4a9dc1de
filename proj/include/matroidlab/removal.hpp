#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroidlab/restoration.hpp"

namespace matroidlab {

// Tangle of the dual: same order and members, host dualized.
tangle dual_tangle(const tangle& t);

struct removal_result {
    subset set;
    removal_op op = removal_op::del;
};

struct removal_context {
    matroid m;          // 3-connected host
    tangle t;           // tangle of m
    minor_spec n_spec;  // minor to preserve, without loops or coloops
    int k = 0;          // removal size
};

struct removal_outcome {
    bool found = false;
    removal_result result{};
    std::string note;  // reason when the budget is exhausted
};

// Single-element removal on a long line of the tangle matroid: some
// e in line \ {f} admits a 3-connectivity-preserving removal keeping n.
element_removal remove_on_line(const matroid& m, const tangle& t, const matroid& n, subset line,
                               int f);

struct grow_result {
    subset contract_set;
    subset delete_set;
    bool reached = false;  // target size was met
};
// Greedily grow disjoint (C, D) outside the tangle closure of E(n), keeping
// the minor 3-connected with n inside and the tangle rank bookkeeping tight.
// Stops early (reached == false) when no step exists and the order bound
// max(6, 2*target + t + 1) does not hold.
grow_result grow_removal_set(const matroid& m, const tangle& t, const matroid& n, int target);

// Delete several fan ends at once: the lines are pairwise skew, each carries a
// maximal fan of length >= 4, and each single deletion is 3-connected with n.
matroid simultaneous_fan_removal(const matroid& m, const tangle& t, const matroid& n,
                                 const std::vector<subset>& lines, const std::vector<fan>& fans,
                                 const std::vector<int>& ends);

// With |C| - |D| >= k, peel off a cover of the non-privileged delete side and
// return C' of size >= k with m/C' 3-connected.
subset balance_extract(const matroid& m, const tangle& t, subset c, subset d, int k);

// The induced-matching argument: restore a non-privileged induced matching of
// size >= 2k, walk the fans it exposes, and convert the imbalance into a
// one-operation removal set of size >= k.
removal_result induced_matching_boost(const matroid& m, const tangle& t, const matroid& n,
                                      subset c, subset d, int k);

// Largest induced matching avoiding privileged vertices; lexicographically
// first among maximum ones.
std::vector<std::pair<int, int>> max_induced_matching(const restoration_graph& g);

struct vertex_partition {
    subset p1, p2;  // privileged vertices in C resp. D
    subset q1, q2;  // vertices whose neighbors are all privileged, per side
    subset u1, u2;  // neighborhoods of the expanded covers
    subset t1, t2;  // matched leftovers, per side
    subset s1, s2;  // minimal covers inside the matching
    subset s1x, s2x;  // their maximal expansions with |N(S)| >= 2|S|
    std::vector<std::pair<int, int>> matching;  // maximal matching of the core
    int balance = 0;                            // |C| - |D|
};
vertex_partition compute_vertex_partition(const restoration_graph& g);

// Full search for a k-element one-operation removal set preserving
// 3-connectivity and the minor. Runs the staged pipeline opportunistically;
// reports exhaustion instead of failing when the tangle order is too small.
removal_outcome find_removal_set(const removal_context& ctx);

// Exhaustive ground truth: lexicographically first k-subset of E(m) \ E(n)
// whose deletion or contraction is 3-connected with n as minor.
std::optional<removal_result> brute_force_oracle(const matroid& m, const minor_spec& n_spec, int k);

// Exact splitter step: an element whose removal keeps 3-connectivity and the
// labeled minor n.
std::optional<element_removal> splitter_check(const matroid& m, const matroid& n);
// Isomorphic variant (n <= 12): the preserved minor only needs to be
// isomorphic to n.
std::optional<element_removal> splitter_check_isomorphic(const matroid& m, const matroid& n);

}  // namespace matroidlab
