#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "matroidlab/subset.hpp"

namespace matroidlab {

namespace detail {
class rank_node;
}

// Deletion or contraction, used to tag removal witnesses.
enum class removal_op { del, contract };

const char* to_string(removal_op op);

// A set of contractions and deletions describing a minor. Both subsets are in
// the local indices of the matroid they apply to.
struct minor_spec {
    subset contract{};
    subset del{};
};

// Immutable matroid given by a rank oracle over a labeled ground set of at
// most max_ground_size elements. Instances are cheap to copy; the memoized
// rank table is shared and safe to query concurrently.
class matroid {
public:
    static matroid uniform(int rank, int n);
    // Cycle matroid. Elements are edges in the given order; parallel edges and
    // self-loops are allowed.
    static matroid graphic(int vertices, std::vector<std::pair<int, int>> edges);
    // Column matroid of a matrix over GF(field), field in {2, 3}.
    static matroid linear(int field, std::vector<std::vector<int>> rows);
    // Wheel with r >= 2 spokes: elements 0..r-1 are the spokes, r..2r-1 the rim.
    static matroid wheel(int r);
    // Rank-r whirl: the wheel with its rim circuit-hyperplane relaxed.
    static matroid whirl(int r);

    int size() const { return n_; }
    subset ground() const { return subset::full(n_); }
    int rank() const;
    int rank(subset x) const;
    int corank(subset x) const;  // rank of x in the dual

    const std::vector<int>& labels() const { return labels_; }
    int label_of(int index) const;
    int index_of(int label) const;  // throws std::invalid_argument if absent
    bool has_label(int label) const;
    subset indices_of(const std::vector<int>& labels) const;
    std::vector<int> labels_of(subset x) const;

    matroid dual() const;
    matroid deleted(subset d) const;
    matroid contracted(subset c) const;
    matroid minor(const minor_spec& spec) const;
    // Relax a circuit-hyperplane h: same rank function except rank(h) rises by 1.
    matroid relaxed(subset h) const;
    matroid relabeled(std::vector<int> labels) const;

private:
    matroid(std::shared_ptr<const detail::rank_node> node, std::vector<int> labels);

    std::shared_ptr<const detail::rank_node> node_;
    std::vector<int> labels_;
    int n_ = 0;
};

// Equality of rank functions over the shared index space (requires equal size).
bool same_rank_function(const matroid& a, const matroid& b);

// Exact equality as labeled matroids: same label set and the same rank on
// every subset when matched by label.
bool same_labeled_matroid(const matroid& a, const matroid& b);

// True if some bijection of the ground sets carries one rank function to the
// other. Backtracking search; intended for n <= 12.
bool rank_isomorphic(const matroid& a, const matroid& b);

subset closure(const matroid& m, subset x);
subset coclosure(const matroid& m, subset x);
subset full_closure(const matroid& m, subset x);

bool is_closed(const matroid& m, subset x);
bool is_coclosed(const matroid& m, subset x);

subset loops(const matroid& m);
subset coloops(const matroid& m);

// Maximal parallel classes with at least two elements, among non-loops.
std::vector<subset> parallel_classes(const matroid& m);
std::vector<subset> series_classes(const matroid& m);

// 3-sets whose restriction is U(2,3) in m, resp. in the dual.
std::vector<subset> triangles(const matroid& m);
std::vector<subset> triads(const matroid& m);

struct simplification {
    matroid m;
    std::vector<int> kept;  // retained labels, ascending
};
// Delete loops and all but the smallest-labeled element of each parallel class.
simplification simplify(const matroid& m);
simplification cosimplify(const matroid& m);

// All circuits, optionally capped by size, in ascending lexicographic order.
std::vector<subset> circuits(const matroid& m, int max_size = -1);

bool is_connected(const matroid& m);

// Exact minor search: find disjoint (C, D) partitioning E(m) minus n's labels
// with m/C\D equal to n as a labeled matroid. First hit with C enumerated in
// ascending mask order.
std::optional<minor_spec> has_minor(const matroid& m, const matroid& n);

// Isomorphic-minor search (n <= 12): some minor of m of n's size is
// rank-isomorphic to n.
bool has_minor_isomorphic(const matroid& m, const matroid& n);

// Promote a minor with loops or coloops to one without, keeping the original
// minor inside it and adding at most one element per removed defect.
minor_spec remove_loops_coloops_minor(const matroid& m, const minor_spec& spec);

}  // namespace matroidlab
