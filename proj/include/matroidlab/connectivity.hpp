#pragma once

#include <optional>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

// Connectivity function: rank(X) + rank(E \ X) - rank(M).
int lambda(const matroid& m, subset x);

// One side of a partition (X, E \ X), canonically the side containing
// element 0. order is the k it was requested at; exact means lambda == k - 1.
struct separation {
    subset side;
    int order = 0;
    bool exact = false;
};

// All k-separations: both sides of size >= k and lambda < k (== k - 1 when
// exact_only). Sorted by side mask.
std::vector<separation> k_separations(const matroid& m, int k, bool exact_only = false);

bool is_k_connected(const matroid& m, int k);
bool is_3_connected(const matroid& m);

enum class guts_class { contract_degenerate, safe };

// For an exact k-separation (X, Y) of a k-connected matroid and a non-loop
// e in X, decide whether contracting e collapses the separation. Evaluates
// the three equivalent characterizations and insists they agree.
guts_class guts_coguts_classify(const matroid& m, const separation& sep, int e);

struct two_sep_route {
    removal_op op;         // which wholesale removal of B keeps n
    minor_spec witness;    // spec for n inside the reduced matroid
    subset contract_ok;    // elements of B outside cl(A): contraction keeps n
    subset both_ok;        // elements outside cl(A) and cl*(A): both ops keep n
};
// Route an n-minor past a 2-separation (A, B) with B disjoint from E(n).
two_sep_route route_2sep_minor(const matroid& m, const matroid& n, subset b);

// With B meeting E(n) in exactly one element f that is in no series or
// parallel pair, find e in B \ {f} with both m\e and m/e keeping n.
int route_2sep_one_contact(const matroid& m, const matroid& n, subset b);

struct bixby_result {
    bool contraction_ok = false;  // si(m/e) is 3-connected
    bool deletion_ok = false;     // co(m\e) is 3-connected
};
bixby_result bixby_branch(const matroid& m, int e);

enum class triple_kind { none, triangle, triad, both };
triple_kind classify_triple(const matroid& m, subset t);

// Ordered element sequence whose consecutive triples alternate strictly
// between triangle and triad.
struct fan {
    std::vector<int> elements;
    bool starts_with_triangle = false;
};

// All inclusionwise-maximal fans in canonical orientation, sorted.
std::vector<fan> find_fans(const matroid& m);
// Maximal fans of m whose elements stay inside x.
std::vector<fan> find_fans_within(const matroid& m, subset x);
bool is_fan(const matroid& m, const std::vector<int>& elements);
bool fan_extendable(const matroid& m, const fan& f);

struct element_removal {
    int element = -1;
    removal_op op = removal_op::del;
};

// For a maximal fan of length >= 4 meeting E(n) in at most one element, find
// a fan end whose deletion or contraction is 3-connected with n as minor.
element_removal fan_end_removal(const matroid& m, const matroid& n, const fan& f);

bool is_wheel_or_whirl(const matroid& m);

}  // namespace matroidlab
