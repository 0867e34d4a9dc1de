#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidlab/corpus.hpp"
#include "matroidlab/removal.hpp"

namespace matroidlab {

struct check_result {
    std::string name;
    long long instances = 0;   // hypothesis-satisfying cases exercised
    long long cells = 0;       // individual assertions evaluated
    long long violations = 0;
    std::string detail;        // first violation, when any
};

struct verify_options {
    std::uint32_t seed = 1;
    int max_n = 8;
    bool core = true;
    bool connectivity = true;
    bool tangle = true;
    bool removal = true;
};

// Run every structural check of the selected suites over the deterministic
// corpus. Tangle-enumerating sweeps restrict themselves to members with at
// most 8 elements; subset sweeps use the full corpus.
std::vector<check_result> run_verify(const verify_options& opt);

// First tangle of maximum order, if the order is positive.
std::optional<tangle> max_order_tangle(const matroid& m);

// Shared instance pool: tangle-independent removed pairs (C, D) with a
// 3-connected minor, used by the restoration checks and the acceptance suite.
struct removal_instance {
    std::string name;
    matroid m;
    tangle t;
    subset c, d;
};
std::vector<removal_instance> removal_instances(const std::vector<corpus_entry>& members,
                                                int n_cap, int size_cap, int per_member);

}  // namespace matroidlab
