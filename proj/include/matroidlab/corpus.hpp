#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

// Documented linear congruential generator so corpora are reproducible from
// (seed, max_n) alone: state <- state * 1664525 + 1013904223 (mod 2^32).
struct lcg {
    std::uint32_t state = 1;
    std::uint32_t next() {
        state = state * 1664525u + 1013904223u;
        return state;
    }
    int below(int m) { return int(next() % std::uint32_t(m)); }
};

struct corpus_entry {
    std::string name;
    matroid m;
};

matroid k4_graph();
matroid k5_minus_edge();
matroid prism_graph();
// Path 0-1-...-(m-1) plus an apex joined to every path vertex.
matroid fan_graph(int path_vertices);
// Rank-5 GF(3) matroid on 12 elements carrying two skew 3-point lines; the
// smallest host here for order-4 tangles with long lines.
matroid two_line_gf3();

// Deterministic corpus: uniforms, wheels, whirls, named graphs, seeded random
// GF(2)/GF(3) column matroids, and the duals of all of them.
std::vector<corpus_entry> corpus(std::uint32_t seed, int max_n);

}  // namespace matroidlab
