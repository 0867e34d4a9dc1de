#include "matroidlab/corpus.hpp"

#include <stdexcept>

namespace matroidlab {

matroid k4_graph() {
    return matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

matroid k5_minus_edge() {
    return matroid::graphic(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

matroid prism_graph() {
    return matroid::graphic(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

matroid fan_graph(int path_vertices) {
    if (path_vertices < 2) throw std::invalid_argument("fan graph needs a path");
    std::vector<std::pair<int, int>> edges;
    int apex = path_vertices;
    for (int i = 0; i + 1 < path_vertices; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < path_vertices; ++i) edges.emplace_back(i, apex);
    return matroid::graphic(path_vertices + 1, std::move(edges));
}

matroid two_line_gf3() {
    // Columns over GF(3)^5: two triangles in skew planes plus six generic fill
    // columns keeping every other 3-set at rank 3.
    std::vector<std::vector<int>> rows = {
        // c0 c1 c2  c3 c4 c5  c6 c7 c8 c9 c10 c11
        {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 1},
        {0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 2},
        {0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 1, 1},
        {0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 2, 2},
        {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
    };
    return matroid::linear(3, rows);
}

std::vector<corpus_entry> corpus(std::uint32_t seed, int max_n) {
    if (max_n < 1 || max_n > 12) throw std::invalid_argument("corpus size cap must be within 1..12");
    std::vector<corpus_entry> base;
    for (int n = 1; n <= max_n; ++n)
        for (int r = 0; r <= n; ++r)
            base.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")",
                            matroid::uniform(r, n)});
    for (int r = 2; 2 * r <= max_n; ++r) {
        base.push_back({"wheel" + std::to_string(r), matroid::wheel(r)});
        base.push_back({"whirl" + std::to_string(r), matroid::whirl(r)});
    }
    if (max_n >= 6) base.push_back({"K4", k4_graph()});
    if (max_n >= 9) base.push_back({"K5-e", k5_minus_edge()});
    if (max_n >= 9) base.push_back({"prism", prism_graph()});
    for (int p = 3; 2 * p - 1 <= max_n; ++p)
        base.push_back({"fan" + std::to_string(p), fan_graph(p)});
    if (max_n >= 12) base.push_back({"two-line-gf3", two_line_gf3()});
    for (int n = 4; n <= max_n; ++n)
        for (int field : {2, 3}) {
            lcg gen{seed * 1000003u + std::uint32_t(n) * 101u + std::uint32_t(field)};
            for (int burn = 0; burn < 8; ++burn) gen.next();
            int rows = (n + 1) / 2;
            std::vector<std::vector<int>> mat(rows, std::vector<int>(n));
            for (auto& row : mat)
                for (int& v : row) v = gen.below(field);
            base.push_back({"gf" + std::to_string(field) + "-n" + std::to_string(n),
                            matroid::linear(field, std::move(mat))});
        }

    std::vector<corpus_entry> out;
    out.reserve(base.size() * 2);
    for (auto& e : base) out.push_back(e);
    for (auto& e : base) out.push_back({"dual(" + e.name + ")", e.m.dual()});
    return out;
}

}  // namespace matroidlab
