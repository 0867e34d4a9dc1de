#include "matroidlab/restoration.hpp"

#include <stdexcept>

#include "matroidlab/errors.hpp"

namespace matroidlab {

matroid restore(const matroid& m, subset c, subset d, subset z) {
    if (c.intersects(d)) throw std::invalid_argument("contract and delete sets overlap");
    if (!(c | d).contains(z)) throw std::invalid_argument("restored set not within the removed sets");
    return m.minor({c - z, d - z});
}

restoration_graph build_restoration_graph(const matroid& m, const tangle& t, subset c, subset d) {
    if (c.intersects(d)) throw std::invalid_argument("contract and delete sets overlap");
    if (!is_3_connected(m.minor({c, d}))) throw std::invalid_argument("base minor is not 3-connected");
    if (!tangle_independent(t, c | d))
        throw std::invalid_argument("removed set is not tangle-independent");

    restoration_graph g;
    g.contract_side = c;
    g.delete_side = d;
    g.adj.assign(m.size(), subset{});
    for (int v : c | d)
        if (is_3_connected(restore(m, c, d, subset::single(v)))) g.privileged = g.privileged.with(v);
    for (int cv : c)
        for (int dv : d)
            if (is_3_connected(restore(m, c, d, subset::of({cv, dv})))) {
                g.edges.emplace_back(cv, dv);
                g.adj[cv] = g.adj[cv].with(dv);
                g.adj[dv] = g.adj[dv].with(cv);
            }
    for (int v : (c | d) - g.privileged)
        if (g.adj[v].empty())
            throw invariant_violation("restoration graph has an isolated non-privileged vertex");
    return g;
}

bool restorable(const restoration_graph& g, subset s) {
    if (!(g.contract_side | g.delete_side).contains(s))
        throw std::invalid_argument("set not within the removed sets");
    for (int v : s - g.privileged)
        if ((g.adj[v] & s).empty()) return false;
    return true;
}

}  // namespace matroidlab
