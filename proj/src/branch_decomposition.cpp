#include "matroidlab/branch_decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "matroidlab/connectivity.hpp"
#include "matroidlab/errors.hpp"

namespace matroidlab {

namespace {

subset collect_leaves(const bd_node& node, const matroid& m, int& width) {
    if (node.leaf()) return subset::single(node.element);
    if (node.kids.size() != 2) throw std::invalid_argument("malformed decomposition node");
    subset here;
    for (const bd_node& kid : node.kids) {
        subset leaves = collect_leaves(kid, m, width);
        width = std::max(width, lambda(m, leaves));
        here = here | leaves;
    }
    return here;
}

// Trees are grown by attaching each next leaf to an existing edge. Nodes
// 0..n-1 are leaves; internal nodes follow. Adjacency is a flat vector of
// (node, node) edges; at most 2n-3 edges.
struct tree_state {
    const matroid& m;
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<matroid> prefixes;  // m restricted to elements 0..i-1
    int best_width;
    std::vector<std::pair<int, int>> best_edges;

    explicit tree_state(const matroid& mm) : m(mm), n(mm.size()) {
        for (int i = 0; i <= n; ++i)
            prefixes.push_back(m.deleted(m.ground() - subset::full(i)));
        best_width = n + 1;  // above any possible lambda
        best_edges.clear();
    }

    // Displayed leaf sets of every edge of the current partial tree on the
    // first `count` leaves, each taken on the restriction to those leaves.
    int partial_width(int count) const {
        const matroid& sub = prefixes[count];
        int total_nodes = count + std::max(0, count - 2);
        std::vector<std::vector<int>> adj(total_nodes);
        for (auto [a, b] : edges) {
            adj[remap(a, count)].push_back(remap(b, count));
            adj[remap(b, count)].push_back(remap(a, count));
        }
        int w = 0;
        // Displayed set below each edge, via DFS from node of leaf 0 upward.
        std::vector<std::uint32_t> below(total_nodes, 0);
        std::vector<int> order, parent(total_nodes, -1);
        order.reserve(total_nodes);
        order.push_back(0);
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            int u = order[qi];
            for (int v : adj[u])
                if (v != parent[u]) {
                    parent[v] = u;
                    order.push_back(v);
                }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int u = *it;
            if (u < count) below[u] |= std::uint32_t(1) << u;
            if (parent[u] >= 0) {
                below[parent[u]] |= below[u];
                w = std::max(w, lambda(sub, subset(below[u])));
            }
        }
        return w;
    }

    // Internal node ids depend on how many leaves exist; remap node id from
    // the full numbering (leaves 0..n-1, internals n..) to the partial one.
    int remap(int node, int count) const { return node < n ? node : node - n + count; }

    void grow(int next_leaf) {
        if (next_leaf == n) {
            int w = partial_width(n);
            if (best_edges.empty() || w < best_width) {
                best_width = w;
                best_edges = edges;
            }
            return;
        }
        if (next_leaf == 0) {
            edges.emplace_back(0, 1);
            grow(2);
            edges.pop_back();
            return;
        }
        int internal = n + (next_leaf - 2);
        std::size_t count = edges.size();
        for (std::size_t i = 0; i < count; ++i) {
            auto [a, b] = edges[i];
            edges[i] = {a, internal};
            edges.emplace_back(internal, b);
            edges.emplace_back(internal, next_leaf);
            // The partial width, measured in the restriction to the inserted
            // leaves, can only grow as the remaining leaves are placed.
            if (best_edges.empty() || partial_width(next_leaf + 1) < best_width)
                grow(next_leaf + 1);
            edges.pop_back();
            edges.pop_back();
            edges[i] = {a, b};
        }
    }
};

bd_node subtree(const std::vector<std::vector<int>>& adj, int node, int from, int n) {
    bd_node out;
    if (node < n) {
        out.element = node;
        return out;
    }
    for (int v : adj[node])
        if (v != from) out.kids.push_back(subtree(adj, v, node, n));
    return out;
}

}  // namespace

int decomposition_width(const matroid& m, const bd_node& root) {
    int width = 0;
    subset all = collect_leaves(root, m, width);
    if (all != m.ground()) throw std::invalid_argument("decomposition leaves do not match the ground set");
    return width;
}

branch_decomposition branch_width_by_decomposition(const matroid& m) {
    int n = m.size();
    if (n > 12) throw std::invalid_argument("ground set too large for decomposition search");
    if (n == 0) throw std::invalid_argument("empty matroid has no decomposition");
    branch_decomposition out;
    if (n == 1) {
        out.width = 0;
        out.root.element = 0;
        return out;
    }
    tree_state st(m);
    st.grow(0);
    // Rebuild the best tree rooted next to leaf 0.
    int total_nodes = n + std::max(0, n - 2);
    std::vector<std::vector<int>> adj(total_nodes);
    for (auto [a, b] : st.best_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    bd_node left;
    left.element = 0;
    int other = adj[0][0];
    out.root.kids.push_back(left);
    out.root.kids.push_back(subtree(adj, other, 0, n));
    out.width = st.best_width;
    int recheck = decomposition_width(m, out.root);
    if (recheck != out.width) throw invariant_violation("decomposition width mismatch on rebuild");
    return out;
}

}  // namespace matroidlab
