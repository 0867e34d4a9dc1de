#include "matroidlab/removal.hpp"

#include <algorithm>
#include <stdexcept>

#include "matroidlab/errors.hpp"

namespace matroidlab {

tangle dual_tangle(const tangle& t) { return tangle{t.host.dual(), t.order, t.members}; }

namespace {

subset minor_ground_in(const matroid& host, const matroid& n) {
    return host.indices_of(n.labels());
}

bool removal_keeps(const matroid& m, const matroid& n, subset x, removal_op op) {
    matroid next = op == removal_op::del ? m.deleted(x) : m.contracted(x);
    return is_3_connected(next) && has_minor(next, n).has_value();
}

}  // namespace

element_removal remove_on_line(const matroid& m, const tangle& t, const matroid& n, subset line,
                               int f) {
    if (!is_3_connected(m)) throw std::invalid_argument("matroid is not 3-connected");
    if (!(loops(n) | coloops(n)).empty()) throw std::invalid_argument("minor has loops or coloops");
    if (t.order < 3) throw std::invalid_argument("tangle order below 3");
    if (!line.contains(f)) throw std::invalid_argument("pivot element not on the line");
    if (tangle_rank(t, line) != 2 || !tangle_closed(t, line) || line.size() < 3)
        throw std::invalid_argument("set is not a long line of the tangle matroid");
    subset n_ground = minor_ground_in(m, n);
    if ((line.without(f)).intersects(n_ground))
        throw std::invalid_argument("line meets the minor outside the pivot");

    // Fan case first: a maximal fan of length >= 4 inside the line has a
    // removable end.
    if (!is_wheel_or_whirl(m)) {
        for (const fan& fn : find_fans(m)) {
            if (fn.elements.size() < 4) continue;
            subset fset = from_elements(fn.elements);
            if (!line.contains(fset)) continue;
            for (int end : {fn.elements.front(), fn.elements.back()}) {
                if (end == f || n_ground.contains(end)) continue;
                for (removal_op op : {removal_op::del, removal_op::contract})
                    if (removal_keeps(m, n, subset::single(end), op)) return {end, op};
            }
        }
    }
    for (int e : line.without(f)) {
        if (n_ground.contains(e)) continue;
        for (removal_op op : {removal_op::del, removal_op::contract})
            if (removal_keeps(m, n, subset::single(e), op)) return {e, op};
    }
    throw invariant_violation("no removable element found on a long line");
}

grow_result grow_removal_set(const matroid& m, const tangle& t, const matroid& n, int target) {
    if (!is_3_connected(m)) throw std::invalid_argument("matroid is not 3-connected");
    if (!(loops(n) | coloops(n)).empty()) throw std::invalid_argument("minor has loops or coloops");
    subset n_ground = minor_ground_in(m, n);
    int t_rank = tangle_rank(t, n_ground);

    grow_result out;
    while (int((out.contract_set | out.delete_set).size()) < target) {
        subset removed = out.contract_set | out.delete_set;
        subset hull = tangle_closure(t, n_ground | removed);
        matroid cur = m.minor({out.contract_set, out.delete_set});
        bool stepped = false;
        for (int e : m.ground() - hull) {
            int local = cur.index_of(m.label_of(e));
            for (removal_op op : {removal_op::del, removal_op::contract}) {
                if (!removal_keeps(cur, n, subset::single(local), op)) continue;
                int before = tangle_rank(t, n_ground | removed);
                int after = tangle_rank(t, n_ground | removed.with(e));
                if (after != before + 1)
                    throw invariant_violation("tangle rank did not grow by one on a closure-external step");
                if (op == removal_op::del)
                    out.delete_set = out.delete_set.with(e);
                else
                    out.contract_set = out.contract_set.with(e);
                stepped = true;
                break;
            }
            if (stepped) break;
        }
        if (!stepped) {
            if (t.order >= std::max(6, 2 * target + t_rank + 1))
                throw invariant_violation("growth stalled although the order bound holds");
            out.reached = int((out.contract_set | out.delete_set).size()) >= target;
            return out;
        }
    }
    out.reached = true;
    return out;
}

matroid simultaneous_fan_removal(const matroid& m, const tangle& t, const matroid& n,
                                 const std::vector<subset>& lines, const std::vector<fan>& fans,
                                 const std::vector<int>& ends) {
    std::size_t r = lines.size();
    if (fans.size() != r || ends.size() != r) throw std::invalid_argument("mismatched argument lists");
    subset all_lines, n_ground = minor_ground_in(m, n);
    for (std::size_t i = 0; i < r; ++i) {
        if (lines[i].intersects(n_ground)) throw std::invalid_argument("line meets the minor");
        if (fans[i].elements.size() < 4) throw std::invalid_argument("fan too short");
        if (!is_fan(m, fans[i].elements)) throw std::invalid_argument("sequence is not a fan");
        if (fan_extendable(m, fans[i])) throw std::invalid_argument("fan is not maximal");
        if (!lines[i].contains(from_elements(fans[i].elements)))
            throw std::invalid_argument("fan leaves its line");
        if (ends[i] != fans[i].elements.front() && ends[i] != fans[i].elements.back())
            throw std::invalid_argument("chosen element is not a fan end");
        if (!removal_keeps(m, n, subset::single(ends[i]), removal_op::del))
            throw std::invalid_argument("single deletion is not 3-connected with the minor");
        all_lines = all_lines | lines[i];
    }
    if (tangle_rank(t, all_lines) != int(2 * r))
        throw std::invalid_argument("lines are not pairwise skew");

    // Peel ends one at a time; the surviving lines must stay closed in the
    // inherited tangle matroid at every step.
    matroid cur = m;
    tangle cur_t = t;
    for (std::size_t step = r; step-- > 0;) {
        int end_local = cur.index_of(m.label_of(ends[step]));
        cur = cur.deleted(subset::single(end_local));
        cur_t = inherit_tangle(cur_t, {subset{}, subset::single(end_local)});
        for (std::size_t i = 0; i < step; ++i) {
            subset line_local;
            for (int e : lines[i]) line_local = line_local.with(cur.index_of(m.label_of(e)));
            if (!tangle_closed(cur_t, line_local))
                throw invariant_violation("a skew line lost closure after a fan-end deletion");
        }
    }
    subset removed;
    for (int e : ends) removed = removed.with(e);
    if (int(removed.size()) != int(r)) throw std::invalid_argument("fan ends are not distinct");
    if (!is_3_connected(cur) || !has_minor(cur, n))
        throw invariant_violation("simultaneous fan-end deletion broke 3-connectivity or the minor");
    return cur;
}

subset balance_extract(const matroid& m, const tangle& t, subset c, subset d, int k) {
    if (int(c.size()) - int(d.size()) < k) throw std::invalid_argument("insufficient balance");
    restoration_graph g = build_restoration_graph(m, t, c, d);

    subset cover;
    for (int dv : d - g.privileged)
        if ((g.adj[dv] & cover).empty()) {
            subset cands = g.adj[dv] & c;
            if (cands.empty()) throw invariant_violation("non-privileged delete vertex has no neighbor");
            cover = cover.with(cands.lowest());
        }
    for (int cv : cover) {  // minimality pass
        subset trial = cover.without(cv);
        bool ok = true;
        for (int dv : d - g.privileged)
            if ((g.adj[dv] & trial).empty()) ok = false;
        if (ok) cover = trial;
    }
    subset keep = c - cover;
    if (!restorable(g, cover | d))
        throw invariant_violation("cover plus delete side is not restorable");
    if (!is_3_connected(m.contracted(keep)))
        throw invariant_violation("extracted contraction set is not 3-connected");
    if (int(keep.size()) < k) throw invariant_violation("extracted set smaller than requested");
    return keep;
}

std::vector<std::pair<int, int>> max_induced_matching(const restoration_graph& g) {
    std::vector<std::pair<int, int>> cand;
    for (auto [cv, dv] : g.edges)
        if (!g.privileged.contains(cv) && !g.privileged.contains(dv)) cand.emplace_back(cv, dv);
    std::sort(cand.begin(), cand.end());
    std::vector<std::pair<int, int>> best, cur;

    auto compatible = [&](std::pair<int, int> e) {
        for (auto [cv, dv] : cur) {
            if (e.first == cv || e.second == dv) return false;
            if (g.adj[e.first].contains(dv) || g.adj[cv].contains(e.second)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (cur.size() + (cand.size() - i) <= best.size()) return;  // cannot improve
        if (i == cand.size()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (compatible(cand[i])) {
            cur.push_back(cand[i]);
            self(self, i + 1);
            cur.pop_back();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return best;
}

vertex_partition compute_vertex_partition(const restoration_graph& g) {
    vertex_partition vp;
    subset c = g.contract_side, d = g.delete_side;
    vp.balance = c.size() - d.size();
    vp.p1 = g.privileged & c;
    vp.p2 = g.privileged & d;
    for (int cv : c - vp.p1)
        if (vp.p2.contains(g.adj[cv])) vp.q1 = vp.q1.with(cv);
    for (int dv : d - vp.p2)
        if (vp.p1.contains(g.adj[dv])) vp.q2 = vp.q2.with(dv);
    subset cs = c - vp.p1 - vp.q1, ds = d - vp.p2 - vp.q2;
    subset core = cs | ds;
    for (int v : core)
        if ((g.adj[v] & core).empty()) throw invariant_violation("core vertex is isolated");

    // Maximal matching of the core, greedy over sorted edges.
    subset matched;
    for (auto [cv, dv] : g.edges) {
        if (!cs.contains(cv) || !ds.contains(dv)) continue;
        if (matched.contains(cv) || matched.contains(dv)) continue;
        vp.matching.emplace_back(cv, dv);
        matched = matched.with(cv).with(dv);
    }
    subset rc = matched & cs, rd = matched & ds;

    auto neighborhood = [&](subset s, subset side) { return g.neighbors(s) & side; };
    auto cover_then_expand = [&](subset uncovered, subset pool, subset other_side, subset& s_min,
                                 subset& s_exp) {
        for (int v : uncovered)
            if ((g.adj[v] & s_min).empty()) {
                subset cands = g.adj[v] & pool;
                if (cands.empty()) throw invariant_violation("unmatched core vertex has no matched neighbor");
                s_min = s_min.with(cands.lowest());
            }
        for (int v : s_min) {  // minimality pass
            subset trial = s_min.without(v);
            bool ok = true;
            for (int u : uncovered)
                if ((g.adj[u] & trial).empty()) ok = false;
            if (ok) s_min = trial;
        }
        if (int(neighborhood(s_min, other_side).size()) < 2 * int(s_min.size()))
            throw invariant_violation("minimal cover misses the doubled neighborhood bound");
        s_exp = s_min;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v : pool - s_exp) {
                subset trial = s_exp.with(v);
                if (int(neighborhood(trial, other_side).size()) >= 2 * int(trial.size())) {
                    s_exp = trial;
                    grew = true;
                }
            }
        }
    };
    cover_then_expand(ds - rd, rc, ds, vp.s1, vp.s1x);
    vp.u2 = neighborhood(vp.s1x, ds);
    vp.t2 = rd - vp.u2;
    cover_then_expand(cs - rc, rd, cs, vp.s2, vp.s2x);
    vp.u1 = neighborhood(vp.s2x, cs);
    vp.t1 = rc - vp.u1;

    if (!vp.u1.contains(cs - rc) || !vp.u2.contains(ds - rd))
        throw invariant_violation("expanded covers fail to absorb the unmatched core");
    if ((vp.p1 | vp.q1 | vp.u1 | vp.t1) != c || (vp.p2 | vp.q2 | vp.u2 | vp.t2) != d)
        throw invariant_violation("vertex partition does not cover the sides");
    return vp;
}

namespace {

struct boost_pair {
    int c_local = -1, d_local = -1;  // matched pair, in restored-minor indices
    subset line;                     // long line through the pair
    fan f;                           // maximal fan with the pair internal
    std::optional<int> del_end, con_end;
};

removal_result boost_directed(const matroid& m, const tangle& t, const matroid& n, subset c,
                              subset d, int k);

}  // namespace

removal_result induced_matching_boost(const matroid& m, const tangle& t, const matroid& n,
                                      subset c, subset d, int k) {
    if (k <= 0) return {subset{}, removal_op::del};
    if (d.size() > c.size()) {
        removal_result res = boost_directed(m.dual(), dual_tangle(t), n.dual(), d, c, k);
        res.op = res.op == removal_op::del ? removal_op::contract : removal_op::del;
        return res;
    }
    return boost_directed(m, t, n, c, d, k);
}

namespace {

removal_result boost_directed(const matroid& m, const tangle& t, const matroid& n, subset c,
                              subset d, int k) {
    subset n_ground = minor_ground_in(m, n);
    int t_rank = tangle_rank(t, n_ground);
    if (tangle_rank(t, n_ground | c | d) != t_rank + int((c | d).size()))
        throw std::invalid_argument("removed set is not skew to the minor in the tangle matroid");
    int r = int(c.size()) - int(d.size());

    restoration_graph g = build_restoration_graph(m, t, c, d);
    std::vector<std::pair<int, int>> matching = max_induced_matching(g);
    if (int(matching.size()) < 2 * k) throw std::invalid_argument("matching hypothesis unmet");

    subset vh;
    for (auto [cv, dv] : matching) vh = vh.with(cv).with(dv);
    matroid restored = restore(m, c, d, vh);
    if (!is_3_connected(restored)) throw invariant_violation("restored matching vertex set lost 3-connectivity");
    minor_spec residual{c - vh, d - vh};
    tangle rt = inherit_tangle(t, residual);

    std::vector<boost_pair> pairs;
    std::vector<fan> restored_fans = find_fans(restored);
    subset line_union;
    for (auto [cv, dv] : matching) {
        boost_pair bp;
        bp.c_local = restored.index_of(m.label_of(cv));
        bp.d_local = restored.index_of(m.label_of(dv));
        if (is_3_connected(restored.contracted(subset::single(bp.c_local))) ||
            is_3_connected(restored.deleted(subset::single(bp.d_local))))
            throw invariant_violation("matched pair lost its blocking role after restoration");
        for (const fan& fn : restored_fans) {
            if (fn.elements.size() < 4) continue;
            auto pos_c = std::find(fn.elements.begin(), fn.elements.end(), bp.c_local);
            auto pos_d = std::find(fn.elements.begin(), fn.elements.end(), bp.d_local);
            if (pos_c == fn.elements.end() || pos_d == fn.elements.end()) continue;
            if (pos_c == fn.elements.begin() || pos_c + 1 == fn.elements.end()) continue;
            if (pos_d == fn.elements.begin() || pos_d + 1 == fn.elements.end()) continue;
            bp.f = fn;
            break;
        }
        if (bp.f.elements.empty())
            throw invariant_violation("matched pair is not internal to a fan of length at least 4");
        bp.line = tangle_closure(rt, subset::of({bp.c_local, bp.d_local}));
        if (tangle_rank(rt, bp.line) != 2 || bp.line.size() < 3)
            throw invariant_violation("matched pair does not span a long line");
        if (!bp.line.contains(from_elements(bp.f.elements)))
            throw invariant_violation("fan escapes the long line of its pair");
        if (bp.line.intersects(minor_ground_in(restored, n)))
            throw invariant_violation("long line of a matched pair meets the minor");
        for (int end : {bp.f.elements.front(), bp.f.elements.back()}) {
            if (minor_ground_in(restored, n).contains(end)) continue;
            if (!bp.del_end && removal_keeps(restored, n, subset::single(end), removal_op::del))
                bp.del_end = end;
            if (!bp.con_end && removal_keeps(restored, n, subset::single(end), removal_op::contract))
                bp.con_end = end;
        }
        if (!bp.del_end && !bp.con_end)
            throw invariant_violation("no fan end of a matched pair admits a clean removal");
        line_union = line_union | bp.line;
        pairs.push_back(std::move(bp));
    }
    if (tangle_rank(rt, line_union) != int(2 * pairs.size()))
        throw invariant_violation("long lines of the matching are not pairwise skew");

    int del_count = 0, con_count = 0;
    for (const auto& bp : pairs) {
        if (bp.del_end) ++del_count;
        if (bp.con_end) ++con_count;
    }
    // Pigeonhole: with at least 2k matched pairs one side must be rich enough.
    bool use_delete;
    if (del_count >= k + r)
        use_delete = true;
    else if (con_count >= k - r)
        use_delete = false;
    else
        throw invariant_violation("neither removal direction reaches the pigeonhole bound");

    matroid work = use_delete ? restored : restored.dual();
    matroid n_work = use_delete ? n : n.dual();
    tangle rt_work = use_delete ? rt : dual_tangle(rt);
    std::vector<subset> lines;
    std::vector<fan> fans;
    std::vector<int> ends;
    for (const auto& bp : pairs) {
        std::optional<int> end = use_delete ? bp.del_end : bp.con_end;
        if (!end) continue;
        lines.push_back(bp.line);
        fan f = bp.f;
        if (!use_delete) f.starts_with_triangle = !f.starts_with_triangle;
        fans.push_back(f);
        ends.push_back(*end);
    }
    simultaneous_fan_removal(work, rt_work, n_work, lines, fans, ends);

    // New configuration over the host: matched pairs gone, chosen ends join
    // the single-operation side.
    subset ends_host;
    for (int e : ends) ends_host = ends_host.with(m.index_of(restored.label_of(e)));
    subset c2 = c - vh, d2 = d - vh;
    if (use_delete)
        d2 = d2 | ends_host;
    else
        c2 = c2 | ends_host;
    if (tangle_rank(t, n_ground | c2 | d2) != t_rank + int((c2 | d2).size()))
        throw invariant_violation("new configuration lost the tangle rank bookkeeping");
    if (!is_3_connected(m.minor({c2, d2})) || !has_minor(m.minor({c2, d2}), n))
        throw invariant_violation("new configuration is not 3-connected with the minor");

    subset result;
    removal_op op;
    if (use_delete) {
        result = balance_extract(m.dual(), dual_tangle(t), d2, c2, k);
        op = removal_op::del;
        if (!is_3_connected(m.deleted(result))) throw invariant_violation("extracted deletion set failed");
    } else {
        result = balance_extract(m, t, c2, d2, k);
        op = removal_op::contract;
    }
    if (!removal_keeps(m, n, result, op))
        throw invariant_violation("extracted set is not 3-connected with the minor");
    if (tangle_rank(t, n_ground | result) != t_rank + int(result.size()))
        throw invariant_violation("extracted set lost the tangle rank bookkeeping");
    return {result, op};
}

}  // namespace

namespace {

// Try to certify a set of exactly k elements inside a verified larger one.
std::optional<removal_result> shrink_to_k(const matroid& m, const tangle& t, const matroid& n,
                                          subset big, removal_op op, int k) {
    subset n_ground = minor_ground_in(m, n);
    int t_rank = tangle_rank(t, n_ground);
    std::vector<subset> cands;
    std::uint32_t bits = big.bits();
    for (std::uint32_t s = bits;; s = (s - 1) & bits) {
        if (std::popcount(s) == k) cands.push_back(subset(s));
        if (s == 0) break;
    }
    std::sort(cands.begin(), cands.end(), lex_less);
    for (subset x : cands) {
        if (!removal_keeps(m, n, x, op)) continue;
        if (tangle_rank(t, n_ground | x) != t_rank + k)
            throw invariant_violation("subset of a skew set lost the tangle rank bookkeeping");
        return removal_result{x, op};
    }
    return std::nullopt;
}

}  // namespace

removal_outcome find_removal_set(const removal_context& ctx) {
    const matroid& m = ctx.m;
    const tangle& t = ctx.t;
    int k = ctx.k;
    if (!is_3_connected(m)) throw std::invalid_argument("matroid is not 3-connected");
    matroid n = m.minor(ctx.n_spec);
    if (!(loops(n) | coloops(n)).empty()) throw std::invalid_argument("minor has loops or coloops");
    if (k == 0) return {true, {subset{}, removal_op::del}, ""};

    grow_result grown = grow_removal_set(m, t, n, 10 * k - 7);
    subset c = grown.contract_set, d = grown.delete_set;

    auto attempt = [&](subset c2, subset d2) -> std::optional<removal_result> {
        int bal = int(c2.size()) - int(d2.size());
        if (bal >= k) {
            subset big = balance_extract(m, t, c2, d2, k);
            return shrink_to_k(m, t, n, big, removal_op::contract, k);
        }
        if (-bal >= k) {
            subset big = balance_extract(m.dual(), dual_tangle(t), d2, c2, k);
            return shrink_to_k(m, t, n, big, removal_op::del, k);
        }
        return std::nullopt;
    };

    if (auto res = attempt(c, d)) return {true, *res, ""};
    if ((c | d).empty())
        return {false, {}, "no growth steps available at this tangle order"};

    restoration_graph g = build_restoration_graph(m, t, c, d);
    vertex_partition vp = compute_vertex_partition(g);

    std::vector<std::pair<subset, subset>> moves = {
        {vp.p1, subset{}},
        {subset{}, vp.p2},
        {vp.s1x, vp.u2},
        {vp.u1, vp.s2x},
        {vp.s1x | vp.p1, vp.u2 | vp.q2 | vp.p2},
        {vp.u1 | vp.q1 | vp.p1, vp.s2x | vp.p2},
    };
    for (auto [zc, zd] : moves) {
        subset z = zc | zd;
        if (z.empty()) continue;
        if (!restorable(g, z)) throw invariant_violation("pipeline restoration move is not restorable");
        if (auto res = attempt(c - zc, d - zd)) return {true, *res, ""};
    }

    if (int(max_induced_matching(g).size()) >= 2 * k) {
        removal_result big = induced_matching_boost(m, t, n, c, d, k);
        if (auto res = shrink_to_k(m, t, n, big.set, big.op, k)) return {true, *res, ""};
    }
    return {false, {}, "pipeline exhausted below the requested size"};
}

std::optional<removal_result> brute_force_oracle(const matroid& m, const minor_spec& n_spec,
                                                 int k) {
    matroid n = m.minor(n_spec);
    subset removed = m.ground() - minor_ground_in(m, n);
    if (k > removed.size()) return std::nullopt;
    std::vector<subset> cands;
    std::uint32_t bits = removed.bits();
    for (std::uint32_t s = bits;; s = (s - 1) & bits) {
        if (std::popcount(s) == k) cands.push_back(subset(s));
        if (s == 0) break;
    }
    std::sort(cands.begin(), cands.end(), lex_less);
    for (subset x : cands)
        for (removal_op op : {removal_op::del, removal_op::contract})
            if (removal_keeps(m, n, x, op)) return removal_result{x, op};
    return std::nullopt;
}

std::optional<element_removal> splitter_check(const matroid& m, const matroid& n) {
    if (!is_3_connected(m)) throw std::invalid_argument("matroid is not 3-connected");
    if (!is_3_connected(n)) throw std::invalid_argument("minor is not 3-connected");
    if (n.size() >= m.size()) throw std::invalid_argument("minor is not proper");
    for (int e : m.ground() - minor_ground_in(m, n))
        for (removal_op op : {removal_op::del, removal_op::contract})
            if (removal_keeps(m, n, subset::single(e), op)) return element_removal{e, op};
    return std::nullopt;
}

std::optional<element_removal> splitter_check_isomorphic(const matroid& m, const matroid& n) {
    if (!is_3_connected(m)) throw std::invalid_argument("matroid is not 3-connected");
    if (!is_3_connected(n)) throw std::invalid_argument("minor is not 3-connected");
    if (n.size() >= m.size()) throw std::invalid_argument("minor is not proper");
    for (int e : m.ground())
        for (removal_op op : {removal_op::del, removal_op::contract}) {
            matroid next = op == removal_op::del ? m.deleted(subset::single(e))
                                                 : m.contracted(subset::single(e));
            if (is_3_connected(next) && has_minor_isomorphic(next, n)) return element_removal{e, op};
        }
    return std::nullopt;
}

}  // namespace matroidlab
