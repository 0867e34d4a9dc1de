#include "matroidlab/verify.hpp"

#include <algorithm>
#include <map>

#include "matroidlab/branch_decomposition.hpp"
#include "matroidlab/errors.hpp"

namespace matroidlab {

namespace {

constexpr int tangle_n_cap = 8;

struct recorder {
    check_result* r;
    void instance() { ++r->instances; }
    void check(bool ok, const std::string& what) {
        ++r->cells;
        if (!ok) {
            ++r->violations;
            if (r->detail.empty()) r->detail = what;
        }
    }
    // Run a callable whose internal asserts throw invariant_violation.
    template <class F>
    void guarded(F&& f, const std::string& what) {
        ++r->cells;
        try {
            f();
        } catch (const invariant_violation& e) {
            ++r->violations;
            if (r->detail.empty()) r->detail = what + ": " + e.what();
        }
    }
};

struct suite {
    const verify_options& opt;
    std::vector<corpus_entry> members;
    std::vector<check_result> results;

    // Lazy caches keyed by member index (members of size <= tangle_n_cap only).
    std::map<std::size_t, int> width_cache;
    std::map<std::size_t, std::vector<tangle>> tangle_cache;  // all orders 1..bw

    explicit suite(const verify_options& o) : opt(o), members(corpus(o.seed, o.max_n)) {}

    recorder start(const std::string& name) {
        results.push_back(check_result{name, 0, 0, 0, ""});
        return recorder{&results.back()};
    }

    int width_of(std::size_t i) {
        auto it = width_cache.find(i);
        if (it != width_cache.end()) return it->second;
        int w = branch_width(members[i].m);
        width_cache[i] = w;
        return w;
    }

    const std::vector<tangle>& tangles_of(std::size_t i) {
        auto it = tangle_cache.find(i);
        if (it != tangle_cache.end()) return it->second;
        std::vector<tangle> all;
        int bw = width_of(i);
        for (int order = 1; order <= bw; ++order)
            for (tangle& t : enumerate_tangles(members[i].m, order)) all.push_back(std::move(t));
        return tangle_cache[i] = std::move(all);
    }

    bool small(std::size_t i) const { return members[i].m.size() <= tangle_n_cap; }

    void run_core();
    void run_connectivity();
    void run_tangle();
    void run_removal();
};

std::vector<minor_spec> bipartitions(subset s, std::size_t cap) {
    std::vector<minor_spec> out;
    std::uint32_t bits = s.bits();
    std::uint32_t c = 0;
    for (;;) {
        out.push_back({subset(c), s - subset(c)});
        if (out.size() >= cap || c == bits) break;
        c = (c - bits) & bits;
    }
    return out;
}

bool clean(const matroid& n) { return (loops(n) | coloops(n)).empty(); }

subset ground_of(const matroid& host, const matroid& n) { return host.indices_of(n.labels()); }

// Pairs of long lines with tangle rank 4: removing an element of one by a
// 3-connectivity-preserving operation must leave the other closed in the
// inherited tangle matroid.
void check_skew_lines(recorder& r, const std::string& name, const tangle& t) {
    const matroid& m = t.host;
    std::vector<subset> lines = long_lines(t);
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = 0; b < lines.size(); ++b) {
            if (a == b || tangle_rank(t, lines[a] | lines[b]) != 4) continue;
            for (int e : lines[a])
                for (removal_op op : {removal_op::del, removal_op::contract}) {
                    matroid next = op == removal_op::del ? m.deleted(subset::single(e))
                                                         : m.contracted(subset::single(e));
                    if (!is_3_connected(next)) continue;
                    minor_spec spec = op == removal_op::del
                                          ? minor_spec{subset{}, subset::single(e)}
                                          : minor_spec{subset::single(e), subset{}};
                    r.instance();
                    try {
                        tangle inh = inherit_tangle(t, spec);
                        subset far;
                        for (int v : lines[b]) far = far.with(next.index_of(m.label_of(v)));
                        r.check(tangle_closed(inh, far), name + ": far line lost closure");
                    } catch (const invariant_violation& e2) {
                        r.check(false, name + ": inherited tangle invalid: " + e2.what());
                    }
                }
        }
}

// ---------------------------------------------------------------- core

void suite::run_core() {
    {
        recorder r = start("rank-axioms");
        for (const auto& [name, m] : members) {
            r.instance();
            int n = m.size();
            std::uint32_t top = subset::full(n).bits();
            r.check(m.rank(subset{}) == 0, name + ": rank of the empty set");
            for (std::uint32_t x = 0; x <= top; ++x) {
                subset s(x);
                int rs = m.rank(s);
                r.check(rs <= s.size(), name + ": rank exceeds size on " + s.to_string());
                for (int e : m.ground() - s) {
                    int re = m.rank(s.with(e));
                    r.check(re >= rs && re <= rs + 1, name + ": unit increase on " + s.to_string());
                }
                if (top == 0) break;
            }
            for (std::uint32_t x = 0; x <= top; ++x) {
                for (std::uint32_t y = x; y <= top; ++y) {
                    r.check(m.rank(subset(x)) + m.rank(subset(y)) >=
                                m.rank(subset(x | y)) + m.rank(subset(x & y)),
                            name + ": submodularity");
                    if (y == top) break;
                }
                if (x == top) break;
            }
        }
    }
    {
        recorder r = start("dual-involution");
        for (const auto& [name, m] : members) {
            r.instance();
            r.check(same_rank_function(m, m.dual().dual()), name + ": double dual changed ranks");
        }
    }
    {
        recorder r = start("closure-coclosure-complement");
        for (const auto& [name, m] : members) {
            r.instance();
            int n = m.size();
            for (int e = 0; e < n; ++e) {
                subset rest = m.ground().without(e);
                std::uint32_t bits = rest.bits();
                std::uint32_t a = 0;
                for (;;) {
                    subset sa(a), sb = rest - sa;
                    bool in_cl = m.rank(sa.with(e)) == m.rank(sa);
                    bool in_cocl = m.corank(sb.with(e)) == m.corank(sb);
                    r.check(in_cl != in_cocl, name + ": closure/coclosure complement at " +
                                                  std::to_string(e) + " with " + sa.to_string());
                    if (a == bits) break;
                    a = (a - bits) & bits;
                }
            }
        }
    }
    {
        recorder r = start("exact-minor-reproduction");
        lcg gen{opt.seed ^ 0x9e3779b9u};
        for (const auto& [name, m] : members) {
            if (m.size() > tangle_n_cap || m.size() < 2) continue;
            for (int trial = 0; trial < 3; ++trial) {
                subset removed;
                int want = 1 + gen.below(std::min(3, m.size() - 1));
                while (removed.size() < want) removed = removed.with(gen.below(m.size()));
                subset contract(gen.next() & removed.bits());
                matroid n = m.minor({contract, removed - contract});
                r.instance();
                auto spec = has_minor(m, n);
                r.check(spec.has_value(), name + ": existing minor not found");
                if (spec)
                    r.check(same_labeled_matroid(m.minor(*spec), n),
                            name + ": reported spec does not reproduce the minor");
            }
        }
    }
    {
        recorder r = start("relaxation-rank-step");
        for (int spokes = 2; 2 * spokes <= opt.max_n; ++spokes) {
            matroid w = matroid::wheel(spokes);
            subset rim = subset(((std::uint32_t(1) << spokes) - 1) << spokes);
            matroid relaxed = w.relaxed(rim);
            r.instance();
            std::uint32_t top = subset::full(w.size()).bits();
            for (std::uint32_t x = 0; x <= top; ++x) {
                int expect = w.rank(subset(x)) + (subset(x) == rim ? 1 : 0);
                r.check(relaxed.rank(subset(x)) == expect, "wheel relaxation changed a foreign rank");
            }
        }
        if (opt.max_n >= 4) {
            r.instance();
            r.check(same_rank_function(matroid::whirl(2), matroid::uniform(2, 4)),
                    "rank-2 whirl is not the 4-point line");
        }
    }
    {
        recorder r = start("minor-promotion-bound");
        lcg gen{opt.seed ^ 0x2545f491u};
        for (const auto& [name, m] : members) {
            if (m.size() > tangle_n_cap || m.size() < 3 || !is_connected(m)) continue;
            for (int trial = 0; trial < 4; ++trial) {
                subset removed;
                int want = 1 + gen.below(std::min(4, m.size() - 1));
                while (removed.size() < want) removed = removed.with(gen.below(m.size()));
                subset contract(gen.next() & removed.bits());
                minor_spec spec{contract, removed - contract};
                matroid n = m.minor(spec);
                if (clean(n)) continue;
                r.instance();
                r.guarded([&] { remove_loops_coloops_minor(m, spec); },
                          name + ": promotion failed");
            }
        }
    }
}

// ------------------------------------------------------- connectivity

void suite::run_connectivity() {
    {
        recorder r = start("lambda-identities");
        for (const auto& [name, m] : members) {
            r.instance();
            int n = m.size();
            std::uint32_t top = subset::full(n).bits();
            matroid dual = m.dual();
            std::vector<matroid> dels;
            for (int e = 0; e < n; ++e) dels.push_back(m.deleted(subset::single(e)));
            for (std::uint32_t x = 0; x <= top; ++x) {
                subset s(x);
                int l = lambda(m, s);
                r.check(l == m.rank(s) + m.corank(s) - s.size(), name + ": rank/corank identity");
                r.check(l == lambda(m, s.complement(n)), name + ": complement symmetry");
                r.check(l == lambda(dual, s), name + ": dual invariance");
                for (int e : m.ground() - s) {
                    subset in_del;
                    for (int f : s) in_del = in_del.with(f < e ? f : f - 1);
                    int ld = lambda(dels[e], in_del);
                    r.check(ld <= l && l <= ld + 1, name + ": single-deletion drop");
                }
                if (top == 0) break;
            }
            for (std::uint32_t x = 0; x <= top; ++x) {
                for (std::uint32_t y = x; y <= top; ++y) {
                    r.check(lambda(m, subset(x)) + lambda(m, subset(y)) >=
                                lambda(m, subset(x & y)) + lambda(m, subset(x | y)),
                            name + ": lambda submodularity");
                    if (y == top) break;
                }
                if (x == top) break;
            }
        }
    }
    {
        recorder r = start("uncrossing");
        for (const auto& [name, m] : members) {
            int n = m.size();
            std::uint32_t top = subset::full(n).bits();
            for (int k = 1; k <= 4; ++k) {
                if (!is_k_connected(m, k)) continue;
                std::vector<subset> ksep;
                for (std::uint32_t x = 0; x <= top; ++x) {
                    if (lambda(m, subset(x)) < k) ksep.push_back(subset(x));
                    if (x == top) break;
                }
                r.instance();
                for (subset x1 : ksep)
                    for (subset x2 : ksep) {
                        if ((x1 & x2).size() >= k - 1)
                            r.check(lambda(m, x1 | x2) < k, name + ": union stays separating");
                        if (((x1 | x2).complement(n)).size() >= k - 1)
                            r.check(lambda(m, x1 & x2) < k, name + ": intersection stays separating");
                    }
            }
        }
    }
    {
        recorder r = start("guts-coguts-equivalence");
        for (const auto& [name, m] : members) {
            subset lp = loops(m);
            for (int k = 2; k <= 4; ++k) {
                if (!is_k_connected(m, k)) continue;
                for (const separation& sep : k_separations(m, k, true)) {
                    for (subset side : {sep.side, sep.side.complement(m.size())}) {
                        separation s2{side, k, true};
                        for (int e : side - lp) {
                            r.instance();
                            r.guarded([&] { guts_coguts_classify(m, s2, e); },
                                      name + ": characterization mismatch");
                        }
                    }
                }
            }
        }
    }
    {
        recorder r = start("contraction-avoids-closure");
        for (const auto& [name, m] : members) {
            for (int k = 2; k <= 4; ++k) {
                if (!is_k_connected(m, k)) continue;
                for (int e : m.ground()) {
                    if (!is_k_connected(m.contracted(subset::single(e)), k)) continue;
                    for (const separation& sep : k_separations(m, k)) {
                        subset x = sep.side.contains(e) ? sep.side : sep.side.complement(m.size());
                        if (!x.contains(e)) continue;
                        r.instance();
                        r.check(!closure(m, x.complement(m.size())).contains(e),
                                name + ": contractible element inside the far closure");
                    }
                }
            }
        }
    }
    {
        recorder r = start("two-element-side-type");
        for (const auto& [name, m] : members) {
            if (!is_connected(m)) continue;
            for (const separation& sep : k_separations(m, 2)) {
                for (subset b : {sep.side, sep.side.complement(m.size())}) {
                    if (b.size() != 2) continue;
                    r.instance();
                    r.check(m.rank(b) == 1 || m.corank(b) == 1,
                            name + ": two-element side is neither parallel nor series");
                }
            }
        }
    }
    {
        recorder r = start("detached-side-routing");
        for (const auto& [name, m] : members) {
            if (m.size() > tangle_n_cap) continue;
            int seps = 0;
            for (const separation& sep : k_separations(m, 2)) {
                if (++seps > 24) break;
                for (subset b : {sep.side, sep.side.complement(m.size())}) {
                    if (b.size() > m.size() - 2) continue;
                    for (const minor_spec& spec : bipartitions(b, 16)) {
                        matroid n = m.minor(spec);
                        r.instance();
                        r.guarded([&] { route_2sep_minor(m, n, b); }, name + ": routing failed");
                    }
                }
            }
        }
    }
    {
        recorder r = start("circuit-splice");
        for (const auto& [name, m] : members) {
            if (m.size() > tangle_n_cap) continue;
            std::vector<subset> circs = circuits(m);
            int seps = 0;
            for (const separation& sep : k_separations(m, 2)) {
                if (++seps > 24) break;
                subset a = sep.side, b = sep.side.complement(m.size());
                r.instance();
                for (subset c1 : circs) {
                    if (!c1.intersects(a) || !c1.intersects(b)) continue;
                    for (subset c2 : circs) {
                        if (!c2.intersects(a) || !c2.intersects(b)) continue;
                        subset mix = (c1 & a) | (c2 & b);
                        bool dep = m.rank(mix) < mix.size();
                        bool minimal = true;
                        for (int e : mix)
                            if (m.rank(mix.without(e)) < mix.size() - 1) minimal = false;
                        r.check(dep && minimal, name + ": spliced set is not a circuit");
                    }
                }
            }
        }
    }
    {
        recorder r = start("one-contact-removal");
        for (const auto& [name, m] : members) {
            if (m.size() > tangle_n_cap || !is_connected(m)) continue;
            int seps = 0;
            for (const separation& sep : k_separations(m, 2)) {
                if (++seps > 24) break;
                for (subset b : {sep.side, sep.side.complement(m.size())}) {
                    for (int f : b) {
                        bool paired = false;
                        for (int g : m.ground().without(f)) {
                            subset pair = subset::of({f, g});
                            if (m.rank(pair) == 1 || m.corank(pair) == 1) paired = true;
                        }
                        if (paired) continue;
                        for (const minor_spec& spec : bipartitions(b.without(f), 16)) {
                            matroid n = m.minor(spec);
                            if (!clean(n)) continue;
                            r.instance();
                            r.guarded([&] { route_2sep_one_contact(m, n, b); },
                                      name + ": no two-way removable element");
                        }
                    }
                }
            }
        }
    }
    {
        recorder r = start("simplified-branch-nonempty");
        for (const auto& [name, m] : members) {
            if (!is_3_connected(m)) continue;
            for (int e : m.ground()) {
                r.instance();
                r.guarded([&] { bixby_branch(m, e); }, name + ": both branches collapsed");
            }
        }
    }
    {
        recorder r = start("triangle-forces-triad");
        for (const auto& [name, m] : members) {
            if (!is_3_connected(m) || m.size() < 4) continue;
            std::vector<subset> tris = triangles(m), trias = triads(m);
            for (subset t : tris) {
                for (int e : t)
                    for (int f : t.without(e)) {
                        int g = (t.without(e).without(f)).lowest();
                        if (is_3_connected(m.deleted(subset::single(e))) ||
                            is_3_connected(m.deleted(subset::single(f))))
                            continue;
                        r.instance();
                        bool found = false;
                        for (subset td : trias)
                            if (td.contains(e) && (td.contains(f) != td.contains(g))) found = true;
                        r.check(found, name + ": no triad through " + std::to_string(e));
                    }
            }
        }
    }
    {
        recorder r = start("fan-observations");
        for (const auto& [name, m] : members) {
            if (m.size() > tangle_n_cap) continue;
            matroid dual = m.dual();
            for (const fan& f : find_fans(m)) {
                r.instance();
                r.check(is_fan(dual, f.elements), name + ": fan fails in the dual");
                std::vector<int> rev(f.elements.rbegin(), f.elements.rend());
                r.check(is_fan(m, rev), name + ": reversed fan fails");
                if (f.elements.size() >= 4) {
                    for (std::size_t i = 1; i + 1 < f.elements.size(); ++i) {
                        subset x = subset::single(f.elements[i]);
                        r.check(!is_3_connected(m.deleted(x)) && !is_3_connected(m.contracted(x)),
                                name + ": internal fan element is removable");
                    }
                }
            }
        }
    }
    {
        recorder r = start("fan-in-full-closure-maximal");
        for (const auto& [name, m] : members) {
            if (m.size() > tangle_n_cap) continue;
            std::uint32_t top = subset::full(m.size()).bits();
            for (std::uint32_t x = 0; x <= top; ++x) {
                subset s(x);
                if (!is_closed(m, s) || !is_coclosed(m, s)) {
                    if (x == top) break;
                    continue;
                }
                for (const fan& f : find_fans_within(m, s)) {
                    r.instance();
                    r.check(!fan_extendable(m, f), name + ": fan maximal in " + s.to_string() +
                                                       " extends globally");
                }
                if (x == top) break;
            }
        }
    }
    {
        recorder r = start("fan-end-removable");
        for (const auto& [name, m] : members) {
            if (m.size() > 12 || !is_3_connected(m) || is_wheel_or_whirl(m)) continue;
            for (const fan& f : find_fans(m)) {
                r.instance();
                auto removable = [&](int e) {
                    return is_3_connected(m.deleted(subset::single(e))) ||
                           is_3_connected(m.contracted(subset::single(e)));
                };
                if (f.elements.size() == 3) {
                    int cnt = 0;
                    for (int e : f.elements) cnt += removable(e);
                    r.check(cnt >= 2, name + ": short fan lacks two removable elements");
                } else {
                    r.check(removable(f.elements.front()) && removable(f.elements.back()),
                            name + ": a fan end is not removable");
                }
            }
        }
    }
    {
        recorder r = start("fan-end-keeps-minor");
        for (const auto& [name, m] : members) {
            if (m.size() > 12 || !is_3_connected(m) || is_wheel_or_whirl(m)) continue;
            for (const fan& f : find_fans(m)) {
                if (f.elements.size() < 4) continue;
                subset fs = from_elements(f.elements);
                std::vector<subset> removal_bases = {fs};
                for (int keep : f.elements) removal_bases.push_back(fs.without(keep));
                for (subset base : removal_bases) {
                    for (const minor_spec& spec : bipartitions(base, 16)) {
                        matroid n = m.minor(spec);
                        if (!clean(n)) continue;
                        r.instance();
                        r.guarded([&] { fan_end_removal(m, n, f); },
                                  name + ": no fan end keeps the minor");
                    }
                }
            }
        }
    }
}

// -------------------------------------------------------------- tangle

void suite::run_tangle() {
    {
        recorder r = start("width-equals-decomposition");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            r.instance();
            branch_decomposition bd = branch_width_by_decomposition(members[i].m);
            r.check(bd.width == width_of(i), members[i].name + ": decomposition width " +
                                                 std::to_string(bd.width) + " vs tangle order " +
                                                 std::to_string(width_of(i)));
        }
    }
    {
        recorder r = start("tangle-axioms-enumerated");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                r.instance();
                tangle_check c = validate_tangle(t.host, t.members, t.order);
                r.check(c.valid, members[i].name + ": enumerated family violates axiom " +
                                     std::to_string(c.violated_axiom));
            }
        }
    }
    {
        recorder r = start("tangle-truncation");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i))
                for (int lower = 0; lower < t.order; ++lower) {
                    std::vector<subset> trunc;
                    for (subset s : t.members)
                        if (lambda(t.host, s) < lower) trunc.push_back(s);
                    r.instance();
                    r.check(validate_tangle(t.host, trunc, lower).valid,
                            members[i].name + ": truncation fails");
                }
        }
    }
    {
        recorder r = start("tangle-duality");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                r.instance();
                r.check(validate_tangle(t.host.dual(), t.members, t.order).valid,
                        members[i].name + ": family is not a tangle of the dual");
            }
        }
    }
    {
        recorder r = start("tangle-downward-closed");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                r.instance();
                std::vector<bool> member(subset::full(t.host.size()).bits() + 1, false);
                for (subset s : t.members) member[s.bits()] = true;
                for (subset s : t.members) {
                    std::uint32_t bits = s.bits();
                    std::uint32_t x = 0;
                    for (;;) {
                        if (lambda(t.host, subset(x)) < t.order)
                            r.check(member[x], members[i].name + ": subset " +
                                                   subset(x).to_string() + " missing");
                        if (x == bits) break;
                        x = (x - bits) & bits;
                    }
                }
            }
        }
    }
    {
        recorder r = start("tangle-union");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                r.instance();
                std::vector<bool> member(subset::full(t.host.size()).bits() + 1, false);
                for (subset s : t.members) member[s.bits()] = true;
                for (subset x : t.members)
                    for (subset y : t.members)
                        if (lambda(t.host, x | y) < t.order)
                            r.check(member[(x | y).bits()],
                                    members[i].name + ": union of members escapes the tangle");
            }
        }
    }
    {
        recorder r = start("tangle-matroid-axioms");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                r.instance();
                int n = t.host.size();
                std::uint32_t top = subset::full(n).bits();
                std::vector<int> rho(top + 1);
                for (std::uint32_t x = 0; x <= top; ++x) {
                    rho[x] = tangle_rank(t, subset(x));
                    if (x == top) break;
                }
                r.check(rho[0] == 0, members[i].name + ": tangle rank of empty set");
                for (std::uint32_t x = 0; x <= top; ++x) {
                    for (int e : subset::full(n) - subset(x)) {
                        int up = rho[x | (1u << e)];
                        r.check(up >= rho[x] && up <= rho[x] + 1,
                                members[i].name + ": tangle rank unit increase");
                    }
                    if (x == top) break;
                }
                for (std::uint32_t x = 0; x <= top; ++x) {
                    for (std::uint32_t y = x; y <= top; ++y) {
                        r.check(rho[x] + rho[y] >= rho[x | y] + rho[x & y],
                                members[i].name + ": tangle rank submodularity");
                        if (y == top) break;
                    }
                    if (x == top) break;
                }
            }
        }
    }
    {
        recorder r = start("tangle-independence-both");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                r.instance();
                std::uint32_t top = subset::full(t.host.size()).bits();
                for (std::uint32_t x = 0; x <= top; ++x) {
                    subset s(x);
                    if (tangle_independent(t, s))
                        r.check(t.host.rank(s) == s.size() && t.host.corank(s) == s.size(),
                                members[i].name + ": tangle-independent set dependent in host");
                    if (x == top) break;
                }
            }
        }
    }
    {
        recorder r = start("inherited-tangle-valid");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                for (int e = 0; e < t.host.size(); ++e)
                    for (bool del : {true, false}) {
                        if (t.order < 1) continue;
                        minor_spec spec = del ? minor_spec{subset{}, subset::single(e)}
                                              : minor_spec{subset::single(e), subset{}};
                        r.instance();
                        r.guarded([&] { inherit_tangle(t, spec); },
                                  members[i].name + ": inherited family invalid");
                    }
                if (t.order >= 2 && t.host.size() >= 2) {
                    r.instance();
                    r.guarded([&] { inherit_tangle(t, {subset::single(0), subset::single(1)}); },
                              members[i].name + ": mixed inherited family invalid");
                }
            }
        }
    }
    {
        recorder r = start("inherited-rank-bounds");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                if (t.order < 1) continue;
                for (int e = 0; e < t.host.size(); ++e)
                    for (bool del : {true, false}) {
                        minor_spec spec = del ? minor_spec{subset{}, subset::single(e)}
                                              : minor_spec{subset::single(e), subset{}};
                        r.instance();
                        tangle inh{t.host, 0, {}};
                        try {
                            inh = inherit_tangle(t, spec);
                        } catch (const invariant_violation& ex) {
                            r.check(false, members[i].name + ": inherited tangle invalid: " + ex.what());
                            continue;
                        }
                        std::uint32_t top = subset::full(inh.host.size()).bits();
                        for (std::uint32_t z = 0; z <= top; ++z) {
                            subset zm(z);
                            subset zh;  // same set inside the host
                            for (int v : zm) zh = zh.with(t.host.index_of(inh.host.label_of(v)));
                            int rh = tangle_rank(t, zh), rm = tangle_rank(inh, zm);
                            r.check(rh - 1 <= rm && rm <= rh,
                                    members[i].name + ": inherited rank outside bounds");
                            if (rh < t.order && !tangle_closure(t, zh).contains(e))
                                r.check(rm == rh, members[i].name + ": inherited rank dropped "
                                                                    "although the element was free");
                            if (z == top) break;
                        }
                    }
            }
        }
    }
    {
        recorder r = start("independence-survives-deletion");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            for (const tangle& t : tangles_of(i)) {
                if (t.order < 1) continue;
                std::uint32_t top = subset::full(t.host.size()).bits();
                for (std::uint32_t x = 1; x <= top; ++x) {
                    subset s(x);
                    if (!tangle_independent(t, s)) continue;
                    for (int e : s) {
                        r.instance();
                        try {
                            tangle inh = inherit_tangle(t, {subset{}, subset::single(e)});
                            subset rest;
                            for (int v : s.without(e))
                                rest = rest.with(inh.host.index_of(t.host.label_of(v)));
                            r.check(tangle_independent(inh, rest),
                                    members[i].name + ": independence lost after deletion");
                        } catch (const invariant_violation& ex) {
                            r.check(false, members[i].name + ": inherited tangle invalid: " + ex.what());
                        }
                    }
                    if (x == top) break;
                }
            }
        }
    }
    {
        recorder r = start("closure-boundary-attachment");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            const matroid& m = members[i].m;
            for (const tangle& t : tangles_of(i)) {
                std::uint32_t top = subset::full(m.size()).bits();
                for (std::uint32_t x = 0; x <= top; ++x) {
                    subset s(x);
                    if (!tangle_independent(t, s)) {
                        if (x == top) break;
                        continue;
                    }
                    subset y = tangle_closure(t, s);
                    for (int e : y - s) {
                        r.instance();
                        r.check(closure(m, y.without(e)).contains(e) ||
                                    coclosure(m, y.without(e)).contains(e),
                                members[i].name + ": boundary element attached to neither closure");
                    }
                    if (x == top) break;
                }
            }
        }
    }
    {
        recorder r = start("skew-lines-stay-closed");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i) || !is_3_connected(members[i].m)) continue;
            for (const tangle& t : tangles_of(i)) check_skew_lines(r, members[i].name, t);
        }
    }
}

// -------------------------------------------------------------- removal

void suite::run_removal() {
    std::vector<removal_instance> pool = removal_instances(members, tangle_n_cap, 3, 10);
    {
        recorder r = start("pair-fan-dichotomy");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i)) continue;
            const matroid& m = members[i].m;
            auto mt = max_order_tangle(m);
            if (!mt) continue;
            for (int c = 0; c < m.size(); ++c)
                for (int d = 0; d < m.size(); ++d) {
                    if (c == d) continue;
                    subset pair = subset::of({c, d});
                    if (!tangle_independent(*mt, pair)) continue;
                    bool d_paired = false;
                    for (int g : m.ground().without(d))
                        if (m.rank(subset::of({d, g})) == 1) d_paired = true;
                    if (d_paired) continue;
                    if (!is_3_connected(m.minor({subset::single(c), subset::single(d)}))) continue;
                    if (is_3_connected(m.contracted(subset::single(c)))) continue;
                    r.instance();
                    r.check(is_3_connected(m), members[i].name + ": host is not 3-connected");
                    bool ok = is_3_connected(m.deleted(subset::single(d)));
                    if (!ok) {
                        for (const fan& f : find_fans(m)) {
                            if (f.elements.size() < 4) continue;
                            auto pc = std::find(f.elements.begin(), f.elements.end(), c);
                            auto pd = std::find(f.elements.begin(), f.elements.end(), d);
                            if (pc == f.elements.end() || pd == f.elements.end()) continue;
                            if (pc == f.elements.begin() || pc + 1 == f.elements.end()) continue;
                            if (pd == f.elements.begin() || pd + 1 == f.elements.end()) continue;
                            ok = true;
                        }
                    }
                    r.check(ok, members[i].name + ": neither clean deletion nor a common fan");
                }
        }
    }
    {
        recorder r = start("compensating-restore");
        for (const removal_instance& inst : pool) {
            for (int d : inst.d) {
                r.instance();
                bool ok = is_3_connected(restore(inst.m, inst.c, inst.d, subset::single(d)));
                for (int c : inst.c)
                    if (!ok) ok = is_3_connected(restore(inst.m, inst.c, inst.d, subset::of({c, d})));
                r.check(ok, inst.name + ": no compensating restoration");
            }
        }
    }
    {
        recorder r = start("no-isolated-nonprivileged");
        for (const removal_instance& inst : pool) {
            r.instance();
            r.guarded([&] { build_restoration_graph(inst.m, inst.t, inst.c, inst.d); },
                      inst.name + ": isolated vertex");
        }
    }
    {
        recorder r = start("restorable-oracle-agreement");
        for (const removal_instance& inst : pool) {
            restoration_graph g = build_restoration_graph(inst.m, inst.t, inst.c, inst.d);
            r.instance();
            std::uint32_t bits = (inst.c | inst.d).bits();
            std::uint32_t s = 0;
            for (;;) {
                bool graph_says = restorable(g, subset(s));
                bool direct = is_3_connected(restore(inst.m, inst.c, inst.d, subset(s)));
                r.check(graph_says == direct,
                        inst.name + ": graph and direct check disagree on " + subset(s).to_string());
                if (s == bits) break;
                s = (s - bits) & bits;
            }
        }
    }
    {
        recorder r = start("line-removal");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i) || !is_3_connected(members[i].m)) continue;
            const matroid& m = members[i].m;
            auto mt = max_order_tangle(m);
            if (!mt || mt->order < 3) continue;
            for (subset line : long_lines(*mt)) {
                for (int f : line) {
                    // The minor must avoid the line except possibly at f.
                    for (const minor_spec& spec : bipartitions(line.without(f), 8)) {
                        matroid n = m.minor(spec);
                        if (!clean(n)) continue;
                        r.instance();
                        r.guarded([&] { remove_on_line(m, *mt, n, line, f); },
                                  members[i].name + ": no removable element on the line");
                    }
                }
            }
        }
    }
    {
        recorder r = start("simultaneous-fan-deletion");
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i) || !is_3_connected(members[i].m)) continue;
            const matroid& m = members[i].m;
            auto mt = max_order_tangle(m);
            if (!mt) continue;
            for (subset line : long_lines(*mt)) {
                if (tangle_rank(*mt, line) != 2) continue;
                for (const fan& f : find_fans_within(m, line)) {
                    if (f.elements.size() < 4 || fan_extendable(m, f)) continue;
                    for (const minor_spec& spec : bipartitions(line, 4)) {
                        matroid n = m.minor(spec);
                        for (int end : {f.elements.front(), f.elements.back()}) {
                            matroid after = m.deleted(subset::single(end));
                            if (!is_3_connected(after) || !has_minor(after, n)) continue;
                            r.instance();
                            r.guarded(
                                [&] { simultaneous_fan_removal(m, *mt, n, {line}, {f}, {end}); },
                                members[i].name + ": single fan-end deletion failed");
                        }
                    }
                }
            }
        }
    }
    {
        recorder r = start("growth-bookkeeping");
        lcg gen{opt.seed ^ 0x7f4a7c15u};
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i) || !is_3_connected(members[i].m)) continue;
            const matroid& m = members[i].m;
            auto mt = max_order_tangle(m);
            if (!mt || mt->order < 2) continue;
            for (int trial = 0; trial < 3; ++trial) {
                subset removed;
                int want = std::min(2, m.size() - 2);
                if (want < 1) continue;
                while (removed.size() < want) removed = removed.with(gen.below(m.size()));
                subset contract(gen.next() & removed.bits());
                matroid n = m.minor({contract, removed - contract});
                if (!clean(n)) continue;
                r.instance();
                r.guarded([&] { grow_removal_set(m, *mt, n, 2); },
                          members[i].name + ": growth bookkeeping failed");
            }
        }
    }
    {
        recorder r = start("pipeline-soundness");
        lcg gen{opt.seed ^ 0x1234567u};
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!small(i) || !is_3_connected(members[i].m)) continue;
            const matroid& m = members[i].m;
            auto mt = max_order_tangle(m);
            if (!mt || mt->order < 2) continue;
            for (int trial = 0; trial < 2; ++trial) {
                subset removed;
                int want = std::min(2, m.size() - 2);
                if (want < 1) continue;
                while (removed.size() < want) removed = removed.with(gen.below(m.size()));
                subset contract(gen.next() & removed.bits());
                minor_spec spec{contract, removed - contract};
                matroid n = m.minor(spec);
                if (!clean(n)) continue;
                for (int k : {1, 2}) {
                    r.instance();
                    removal_outcome out;
                    try {
                        out = find_removal_set({m, *mt, spec, k});
                    } catch (const invariant_violation& e) {
                        r.check(false, members[i].name + ": pipeline threw: " + e.what());
                        continue;
                    }
                    if (!out.found) {
                        r.check(true, "");
                        continue;
                    }
                    subset x = out.result.set;
                    matroid after = out.result.op == removal_op::del ? m.deleted(x) : m.contracted(x);
                    bool sound = int(x.size()) == k && is_3_connected(after) &&
                                 has_minor(after, n).has_value();
                    subset ng = ground_of(m, n);
                    sound = sound && tangle_rank(*mt, ng | x) == tangle_rank(*mt, ng) + k;
                    r.check(sound, members[i].name + ": returned set fails verification");
                    auto oracle = brute_force_oracle(m, spec, k);
                    r.check(oracle.has_value(), members[i].name + ": oracle finds nothing of size " +
                                                    std::to_string(k));
                }
            }
        }
    }
}

}  // namespace

std::optional<tangle> max_order_tangle(const matroid& m) {
    int bw = branch_width(m);
    if (bw == 0) return std::nullopt;
    std::vector<tangle> all = enumerate_tangles(m, bw);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<removal_instance> removal_instances(const std::vector<corpus_entry>& members,
                                                int n_cap, int size_cap, int per_member) {
    std::vector<removal_instance> out;
    for (const auto& [name, m] : members) {
        if (m.size() > n_cap || !is_3_connected(m)) continue;
        auto mt = max_order_tangle(m);
        if (!mt) continue;
        int taken = 0;
        int cap = std::min(size_cap, mt->order);
        std::uint32_t top = subset::full(m.size()).bits();
        for (std::uint32_t s = 1; s <= top && taken < per_member; ++s) {
            subset both(s);
            if (both.size() > cap) continue;
            if (!tangle_independent(*mt, both)) continue;
            for (const minor_spec& spec : bipartitions(both, 1u << both.size())) {
                if (taken >= per_member) break;
                if (!is_3_connected(m.minor(spec))) continue;
                out.push_back({name, m, *mt, spec.contract, spec.del});
                ++taken;
            }
        }
    }
    return out;
}

std::vector<check_result> run_verify(const verify_options& opt) {
    suite s(opt);
    if (opt.core) s.run_core();
    if (opt.connectivity) s.run_connectivity();
    if (opt.tangle) s.run_tangle();
    if (opt.removal) s.run_removal();
    return s.results;
}

}  // namespace matroidlab
