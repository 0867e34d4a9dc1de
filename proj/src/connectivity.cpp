#include "matroidlab/connectivity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "matroidlab/errors.hpp"

namespace matroidlab {

int lambda(const matroid& m, subset x) {
    return m.rank(x) + m.rank(x.complement(m.size())) - m.rank();
}

std::vector<separation> k_separations(const matroid& m, int k, bool exact_only) {
    if (k < 1) throw std::invalid_argument("separation order must be positive");
    std::vector<separation> out;
    int n = m.size();
    if (n == 0) return out;
    std::uint32_t top = subset::full(n).bits();
    for (std::uint32_t x = 1; x < top; x += 2) {  // canonical side contains element 0
        subset s(x);
        if (s.size() < k || n - s.size() < k) continue;
        int l = lambda(m, s);
        if (exact_only ? l == k - 1 : l < k) out.push_back({s, k, l == k - 1});
    }
    return out;
}

bool is_k_connected(const matroid& m, int k) {
    int n = m.size();
    if (n <= 1) return true;
    std::uint32_t top = subset::full(n).bits();
    for (std::uint32_t x = 1; x < top; x += 2) {
        subset s(x);
        int cap = std::min({s.size(), n - s.size(), k - 1});
        if (cap >= 1 && lambda(m, s) < cap) return false;
    }
    return true;
}

bool is_3_connected(const matroid& m) { return is_k_connected(m, 3); }

guts_class guts_coguts_classify(const matroid& m, const separation& sep, int e) {
    int n = m.size();
    int k = sep.order;
    subset x = sep.side.contains(e) ? sep.side : sep.side.complement(n);
    subset y = x.complement(n);
    if (!x.contains(e)) throw std::invalid_argument("element not in either side");
    if (m.rank(subset::single(e)) == 0) throw std::invalid_argument("element is a loop");
    if (lambda(m, x) != k - 1 || x.size() < k || y.size() < k)
        throw std::invalid_argument("not an exact k-separation");
    if (!is_k_connected(m, k)) throw std::invalid_argument("matroid is not k-connected");

    matroid contracted = m.contracted(subset::single(e));
    // Indices shift under contraction: rebuild the side there by label.
    subset xs = contracted.indices_of(m.labels_of(x.without(e)));
    bool sep_drops = lambda(contracted, xs) <= k - 2 && xs.size() >= k - 1 &&
                     contracted.size() - xs.size() >= k - 1;
    bool in_guts = closure(m, y).contains(e) && closure(m, x.without(e)).contains(e);
    bool out_coguts = !coclosure(m, y).contains(e) && !coclosure(m, x.without(e)).contains(e);
    if (sep_drops != in_guts || in_guts != out_coguts)
        throw invariant_violation("guts/coguts characterizations disagree");
    return in_guts ? guts_class::contract_degenerate : guts_class::safe;
}

two_sep_route route_2sep_minor(const matroid& m, const matroid& n, subset b) {
    int sz = m.size();
    subset a = b.complement(sz);
    if (lambda(m, b) > 1) throw std::invalid_argument("not a 2-separating set");
    if (b.size() < 2 || a.size() < 2) throw std::invalid_argument("not a 2-separation");
    for (int l : n.labels())
        if (b.contains(m.index_of(l))) throw std::invalid_argument("side B meets the minor");

    two_sep_route out{};
    if (auto w = has_minor(m.deleted(b), n)) {
        out.op = removal_op::del;
        out.witness = *w;
    } else if (auto w2 = has_minor(m.contracted(b), n)) {
        out.op = removal_op::contract;
        out.witness = *w2;
    } else {
        throw invariant_violation("neither wholesale removal of a detached 2-separation side kept the minor");
    }
    subset cla = closure(m, a), ccla = coclosure(m, a);
    for (int e : b) {
        if (!cla.contains(e)) {
            out.contract_ok = out.contract_ok.with(e);
            if (!has_minor(m.contracted(subset::single(e)), n))
                throw invariant_violation("contraction outside cl(A) lost the minor");
        }
        if (!cla.contains(e) && !ccla.contains(e)) {
            out.both_ok = out.both_ok.with(e);
            if (!has_minor(m.deleted(subset::single(e)), n))
                throw invariant_violation("deletion outside both closures lost the minor");
        }
    }
    return out;
}

int route_2sep_one_contact(const matroid& m, const matroid& n, subset b) {
    int sz = m.size();
    subset a = b.complement(sz);
    if (!is_connected(m)) throw std::invalid_argument("matroid is not connected");
    if (lambda(m, b) > 1 || b.size() < 2 || a.size() < 2) throw std::invalid_argument("not a 2-separation");
    if (!(loops(n) | coloops(n)).empty()) throw std::invalid_argument("minor has loops or coloops");
    subset contact;
    for (int l : n.labels()) {
        int i = m.index_of(l);
        if (b.contains(i)) contact = contact.with(i);
    }
    if (contact.size() != 1) throw std::invalid_argument("side B must meet the minor in exactly one element");
    int f = contact.lowest();
    for (int g : m.ground().without(f)) {
        subset pair = subset::of({f, g});
        if (m.rank(pair) == 1 || m.corank(pair) == 1)
            throw std::invalid_argument("contact element is in a series or parallel pair");
    }
    for (int e : b.without(f)) {
        if (has_minor(m.deleted(subset::single(e)), n) && has_minor(m.contracted(subset::single(e)), n))
            return e;
    }
    throw invariant_violation("no single-contact 2-separation element kept the minor both ways");
}

bixby_result bixby_branch(const matroid& m, int e) {
    if (!is_3_connected(m)) throw std::invalid_argument("matroid is not 3-connected");
    bixby_result out;
    out.contraction_ok = is_3_connected(simplify(m.contracted(subset::single(e))).m);
    out.deletion_ok = is_3_connected(cosimplify(m.deleted(subset::single(e))).m);
    if (!out.contraction_ok && !out.deletion_ok)
        throw invariant_violation("both the simplified contraction and cosimplified deletion lost 3-connectivity");
    return out;
}

triple_kind classify_triple(const matroid& m, subset t) {
    if (t.size() != 3) return triple_kind::none;
    bool tri = m.rank(t) == 2, tria = m.corank(t) == 2;
    if (tri)
        for (int e : t)
            if (m.rank(t.without(e)) != 2 || m.rank(subset::single(e)) != 1) tri = false;
    if (tria)
        for (int e : t)
            if (m.corank(t.without(e)) != 2 || m.corank(subset::single(e)) != 1) tria = false;
    if (tri && tria) return triple_kind::both;
    if (tri) return triple_kind::triangle;
    if (tria) return triple_kind::triad;
    return triple_kind::none;
}

namespace {

triple_kind seq_triple_kind(const matroid& m, int a, int b, int c) {
    return classify_triple(m, subset::of({a, b, c}));
}

bool is_strict(triple_kind k) { return k == triple_kind::triangle || k == triple_kind::triad; }

triple_kind opposite(triple_kind k) {
    return k == triple_kind::triangle ? triple_kind::triad : triple_kind::triangle;
}

// Kinds of the consecutive triples of a candidate sequence, or nullopt if the
// sequence is not a strictly alternating fan.
std::optional<bool> fan_start_kind(const matroid& m, const std::vector<int>& seq) {
    if (seq.size() < 3) return std::nullopt;
    std::set<int> uniq(seq.begin(), seq.end());
    if (uniq.size() != seq.size()) return std::nullopt;
    triple_kind first = seq_triple_kind(m, seq[0], seq[1], seq[2]);
    if (!is_strict(first)) return std::nullopt;
    triple_kind expect = opposite(first);
    for (std::size_t i = 1; i + 2 < seq.size(); ++i) {
        if (seq_triple_kind(m, seq[i], seq[i + 1], seq[i + 2]) != expect) return std::nullopt;
        expect = opposite(expect);
    }
    return first == triple_kind::triangle;
}

struct fan_search {
    const matroid& m;
    subset limit;
    std::vector<fan> found;

    bool right_extendable(const std::vector<int>& seq, triple_kind last_kind) const {
        int k = int(seq.size());
        for (int z : limit) {
            if (std::find(seq.begin(), seq.end(), z) != seq.end()) continue;
            if (seq_triple_kind(m, seq[k - 2], seq[k - 1], z) == opposite(last_kind)) return true;
        }
        return false;
    }

    void extend(std::vector<int>& seq, triple_kind last_kind) {
        int k = int(seq.size());
        bool extended = false;
        for (int z : limit) {
            if (std::find(seq.begin(), seq.end(), z) != seq.end()) continue;
            if (seq_triple_kind(m, seq[k - 2], seq[k - 1], z) != opposite(last_kind)) continue;
            extended = true;
            seq.push_back(z);
            extend(seq, opposite(last_kind));
            seq.pop_back();
        }
        if (!extended) {
            // Right-maximal; keep it only if also left-maximal.
            triple_kind first = seq_triple_kind(m, seq[0], seq[1], seq[2]);
            std::vector<int> rev(seq.rbegin(), seq.rend());
            triple_kind rev_last = first;
            if (!right_extendable(rev, rev_last)) {
                fan f;
                f.elements = seq;
                f.starts_with_triangle = first == triple_kind::triangle;
                found.push_back(f);
            }
        }
    }
};

std::vector<int> canonical_order(const matroid& m, const std::vector<int>& seq) {
    // Among all valid fan orderings of the same element set reachable by the
    // symmetries of short fans (full permutations for length 3, the internal
    // swap for length 4) and reversal, pick the lexicographically smallest.
    std::vector<std::vector<int>> cands;
    cands.push_back(seq);
    cands.emplace_back(seq.rbegin(), seq.rend());
    if (seq.size() == 3) {
        std::vector<int> s = seq;
        std::sort(s.begin(), s.end());
        do {
            cands.push_back(s);
        } while (std::next_permutation(s.begin(), s.end()));
    } else if (seq.size() == 4) {
        std::vector<int> sw = {seq[0], seq[2], seq[1], seq[3]};
        cands.push_back(sw);
        cands.emplace_back(sw.rbegin(), sw.rend());
    }
    std::vector<int> best;
    for (const auto& c : cands) {
        if (!fan_start_kind(m, c)) continue;
        if (best.empty() || c < best) best = c;
    }
    return best;
}

}  // namespace

bool is_fan(const matroid& m, const std::vector<int>& elements) {
    return fan_start_kind(m, elements).has_value();
}

bool fan_extendable(const matroid& m, const fan& f) {
    fan_search fs{m, m.ground(), {}};
    const auto& seq = f.elements;
    int k = int(seq.size());
    triple_kind last = seq_triple_kind(m, seq[k - 3], seq[k - 2], seq[k - 1]);
    if (fs.right_extendable(seq, last)) return true;
    std::vector<int> rev(seq.rbegin(), seq.rend());
    triple_kind first = seq_triple_kind(m, seq[0], seq[1], seq[2]);
    return fs.right_extendable(rev, first);
}

std::vector<fan> find_fans_within(const matroid& m, subset x) {
    fan_search fs{m, x, {}};
    std::vector<int> elems = to_elements(x);
    for (int a : elems)
        for (int b : elems)
            for (int c : elems) {
                if (a == b || b == c || a == c) continue;
                triple_kind k = seq_triple_kind(m, a, b, c);
                if (!is_strict(k)) continue;
                std::vector<int> seq = {a, b, c};
                fs.extend(seq, k);
            }
    // Canonicalize and deduplicate.
    std::set<std::vector<int>> seen;
    std::vector<fan> out;
    for (const auto& f : fs.found) {
        std::vector<int> canon = canonical_order(m, f.elements);
        if (canon.empty() || seen.count(canon)) continue;
        seen.insert(canon);
        fan g;
        g.elements = canon;
        g.starts_with_triangle =
            seq_triple_kind(m, canon[0], canon[1], canon[2]) == triple_kind::triangle;
        out.push_back(g);
    }
    std::sort(out.begin(), out.end(),
              [](const fan& a, const fan& b) { return a.elements < b.elements; });
    return out;
}

std::vector<fan> find_fans(const matroid& m) { return find_fans_within(m, m.ground()); }

element_removal fan_end_removal(const matroid& m, const matroid& n, const fan& f) {
    if (f.elements.size() < 4) throw std::invalid_argument("fan must have length at least 4");
    if (!is_fan(m, f.elements)) throw std::invalid_argument("sequence is not a fan");
    if (fan_extendable(m, f)) throw std::invalid_argument("fan is not maximal");
    if (!is_3_connected(m)) throw std::invalid_argument("matroid is not 3-connected");
    if (is_wheel_or_whirl(m)) throw std::invalid_argument("matroid is a wheel or whirl");
    if (!(loops(n) | coloops(n)).empty()) throw std::invalid_argument("minor has loops or coloops");
    int overlap = 0;
    for (int e : f.elements)
        if (n.has_label(m.label_of(e))) ++overlap;
    if (overlap > 1) throw std::invalid_argument("fan meets the minor in more than one element");

    int x1 = f.elements.front(), xk = f.elements.back();
    std::vector<int> ends = {std::min(x1, xk), std::max(x1, xk)};
    for (int x : ends) {
        if (n.has_label(m.label_of(x))) continue;
        for (removal_op op : {removal_op::del, removal_op::contract}) {
            matroid next = op == removal_op::del ? m.deleted(subset::single(x))
                                                 : m.contracted(subset::single(x));
            if (is_3_connected(next) && has_minor(next, n)) return {x, op};
        }
    }
    throw invariant_violation("no fan end removal is 3-connected with the minor");
}

bool is_wheel_or_whirl(const matroid& m) {
    int n = m.size();
    if (n > 12) throw std::invalid_argument("ground set too large for isomorphism search");
    if (n < 4 || n % 2 != 0) return false;
    int r = n / 2;
    if (m.rank() != r) return false;
    if (rank_isomorphic(m, matroid::wheel(r))) return true;
    return rank_isomorphic(m, matroid::whirl(r));
}

}  // namespace matroidlab
