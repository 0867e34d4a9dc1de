#include "matroidlab/tangle.hpp"

#include <algorithm>
#include <stdexcept>

#include "matroidlab/errors.hpp"

namespace matroidlab {

tangle_check validate_tangle(const matroid& m, const std::vector<subset>& family, int order) {
    int n = m.size();
    std::uint32_t full = subset::full(n).bits();
    std::vector<bool> member(std::size_t(full) + 1, false);
    for (subset s : family) member[s.bits()] = true;

    for (subset s : family)
        if (lambda(m, s) >= order) return {false, 1, s};
    for (std::uint32_t x = 0; x <= full; ++x) {
        subset s(x);
        if (lambda(m, s) >= order) continue;
        bool a = member[x], b = member[full & ~x];
        if (a == b && x != (full & ~x)) return {false, 2, s};
        if (x == (full & ~x) && !a) return {false, 2, s};  // self-complementary only when n == 0
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i; j < family.size(); ++j) {
            std::uint32_t u = family[i].bits() | family[j].bits();
            for (std::size_t k = j; k < family.size(); ++k)
                if ((u | family[k].bits()) == full) return {false, 3, family[k]};
        }
    for (subset s : family)
        if (std::popcount(full & ~s.bits()) == 1) return {false, 4, s};
    return {};
}

namespace {

struct tangle_searcher {
    const matroid& m;
    int order;
    int n;
    std::uint32_t full;
    std::vector<std::pair<subset, subset>> pairs;  // (preferred side, other side)
    std::vector<subset> chosen;
    std::vector<std::uint16_t> superset_count;  // #members containing each subset
    std::vector<tangle>* sink = nullptr;        // null: stop at first tangle
    bool found_any = false;

    tangle_searcher(const matroid& mm, int ord) : m(mm), order(ord) {
        n = m.size();
        full = subset::full(n).bits();
        if (n > 12) throw std::invalid_argument("ground set too large for tangle search");
        for (std::uint32_t x = 0; x <= full; ++x) {
            std::uint32_t cx = full & ~x;
            if (x > cx) continue;
            subset s(x);
            if (lambda(m, s) >= order) continue;
            subset c(cx);
            // Try the smaller side first; ties by mask.
            if (s.size() <= c.size())
                pairs.emplace_back(s, c);
            else
                pairs.emplace_back(c, s);
        }
        std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            int la = lambda(m, a.first), lb = lambda(m, b.first);
            if (la != lb) return la < lb;
            return std::min(a.first, a.second) < std::min(b.first, b.second);
        });
        superset_count.assign(std::size_t(full) + 1, 0);
    }

    bool violates(subset w) const {
        // Axiom 3 with the triple (w, w, w).
        if (w.bits() == full && full != 0) return true;
        // Axiom 4: no co-singleton member.
        if (std::popcount(full & ~w.bits()) == 1) return true;
        // Axiom 3 against the members added so far plus w itself.
        for (subset a : chosen) {
            std::uint32_t rest = full & ~(a.bits() | w.bits());
            if (superset_count[rest] > 0) return true;
        }
        {
            std::uint32_t rest = full & ~w.bits();
            if (superset_count[rest] > 0) return true;
        }
        return false;
    }

    void add(subset w) {
        chosen.push_back(w);
        std::uint32_t wb = w.bits();
        for (std::uint32_t s = wb;; s = (s - 1) & wb) {
            ++superset_count[s];
            if (s == 0) break;
        }
    }

    void remove(subset w) {
        chosen.pop_back();
        std::uint32_t wb = w.bits();
        for (std::uint32_t s = wb;; s = (s - 1) & wb) {
            --superset_count[s];
            if (s == 0) break;
        }
    }

    bool search(std::size_t i) {
        if (i == pairs.size()) {
            found_any = true;
            if (sink) {
                tangle t{m, order, chosen};
                std::sort(t.members.begin(), t.members.end());
                sink->push_back(std::move(t));
                return false;  // keep enumerating
            }
            return true;
        }
        for (subset cand : {pairs[i].first, pairs[i].second}) {
            if (cand == pairs[i].second && pairs[i].first == pairs[i].second) break;
            if (violates(cand)) continue;
            add(cand);
            if (search(i + 1)) return true;
            remove(cand);
        }
        return false;
    }
};

}  // namespace

std::vector<tangle> enumerate_tangles(const matroid& m, int order) {
    if (order < 0) throw std::invalid_argument("tangle order must be nonnegative");
    std::vector<tangle> out;
    if (order == 0) {
        // The empty family is the unique tangle of order 0.
        out.push_back(tangle{m, 0, {}});
        return out;
    }
    tangle_searcher s(m, order);
    s.sink = &out;
    s.search(0);
    std::sort(out.begin(), out.end(),
              [](const tangle& a, const tangle& b) { return a.members < b.members; });
    return out;
}

bool tangle_exists(const matroid& m, int order) {
    if (order <= 0) return true;
    tangle_searcher s(m, order);
    s.search(0);
    return s.found_any;
}

int branch_width(const matroid& m) {
    if (m.size() == 0) return 0;
    int theta = 0;
    while (tangle_exists(m, theta + 1)) ++theta;
    return theta;
}

int tangle_rank(const tangle& t, subset x) {
    int best = t.order;
    for (subset y : t.members)
        if (y.contains(x)) best = std::min(best, lambda(t.host, y));
    return best;
}

subset tangle_closure(const tangle& t, subset x) {
    int rx = tangle_rank(t, x);
    subset out = x;
    for (int e : t.host.ground() - x)
        if (tangle_rank(t, x.with(e)) == rx) out = out.with(e);
    return out;
}

bool tangle_independent(const tangle& t, subset x) { return tangle_rank(t, x) == x.size(); }

bool tangle_closed(const tangle& t, subset x) { return tangle_closure(t, x) == x; }

std::vector<subset> long_lines(const tangle& t) {
    std::vector<subset> out;
    int n = t.host.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            subset pair = subset::of({a, b});
            if (!tangle_independent(t, pair)) continue;
            subset line = tangle_closure(t, pair);
            if (line.size() >= 3 && std::find(out.begin(), out.end(), line) == out.end())
                out.push_back(line);
        }
    std::sort(out.begin(), out.end());
    return out;
}

tangle inherit_tangle(const tangle& t, const minor_spec& removed) {
    subset s = removed.contract | removed.del;
    int new_order = t.order - s.size();
    if (new_order < 0) throw std::invalid_argument("removed set larger than the tangle order");
    matroid minor = t.host.minor(removed);
    // Indices shrink in the minor; build the translation once.
    std::vector<int> to_minor(t.host.size(), -1);
    for (int i = 0; i < minor.size(); ++i) to_minor[t.host.index_of(minor.label_of(i))] = i;

    std::vector<subset> members;
    for (subset x : t.members) {
        subset reduced;
        for (int e : x - s) reduced = reduced.with(to_minor[e]);
        if (lambda(minor, reduced) < new_order) members.push_back(reduced);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    tangle out{minor, new_order, std::move(members)};
    tangle_check check = validate_tangle(minor, out.members, new_order);
    if (!check.valid)
        throw invariant_violation("inherited family is not a tangle (axiom " +
                                  std::to_string(check.violated_axiom) + " fails on " +
                                  check.witness.to_string() + ")");
    return out;
}

}  // namespace matroidlab
