#include "matroidlab/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "matroidlab/errors.hpp"

namespace matroidlab {

std::string subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::vector<int> to_elements(subset s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (int e : s) out.push_back(e);
    return out;
}

subset from_elements(const std::vector<int>& elems) {
    subset s;
    for (int e : elems) {
        if (e < 0 || e >= max_ground_size) throw std::invalid_argument("element index out of range");
        s = s.with(e);
    }
    return s;
}

bool lex_less(subset a, subset b) {
    if (a == b) return false;
    subset diff = a ^ b;
    int v = diff.lowest();
    if (a.contains(v)) {
        // b agrees below v; b is smaller iff it has nothing at or above v.
        return (b.bits() >> v) != 0;
    }
    return (a.bits() >> v) == 0 ? false : true;
}

const char* to_string(removal_op op) { return op == removal_op::del ? "delete" : "contract"; }

namespace detail {

// Rank evaluation node. Each node memoizes its own full table lazily; the
// table is only allocated for ground sets of at most 20 elements.
class rank_node {
public:
    explicit rank_node(int n) : n_(n) {
        if (n_ < 0 || n_ > max_ground_size) throw std::invalid_argument("ground set size out of range");
        if (n_ <= 20) {
            std::size_t sz = std::size_t(1) << n_;
            cache_ = std::make_unique<std::atomic<signed char>[]>(sz);
            for (std::size_t i = 0; i < sz; ++i) cache_[i].store(-1, std::memory_order_relaxed);
        }
    }
    virtual ~rank_node() = default;

    int ground_size() const { return n_; }

    int rank(std::uint32_t x) const {
        if (!cache_) return compute(x);
        signed char v = cache_[x].load(std::memory_order_relaxed);
        if (v < 0) {
            v = static_cast<signed char>(compute(x));
            cache_[x].store(v, std::memory_order_relaxed);
        }
        return v;
    }

protected:
    virtual int compute(std::uint32_t x) const = 0;

private:
    int n_;
    mutable std::unique_ptr<std::atomic<signed char>[]> cache_;
};

namespace {

class uniform_node final : public rank_node {
public:
    uniform_node(int r, int n) : rank_node(n), r_(r) {}
    int compute(std::uint32_t x) const override { return std::min(std::popcount(x), r_); }

private:
    int r_;
};

class graphic_node final : public rank_node {
public:
    graphic_node(int vertices, std::vector<std::pair<int, int>> edges)
        : rank_node(int(edges.size())), v_(vertices), edges_(std::move(edges)) {}

    int compute(std::uint32_t x) const override {
        int parent[max_ground_size + 1];
        for (int i = 0; i < v_; ++i) parent[i] = i;
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        int merges = 0;
        for (std::uint32_t rest = x; rest; rest &= rest - 1) {
            const auto& [u, w] = edges_[std::countr_zero(rest)];
            int ru = find(u), rw = find(w);
            if (ru != rw) {
                parent[ru] = rw;
                ++merges;
            }
        }
        return merges;
    }

private:
    int v_;
    std::vector<std::pair<int, int>> edges_;
};

class linear_node final : public rank_node {
public:
    linear_node(int field, std::vector<std::vector<int>> rows, int cols)
        : rank_node(cols), p_(field), rows_(std::move(rows)) {}

    int compute(std::uint32_t x) const override {
        // Gaussian elimination on the selected columns.
        std::vector<std::vector<int>> cols;
        for (std::uint32_t rest = x; rest; rest &= rest - 1) {
            int c = std::countr_zero(rest);
            std::vector<int> col(rows_.size());
            for (std::size_t r = 0; r < rows_.size(); ++r) col[r] = rows_[r][c];
            cols.push_back(std::move(col));
        }
        int rank = 0;
        std::size_t nrows = rows_.size();
        for (std::size_t row = 0; row < nrows && rank < int(cols.size()); ++row) {
            int pivot = -1;
            for (int c = rank; c < int(cols.size()); ++c) {
                if (cols[c][row] != 0) {
                    pivot = c;
                    break;
                }
            }
            if (pivot < 0) continue;
            std::swap(cols[rank], cols[pivot]);
            int inv = cols[rank][row] == 1 ? 1 : (p_ == 3 ? 2 : 1);  // inverse mod p
            for (int c = rank + 1; c < int(cols.size()); ++c) {
                if (cols[c][row] == 0) continue;
                int f = (cols[c][row] * inv) % p_;
                for (std::size_t r = row; r < nrows; ++r)
                    cols[c][r] = ((cols[c][r] - f * cols[rank][r]) % p_ + p_) % p_;
            }
            ++rank;
        }
        return rank;
    }

private:
    int p_;
    std::vector<std::vector<int>> rows_;
};

class relax_node final : public rank_node {
public:
    relax_node(std::shared_ptr<const rank_node> base, std::uint32_t h)
        : rank_node(base->ground_size()), base_(std::move(base)), h_(h) {}
    int compute(std::uint32_t x) const override { return base_->rank(x) + (x == h_ ? 1 : 0); }

private:
    std::shared_ptr<const rank_node> base_;
    std::uint32_t h_;
};

class dual_node final : public rank_node {
public:
    explicit dual_node(std::shared_ptr<const rank_node> base)
        : rank_node(base->ground_size()), base_(std::move(base)) {
        full_ = subset::full(ground_size()).bits();
        rm_ = base_->rank(full_);
    }
    int compute(std::uint32_t x) const override {
        return std::popcount(x) + base_->rank(full_ & ~x) - rm_;
    }

private:
    std::shared_ptr<const rank_node> base_;
    std::uint32_t full_;
    int rm_;
};

class minor_node final : public rank_node {
public:
    minor_node(std::shared_ptr<const rank_node> base, std::uint32_t contract, std::vector<int> keep)
        : rank_node(int(keep.size())), base_(std::move(base)), c_(contract), keep_(std::move(keep)) {
        rc_ = base_->rank(c_);
    }
    int compute(std::uint32_t x) const override {
        std::uint32_t lifted = c_;
        for (std::uint32_t rest = x; rest; rest &= rest - 1)
            lifted |= std::uint32_t(1) << keep_[std::countr_zero(rest)];
        return base_->rank(lifted) - rc_;
    }

private:
    std::shared_ptr<const rank_node> base_;
    std::uint32_t c_;
    std::vector<int> keep_;
    int rc_;
};

}  // namespace
}  // namespace detail

matroid::matroid(std::shared_ptr<const detail::rank_node> node, std::vector<int> labels)
    : node_(std::move(node)), labels_(std::move(labels)), n_(node_->ground_size()) {
    if (int(labels_.size()) != n_) throw std::invalid_argument("label count mismatch");
}

static std::vector<int> default_labels(int n) {
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 0);
    return l;
}

matroid matroid::uniform(int rank, int n) {
    if (n < 0 || n > max_ground_size || rank < 0 || rank > n)
        throw std::invalid_argument("bad uniform matroid parameters");
    return matroid(std::make_shared<detail::uniform_node>(rank, n), default_labels(n));
}

matroid matroid::graphic(int vertices, std::vector<std::pair<int, int>> edges) {
    if (vertices < 0 || vertices > max_ground_size + 1 || int(edges.size()) > max_ground_size)
        throw std::invalid_argument("bad graphic matroid parameters");
    for (auto [u, w] : edges)
        if (u < 0 || u >= vertices || w < 0 || w >= vertices)
            throw std::invalid_argument("edge endpoint out of range");
    int n = int(edges.size());
    return matroid(std::make_shared<detail::graphic_node>(vertices, std::move(edges)), default_labels(n));
}

matroid matroid::linear(int field, std::vector<std::vector<int>> rows) {
    if (field != 2 && field != 3) throw std::invalid_argument("field must be GF(2) or GF(3)");
    if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
    std::size_t cols = rows[0].size();
    if (cols == 0 || cols > max_ground_size) throw std::invalid_argument("bad column count");
    for (auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
        for (int& v : row) {
            v %= field;
            if (v < 0) v += field;
        }
    }
    int n = int(cols);
    return matroid(std::make_shared<detail::linear_node>(field, std::move(rows), n), default_labels(n));
}

matroid matroid::wheel(int r) {
    if (r < 2) throw std::invalid_argument("wheel needs at least 2 spokes");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) edges.emplace_back(i, r);            // spokes
    for (int i = 0; i < r; ++i) edges.emplace_back(i, (i + 1) % r);  // rim
    return graphic(r + 1, std::move(edges));
}

matroid matroid::whirl(int r) {
    matroid w = wheel(r);
    subset rim = subset(((std::uint32_t(1) << r) - 1) << r);
    return w.relaxed(rim);
}

int matroid::rank() const { return node_->rank(ground().bits()); }

int matroid::rank(subset x) const {
    if (!ground().contains(x)) throw std::invalid_argument("element index out of range");
    return node_->rank(x.bits());
}

int matroid::corank(subset x) const {
    if (!ground().contains(x)) throw std::invalid_argument("element index out of range");
    return x.size() + node_->rank((ground() - x).bits()) - rank();
}

int matroid::label_of(int index) const {
    if (index < 0 || index >= n_) throw std::invalid_argument("element index out of range");
    return labels_[index];
}

bool matroid::has_label(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int matroid::index_of(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("label not present");
    return int(it - labels_.begin());
}

subset matroid::indices_of(const std::vector<int>& labels) const {
    subset s;
    for (int l : labels) s = s.with(index_of(l));
    return s;
}

std::vector<int> matroid::labels_of(subset x) const {
    if (!ground().contains(x)) throw std::invalid_argument("element index out of range");
    std::vector<int> out;
    for (int e : x) out.push_back(labels_[e]);
    return out;
}

matroid matroid::dual() const {
    return matroid(std::make_shared<detail::dual_node>(node_), labels_);
}

matroid matroid::minor(const minor_spec& spec) const {
    if (spec.contract.intersects(spec.del)) throw std::invalid_argument("contract and delete sets overlap");
    if (!ground().contains(spec.contract | spec.del)) throw std::invalid_argument("element index out of range");
    subset kept = ground() - spec.contract - spec.del;
    std::vector<int> keep, labels;
    for (int e : kept) {
        keep.push_back(e);
        labels.push_back(labels_[e]);
    }
    return matroid(std::make_shared<detail::minor_node>(node_, spec.contract.bits(), std::move(keep)),
                   std::move(labels));
}

matroid matroid::deleted(subset d) const { return minor({subset{}, d}); }

matroid matroid::contracted(subset c) const { return minor({c, subset{}}); }

matroid matroid::relaxed(subset h) const {
    // h must be a circuit-hyperplane: a circuit with rank exactly rank(M)-1
    // that is closed.
    if (!ground().contains(h)) throw std::invalid_argument("element index out of range");
    int rh = rank(h);
    if (rh != h.size() - 1 || rh != rank() - 1) throw std::invalid_argument("set is not a circuit-hyperplane");
    for (int e : h)
        if (rank(h.without(e)) != h.size() - 1) throw std::invalid_argument("set is not a circuit-hyperplane");
    for (int e : ground() - h)
        if (rank(h.with(e)) == rh) throw std::invalid_argument("set is not a circuit-hyperplane");
    return matroid(std::make_shared<detail::relax_node>(node_, h.bits()), labels_);
}

matroid matroid::relabeled(std::vector<int> labels) const {
    if (int(labels.size()) != n_) throw std::invalid_argument("label count mismatch");
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("labels must be distinct");
    return matroid(node_, std::move(labels));
}

bool same_rank_function(const matroid& a, const matroid& b) {
    if (a.size() != b.size()) return false;
    std::uint32_t top = subset::full(a.size()).bits();
    for (std::uint32_t x = 0; x <= top; ++x)
        if (a.rank(subset(x)) != b.rank(subset(x))) return false;
    return true;
}

bool same_labeled_matroid(const matroid& a, const matroid& b) {
    if (a.size() != b.size()) return false;
    auto la = a.labels(), lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;
    // Map each b-subset to the a-subset with the same labels.
    int n = b.size();
    std::vector<int> to_a(n);
    for (int i = 0; i < n; ++i) to_a[i] = a.index_of(b.label_of(i));
    std::uint32_t top = subset::full(n).bits();
    std::vector<std::uint32_t> lifted(top + 1, 0);
    for (std::uint32_t x = 1; x <= top; ++x) {
        int low = std::countr_zero(x);
        lifted[x] = lifted[x & (x - 1)] | (std::uint32_t(1) << to_a[low]);
        if (a.rank(subset(lifted[x])) != b.rank(subset(x))) return false;
    }
    return true;
}

namespace {

bool extend_isomorphism(const matroid& a, const matroid& b, std::vector<int>& perm,
                        std::vector<std::uint32_t>& images, std::uint32_t used, int i) {
    int n = a.size();
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
        if (used & (std::uint32_t(1) << j)) continue;
        perm[i] = j;
        // Check every subset of {0..i} containing i against its image.
        std::uint32_t prefix = (std::uint32_t(1) << i) - 1;
        bool ok = true;
        for (std::uint32_t s = prefix;; s = (s - 1) & prefix) {
            std::uint32_t x = s | (std::uint32_t(1) << i);
            std::uint32_t img = images[s] | (std::uint32_t(1) << j);
            images[x] = img;
            if (a.rank(subset(x)) != b.rank(subset(img))) {
                ok = false;
                break;
            }
            if (s == 0) break;
        }
        if (ok && extend_isomorphism(a, b, perm, images, used | (std::uint32_t(1) << j), i + 1))
            return true;
    }
    return false;
}

}  // namespace

bool rank_isomorphic(const matroid& a, const matroid& b) {
    if (a.size() != b.size()) return false;
    if (a.rank() != b.rank()) return false;
    int n = a.size();
    if (n > 12) throw std::invalid_argument("ground set too large for isomorphism search");
    std::vector<int> perm(n);
    std::vector<std::uint32_t> images(std::size_t(1) << n, 0);
    return extend_isomorphism(a, b, perm, images, 0, 0);
}

subset closure(const matroid& m, subset x) {
    int rx = m.rank(x);
    subset out = x;
    for (int e : m.ground() - x)
        if (m.rank(x.with(e)) == rx) out = out.with(e);
    return out;
}

subset coclosure(const matroid& m, subset x) {
    int rx = m.corank(x);
    subset out = x;
    for (int e : m.ground() - x)
        if (m.corank(x.with(e)) == rx) out = out.with(e);
    return out;
}

subset full_closure(const matroid& m, subset x) {
    subset cur = x;
    for (;;) {
        subset next = coclosure(m, closure(m, cur));
        if (next == cur) return cur;
        cur = next;
    }
}

bool is_closed(const matroid& m, subset x) { return closure(m, x) == x; }

bool is_coclosed(const matroid& m, subset x) { return coclosure(m, x) == x; }

subset loops(const matroid& m) {
    subset out;
    for (int e : m.ground())
        if (m.rank(subset::single(e)) == 0) out = out.with(e);
    return out;
}

subset coloops(const matroid& m) {
    subset out;
    for (int e : m.ground())
        if (m.corank(subset::single(e)) == 0) out = out.with(e);
    return out;
}

std::vector<subset> parallel_classes(const matroid& m) {
    std::vector<subset> out;
    subset seen = loops(m);
    for (int e : m.ground() - seen) {
        if (seen.contains(e)) continue;
        subset cls = subset::single(e);
        for (int f : m.ground() - seen - cls) {
            if (f <= e) continue;
            if (m.rank(subset::of({e, f})) == 1) cls = cls.with(f);
        }
        seen = seen | cls;
        if (cls.size() >= 2) out.push_back(cls);
    }
    return out;
}

std::vector<subset> series_classes(const matroid& m) { return parallel_classes(m.dual()); }

std::vector<subset> triangles(const matroid& m) {
    std::vector<subset> out;
    int n = m.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                subset t = subset::of({a, b, c});
                if (m.rank(t) != 2) continue;
                bool ok = true;
                for (int e : t)
                    if (m.rank(t.without(e)) != 2 || m.rank(subset::single(e)) != 1) ok = false;
                if (ok) out.push_back(t);
            }
    return out;
}

std::vector<subset> triads(const matroid& m) { return triangles(m.dual()); }

static simplification simplify_impl(const matroid& m, bool dualize) {
    matroid view = dualize ? m.dual() : m;
    subset drop = loops(view);
    for (subset cls : parallel_classes(view)) {
        // Keep the smallest-labeled element of each class.
        int best = -1, best_label = 0;
        for (int e : cls) {
            int l = view.label_of(e);
            if (best < 0 || l < best_label) {
                best = e;
                best_label = l;
            }
        }
        drop = drop | (cls.without(best));
    }
    matroid reduced = m.deleted(drop);
    return {reduced, reduced.labels()};
}

simplification simplify(const matroid& m) { return simplify_impl(m, false); }

simplification cosimplify(const matroid& m) { return simplify_impl(m, true); }

std::vector<subset> circuits(const matroid& m, int max_size) {
    std::vector<subset> out;
    std::uint32_t top = subset::full(m.size()).bits();
    for (std::uint32_t x = 1; x <= top && top != 0; ++x) {
        subset s(x);
        if (max_size >= 0 && s.size() > max_size) continue;
        if (m.rank(s) >= s.size()) continue;  // independent
        bool minimal = true;
        for (int e : s)
            if (m.rank(s.without(e)) < s.size() - 1) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool is_connected(const matroid& m) {
    int n = m.size();
    if (n <= 1) return true;
    int rm = m.rank();
    std::uint32_t top = subset::full(n).bits();
    for (std::uint32_t x = 1; x < top; x += 2) {  // canonical side contains element 0
        subset s(x);
        if (m.rank(s) + m.rank(s.complement(n)) - rm == 0) return false;
    }
    return true;
}

std::optional<minor_spec> has_minor(const matroid& m, const matroid& n) {
    for (int l : n.labels())
        if (!m.has_label(l)) throw std::invalid_argument("label mismatch: minor not within ground set");
    subset keep = m.indices_of(n.labels());
    subset removed = m.ground() - keep;
    if (n.rank() > m.rank()) return std::nullopt;
    std::uint32_t rbits = removed.bits();
    // Enumerate contraction subsets of the removed set in ascending mask order.
    std::uint32_t c = 0;
    for (;;) {
        subset contract(c);
        minor_spec spec{contract, removed - contract};
        matroid cand = m.minor(spec);
        if (same_labeled_matroid(cand, n)) return spec;
        if (c == rbits) break;
        c = (c - rbits) & rbits;  // next subset of removed
    }
    return std::nullopt;
}

bool has_minor_isomorphic(const matroid& m, const matroid& n) {
    if (m.size() > 12) throw std::invalid_argument("ground set too large for isomorphism search");
    if (n.size() > m.size()) return false;
    // Choose the retained set, then split the rest into contract/delete.
    std::uint32_t top = subset::full(m.size()).bits();
    for (std::uint32_t keep = 0; keep <= top; ++keep) {
        if (std::popcount(keep) != n.size()) continue;
        subset removed = m.ground() - subset(keep);
        std::uint32_t rbits = removed.bits();
        std::uint32_t c = 0;
        for (;;) {
            matroid cand = m.minor({subset(c), removed - subset(c)});
            if (cand.rank() == n.rank() && rank_isomorphic(cand, n)) return true;
            if (c == rbits) break;
            c = (c - rbits) & rbits;
        }
    }
    return false;
}

namespace {

// Rewrite (C, D) so that C is independent and D is coindependent without
// changing the minor.
minor_spec normalize_minor_spec(const matroid& m, minor_spec spec) {
    // Contract only a basis of C; the rest of C becomes loops, so delete it.
    subset c = spec.contract, basis;
    for (int e : c)
        if (m.rank(basis.with(e)) > m.rank(basis)) basis = basis.with(e);
    subset d = spec.del | (c - basis);
    c = basis;
    // Move rank-critical deleted elements over to the contraction side.
    subset keep = m.ground() - c - d;
    matroid after_c = m.contracted(c);
    subset keep_in = after_c.ground();
    // Indices shift under contraction; work with labels.
    std::vector<int> keep_labels = m.labels_of(keep);
    subset keep_local = after_c.indices_of(keep_labels);
    subset base;  // basis of the restriction to the kept elements
    for (int e : keep_local)
        if (after_c.rank(base.with(e)) > base.size()) base = base.with(e);
    subset t;  // deleted elements extending that basis
    for (int e : keep_in - keep_local)
        if (after_c.rank((base | t).with(e)) > after_c.rank(base | t)) t = t.with(e);
    subset t_in_m = m.indices_of(after_c.labels_of(t));
    return {c | t_in_m, d - t_in_m};
}

}  // namespace

minor_spec remove_loops_coloops_minor(const matroid& m, const minor_spec& spec) {
    if (!is_connected(m)) throw std::invalid_argument("host matroid is disconnected");
    matroid n0 = m.minor(spec);
    int defects = (loops(n0) | coloops(n0)).size();
    minor_spec cur = normalize_minor_spec(m, spec);
    int guard = 2 * m.size() + 2;
    while (guard-- > 0) {
        matroid n = m.minor(cur);
        subset lp = loops(n), cl = coloops(n);
        if (lp.empty() && cl.empty()) break;
        bool fixing_loop = !lp.empty();
        // Work in the dual for a coloop; the construction is self-dual.
        matroid host = fixing_loop ? m : m.dual();
        minor_spec side = fixing_loop ? cur : minor_spec{cur.del, cur.contract};
        matroid nn = fixing_loop ? n : n.dual();
        int bad = fixing_loop ? lp.lowest() : cl.lowest();
        int bad_in_host = host.index_of(nn.label_of(bad));
        // Fundamental circuit of the defective element through the contracted set.
        subset x = side.contract.with(bad_in_host);
        for (;;) {
            bool shrunk = false;
            for (int e : x.without(bad_in_host)) {
                subset y = x.without(e);
                if (host.rank(y) < y.size()) {
                    x = y;
                    shrunk = true;
                    break;
                }
            }
            if (!shrunk) break;
        }
        if (host.rank(x) >= x.size() || !x.contains(bad_in_host) || x.size() < 2)
            throw invariant_violation("expected a circuit through the defective element");
        int f = (x.without(bad_in_host)).lowest();
        side.contract = side.contract.without(f);
        cur = fixing_loop ? side : minor_spec{side.del, side.contract};
    }
    matroid result = m.minor(cur);
    if (!(loops(result) | coloops(result)).empty())
        throw invariant_violation("loop/coloop promotion did not converge");
    if (result.size() > n0.size() + defects)
        throw invariant_violation("promoted minor exceeds the size bound");
    if (!has_minor(result, n0)) throw invariant_violation("promoted minor lost the original minor");
    return cur;
}

}  // namespace matroidlab
