#include <algorithm>

#include "doctest.h"
#include "matroidlab/corpus.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/matroid.hpp"

using namespace matroidlab;

namespace {

// Closed-form oracles, independent of the library's evaluation path.
int uniform_rank(int r, subset x) { return std::min(x.size(), r); }

matroid u24() { return matroid::uniform(2, 4); }

}  // namespace

TEST_SUITE_BEGIN("matroid core");

TEST_CASE("subset basics") {
    subset s = subset::of({0, 2, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.complement(6) == subset::of({1, 3, 4}));
    CHECK((s | subset::single(1)) == subset::of({0, 1, 2, 5}));
    CHECK((s - subset::single(0)) == subset::of({2, 5}));
    CHECK(s.to_string() == "{0,2,5}");
    std::vector<int> elems = to_elements(s);
    CHECK(elems == std::vector<int>{0, 2, 5});
}

TEST_CASE("subset lexicographic order") {
    CHECK(lex_less(subset::of({0, 1, 2}), subset::of({0, 1, 3})));
    CHECK(lex_less(subset::of({0, 1}), subset::of({0, 1, 2})));
    CHECK(lex_less(subset::of({0, 1, 3}), subset::of({0, 2})));
    CHECK(!lex_less(subset::of({0, 2}), subset::of({0, 1, 3})));
    CHECK(!lex_less(subset::of({1}), subset::of({1})));
}

TEST_CASE("uniform ranks") {
    matroid m = u24();
    CHECK(m.rank(subset{}) == 0);
    CHECK(m.rank(subset::of({0, 1, 2})) == 2);
    for (std::uint32_t x = 0; x < 16; ++x) CHECK(m.rank(subset(x)) == uniform_rank(2, subset(x)));
    CHECK_THROWS_AS(m.rank(subset::of({4})), std::invalid_argument);
}

TEST_CASE("graphic ranks") {
    matroid k4 = k4_graph();
    CHECK(k4.rank() == 3);
    CHECK(k4.rank(k4.ground()) == 3);
    // Any single edge has rank 1, any triangle rank 2.
    CHECK(k4.rank(subset::of({0})) == 1);
    CHECK(k4.rank(subset::of({0, 1, 3})) == 2);  // edges 01, 02, 12
    matroid loopy = matroid::graphic(2, {{0, 0}, {0, 1}});
    CHECK(loopy.rank(subset::of({0})) == 0);
    CHECK(loopy.rank(subset::of({0, 1})) == 1);
}

TEST_CASE("linear ranks over GF(2) and GF(3)") {
    matroid m2 = matroid::linear(2, {{1, 0, 1}, {0, 1, 1}});
    CHECK(m2.rank() == 2);
    CHECK(m2.rank(subset::of({0, 1, 2})) == 2);
    CHECK(m2.rank(subset::of({2})) == 1);
    // Over GF(3) the column (1,2) is not parallel to (1,1).
    matroid m3 = matroid::linear(3, {{1, 1}, {1, 2}});
    CHECK(m3.rank(subset::of({0, 1})) == 2);
    matroid m3b = matroid::linear(3, {{1, 2}, {1, 2}});
    CHECK(m3b.rank(subset::of({0, 1})) == 1);
    CHECK_THROWS_AS(matroid::linear(5, {{1}}), std::invalid_argument);
}

TEST_CASE("duals and minors") {
    CHECK(same_rank_function(u24().dual(), u24()));
    matroid u36 = matroid::uniform(3, 6);
    matroid c = u36.contracted(subset::of({0}));
    CHECK(c.size() == 5);
    CHECK(c.labels() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(same_rank_function(c, matroid::uniform(2, 5)));
    matroid mm = u36.minor({subset::of({2, 3}), subset::of({4, 5})});
    CHECK(mm.labels() == std::vector<int>{0, 1});
    CHECK(same_rank_function(mm, matroid::uniform(1, 2)));
    // Dual rank formula and double dual, on every subset of a graphic matroid.
    matroid k4 = k4_graph();
    for (std::uint32_t x = 0; x < 64; ++x) {
        subset s(x);
        CHECK(k4.corank(s) == s.size() + k4.rank(s.complement(6)) - k4.rank());
        CHECK(k4.dual().dual().rank(s) == k4.rank(s));
    }
    CHECK_THROWS_AS(u36.minor({subset::of({0}), subset::of({0, 1})}), std::invalid_argument);
}

TEST_CASE("closure operators") {
    matroid m = u24();
    CHECK(closure(m, subset::of({0, 1})) == subset::of({0, 1, 2, 3}));
    matroid loopy = matroid::graphic(2, {{0, 0}, {0, 1}});
    CHECK(closure(loopy, subset{}) == loops(loopy));
    CHECK(loops(loopy) == subset::of({0}));
    matroid k4 = k4_graph();
    CHECK(full_closure(k4, subset::of({0})) == subset::of({0}));
    // Alternating fixpoint grows through both operators in U(1,2) + coloop.
    matroid path = matroid::graphic(3, {{0, 1}, {1, 2}});
    CHECK(coclosure(path, subset::of({0})) == subset::of({0}));
}

TEST_CASE("loops, parallel classes, triangles, triads") {
    CHECK(parallel_classes(matroid::uniform(1, 3)) == std::vector<subset>{subset::of({0, 1, 2})});
    CHECK(triangles(matroid::uniform(2, 3)) == std::vector<subset>{subset::of({0, 1, 2})});
    CHECK(coloops(matroid::uniform(3, 3)) == subset::of({0, 1, 2}));

    // Independent count oracle over all 3-subsets of U(2,4) and its dual: the
    // dual of U(2,4) is itself, so every 3-set is both a triangle and a triad.
    matroid m = u24();
    int tri = 0, tria = 0;
    for (std::uint32_t x = 0; x < 16; ++x) {
        subset s(x);
        if (s.size() != 3) continue;
        bool is_tri = m.rank(s) == 2;
        bool is_tria = m.corank(s) == 2;
        for (int e : s) {
            is_tri = is_tri && m.rank(s.without(e)) == 2 && m.rank(subset::single(e)) == 1;
            is_tria = is_tria && m.corank(s.without(e)) == 2 && m.corank(subset::single(e)) == 1;
        }
        tri += is_tri;
        tria += is_tria;
    }
    CHECK(tri == 4);
    CHECK(tria == 4);
    CHECK(triangles(m).size() == 4);
    CHECK(triads(m).size() == 4);

    // K4: four triangles, and the triads are exactly the four vertex stars.
    matroid k4 = k4_graph();
    CHECK(triangles(k4).size() == 4);
    std::vector<subset> stars = triads(k4);
    CHECK(stars.size() == 4);
    CHECK(std::find(stars.begin(), stars.end(), subset::of({0, 1, 2})) != stars.end());
}

TEST_CASE("simplify and cosimplify") {
    simplification s = simplify(matroid::uniform(1, 3));
    CHECK(s.m.size() == 1);
    CHECK(s.kept == std::vector<int>{0});
    CHECK(same_rank_function(s.m, matroid::uniform(1, 1)));
    CHECK(simplify(u24()).m.size() == 4);
    simplification cs = cosimplify(matroid::uniform(1, 3).dual());
    CHECK(cs.m.size() == 1);
    CHECK(cs.kept == std::vector<int>{0});
}

TEST_CASE("circuits") {
    std::vector<subset> c = circuits(u24());
    REQUIRE(c.size() == 4);
    CHECK(c.front() == subset::of({0, 1, 2}));
    CHECK(circuits(matroid::uniform(3, 3)).empty());
    std::vector<subset> k4c = circuits(k4_graph());
    int by_size[7] = {};
    for (subset s : k4c) ++by_size[s.size()];
    CHECK(by_size[3] == 4);
    CHECK(by_size[4] == 3);
    CHECK(k4c.size() == 7);
    CHECK(circuits(k4_graph(), 3).size() == 4);
    // Ascending lexicographic order.
    for (std::size_t i = 0; i + 1 < k4c.size(); ++i) CHECK(lex_less(k4c[i], k4c[i + 1]));
}

TEST_CASE("exact minor search") {
    matroid u36 = matroid::uniform(3, 6);
    matroid n = matroid::uniform(1, 2);
    auto spec = has_minor(u36, n);
    REQUIRE(spec.has_value());
    CHECK(spec->contract == subset::of({2, 3}));
    CHECK(spec->del == subset::of({4, 5}));
    CHECK(same_labeled_matroid(u36.minor(*spec), n));

    auto self = has_minor(u36, u36);
    REQUIRE(self.has_value());
    CHECK(self->contract.empty());
    CHECK(self->del.empty());

    CHECK(!has_minor(u24(), matroid::uniform(3, 3)).has_value());
    CHECK_THROWS_AS(has_minor(n, u36), std::invalid_argument);
}

TEST_CASE("isomorphism search") {
    CHECK(rank_isomorphic(u24(), matroid::whirl(2)));
    CHECK(!rank_isomorphic(u24(), matroid::uniform(1, 4)));
    // Relabeled uniform matroids are isomorphic but not label-equal.
    matroid a = matroid::uniform(2, 5);
    matroid b = a.relabeled({4, 3, 2, 1, 0});
    CHECK(rank_isomorphic(a, b));
    CHECK(!same_labeled_matroid(a.contracted(subset::single(0)), a.contracted(subset::single(1))));
}

TEST_CASE("relaxation") {
    matroid w2 = matroid::wheel(2);
    subset rim = subset::of({2, 3});
    CHECK(w2.rank(rim) == 1);
    matroid relaxed = w2.relaxed(rim);
    CHECK(relaxed.rank(rim) == 2);
    for (std::uint32_t x = 0; x < 16; ++x)
        if (subset(x) != rim) CHECK(relaxed.rank(subset(x)) == w2.rank(subset(x)));
    CHECK(same_rank_function(relaxed, u24()));
    CHECK(same_rank_function(matroid::whirl(2), u24()));
    // Spokes of a wheel are not a circuit-hyperplane.
    CHECK_THROWS_AS(w2.relaxed(subset::of({0, 1})), std::invalid_argument);
}

TEST_CASE("connectedness") {
    CHECK(is_connected(u24()));
    CHECK(!is_connected(matroid::graphic(4, {{0, 1}, {2, 3}})));
    CHECK(!is_connected(matroid::uniform(3, 3)));
    CHECK(is_connected(matroid::uniform(1, 2)));
}

TEST_CASE("loop and coloop promotion") {
    matroid m = u24();
    // Contracting {1,2} makes element 0 a loop in the minor on {0}.
    minor_spec spec{subset::of({1, 2}), subset::of({3})};
    matroid n = m.minor(spec);
    REQUIRE(loops(n) == subset::of({0}));
    minor_spec fixed = remove_loops_coloops_minor(m, spec);
    matroid n2 = m.minor(fixed);
    CHECK(n2.size() == 2);
    CHECK((loops(n2) | coloops(n2)).empty());
    CHECK(same_rank_function(n2, matroid::uniform(1, 2)));
    CHECK(has_minor(n2, n).has_value());

    // Dual case: a coloop gets fixed through the same path.
    minor_spec cospec{subset::of({3}), subset::of({1, 2})};
    matroid cn = m.minor(cospec);
    REQUIRE(coloops(cn) == subset::of({0}));
    minor_spec cofixed = remove_loops_coloops_minor(m, cospec);
    matroid cn2 = m.minor(cofixed);
    CHECK((loops(cn2) | coloops(cn2)).empty());
    CHECK(cn2.size() <= cn.size() + 1);
    CHECK(has_minor(cn2, cn).has_value());

    // Unchanged when the minor is already clean.
    minor_spec clean{subset::of({0}), subset{}};
    minor_spec kept = remove_loops_coloops_minor(m, clean);
    CHECK(kept.contract == clean.contract);
    CHECK(kept.del == clean.del);

    CHECK_THROWS_AS(remove_loops_coloops_minor(matroid::uniform(3, 3), clean),
                    std::invalid_argument);
}

TEST_CASE("rank axioms on a seeded corpus sample") {
    for (const auto& [name, m] : corpus(7, 6)) {
        INFO(name);
        std::uint32_t top = subset::full(m.size()).bits();
        CHECK(m.rank(subset{}) == 0);
        for (std::uint32_t x = 0; x <= top; ++x) {
            subset s(x);
            CHECK(m.rank(s) <= s.size());
            for (int e : m.ground() - s) {
                int up = m.rank(s.with(e));
                CHECK(up >= m.rank(s));
                CHECK(up <= m.rank(s) + 1);
            }
            if (top == 0) break;
        }
    }
}

TEST_SUITE_END();
