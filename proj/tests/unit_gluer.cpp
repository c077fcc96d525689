#include <random>
#include <set>

#include "doctest.h"
#include "ramsey/gluer.hpp"
#include "test_helpers.hpp"

using namespace ramsey;

namespace {

// Oracle: every d-multiset of independent sets, constructed and filtered by
// is_ramsey, as canonical forms. Independent of the index machinery.
std::set<std::string> glue_brute(const Graph& core, int d, int t, std::optional<int> max_edges,
                                 std::optional<int> min_degree = {}) {
    std::set<std::string> out;
    auto sets = th::independent_sets_brute(core, 0);
    std::vector<std::size_t> pick(std::size_t(d), 0);
    while (true) {
        std::vector<VertexSet> chosen;
        for (std::size_t i : pick) chosen.push_back(sets[i]);
        Graph g = construct_glued_graph(core, chosen);
        bool ok = true;
        if (max_edges && g.edge_count() > *max_edges) ok = false;
        if (ok && min_degree && g.min_degree() < *min_degree) ok = false;
        if (ok && is_ramsey(g, 3, t + 1)) out.insert(canonical_form(g).bytes);
        // next non-decreasing tuple
        int j = d - 1;
        while (j >= 0 && pick[std::size_t(j)] == sets.size() - 1) --j;
        if (j < 0) break;
        std::size_t v = ++pick[std::size_t(j)];
        for (int k = j + 1; k < d; ++k) pick[std::size_t(k)] = v;
    }
    if (d == 0) {
        Graph g = construct_glued_graph(core, {});
        if ((!max_edges || g.edge_count() <= *max_edges) &&
            (!min_degree || g.min_degree() >= *min_degree) && is_ramsey(g, 3, t + 1))
            out.insert(canonical_form(g).bytes);
    }
    return out;
}

std::set<std::string> keys_of(const CanonicalGraphSet& set) {
    std::set<std::string> out;
    for (auto& [k, g] : set) out.insert(k);
    return out;
}

}  // namespace

TEST_CASE("construct_glued_graph") {
    Graph k2(2);
    k2.add_edge(0, 1);
    SUBCASE("K2 with two singletons gives C5") {
        Graph g = construct_glued_graph(k2, {VertexSet(0b01), VertexSet(0b10)});
        CHECK(g.order() == 5);
        CHECK(g.edge_count() == 5);
        CHECK(th::isomorphic_brute(g, th::cycle(5)));
    }
    SUBCASE("empty core with one empty set gives K2") {
        Graph g = construct_glued_graph(Graph(0), {VertexSet()});
        CHECK(g.order() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("isolated apex for d = 0") {
        Graph g = construct_glued_graph(th::cycle(5), {});
        CHECK(g.order() == 6);
        CHECK(g.degree(5) == 0);
    }
    SUBCASE("edge count identity") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            Graph core = th::random_triangle_free(rng, 3 + int(rng() % 8), 0.4);
            auto sets = th::independent_sets_brute(core, 0);
            int d = int(rng() % 4);
            std::vector<VertexSet> chosen;
            long sum = 0;
            for (int i = 0; i < d; ++i) {
                chosen.push_back(sets[rng() % sets.size()]);
                sum += chosen.back().size();
            }
            Graph g = construct_glued_graph(core, chosen);
            CHECK(g.edge_count() == core.edge_count() + d + sum);
        }
    }
    SUBCASE("rejects dependent sets") {
        CHECK_THROWS_AS(construct_glued_graph(k2, {VertexSet(0b11)}), std::invalid_argument);
    }
}

TEST_CASE("search visits every maximal set for d = 1") {
    MaximalIsIndex index = build_index(th::cycle(5), 3, 0);
    AlphaSolver solver(index.core);
    std::set<int> seen;
    search_compatible_maximal_tuples(index, 1, solver, [&](const CompatibleTuple& t) {
        REQUIRE(t.indices.size() == 1);
        seen.insert(t.indices[0]);
    });
    CHECK(seen.size() == 5);
}

TEST_CASE("search pairs on the C5 index match brute force") {
    Graph c5 = th::cycle(5);
    MaximalIsIndex index = build_index(c5, 3, 0);
    AlphaSolver solver(c5);
    std::set<std::pair<int, int>> found;
    search_compatible_maximal_tuples(index, 2, solver, [&](const CompatibleTuple& t) {
        found.insert({t.indices[0], t.indices[1]});
    });
    std::set<std::pair<int, int>> expect;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            VertexSet rest = c5.vertices() - (index.maximal_sets[std::size_t(i)] |
                                              index.maximal_sets[std::size_t(j)]);
            if (th::alpha_brute(c5, rest) <= 1) expect.insert({i, j});
        }
    CHECK(found == expect);
}

TEST_CASE("visited tuples satisfy the compatibility invariant from scratch") {
    std::mt19937_64 rng(66);
    int done = 0;
    while (done < 25) {
        Graph g = th::random_triangle_free(rng, 4 + int(rng() % 6), 0.45);
        int t = th::alpha_brute(g, g.vertices()) + 1;
        if (t < 2) continue;
        MaximalIsIndex index = build_index(g, t, 0);
        AlphaSolver solver(g);
        int d = 1 + int(rng() % 3);
        search_compatible_maximal_tuples(index, d, solver, [&](const CompatibleTuple& tuple) {
            // every nonempty K: alpha(V minus union) <= t - |K|
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
                VertexSet uni;
                for (int k = 0; k < d; ++k)
                    if ((mask >> k) & 1)
                        uni = uni | index.maximal_sets[std::size_t(tuple.indices[std::size_t(k)])];
                CHECK(th::alpha_brute(g, g.vertices() - uni) <= t - std::popcount(mask));
            }
        });
        ++done;
    }
}

TEST_CASE("expansion respects the edge budget") {
    Graph c5 = th::cycle(5);
    MaximalIsIndex index = build_index(c5, 3, 0);
    AlphaSolver solver(c5);
    search_compatible_maximal_tuples(index, 2, solver, [&](const CompatibleTuple& tuple) {
        long max_sum = index.maximal_sets[std::size_t(tuple.indices[0])].size() +
                       index.maximal_sets[std::size_t(tuple.indices[1])].size();
        int visits = 0;
        expand_maximal_solution(index, tuple, max_sum, solver,
                                [&](const std::vector<VertexSet>& sets) {
                                    long sum = 0;
                                    for (VertexSet s : sets) sum += s.size();
                                    CHECK(sum <= max_sum);
                                    ++visits;
                                });
        CHECK(visits >= 1);  // the maximal tuple itself fits the budget
        // a budget below the forced minimum sizes yields nothing
        expand_maximal_solution(index, tuple, -1, solver,
                                [&](const std::vector<VertexSet>&) { FAIL("over budget"); });
    });
}

TEST_CASE("glue matches brute force on small cores") {
    std::mt19937_64 rng(67);
    int done = 0;
    while (done < 40) {
        Graph core = th::random_triangle_free(rng, 2 + int(rng() % 6), 0.45);
        int alpha = th::alpha_brute(core, core.vertices());
        int t = alpha + 1 + int(rng() % 2);
        for (int d = 0; d <= std::min(3, t); ++d) {
            std::optional<int> cap;
            if (rng() % 2) cap = core.edge_count() + d + int(rng() % 8);
            GluingProblem problem{core, d, t, cap, {}};
            CHECK(keys_of(glue(problem)) == glue_brute(core, d, t, cap));
        }
        ++done;
    }
}

TEST_CASE("glue honours the degree floor") {
    std::mt19937_64 rng(68);
    int done = 0;
    while (done < 15) {
        Graph core = th::random_triangle_free(rng, 3 + int(rng() % 5), 0.5);
        int t = th::alpha_brute(core, core.vertices()) + 1;
        for (int d = 1; d <= std::min(3, t); ++d) {
            GluingProblem problem{core, d, t, {}, 2};
            CHECK(keys_of(glue(problem)) == glue_brute(core, d, t, {}, 2));
        }
        ++done;
    }
}

TEST_CASE("glue named examples") {
    Graph k2(2);
    k2.add_edge(0, 1);
    SUBCASE("K2 cores reach C5") {
        CanonicalGraphSet out = glue(GluingProblem{k2, 2, 2, 5, {}});
        CHECK(out.count(canonical_form(th::cycle(5)).bytes) == 1);
    }
    SUBCASE("isolated apex on C5") {
        // adding an isolated vertex to C5 keeps alpha at 3, inside R(3,4)
        CanonicalGraphSet out = glue(GluingProblem{th::cycle(5), 0, 3, 5, {}});
        Graph c5_plus(6);
        for (int i = 0; i < 5; ++i) c5_plus.add_edge(i, (i + 1) % 5);
        CHECK(keys_of(out) == std::set<std::string>{canonical_form(c5_plus).bytes});
    }
    SUBCASE("precondition violations throw") {
        CHECK_THROWS_AS(glue(GluingProblem{th::edgeless(4), 1, 3, {}, {}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(glue(GluingProblem{k2, 3, 2, {}, {}}), std::invalid_argument);
    }
}
