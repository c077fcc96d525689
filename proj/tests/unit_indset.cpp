#include <random>

#include "doctest.h"
#include "ramsey/indset.hpp"
#include "test_helpers.hpp"

using namespace ramsey;

TEST_CASE("maximal independent sets of named graphs") {
    auto c5 = enumerate_maximal_independent_sets(th::cycle(5));
    CHECK(c5.size() == 5);
    for (VertexSet s : c5) CHECK(s.size() == 2);

    auto edgeless = enumerate_maximal_independent_sets(th::edgeless(6));
    REQUIRE(edgeless.size() == 1);
    CHECK(edgeless[0] == VertexSet::full(6));

    auto pet = enumerate_maximal_independent_sets(th::petersen());
    CHECK(pet.size() == 15);
    int size4 = 0, size3 = 0;
    for (VertexSet s : pet) {
        if (s.size() == 4) ++size4;
        if (s.size() == 3) ++size3;
    }
    CHECK(size4 == 5);
    CHECK(size3 == 10);
}

TEST_CASE("maximal independent sets match brute force") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = th::random_graph(rng, 1 + int(rng() % 12), 0.4);
        auto fast = enumerate_maximal_independent_sets(g);
        auto brute = th::maximal_independent_sets_brute(g);
        CHECK(fast == brute);
        // no member is a strict subset of another
        for (VertexSet a : fast)
            for (VertexSet b : fast)
                if (!(a == b)) CHECK_FALSE(a.subset_of(b));
    }
}

TEST_CASE("independent set enumeration") {
    CHECK(enumerate_independent_sets(th::cycle(5), 0).size() == 11);
    CHECK(enumerate_independent_sets(th::complete(3), 1).size() == 3);
    CHECK(enumerate_independent_sets(th::cycle(5), 6).empty());

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = th::random_graph(rng, 1 + int(rng() % 14), 0.45);
        int min_size = int(rng() % 3);
        CHECK(enumerate_independent_sets(g, min_size) == th::independent_sets_brute(g, min_size));
    }
}

TEST_CASE("build_index on K2 with tbound 2") {
    Graph k2(2);
    k2.add_edge(0, 1);
    MaximalIsIndex index = build_index(k2, 2, 0);
    REQUIRE(index.maximal_sets.size() == 2);
    REQUIRE(index.witness_sets.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(index.maximal_sets[i].size() == 1);
        // the only witness disjoint from a singleton is the other vertex
        CHECK(index.witness_bv[i].count() == 1);
        int v = index.maximal_sets[i].lowest();
        long j = index.witness_bv[i].next_set_bit(0);
        CHECK_FALSE(index.witness_sets[std::size_t(j)].contains(v));
    }
    // the two distinct singletons are compatible, repeats are not
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(index.pair_bv[i].test(1 - i));
        CHECK_FALSE(index.pair_bv[i].test(i));
    }
}

TEST_CASE("build_index on C5") {
    SUBCASE("tbound 4: no witnesses, everything compatible") {
        MaximalIsIndex index = build_index(th::cycle(5), 4, 0);
        CHECK(index.witness_sets.empty());
        CHECK(index.block_starts.empty());
        CHECK(index.head_size == 5);
        for (auto& row : index.pair_bv) CHECK(row.count() == 5);
    }
    SUBCASE("tbound 3: pair compatibility equals the alpha condition") {
        MaximalIsIndex index = build_index(th::cycle(5), 3, 0);
        REQUIRE(index.witness_sets.size() == 5);
        Graph c5 = th::cycle(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                VertexSet rest = c5.vertices() - (index.maximal_sets[i] | index.maximal_sets[j]);
                bool compatible = th::alpha_brute(c5, rest) <= 3 - 2;
                CHECK(index.pair_bv[i].test(j) == compatible);
            }
    }
}

TEST_CASE("pair compatibility soundness on random cores") {
    std::mt19937_64 rng(33);
    int done = 0;
    while (done < 50) {
        Graph g = th::random_triangle_free(rng, 4 + int(rng() % 9), 0.4);
        int t = th::alpha_brute(g, g.vertices()) + 1;
        MaximalIsIndex index = build_index(g, t, 0);
        for (std::size_t i = 0; i < index.maximal_sets.size(); ++i)
            for (std::size_t j = i; j < index.maximal_sets.size(); ++j) {
                VertexSet rest =
                    g.vertices() - (index.maximal_sets[i] | index.maximal_sets[j]);
                CHECK(index.pair_bv[i].test(j) == (th::alpha_brute(g, rest) <= t - 2));
            }
        ++done;
    }
}

TEST_CASE("superset compatibility is monotone") {
    // witness_bv(S) AND witness_bv(T) == 0 must hold for independent supersets
    std::mt19937_64 rng(34);
    int done = 0;
    while (done < 1000) {
        Graph g = th::random_triangle_free(rng, 5 + int(rng() % 7), 0.4);
        int t = th::alpha_brute(g, g.vertices()) + 1;
        if (t < 3) continue;
        auto witnesses = [&](VertexSet s) {
            std::uint64_t bits = 0;
            int j = 0;
            for (VertexSet w : th::independent_sets_brute(g, t - 1)) {
                if (w.size() != t - 1) continue;
                if (!w.intersects(s)) bits |= std::uint64_t{1} << j;
                ++j;
            }
            return bits;
        };
        auto sets = th::independent_sets_brute(g, 0);
        VertexSet s = sets[rng() % sets.size()];
        VertexSet t_set = sets[rng() % sets.size()];
        if ((witnesses(s) & witnesses(t_set)) != 0) continue;
        // grow both to maximal supersets
        auto grow = [&](VertexSet x) {
            for (int v = 0; v < g.order(); ++v)
                if (!x.contains(v) && th::independent_in(g, x.bits | (std::uint64_t{1} << v)))
                    x.add(v);
            return x;
        };
        VertexSet s2 = grow(s), t2 = grow(t_set);
        CHECK((witnesses(s2) & witnesses(t2)) == 0);
        ++done;
    }
}

TEST_CASE("subset representative assignment") {
    MaximalIsIndex index = build_index(th::cycle(5), 3, 0);
    // every independent set appears exactly once, inside its representative
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < index.maximal_sets.size(); ++i)
        for (VertexSet s : index.allowed_subsets[i]) {
            CHECK(s.subset_of(index.maximal_sets[i]));
            ++assigned;
        }
    CHECK(assigned == enumerate_independent_sets(th::cycle(5), 0).size());
    // a maximal set is assigned to itself
    for (std::size_t i = 0; i < index.maximal_sets.size(); ++i) {
        bool found = false;
        for (VertexSet s : index.allowed_subsets[i])
            if (s == index.maximal_sets[i]) found = true;
        CHECK(found);
    }
    // the empty set lives with the bitmask-smallest maximal set {0,2}
    for (std::size_t i = 0; i < index.maximal_sets.size(); ++i) {
        bool has_empty = false;
        for (VertexSet s : index.allowed_subsets[i])
            if (s.empty()) has_empty = true;
        CHECK(has_empty == (index.maximal_sets[i] == VertexSet(0b101)));
        // singleton {0}: bitmask-smallest maximal set containing vertex 0 is {0,2}
        bool has_v0 = false;
        for (VertexSet s : index.allowed_subsets[i])
            if (s == VertexSet(0b1)) has_v0 = true;
        CHECK(has_v0 == (index.maximal_sets[i] == VertexSet(0b101)));
    }
}

TEST_CASE("block ordering on C5 with tbound 3") {
    MaximalIsIndex index = build_index(th::cycle(5), 3, 0);
    // derived by running the rule by hand: head {0,3}; then {0,2},{2,4};
    // tail block {1,3},{1,4}
    std::vector<std::uint64_t> expect{0b01001, 0b00101, 0b10100, 0b01010, 0b10010};
    REQUIRE(index.maximal_sets.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(index.maximal_sets[i].bits == expect[i]);
    CHECK(index.head_size == 1);
    CHECK(index.block_starts == std::vector<int>{1, 3});
    CHECK(index.blocks_after(0) == 2);
    CHECK(index.blocks_after(1) == 1);
    CHECK(index.blocks_after(2) == 1);
    CHECK(index.blocks_after(3) == 0);

    // within each block no two members are pairwise compatible
    for (std::size_t b = 0; b < index.block_starts.size(); ++b) {
        int start = index.block_starts[b];
        int end = b + 1 < index.block_starts.size() ? index.block_starts[b + 1]
                                                    : index.set_count();
        for (int i = start; i < end; ++i)
            for (int j = start; j < end; ++j)
                CHECK_FALSE(index.pair_bv[std::size_t(i)].test(std::size_t(j)));
    }
}

TEST_CASE("order_blocks leaves witness-free indexes untouched") {
    MaximalIsIndex index = build_index(th::cycle(5), 4, 0);
    CHECK(index.head_size == index.set_count());
    CHECK(index.block_starts.empty());
}

TEST_CASE("build_index rejects non-ramsey cores") {
    CHECK_THROWS_AS(build_index(th::complete(3), 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_index(th::edgeless(4), 3, 0), std::invalid_argument);
}
