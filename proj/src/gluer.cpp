#include "ramsey/gluer.hpp"

#include <limits>
#include <stdexcept>

#include "ramsey/canon.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

Graph construct_glued_graph(const Graph& core, const std::vector<VertexSet>& sets) {
    const int n = core.order();
    const int d = int(sets.size());
    Graph g(n + 1 + d);
    for (int v = 0; v < n; ++v)
        for (int u : vertices_of(core.neighbours(v)))
            if (u < v) g.add_edge(u, v);
    for (int i = 0; i < d; ++i) {
        for (int x : vertices_of(sets[std::size_t(i)])) {
            if (sets[std::size_t(i)].intersects(core.neighbours(x)))
                throw std::invalid_argument("construct_glued_graph: set not independent");
            g.add_edge(n + i, x);
        }
        g.add_edge(n + i, n + d);  // apex
    }
    return g;
}

namespace {

struct TupleSearch {
    const MaximalIsIndex& index;
    AlphaSolver& solver;
    int d;
    const std::function<void(const CompatibleTuple&)>& visit;
    std::vector<int> chosen;
    std::vector<BitVec> cand;

    // Ascending |K| then lexicographic; returns the failing level max(K), or
    // -1 when the tuple satisfies every subset condition. Pairs are already
    // guaranteed by pair_bv.
    int full_check() {
        const std::uint64_t full = index.core.vertices().bits;
        std::vector<int> pick;
        for (int m = 3; m <= d; ++m) {
            pick.assign(std::size_t(m), 0);
            for (int i = 0; i < m; ++i) pick[std::size_t(i)] = i;
            while (true) {
                std::uint64_t uni = 0;
                for (int i : pick) uni |= index.maximal_sets[std::size_t(chosen[std::size_t(i)])].bits;
                if (solver.alpha(VertexSet(full & ~uni)) > index.tbound - m)
                    return pick.back();
                int j = m - 1;
                while (j >= 0 && pick[std::size_t(j)] == d - m + j) --j;
                if (j < 0) break;
                ++pick[std::size_t(j)];
                for (int k = j + 1; k < m; ++k) pick[std::size_t(k)] = pick[std::size_t(k - 1)] + 1;
            }
        }
        return -1;
    }

    // Returns the level whose loop should resume (callers above it unwind).
    int descend(int level, long min_index) {
        const int rem_after = d - level - 1;
        for (long j = cand[std::size_t(level)].next_set_bit(std::size_t(min_index)); j >= 0;
             j = cand[std::size_t(level)].next_set_bit(std::size_t(j) + 1)) {
            if (j >= index.head_size && rem_after > index.blocks_after(int(j))) continue;
            chosen[std::size_t(level)] = int(j);
            if (level + 1 == d) {
                int fail = (d >= 3) ? full_check() : -1;
                if (fail < 0)
                    visit(CompatibleTuple{chosen});
                else if (fail < level)
                    return fail;
            } else {
                cand[std::size_t(level + 1)] = cand[std::size_t(level)];
                cand[std::size_t(level + 1)] &= index.pair_bv[std::size_t(j)];
                int resume = descend(level + 1, j);
                if (resume < level) return resume;
            }
        }
        return level - 1;
    }
};

}  // namespace

void search_compatible_maximal_tuples(const MaximalIsIndex& index, int d, AlphaSolver& solver,
                                      const std::function<void(const CompatibleTuple&)>& visit) {
    if (d == 0) {
        visit(CompatibleTuple{});
        return;
    }
    TupleSearch search{index, solver, d, visit, std::vector<int>(std::size_t(d)), {}};
    search.cand.assign(std::size_t(d), BitVec(std::size_t(index.set_count()), true));
    search.descend(0, 0);
}

namespace {

struct Expansion {
    const MaximalIsIndex& index;
    AlphaSolver& solver;
    const CompatibleTuple& tuple;
    long budget;
    const std::function<void(const std::vector<VertexSet>&)>& visit;
    int d;
    std::vector<const std::vector<VertexSet>*> lists;
    std::vector<long> suffix_min;
    std::vector<VertexSet> chosen;
    std::vector<std::size_t> chosen_pos;
    // all unions of the chosen prefix with their cardinalities, per level
    std::vector<std::vector<std::pair<std::uint64_t, int>>> prefix_unions;

    bool compatible_with_prefix(int pos, VertexSet s) {
        const std::uint64_t full = index.core.vertices().bits;
        for (auto [uni, cnt] : prefix_unions[std::size_t(pos)]) {
            std::uint64_t u = uni | s.bits;
            if (solver.alpha(VertexSet(full & ~u)) > index.tbound - (cnt + 1)) return false;
        }
        return true;
    }

    void descend(int pos, long size_sum) {
        if (pos == d) {
            visit(chosen);
            return;
        }
        const auto& list = *lists[std::size_t(pos)];
        std::size_t start = 0;
        if (pos > 0 && tuple.indices[std::size_t(pos)] == tuple.indices[std::size_t(pos - 1)])
            start = chosen_pos[std::size_t(pos - 1)];  // multiset positions interchangeable
        for (std::size_t ci = start; ci < list.size(); ++ci) {
            VertexSet s = list[ci];
            if (size_sum + s.size() + suffix_min[std::size_t(pos) + 1] > budget) break;
            if (!compatible_with_prefix(pos, s)) continue;
            chosen[std::size_t(pos)] = s;
            chosen_pos[std::size_t(pos)] = ci;
            auto& next = prefix_unions[std::size_t(pos) + 1];
            next = prefix_unions[std::size_t(pos)];
            for (auto [uni, cnt] : prefix_unions[std::size_t(pos)])
                next.emplace_back(uni | s.bits, cnt + 1);
            descend(pos + 1, size_sum + s.size());
        }
    }
};

}  // namespace

void expand_maximal_solution(const MaximalIsIndex& index, const CompatibleTuple& tuple,
                             long edge_budget, AlphaSolver& solver,
                             const std::function<void(const std::vector<VertexSet>&)>& visit) {
    const int d = int(tuple.indices.size());
    if (d == 0) {
        visit({});
        return;
    }
    Expansion exp{index, solver, tuple, edge_budget, visit, d, {}, {}, {}, {}, {}};
    exp.lists.reserve(std::size_t(d));
    for (int i : tuple.indices) {
        const auto& list = index.allowed_subsets[std::size_t(i)];
        if (list.empty()) return;
        exp.lists.push_back(&list);
    }
    exp.suffix_min.assign(std::size_t(d) + 1, 0);
    for (int i = d - 1; i >= 0; --i)
        exp.suffix_min[std::size_t(i)] =
            exp.suffix_min[std::size_t(i) + 1] + exp.lists[std::size_t(i)]->front().size();
    exp.chosen.assign(std::size_t(d), VertexSet());
    exp.chosen_pos.assign(std::size_t(d), 0);
    exp.prefix_unions.assign(std::size_t(d) + 1, {});
    exp.prefix_unions[0] = {{0, 0}};
    exp.descend(0, 0);
}

namespace {

void glue_impl(const GluingProblem& p, const std::function<void(const Graph&)>& emit) {
    const Graph& core = p.core;
    const int d = p.apex_degree;
    const int t = p.tbound;
    if (d < 0 || d > t)
        throw std::invalid_argument("glue: apex degree must satisfy 0 <= d <= tbound");
    if (!is_ramsey(core, 3, t))
        throw std::invalid_argument("glue: core is not a Ramsey(3,t) graph");
    const int floor = p.min_degree.value_or(0);
    if (d < floor) return;

    if (d == 0) {
        Graph g(core.order() + 1);
        for (int v = 0; v < core.order(); ++v)
            for (int u : vertices_of(core.neighbours(v)))
                if (u < v) g.add_edge(u, v);
        if (p.max_edges && g.edge_count() > *p.max_edges) return;
        if (floor > 0 && g.min_degree() < floor) return;
        if (is_ramsey(g, 3, t + 1)) emit(g);
        return;
    }

    AlphaSolver solver(core);
    MaximalIsIndex index = build_index(core, t, std::max(0, floor - 1), solver);
    long budget = std::numeric_limits<long>::max() / 2;
    if (p.max_edges) {
        budget = *p.max_edges - core.edge_count() - d;
        if (budget < 0) return;
    }

    search_compatible_maximal_tuples(index, d, solver, [&](const CompatibleTuple& tuple) {
        expand_maximal_solution(index, tuple, budget, solver,
                                [&](const std::vector<VertexSet>& sets) {
                                    Graph g = construct_glued_graph(core, sets);
                                    if (floor > 0 && g.min_degree() < floor) return;
                                    if (!is_ramsey(g, 3, t + 1)) return;  // recheck
                                    emit(g);
                                });
    });
}

}  // namespace

CanonicalGraphSet glue(const GluingProblem& problem) {
    CanonicalGraphSet out;
    glue_impl(problem, [&](const Graph& g) {
        Graph cg = relabel(g, canonical_labelling(g));
        out.emplace(graph6_encode(cg), cg);
    });
    return out;
}

void glue_each(const GluingProblem& problem, const std::function<void(const Graph&)>& visit) {
    glue_impl(problem, visit);
}

}  // namespace ramsey
