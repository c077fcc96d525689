#include "ramsey/extender.hpp"

#include <mutex>
#include <stdexcept>

#include "ramsey/canon.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

void enum_exact_size(const Graph& g, int next, std::uint64_t current, int missing,
                     std::uint64_t allowed, std::vector<VertexSet>& out) {
    if (missing == 0) {
        out.push_back(VertexSet(current));
        return;
    }
    std::uint64_t rest = next >= 64 ? 0 : allowed >> next;
    if (std::popcount(rest) < missing) return;
    for (int v = next; v < g.order(); ++v) {
        if (!((allowed >> v) & 1)) continue;
        enum_exact_size(g, v + 1, current | (std::uint64_t{1} << v), missing - 1,
                        allowed & ~g.adj_bits(v), out);
    }
}

// A valid attachment set must intersect every independent (t-1)-set of g:
// the new vertex plus a missed (t-1)-set would be independent of size t.
// Each candidate is therefore checked with one bitvector AND against the
// witnesses missed so far, instead of an independence-number computation.
struct AttachmentEnum {
    const Graph& g;
    int size_cap;
    const std::vector<BitVec>& miss_by;  // miss_by[v]: witnesses not containing v
    std::vector<BitVec> unhit;           // per depth, witnesses missed by the set
    const std::function<void(VertexSet)>& emit;

    void run(int next, std::uint64_t current, int depth, std::uint64_t allowed) {
        if (unhit[std::size_t(depth)].none()) emit(VertexSet(current));
        if (depth == size_cap) return;
        for (int v = next; v < g.order(); ++v) {
            if (!((allowed >> v) & 1)) continue;
            unhit[std::size_t(depth) + 1] = unhit[std::size_t(depth)];
            unhit[std::size_t(depth) + 1] &= miss_by[std::size_t(v)];
            run(v + 1, current | (std::uint64_t{1} << v), depth + 1,
                allowed & ~g.adj_bits(v));
        }
    }
};

void extensions_impl(const Graph& g, int tbound, std::optional<int> max_edges,
                     const std::function<void(const Graph&)>& visit) {
    const int n = g.order();
    int size_cap = n;
    if (max_edges) {
        if (*max_edges < g.edge_count()) return;
        size_cap = std::min(size_cap, *max_edges - g.edge_count());
    }

    std::vector<VertexSet> witnesses;
    if (tbound >= 1)
        enum_exact_size(g, 0, 0, tbound - 1, g.vertices().bits, witnesses);
    std::vector<BitVec> miss_by(std::size_t(n), BitVec(witnesses.size(), true));
    for (std::size_t j = 0; j < witnesses.size(); ++j)
        for (int v : vertices_of(witnesses[j])) miss_by[std::size_t(v)].reset(j);

    std::function<void(VertexSet)> emit = [&](VertexSet s) {
        Graph h(n + 1);
        for (int v = 0; v < n; ++v)
            for (int u : vertices_of(g.neighbours(v)))
                if (u < v) h.add_edge(u, v);
        for (int v : vertices_of(s)) h.add_edge(v, n);
        visit(h);
    };
    AttachmentEnum rec{g, size_cap, miss_by,
                       std::vector<BitVec>(std::size_t(n) + 1, BitVec(witnesses.size(), true)),
                       emit};
    rec.run(0, 0, 0, g.vertices().bits);
}

}  // namespace

void one_point_extensions_each(const Graph& g, int tbound, std::optional<int> max_edges,
                               const std::function<void(const Graph&)>& visit) {
    if (!is_ramsey(g, 3, tbound))
        throw std::invalid_argument("one_point_extensions: input is not a Ramsey(3,t) graph");
    extensions_impl(g, tbound, max_edges, visit);
}

CanonicalGraphSet one_point_extensions(const Graph& g, int tbound,
                                       std::optional<int> max_edges) {
    CanonicalGraphSet out;
    one_point_extensions_each(g, tbound, max_edges, [&](const Graph& h) {
        Graph ch = relabel(h, canonical_labelling(h));
        out.emplace(graph6_encode(ch), ch);
    });
    return out;
}

CensusResult census(const CensusSpec& spec, const std::vector<Graph>& seeds, int workers) {
    if (spec.s != 3) throw std::invalid_argument("census: generation is fixed at s = 3");
    CensusResult result;
    if (seeds.empty()) return result;
    const int n0 = seeds.front().order();
    for (const Graph& g : seeds)
        if (g.order() != n0) throw std::invalid_argument("census: seeds must share one order");

    if (n0 > spec.n) throw std::invalid_argument("census: seeds larger than the target order");

    std::vector<Graph> level = seeds;
    if (n0 == spec.n) {
        for (const Graph& g : seeds) {
            Graph cg = relabel(g, canonical_labelling(g));
            result.graphs.emplace(graph6_encode(cg), cg);
        }
        result.level_counts.emplace_back(n0, result.graphs.size());
        return result;
    }
    result.level_counts.emplace_back(n0, level.size());
    for (int order = n0 + 1; order <= spec.n; ++order) {
        CanonicalGraphSet next;
        std::mutex sink;
        parallel_for(level.size(), workers, [&](std::size_t i, int) {
            CanonicalGraphSet local;
            one_point_extensions_each(level[i], spec.t, spec.max_edges, [&](const Graph& h) {
                Graph ch = relabel(h, canonical_labelling(h));
                local.emplace(graph6_encode(ch), ch);
            });
            std::lock_guard<std::mutex> lock(sink);
            next.merge(local);
        });
        level.clear();
        for (auto& [line, g] : next) level.push_back(g);
        result.level_counts.emplace_back(order, level.size());
        if (order == spec.n) {
            result.graphs = std::move(next);
            break;
        }
        if (level.empty()) break;
    }
    return result;
}

}  // namespace ramsey
