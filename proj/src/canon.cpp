// Canonical labelling by partition refinement plus individualization search.
// Refinement invariant: (colour, sorted multiset of neighbour colours) to a
// fixed point, with colours realised as cell start positions. The search
// picks the labelling whose upper-triangle bit string x(0,1), x(0,2), x(1,2),
// x(0,3), ... is lexicographically smallest; pruning compares the bits
// determined by the leading run of singleton cells against the incumbent.
// Twin candidates and root-level orbits of discovered automorphisms are
// skipped. All partition state lives in small fixed arrays so a node copy is
// a memcpy.
#include "ramsey/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

struct Part {
    std::array<std::uint8_t, 64> order;       // position -> vertex
    std::array<std::uint8_t, 64> cell_start;  // position -> start of its cell
};

struct Canonizer {
    const Graph& g;
    int n;
    std::array<std::uint8_t, 64> degree{};
    std::array<std::uint8_t, 64> colour_of{};           // vertex -> colour (cell start)
    std::array<std::array<std::uint8_t, 64>, 64> keys{};  // scratch refinement keys
    std::vector<std::uint8_t> best_bits;
    std::array<std::uint8_t, 64> best_lab{};
    bool have_best = false;
    std::array<std::uint8_t, 64> orbit{};

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.order()) {
        for (int v = 0; v < n; ++v) degree[std::size_t(v)] = std::uint8_t(g.degree(v));
        std::iota(orbit.begin(), orbit.begin() + n, 0);
    }

    int find(int v) {
        while (orbit[std::size_t(v)] != v) {
            orbit[std::size_t(v)] = orbit[std::size_t(orbit[std::size_t(v)])];
            v = orbit[std::size_t(v)];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) orbit[std::size_t(std::max(a, b))] = std::uint8_t(std::min(a, b));
    }

    Part initial_part() const {
        Part part;
        std::vector<int> verts(static_cast<std::size_t>(n));
        std::iota(verts.begin(), verts.end(), 0);
        std::stable_sort(verts.begin(), verts.end(),
                         [&](int a, int b) { return degree[std::size_t(a)] < degree[std::size_t(b)]; });
        for (int p = 0; p < n; ++p) part.order[std::size_t(p)] = std::uint8_t(verts[std::size_t(p)]);
        int start = 0;
        for (int p = 0; p < n; ++p) {
            if (p > 0 && degree[part.order[std::size_t(p)]] != degree[part.order[std::size_t(p - 1)]])
                start = p;
            part.cell_start[std::size_t(p)] = std::uint8_t(start);
        }
        return part;
    }

    void refine(Part& part) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int p = 0; p < n; ++p)
                colour_of[part.order[std::size_t(p)]] = part.cell_start[std::size_t(p)];

            for (int s = 0; s < n;) {
                int e = s + 1;
                while (e < n && part.cell_start[std::size_t(e)] == s) ++e;
                if (e - s == 1) {
                    s = e;
                    continue;
                }
                // members of one cell share a degree, so keys have equal length
                const int deg = degree[part.order[std::size_t(s)]];
                for (int p = s; p < e; ++p) {
                    int v = part.order[std::size_t(p)];
                    std::uint8_t* key = keys[std::size_t(v)].data();
                    int i = 0;
                    for (int u : vertices_of(g.neighbours(v))) key[i++] = colour_of[std::size_t(u)];
                    std::sort(key, key + deg);
                }
                std::sort(part.order.begin() + s, part.order.begin() + e,
                          [&](std::uint8_t a, std::uint8_t b) {
                              int c = std::memcmp(keys[a].data(), keys[b].data(), std::size_t(deg));
                              return c != 0 ? c < 0 : a < b;
                          });
                int run_start = s;
                for (int p = s; p < e; ++p) {
                    if (p > run_start &&
                        std::memcmp(keys[part.order[std::size_t(p)]].data(),
                                    keys[part.order[std::size_t(p - 1)]].data(),
                                    std::size_t(deg)) != 0) {
                        run_start = p;
                        changed = true;
                    }
                    part.cell_start[std::size_t(p)] = std::uint8_t(run_start);
                }
                s = e;
            }
        }
    }

    // Compare the bits determined by the first `fixed` positions against the
    // incumbent: -1 smaller, 0 equal so far, +1 larger.
    int compare_prefix(const std::array<std::uint8_t, 64>& lab, int fixed) const {
        long idx = 0;
        for (int p = 1; p < fixed; ++p) {
            std::uint64_t row = g.adj_bits(lab[std::size_t(p)]);
            for (int q = 0; q < p; ++q, ++idx) {
                int mine = int((row >> lab[std::size_t(q)]) & 1);
                int incumbent = (best_bits[std::size_t(idx >> 3)] >> (7 - (idx & 7))) & 1;
                if (mine != incumbent) return mine < incumbent ? -1 : 1;
            }
        }
        return 0;
    }

    std::vector<std::uint8_t> pack(const std::array<std::uint8_t, 64>& lab) const {
        std::vector<std::uint8_t> bits(std::size_t(n) * std::size_t(n - 1) / 16 + 1, 0);
        long idx = 0;
        for (int p = 1; p < n; ++p) {
            std::uint64_t row = g.adj_bits(lab[std::size_t(p)]);
            for (int q = 0; q < p; ++q, ++idx)
                if ((row >> lab[std::size_t(q)]) & 1)
                    bits[std::size_t(idx >> 3)] |= std::uint8_t(1) << (7 - (idx & 7));
        }
        return bits;
    }

    bool singleton(const Part& part, int p) const {
        return part.cell_start[std::size_t(p)] == p &&
               (p + 1 == n || part.cell_start[std::size_t(p + 1)] == p + 1);
    }

    void dfs(const Part& part0, int depth) {
        Part part = part0;
        refine(part);

        int fixed = 0;
        while (fixed < n && singleton(part, fixed)) ++fixed;

        if (have_best && compare_prefix(part.order, fixed) > 0) return;

        if (fixed == n) {
            if (!have_best) {
                best_bits = pack(part.order);
                best_lab = part.order;
                have_best = true;
                return;
            }
            int cmp = compare_prefix(part.order, n);
            if (cmp < 0) {
                best_bits = pack(part.order);
                best_lab = part.order;
            } else if (cmp == 0) {
                for (int i = 0; i < n; ++i)
                    unite(best_lab[std::size_t(i)], part.order[std::size_t(i)]);
            }
            return;
        }

        const int s = part.cell_start[std::size_t(fixed)];
        int e = s + 1;
        while (e < n && part.cell_start[std::size_t(e)] == s) ++e;

        std::array<std::uint8_t, 64> cell{};
        const int len = e - s;
        std::copy(part.order.begin() + s, part.order.begin() + e, cell.begin());

        std::vector<int> tried;
        for (int ci = 0; ci < len; ++ci) {
            int v = cell[std::size_t(ci)];
            bool skip = false;
            for (int cj = 0; cj < ci && !skip; ++cj) {
                int u = cell[std::size_t(cj)];
                std::uint64_t self = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
                if (((g.adj_bits(u) ^ g.adj_bits(v)) & ~self) == 0) {
                    unite(u, v);  // swapping true twins is an automorphism
                    skip = true;
                }
            }
            if (!skip && depth == 0) {
                for (int u : tried)
                    if (find(u) == find(v)) {
                        skip = true;
                        break;
                    }
            }
            if (skip) continue;
            tried.push_back(v);

            Part child = part;
            child.order[std::size_t(s)] = std::uint8_t(v);
            int w = s + 1;
            for (int p = s; p < e; ++p) {
                if (cell[std::size_t(p - s)] == v) continue;
                child.order[std::size_t(w)] = cell[std::size_t(p - s)];
                child.cell_start[std::size_t(w)] = std::uint8_t(s + 1);
                ++w;
            }
            child.cell_start[std::size_t(s)] = std::uint8_t(s);
            dfs(child, depth + 1);
        }
    }

    std::array<std::uint8_t, 64> run() {
        dfs(initial_part(), 0);
        return best_lab;
    }
};

}  // namespace

std::vector<int> canonical_labelling(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    if (g.order() == 0) return perm;
    Canonizer c(g);
    std::array<std::uint8_t, 64> lab = c.run();  // position -> vertex
    for (int pos = 0; pos < g.order(); ++pos) perm[std::size_t(lab[std::size_t(pos)])] = pos;
    return perm;
}

Graph canonical_graph(const Graph& g) {
    std::vector<int> perm = canonical_labelling(g);
    return relabel(g, perm);
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{graph6_encode(canonical_graph(g))};
}

}  // namespace ramsey
