#include "ramsey/pairglue.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ramsey/canon.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

bool ClassSpec::matches(const Graph& g) const {
    if (g.order() != base.n) return false;
    if (base.max_edges) {
        if (exact_edges ? g.edge_count() != *base.max_edges : g.edge_count() > *base.max_edges)
            return false;
    }
    return is_ramsey(g, base.s, base.t);
}

std::string ClassSpec::to_string() const {
    std::string out = std::to_string(base.s) + "," + std::to_string(base.t) + "," +
                      std::to_string(base.n);
    if (base.max_edges)
        out += std::string(",e") + (exact_edges ? "=" : "<=") + std::to_string(*base.max_edges);
    return out;
}

ClassSpec parse_class_spec(const std::string& text) {
    ClassSpec spec;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::runtime_error("bad class spec '" + text + "' (want s,t,n[,e=X|e<=X])");
    try {
        spec.base.s = std::stoi(parts[0]);
        spec.base.t = std::stoi(parts[1]);
        spec.base.n = std::stoi(parts[2]);
        if (parts.size() == 4) {
            const std::string& e = parts[3];
            if (e.rfind("e<=", 0) == 0) {
                spec.base.max_edges = std::stoi(e.substr(3));
            } else if (e.rfind("e=", 0) == 0) {
                spec.base.max_edges = std::stoi(e.substr(2));
                spec.exact_edges = true;
            } else {
                throw std::runtime_error("bad edge selector");
            }
        }
    } catch (const std::exception&) {
        throw std::runtime_error("bad class spec '" + text + "' (want s,t,n[,e=X|e<=X])");
    }
    return spec;
}

PairKey pair_key(const Graph& core, const Graph& ext, std::span<const int> embedding) {
    if (int(embedding.size()) != core.order())
        throw std::invalid_argument("pair_key: embedding size does not match core order");
    std::uint64_t seen = 0;
    for (int x : embedding) {
        if (x < 0 || x >= ext.order() || ((seen >> x) & 1))
            throw std::invalid_argument("pair_key: embedding is not injective into ext");
        seen |= std::uint64_t{1} << x;
    }
    for (int i = 0; i < core.order(); ++i)
        for (int j = i + 1; j < core.order(); ++j)
            if (core.has_edge(i, j) !=
                ext.has_edge(embedding[std::size_t(i)], embedding[std::size_t(j)]))
                throw std::invalid_argument("pair_key: embedding is not an induced-subgraph map");
    PairKey key;
    key.degs.reserve(std::size_t(core.order()));
    for (int i = 0; i < core.order(); ++i)
        key.degs.push_back(ext.degree(embedding[std::size_t(i)]));
    return key;
}

std::optional<PairKey> complement_key(const PairKey& key, const Graph& core, int d_reg) {
    PairKey partner;
    partner.degs.reserve(key.degs.size());
    for (std::size_t x = 0; x < key.degs.size(); ++x) {
        int value = d_reg + core.degree(int(x)) - key.degs[x];
        if (value < 0) return std::nullopt;
        partner.degs.push_back(value);
    }
    return partner;
}

CanonicalGraphSet edge_removal_closure(const Graph& g, int floor, int target_t) {
    if (!is_ramsey(g, 3, target_t))
        throw std::invalid_argument("edge_removal_closure: input is not Ramsey of the target type");
    CanonicalGraphSet visited;
    std::vector<Graph> stack{g};
    visited.emplace(canonical_form(g).bytes, canonical_graph(g));
    while (!stack.empty()) {
        Graph cur = std::move(stack.back());
        stack.pop_back();
        for (int v = 0; v < cur.order(); ++v) {
            if (cur.degree(v) < floor + 1) continue;
            for (int u : vertices_of(cur.neighbours(v))) {
                if (u >= v) break;
                if (cur.degree(u) < floor + 1) continue;
                Graph next = cur;
                next.remove_edge(u, v);
                if (!is_ramsey(next, 3, target_t)) continue;
                std::string form = canonical_form(next).bytes;
                if (visited.emplace(form, canonical_graph(next)).second) stack.push_back(next);
            }
        }
    }
    return visited;
}

bool has_dual_in_class(const Graph& ext, const std::vector<ClassSpec>& processed) {
    for (int v = 0; v < ext.order(); ++v) {
        Graph dual = dual_neighbourhood(ext, v).graph;
        for (const ClassSpec& c : processed)
            if (c.matches(dual)) return true;
    }
    return false;
}

std::vector<Graph> exclusion_filter(const std::vector<Graph>& outputs,
                                    const std::vector<ClassSpec>& processed) {
    if (processed.empty()) return outputs;
    std::vector<Graph> kept;
    for (const Graph& g : outputs)
        if (!has_dual_in_class(g, processed)) kept.push_back(g);
    return kept;
}

namespace {

// Vertex layout of a merged pair: core 0..m-1, N(v) at m..m+d-1, N(w) at
// m+d..m+2d-1, v at m+2d, w at m+2d+1. Extensions carry the gluer's layout
// (core first, apex last).
Graph merge_pair(const Graph& core, int d, const Graph& g1, const Graph& g2) {
    const int m = core.order();
    Graph merged(m + 2 * d + 2);
    for (int x = 0; x < m; ++x)
        for (int y : vertices_of(core.neighbours(x)))
            if (y < x) merged.add_edge(y, x);
    for (int i = 0; i < d; ++i) {
        for (int x : vertices_of(g1.neighbours(m + i) & VertexSet::full(m)))
            merged.add_edge(x, m + i);
        merged.add_edge(m + i, m + 2 * d);
        for (int x : vertices_of(g2.neighbours(m + i) & VertexSet::full(m)))
            merged.add_edge(x, m + d + i);
        merged.add_edge(m + d + i, m + 2 * d + 1);
    }
    return merged;
}

}  // namespace

CanonicalGraphSet pair_glue(const PairGlueProblem& p, const std::vector<ClassSpec>& exclude) {
    const int m = p.core.order();
    const int d = p.target_degree;
    if (p.target_n != m + 2 + 2 * d)
        throw std::invalid_argument("pair_glue: target_n must equal m + 2 + 2*d_reg");

    CanonicalGraphSet out;
    const long degree_sum = long(p.target_n) * d;
    if (degree_sum % 2 != 0) return out;  // no regular graph of odd degree sum
    const int e_target = int(degree_sum / 2);
    const int e_ext = e_target - d * d;  // edges of Gamma not incident to N[v]
    if (e_ext < 0) return out;
    if (p.extension_spec.n != 0 && p.extension_spec.n != m + 1 + d)
        throw std::invalid_argument("pair_glue: extension spec order mismatch");
    if (p.extension_spec.max_edges && *p.extension_spec.max_edges != e_ext)
        throw std::invalid_argument("pair_glue: extension spec edge count mismatch");

    const int core_t = p.target_t - 2;
    // d above the gluer's feasible range means no extension has an apex of
    // degree d at all (max degree in an R(3,t-1)-graph is t-2).
    if (core_t < 1 || d > core_t) return out;

    // 1. all labelled extensions of the core with the exact edge count
    std::vector<Graph> exts;
    GluingProblem gp{p.core, d, core_t, e_ext, {}};
    glue_each(gp, [&](const Graph& g) {
        if (g.edge_count() == e_ext) exts.push_back(g);
    });
    exts = exclusion_filter(exts, exclude);

    // 2. bucket by the core degree sequence measured in the extension
    std::vector<int> identity(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) identity[std::size_t(i)] = i;
    std::vector<PairKey> keys;
    keys.reserve(exts.size());
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < exts.size(); ++i) {
        keys.push_back(pair_key(p.core, exts[i], identity));
        buckets[keys.back().degs].push_back(i);
    }

    // 3..7 merge complement-key pairs, complete cross edges, close under
    // edge removals, keep the regular Ramsey graphs
    for (std::size_t i = 0; i < exts.size(); ++i) {
        std::optional<PairKey> partner = complement_key(keys[i], p.core, d);
        if (!partner) continue;
        auto bucket = buckets.find(partner->degs);
        if (bucket == buckets.end()) continue;
        for (std::size_t j : bucket->second) {
            if (j < i) continue;  // unordered pairs; merging is v/w symmetric
            Graph merged = merge_pair(p.core, d, exts[i], exts[j]);
            // cross-edge completion, fixed lexicographic scan
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    int va = m + a, wb = m + d + b;
                    if ((merged.adj_bits(va) & merged.adj_bits(wb)) == 0)
                        merged.add_edge(va, wb);
                }
            if (merged.min_degree() < d) continue;
            if (!is_ramsey(merged, 3, p.target_t)) continue;
            for (auto& [form, graph] : edge_removal_closure(merged, d, p.target_t)) {
                if (graph.min_degree() == d && graph.max_degree() == d)
                    out.emplace(form, graph);
            }
        }
    }
    return out;
}

std::vector<PlanLine> parse_plan(std::istream& in) {
    std::vector<PlanLine> plan;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::stringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;  // blank line
        if (word[0] == '#') continue;
        try {
            if (word != "core") throw std::runtime_error("expected 'core'");
            std::string spec;
            if (!(ss >> spec)) throw std::runtime_error("missing core class spec");
            PlanLine pl;
            pl.core_class = parse_class_spec(spec);
            if (ss >> word) {
                if (word != "exclude") throw std::runtime_error("expected 'exclude'");
                // specs separated by whitespace or semicolons
                std::string token;
                while (ss >> token) {
                    std::stringstream items(token);
                    std::string item;
                    while (std::getline(items, item, ';'))
                        if (!item.empty()) pl.exclude.push_back(parse_class_spec(item));
                }
            }
            plan.push_back(std::move(pl));
        } catch (const std::exception& e) {
            throw std::runtime_error("plan line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return plan;
}

}  // namespace ramsey
