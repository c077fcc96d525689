#include "ramsey/censusio.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <queue>
#include <sstream>

#include "ramsey/alpha.hpp"
#include "ramsey/canon.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

std::uint64_t CountTable::total() const {
    std::uint64_t sum = 0;
    for (auto& [key, c] : counts_) sum += c;
    return sum;
}

void CountTable::print(std::ostream& os) const {
    for (auto& [key, c] : counts_)
        os << "n=" << key.first << " e=" << key.second << ": " << c << "\n";
    os << "total: " << total() << "\n";
}

std::pair<int, int> graph6_line_stats(const std::string& line) {
    if (line.empty()) throw Graph6Error(Graph6Error::Kind::BadHeader, "empty line");
    int n;
    std::size_t pos;
    if (line[0] == 126) {
        if (line.size() < 4) throw Graph6Error(Graph6Error::Kind::Truncated, "truncated header");
        n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
        pos = 4;
    } else {
        n = line[0] - 63;
        pos = 1;
    }
    if (n < 0) throw Graph6Error(Graph6Error::Kind::BadHeader, "size byte out of range");
    int edges = 0;
    for (std::size_t i = pos; i < line.size(); ++i) {
        int val = line[i] - 63;
        if (val < 0 || val > 63)
            throw Graph6Error(Graph6Error::Kind::BadHeader, "adjacency byte out of range");
        edges += std::popcount(unsigned(val));
    }
    return {n, edges};
}

namespace {

// Sort key (order, edges, bytes) for canonical lines.
struct LineKey {
    int n;
    int e;
    const std::string* line;
    bool operator<(const LineKey& o) const {
        if (n != o.n) return n < o.n;
        if (e != o.e) return e < o.e;
        return *line < *o.line;
    }
};

bool line_less(const std::string& a, const std::string& b) {
    auto [an, ae] = graph6_line_stats(a);
    auto [bn, be] = graph6_line_stats(b);
    if (an != bn) return an < bn;
    if (ae != be) return ae < be;
    return a < b;
}

}  // namespace

CanonSink::CanonSink(std::size_t memory_cap_bytes, std::filesystem::path spill_dir)
    : cap_(memory_cap_bytes), dir_(std::move(spill_dir)) {}

CanonSink::~CanonSink() {
    for (auto& p : runs_) {
        std::error_code ec;
        std::filesystem::remove(p, ec);
    }
}

void CanonSink::insert(std::string line) {
    auto [it, fresh] = set_.insert(std::move(line));
    if (fresh) {
        bytes_ += it->size() + 48;  // rough node overhead
        if (bytes_ > cap_) spill();
    }
}

void CanonSink::spill() {
    std::vector<const std::string*> lines;
    lines.reserve(set_.size());
    for (auto& s : set_) lines.push_back(&s);
    std::sort(lines.begin(), lines.end(),
              [](const std::string* a, const std::string* b) { return line_less(*a, *b); });
    std::filesystem::path path =
        dir_ / ("ramsey_run_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
                std::to_string(runs_.size()) + ".g6");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open spill file " + path.string());
    for (const std::string* s : lines) out << *s << "\n";
    out.close();
    runs_.push_back(path);
    set_.clear();
    bytes_ = 0;
}

void CanonSink::for_each_sorted(const std::function<void(const std::string&)>& fn) {
    if (runs_.empty()) {
        std::vector<const std::string*> lines;
        lines.reserve(set_.size());
        for (auto& s : set_) lines.push_back(&s);
        std::sort(lines.begin(), lines.end(),
                  [](const std::string* a, const std::string* b) { return line_less(*a, *b); });
        for (const std::string* s : lines) fn(*s);
        return;
    }
    if (!set_.empty()) spill();

    std::vector<std::ifstream> streams;
    streams.reserve(runs_.size());
    for (auto& p : runs_) streams.emplace_back(p, std::ios::binary);

    struct Head {
        std::string line;
        std::size_t src;
    };
    auto cmp = [](const Head& a, const Head& b) { return line_less(b.line, a.line); };
    std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heap(cmp);
    for (std::size_t i = 0; i < streams.size(); ++i) {
        std::string line;
        if (std::getline(streams[i], line) && !line.empty()) heap.push({std::move(line), i});
    }
    std::string last;
    bool have_last = false;
    while (!heap.empty()) {
        Head top = heap.top();
        heap.pop();
        if (!have_last || top.line != last) {
            fn(top.line);
            last = top.line;
            have_last = true;
        }
        std::string line;
        if (std::getline(streams[top.src], line) && !line.empty())
            heap.push({std::move(line), top.src});
    }
}

void for_each_graph6_line(std::istream& in,
                          const std::function<void(std::size_t, const std::string&)>& fn) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(lineno, line);
    }
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<Graph> graphs;
    for_each_graph6_line(in, [&](std::size_t lineno, const std::string& line) {
        try {
            graphs.push_back(graph6_decode(line));
        } catch (const Graph6Error& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " +
                                     e.what());
        }
    });
    return graphs;
}

VerifyReport verify_stream(std::istream& in, const CensusSpec& spec) {
    VerifyReport report;
    for_each_graph6_line(in, [&](std::size_t lineno, const std::string& line) {
        Graph g;
        try {
            g = graph6_decode(line);
        } catch (const Graph6Error& e) {
            report.issues.push_back({lineno, e.what()});
            return;
        }
        if (g.order() != spec.n) {
            report.issues.push_back({lineno, "order " + std::to_string(g.order()) +
                                                 " does not match spec n=" + std::to_string(spec.n)});
            return;
        }
        if (spec.max_edges && g.edge_count() > *spec.max_edges) {
            report.issues.push_back(
                {lineno, "edge count " + std::to_string(g.edge_count()) + " above cap"});
            return;
        }
        if (has_clique(g, spec.s)) {
            report.issues.push_back({lineno, "contains a clique of size " + std::to_string(spec.s)});
            return;
        }
        if (has_independent_set(g, g.vertices(), spec.t)) {
            report.issues.push_back(
                {lineno, "contains an independent set of size " + std::to_string(spec.t)});
            return;
        }
        report.counts.add(g.order(), g.edge_count());
    });
    return report;
}

DedupResult dedup_stream(std::istream& in, std::ostream& out, std::size_t memory_cap_bytes) {
    DedupResult result;
    CanonSink sink(memory_cap_bytes);
    for_each_graph6_line(in, [&](std::size_t lineno, const std::string& line) {
        Graph g;
        try {
            g = graph6_decode(line);
        } catch (const Graph6Error& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        ++result.lines_in;
        sink.insert(graph6_encode(relabel(g, canonical_labelling(g))));
    });
    sink.for_each_sorted([&](const std::string& line) {
        auto [n, e] = graph6_line_stats(line);
        result.counts.add(n, e);
        ++result.lines_out;
        out << line << "\n";
    });
    return result;
}

void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& fields,
                    const CountTable& counts) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open manifest " + path.string());
    for (auto& [key, value] : fields) out << key << ":" << value << "\n";
    for (auto& [key, c] : counts.entries())
        out << "count:" << key.first << "," << key.second << "=" << c << "\n";
    out << "total:" << counts.total() << "\n";
}

}  // namespace ramsey
