#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ramsey/extender.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Per-(order, edge count) graph counts.
class CountTable {
public:
    void add(int n, int e, std::uint64_t c = 1) { counts_[{n, e}] += c; }
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return counts_; }
    std::uint64_t total() const;
    void print(std::ostream& os) const;

private:
    std::map<std::pair<int, int>, std::uint64_t> counts_;
};

// Order/edges of a graph6 line without a full decode.
std::pair<int, int> graph6_line_stats(const std::string& line);

// Sink of canonical graph6 lines. Deduplicates; output is sorted by
// (order, edge count, canonical bytes). When the in-memory set exceeds
// memory_cap_bytes, sorted runs spill to temp files and the final pass is an
// external merge (duplicates across runs are removed during the merge).
class CanonSink {
public:
    explicit CanonSink(std::size_t memory_cap_bytes = std::size_t(1) << 30,
                       std::filesystem::path spill_dir = std::filesystem::temp_directory_path());
    ~CanonSink();
    CanonSink(const CanonSink&) = delete;
    CanonSink& operator=(const CanonSink&) = delete;

    void insert(std::string canonical_line);
    // Emits unique lines in order; usable once.
    void for_each_sorted(const std::function<void(const std::string&)>& fn);

private:
    void spill();

    std::size_t cap_;
    std::size_t bytes_ = 0;
    std::filesystem::path dir_;
    std::unordered_set<std::string> set_;
    std::vector<std::filesystem::path> runs_;
};

struct VerifyIssue {
    std::size_t line_number;
    std::string message;
};

struct VerifyReport {
    CountTable counts;
    std::vector<VerifyIssue> issues;
    bool pass() const { return issues.empty(); }
};

// Per-graph membership checks against the spec (clique/independence/order,
// edge cap when present) plus the count table.
VerifyReport verify_stream(std::istream& in, const CensusSpec& spec);

struct DedupResult {
    CountTable counts;
    std::uint64_t lines_in = 0;
    std::uint64_t lines_out = 0;
};

// Decode, canonicalize, deduplicate, write sorted unique lines.
DedupResult dedup_stream(std::istream& in, std::ostream& out,
                         std::size_t memory_cap_bytes = std::size_t(1) << 30);

std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void for_each_graph6_line(std::istream& in,
                          const std::function<void(std::size_t, const std::string&)>& fn);

// Line-oriented key:value manifest next to census outputs. "payload:none"
// entries record counts for sets whose graphs were not stored.
void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& fields,
                    const CountTable& counts);

}  // namespace ramsey
