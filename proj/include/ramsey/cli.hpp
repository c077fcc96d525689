#pragma once

#include <optional>
#include <string>

#include "ramsey/censusio.hpp"
#include "ramsey/pairglue.hpp"

namespace ramsey {

inline constexpr const char* kToolVersion = "ramsey 0.1.0";

struct CommonOptions {
    std::string in_path;
    std::string out_path;  // empty: graph lines to stdout
    int workers = 0;       // 0: hardware concurrency
    std::size_t memory_cap_mb = 1024;
    int shard_index = 0;
    int shard_count = 1;
};

struct ExtendOptions : CommonOptions {
    int t = 0;
    std::optional<int> max_edges;
};

struct GlueOptions : CommonOptions {
    int t = 0;
    int d_min = 0;
    int d_max = -1;  // -1: default to t
    std::optional<int> max_edges;
    std::optional<int> min_degree;
};

struct PairGlueOptions : CommonOptions {
    int target_t = 0;
    int target_n = 0;
    int target_degree = 0;
    std::string plan_path;
};

struct VerifyOptions : CommonOptions {
    int s = 3;
    int t = 0;
    int n = 0;
    std::optional<int> max_edges;
    std::optional<int> extend_check_order;
};

struct CanonOptions : CommonOptions {
    bool dedup = false;
};

struct StatsOptions : CommonOptions {};

int cmd_extend(const ExtendOptions& opt);
int cmd_glue(const GlueOptions& opt);
int cmd_pairglue(const PairGlueOptions& opt);
int cmd_verify(const VerifyOptions& opt);
int cmd_canon(const CanonOptions& opt);
int cmd_census_stats(const StatsOptions& opt);

int run_cli(int argc, const char* const* argv);

}  // namespace ramsey
