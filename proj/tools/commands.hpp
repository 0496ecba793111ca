#pragma once

#include <CLI11.hpp>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace devrank::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitConfigError = 3;

struct CommonArgs {
    std::string follows, commits, stars, projects;
    std::string train_end, test_end;
    std::string algo = "devrank";
    double alpha = 0.0, beta = 0.0;
    double threshold = 1e-8;
    int max_iters = 1000;
    std::vector<std::size_t> k_list;
    double step = 0.01;
    std::uint64_t bin_width = 100;
    std::vector<double> thresholds{1e-8, 1e-10, 1e-12};
    std::uint64_t seed = 42;
    int threads = 1;
    std::string out;
    std::string config;
    bool dense_oracle = false;
    bool skip_malformed = false;
    bool merge_same_name = false;
    bool truth_selected_pearson = false;
    std::size_t top = 10;

    // gen-only knobs
    std::uint32_t gen_developers = 10000;
    std::uint32_t gen_projects = 1000;
    double follow_exponent = 1.0;
    double commit_exponent = 1.0;
    double repeat_affinity = 0.8;
    double mean_commits = 20.0;
    double mean_follows = 10.0;
    double mean_stars = 10.0;
    std::string span_start = "2010-01-01";
    std::string span_end = "2014-01-01";
};

int cmd_gen(CLI::App* cmd, CommonArgs& args);
int cmd_rank(CLI::App* cmd, CommonArgs& args);
int cmd_eval(CLI::App* cmd, CommonArgs& args);
int cmd_sweep(CLI::App* cmd, CommonArgs& args);
int cmd_stats(CLI::App* cmd, CommonArgs& args);
int cmd_bench(CLI::App* cmd, CommonArgs& args);

}  // namespace devrank::cli
