#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "devrank/network.hpp"

namespace devrank {

/// Iteration parameters. alpha weighs the follow term, beta the commit term;
/// the remaining (1 - alpha - beta) mass teleports uniformly.
struct RankParams {
    double alpha = 0.85;
    double beta = 0.0;
    double threshold = 1e-8;
    int max_iters = 1000;

    /// Throws std::invalid_argument unless alpha, beta >= 0,
    /// alpha + beta <= 1 (with a 1e-9 slack for swept grids),
    /// threshold > 0 and max_iters >= 1.
    void validate() const;
};

enum class AlgorithmKind {
    DevRank,   // follow + weighted commit propagation
    PageRank,  // follow-only iteration, binary commit projection at the end
    Hits,      // binary commit propagation both ways, no follow information
    Df,        // follow-only variant of the joint iteration (beta = 0)
    Dc,        // commit-only variant of the joint iteration (alpha = 0)
};

std::string_view to_string(AlgorithmKind kind);
std::optional<AlgorithmKind> parse_algorithm(std::string_view name);

inline constexpr std::array<AlgorithmKind, 5> kAllAlgorithms = {
    AlgorithmKind::DevRank, AlgorithmKind::PageRank, AlgorithmKind::Hits, AlgorithmKind::Df,
    AlgorithmKind::Dc};

/// Called after each completed iteration with the normalized vectors and the
/// iteration's L1 error. The project span is empty for follow-only phases.
using IterationObserver =
    std::function<void(int iteration, std::span<const double> dev_scores,
                       std::span<const double> proj_scores, double err)>;

struct RankOptions {
    int threads = 1;
    IterationObserver observer;
};

/// Converged (or capped) score state. dev_scores and proj_scores each sum to
/// 1 after every iteration; trace holds one L1 error per completed iteration.
struct RankState {
    AlgorithmKind kind = AlgorithmKind::DevRank;
    RankParams params;
    std::vector<double> dev_scores;
    std::vector<double> proj_scores;
    int iterations = 0;
    std::vector<double> trace;
    bool converged = false;
    std::vector<std::string> warnings;

    double final_err() const { return trace.empty() ? 0.0 : trace.back(); }
};

struct PageRankResult {
    std::vector<double> scores;
    int iterations = 0;
    std::vector<double> trace;
    bool converged = false;
};

/// Damped power iteration on the follow graph: from uniform 1/n_d, iterate
/// alpha * inflow + (1-alpha)/n_d, renormalize, until the L1 change drops
/// below threshold or max_iters is hit.
PageRankResult pagerank_follow(const HeteroNetwork& net, double alpha = 0.85,
                               double threshold = 1e-8, int max_iters = 1000,
                               const RankOptions& options = {});

/// The full joint iteration. Developer scores start from the follow-graph
/// pagerank (damping 0.85, same threshold); project scores start uniform.
/// Each iteration, from the previous iterates:
///   new_P = normalize(weighted dev->proj inflow)
///   new_D = normalize(alpha*follow + beta*weighted proj->dev + (1-a-b)/n_d)
///   err   = L1(dD) + L1(dP)
RankState devrank(const HeteroNetwork& net, const RankParams& params,
                  const RankOptions& options = {});

/// pagerank_follow for developers; one binary dev->proj projection,
/// normalized once, for projects.
RankState pagerank_variant(const HeteroNetwork& net, double alpha = 0.85, double threshold = 1e-8,
                           int max_iters = 1000, const RankOptions& options = {});

/// Joint iteration over the binary commit network only (uniform start,
/// follow edges ignored).
RankState hits_variant(const HeteroNetwork& net, double alpha = 0.85, double threshold = 1e-8,
                       int max_iters = 1000, const RankOptions& options = {});

/// devrank with beta pinned to 0; project scores are recomputed from the
/// final developer scores (weighted, normalized once). Developer scores are
/// identical to devrank(alpha, beta=0) by construction.
RankState df_variant(const HeteroNetwork& net, double alpha, double threshold = 1e-8,
                     int max_iters = 1000, const RankOptions& options = {});

/// devrank with alpha pinned to 0; identical to devrank(alpha=0, beta) by
/// construction.
RankState dc_variant(const HeteroNetwork& net, double beta, double threshold = 1e-8,
                     int max_iters = 1000, const RankOptions& options = {});

/// Dispatcher request. Unset alpha/beta fall back to the per-kind defaults:
/// DevRank (0.37, 0.63), PageRank/Hits alpha 0.85, Df alpha 1, Dc beta 1.
/// Supplying a parameter the algorithm ignores records a warning on the
/// result instead of failing.
struct RunRequest {
    std::optional<double> alpha;
    std::optional<double> beta;
    double threshold = 1e-8;
    int max_iters = 1000;
};

RankState run(AlgorithmKind kind, const HeteroNetwork& net, const RunRequest& request = {},
              const RankOptions& options = {});

/// Indices ordered by descending score, ties broken by ascending index.
std::vector<std::uint32_t> ranking_order(std::span<const double> scores);
std::vector<std::uint32_t> ranking_order(std::span<const std::uint64_t> counts);

}  // namespace devrank
