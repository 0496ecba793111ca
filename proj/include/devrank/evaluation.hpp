#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "devrank/events.hpp"
#include "devrank/network.hpp"
#include "devrank/rankers.hpp"

namespace devrank {

/// Temporal split: train on events before train_end, evaluate gains over
/// [train_end, test_end).
struct SplitSpec {
    Date train_end;
    Date test_end;
    std::string label;

    void validate() const;  // train_end < test_end
};

/// Future gains per training-snapshot entity: follow events targeting a
/// developer and star events targeting a project, counted over the test
/// window. Events whose actor or target is absent from the training
/// snapshot (and window self-follows) are dropped and counted, so
/// counted + dropped equals the raw window scan.
struct GroundTruth {
    std::vector<std::uint64_t> new_followers;  // indexed like the training snapshot
    std::vector<std::uint64_t> new_stars;
    std::uint64_t window_follows = 0;
    std::uint64_t window_stars = 0;
    std::uint64_t dropped_follows = 0;
    std::uint64_t dropped_stars = 0;
};

GroundTruth compute_ground_truth(const EventLog& log, const SplitSpec& split,
                                 const HeteroNetwork& train_net);

/// |top-k by score  INTERSECT  top-k by truth| / k. Both rankings break ties
/// by ascending index. Throws std::invalid_argument unless 1 <= k <= size.
double precision_at_k(std::span<const double> scores, std::span<const std::uint64_t> truth,
                      std::size_t k);

/// Pearson correlation between scores and truth counts over the top-k
/// entities by score (or by truth when truth_selected). Returns nullopt when
/// either series has zero variance. Throws unless 2 <= k <= size.
std::optional<double> pearson_top_k(std::span<const double> scores,
                                    std::span<const std::uint64_t> truth, std::size_t k,
                                    bool truth_selected = false);

struct SweepCell {
    double alpha = 0.0;
    double beta = 0.0;
    double precision = 0.0;
};

/// Triangular lattice {(i*step, j*step) : i + j <= floor(1/step)}.
struct SweepGrid {
    double step = 0.0;
    std::vector<SweepCell> cells;
};

/// Number of lattice cells for a given step (closed form).
std::size_t sweep_cell_count(double step);

/// Runs the joint iteration at every lattice point and records the developer
/// precision@k against truth.new_followers. Cells run independently; the
/// grid is assembled in (alpha, beta) order regardless of thread count.
SweepGrid sweep_alpha_beta(const HeteroNetwork& net, const GroundTruth& truth, std::size_t k,
                           double step, double threshold = 1e-8, int max_iters = 1000,
                           int threads = 1);

/// One half-open commit-count bin (lo, hi] with the mean gain of its
/// population; mean is NaN when the bin is empty.
struct StatsBin {
    EntityKind kind = EntityKind::Developer;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t population = 0;
    double mean_gain = 0.0;
};

struct StatsBins {
    std::uint64_t bin_width = 0;
    std::vector<StatsBin> bins;  // developer bins first, then project bins
};

/// Bins developers by pre-cutoff commit totals and reports the mean number
/// of followers gained per developer over [cutoff, window_end); analogously
/// bins projects by received commits against star gains. Entities with zero
/// commits fall outside every (lo, hi] bin and are not reported.
StatsBins commit_follower_stats(const EventLog& log, Date cutoff, Date window_end,
                                std::uint64_t bin_width);

struct BenchRow {
    AlgorithmKind kind = AlgorithmKind::DevRank;
    double threshold = 0.0;
    int iterations = 0;
    bool converged = false;
    double millis = 0.0;
};

/// Runs each algorithm at each threshold, recording iteration counts and
/// wall time. Non-convergence shows up as iterations == max_iters with the
/// flag cleared. alpha/beta override the DevRank cell only; the other
/// algorithms run their standard configurations.
std::vector<BenchRow> convergence_benchmark(const HeteroNetwork& net,
                                            std::span<const AlgorithmKind> kinds,
                                            std::span<const double> thresholds,
                                            int max_iters = 1000, int threads = 1,
                                            std::optional<double> devrank_alpha = std::nullopt,
                                            std::optional<double> devrank_beta = std::nullopt);

/// One row of the "top influential developers" report: who actually gained
/// the most followers, what they looked like in training, and where each
/// algorithm ranked them.
struct TopRow {
    std::string developer_id;
    std::uint64_t new_followers = 0;
    std::uint64_t followers_before = 0;
    std::uint64_t commits_before = 0;
    std::vector<std::uint32_t> ranks;  // 1-based, aligned with the states argument
};

/// Rows for the n developers with the highest truth counts (ties by
/// ascending index), sorted by truth descending. Returns all rows when n
/// exceeds the population.
std::vector<TopRow> top_table(const HeteroNetwork& net, const GroundTruth& truth, std::size_t n,
                              std::span<const RankState* const> states);

}  // namespace devrank
