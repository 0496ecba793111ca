#include "devrank/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"

namespace devrank {

void SplitSpec::validate() const {
    if (!(train_end < test_end))
        throw std::invalid_argument("split: train_end must precede test_end");
}

GroundTruth compute_ground_truth(const EventLog& log, const SplitSpec& split,
                                 const HeteroNetwork& train_net) {
    split.validate();
    GroundTruth truth;
    truth.new_followers.assign(train_net.n_developers(), 0);
    truth.new_stars.assign(train_net.n_projects(), 0);

    for (const Event& event : log.events()) {
        if (event.date < split.train_end || !(event.date < split.test_end)) continue;
        switch (event.kind) {
            case EventKind::Follow: {
                ++truth.window_follows;
                const auto target = train_net.find_developer(event.target);
                const auto actor = train_net.find_developer(event.actor);
                if (!target || !actor || event.actor == event.target) {
                    ++truth.dropped_follows;  // cross-boundary or degenerate record
                    break;
                }
                ++truth.new_followers[*target];
                break;
            }
            case EventKind::Star: {
                ++truth.window_stars;
                const auto target = train_net.find_project(log.canonical_project(event.target));
                const auto actor = train_net.find_developer(event.actor);
                if (!target || !actor) {
                    ++truth.dropped_stars;
                    break;
                }
                ++truth.new_stars[*target];
                break;
            }
            case EventKind::Commit: break;  // commits carry no ground-truth signal
        }
    }
    return truth;
}

namespace {

void check_k(std::size_t k, std::size_t population, std::size_t minimum) {
    if (k < minimum || k > population)
        throw std::invalid_argument("k must be in [" + std::to_string(minimum) + ", " +
                                    std::to_string(population) + "], got " + std::to_string(k));
}

}  // namespace

double precision_at_k(std::span<const double> scores, std::span<const std::uint64_t> truth,
                      std::size_t k) {
    if (scores.size() != truth.size())
        throw std::invalid_argument("precision_at_k: score/truth length mismatch");
    check_k(k, scores.size(), 1);

    const auto by_score = ranking_order(scores);
    const auto by_truth = ranking_order(truth);
    std::vector<std::uint32_t> top_score(by_score.begin(), by_score.begin() + k);
    std::vector<std::uint32_t> top_truth(by_truth.begin(), by_truth.begin() + k);
    std::sort(top_score.begin(), top_score.end());
    std::sort(top_truth.begin(), top_truth.end());

    std::vector<std::uint32_t> common;
    std::set_intersection(top_score.begin(), top_score.end(), top_truth.begin(), top_truth.end(),
                          std::back_inserter(common));
    return static_cast<double>(common.size()) / static_cast<double>(k);
}

std::optional<double> pearson_top_k(std::span<const double> scores,
                                    std::span<const std::uint64_t> truth, std::size_t k,
                                    bool truth_selected) {
    if (scores.size() != truth.size())
        throw std::invalid_argument("pearson_top_k: score/truth length mismatch");
    check_k(k, scores.size(), 2);

    const auto order = truth_selected ? ranking_order(truth) : ranking_order(scores);
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mean_x += scores[order[i]];
        mean_y += static_cast<double>(truth[order[i]]);
    }
    mean_x /= static_cast<double>(k);
    mean_y /= static_cast<double>(k);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double dx = scores[order[i]] - mean_x;
        const double dy = static_cast<double>(truth[order[i]]) - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;  // undefined, never a silent 0
    return sxy / std::sqrt(sxx * syy);
}

std::size_t sweep_cell_count(double step) {
    if (!(step > 0.0) || step > 1.0) throw std::invalid_argument("step must be in (0, 1]");
    const auto n = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
    return (n + 1) * (n + 2) / 2;
}

SweepGrid sweep_alpha_beta(const HeteroNetwork& net, const GroundTruth& truth, std::size_t k,
                           double step, double threshold, int max_iters, int threads) {
    if (!(step > 0.0) || step > 1.0) throw std::invalid_argument("step must be in (0, 1]");
    const auto n = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));

    SweepGrid grid;
    grid.step = step;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            grid.cells.push_back({static_cast<double>(i) * step, static_cast<double>(j) * step,
                                  0.0});
        }
    }

    detail::parallel_for(
        grid.cells.size(), threads,
        [&](std::size_t index) {
            SweepCell& cell = grid.cells[index];
            RankParams params{cell.alpha, cell.beta, threshold, max_iters};
            const RankState state = devrank(net, params, RankOptions{});
            cell.precision = precision_at_k(state.dev_scores, truth.new_followers, k);
        },
        /*grain=*/2);
    return grid;
}

StatsBins commit_follower_stats(const EventLog& log, Date cutoff, Date window_end,
                                std::uint64_t bin_width) {
    if (bin_width == 0) throw std::invalid_argument("bin_width must be positive");
    if (!(cutoff < window_end)) throw std::invalid_argument("cutoff must precede window_end");

    const HeteroNetwork net = snapshot(log, cutoff);
    const GroundTruth truth = compute_ground_truth(log, {cutoff, window_end, "stats"}, net);

    StatsBins stats;
    stats.bin_width = bin_width;

    const auto bin_up = [bin_width](std::span<const std::uint64_t> totals,
                                    std::span<const std::uint64_t> gains, EntityKind kind,
                                    std::vector<StatsBin>& out) {
        std::uint64_t max_total = 0;
        for (const auto t : totals) max_total = std::max(max_total, t);
        if (max_total == 0) return;  // nothing with a positive commit total
        const std::uint64_t n_bins = (max_total + bin_width - 1) / bin_width;
        std::vector<std::uint64_t> population(n_bins, 0), gain_sum(n_bins, 0);
        for (std::size_t i = 0; i < totals.size(); ++i) {
            if (totals[i] == 0) continue;  // 0 lies outside every (lo, hi]
            const std::uint64_t bin = (totals[i] - 1) / bin_width;
            ++population[bin];
            gain_sum[bin] += gains[i];
        }
        for (std::uint64_t b = 0; b < n_bins; ++b) {
            StatsBin bin;
            bin.kind = kind;
            bin.lo = b * bin_width;
            bin.hi = (b + 1) * bin_width;
            bin.population = population[b];
            bin.mean_gain = population[b] > 0 ? static_cast<double>(gain_sum[b]) /
                                                    static_cast<double>(population[b])
                                              : std::numeric_limits<double>::quiet_NaN();
            out.push_back(bin);
        }
    };

    std::vector<std::uint64_t> dev_totals(net.n_developers(), 0), proj_totals(net.n_projects(), 0);
    for (const auto& edge : net.commits()) {
        dev_totals[edge.developer] += edge.count;
        proj_totals[edge.project] += edge.count;
    }
    bin_up(dev_totals, truth.new_followers, EntityKind::Developer, stats.bins);
    bin_up(proj_totals, truth.new_stars, EntityKind::Project, stats.bins);
    return stats;
}

std::vector<BenchRow> convergence_benchmark(const HeteroNetwork& net,
                                            std::span<const AlgorithmKind> kinds,
                                            std::span<const double> thresholds, int max_iters,
                                            int threads, std::optional<double> devrank_alpha,
                                            std::optional<double> devrank_beta) {
    std::vector<BenchRow> rows;
    for (const AlgorithmKind kind : kinds) {
        for (const double threshold : thresholds) {
            RunRequest request;
            request.threshold = threshold;
            request.max_iters = max_iters;
            if (kind == AlgorithmKind::DevRank) {
                request.alpha = devrank_alpha;
                request.beta = devrank_beta;
            }
            RankOptions options;
            options.threads = threads;
            const auto start = std::chrono::steady_clock::now();
            const RankState state = run(kind, net, request, options);
            const auto stop = std::chrono::steady_clock::now();
            BenchRow row;
            row.kind = kind;
            row.threshold = threshold;
            row.iterations = state.iterations;
            row.converged = state.converged;
            row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<TopRow> top_table(const HeteroNetwork& net, const GroundTruth& truth, std::size_t n,
                              std::span<const RankState* const> states) {
    if (n == 0) throw std::invalid_argument("top_table: n must be at least 1");
    if (truth.new_followers.size() != net.n_developers())
        throw std::invalid_argument("top_table: truth does not match the network");

    std::vector<std::vector<std::uint32_t>> rank_of(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        const auto order = ranking_order(std::span<const double>(states[s]->dev_scores));
        rank_of[s].resize(order.size());
        for (std::uint32_t pos = 0; pos < order.size(); ++pos)
            rank_of[s][order[pos]] = pos + 1;
    }

    std::vector<std::uint64_t> followers_before(net.n_developers(), 0);
    for (const auto& edge : net.follows()) ++followers_before[edge.followee];
    std::vector<std::uint64_t> commits_before(net.n_developers(), 0);
    for (const auto& edge : net.commits()) commits_before[edge.developer] += edge.count;

    const auto by_truth = ranking_order(std::span<const std::uint64_t>(truth.new_followers));
    const std::size_t rows = std::min(n, by_truth.size());
    std::vector<TopRow> table;
    table.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::uint32_t d = by_truth[i];
        TopRow row;
        row.developer_id = net.developer_id(d);
        row.new_followers = truth.new_followers[d];
        row.followers_before = followers_before[d];
        row.commits_before = commits_before[d];
        for (std::size_t s = 0; s < states.size(); ++s) row.ranks.push_back(rank_of[s][d]);
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace devrank
