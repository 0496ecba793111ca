#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "devrank/network.hpp"

namespace devrank {

/// Row-stochastic transition structure of the follow graph. Followee lists
/// are grouped by follower and sorted by index; developers who follow no one
/// form the dangling set, whose score mass is redistributed uniformly over
/// all developers on application.
class FollowTransition {
  public:
    static FollowTransition build(const HeteroNetwork& net);

    std::size_t n_developers() const { return inv_out_degree_.size(); }
    std::uint32_t out_degree(std::uint32_t developer) const;
    std::span<const std::uint32_t> followees(std::uint32_t developer) const;
    std::span<const std::uint32_t> dangling() const { return dangling_; }

    /// inflow[d] = sum over followers f of d of scores[f]/out_degree(f),
    /// plus the pooled dangling mass spread uniformly (self included).
    /// Conserves total mass. Accumulation order is fixed, so the result is
    /// bitwise identical for any thread count.
    void apply(std::span<const double> scores, std::span<double> inflow, int threads = 1) const;
    std::vector<double> apply(std::span<const double> scores, int threads = 1) const;

  private:
    // out-adjacency (spec surface) and in-adjacency (application path)
    std::vector<std::uint32_t> out_offsets_, out_followees_;
    std::vector<std::uint32_t> in_offsets_, in_followers_;
    std::vector<double> in_weights_;  // 1/out_degree(follower), aligned with in_followers_
    std::vector<double> inv_out_degree_;
    std::vector<std::uint32_t> dangling_;
};

/// Precomputed bidirectional propagation structure of the weighted commit
/// bipartite graph. Developer->project flow divides a developer's score by
/// their total commits; project->developer flow divides a project's score by
/// its total received commits (asymmetric propagation). Binary application
/// ignores counts and sums scores over plain adjacency.
class CommitPropagation {
  public:
    static CommitPropagation build(const HeteroNetwork& net);

    std::size_t n_developers() const { return dev_totals_.size(); }
    std::size_t n_projects() const { return proj_totals_.size(); }
    std::span<const CommitEdge> edges() const { return edges_; }
    std::uint64_t dev_total(std::uint32_t developer) const { return dev_totals_[developer]; }
    std::uint64_t proj_total(std::uint32_t project) const { return proj_totals_[project]; }

    void apply_dev_to_proj(std::span<const double> dev_scores, std::span<double> inflow,
                           int threads = 1) const;
    void apply_proj_to_dev(std::span<const double> proj_scores, std::span<double> inflow,
                           int threads = 1) const;
    void apply_binary_dev_to_proj(std::span<const double> dev_scores, std::span<double> inflow,
                                  int threads = 1) const;
    void apply_binary_proj_to_dev(std::span<const double> proj_scores, std::span<double> inflow,
                                  int threads = 1) const;

  private:
    std::vector<CommitEdge> edges_;  // sorted by (developer, project)
    std::vector<std::uint64_t> dev_totals_, proj_totals_;
    // by-project index, for gathering developer scores into projects
    std::vector<std::uint32_t> proj_offsets_, proj_devs_;
    std::vector<double> proj_weights_;  // count/dev_total(developer)
    // by-developer index, for gathering project scores into developers
    std::vector<std::uint32_t> dev_offsets_, dev_projs_;
    std::vector<double> dev_weights_;  // count/proj_total(project)
};

// Operation-style wrappers.

inline FollowTransition build_follow_transition(const HeteroNetwork& net) {
    return FollowTransition::build(net);
}

inline std::vector<double> apply_follow(const FollowTransition& t, std::span<const double> scores,
                                        int threads = 1) {
    return t.apply(scores, threads);
}

inline CommitPropagation build_commit_propagation(const HeteroNetwork& net) {
    return CommitPropagation::build(net);
}

std::vector<double> apply_dev_to_proj(const CommitPropagation& c,
                                      std::span<const double> dev_scores, int threads = 1);
std::vector<double> apply_proj_to_dev(const CommitPropagation& c,
                                      std::span<const double> proj_scores, int threads = 1);
std::vector<double> apply_binary_dev_to_proj(const CommitPropagation& c,
                                             std::span<const double> dev_scores, int threads = 1);
std::vector<double> apply_binary_proj_to_dev(const CommitPropagation& c,
                                             std::span<const double> proj_scores, int threads = 1);

}  // namespace devrank
