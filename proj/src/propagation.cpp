#include "devrank/propagation.hpp"

#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace devrank {

namespace {

void check_length(std::size_t got, std::size_t want, const char* what) {
    if (got != want)
        throw std::invalid_argument(std::string(what) + ": expected length " +
                                    std::to_string(want) + ", got " + std::to_string(got));
}

}  // namespace

FollowTransition FollowTransition::build(const HeteroNetwork& net) {
    FollowTransition t;
    const std::size_t n = net.n_developers();
    const auto edges = net.follows();

    std::vector<std::uint32_t> out_degree(n, 0), in_degree(n, 0);
    for (const auto& e : edges) {
        ++out_degree[e.follower];
        ++in_degree[e.followee];
    }

    t.out_offsets_.assign(n + 1, 0);
    t.in_offsets_.assign(n + 1, 0);
    for (std::size_t d = 0; d < n; ++d) {
        t.out_offsets_[d + 1] = t.out_offsets_[d] + out_degree[d];
        t.in_offsets_[d + 1] = t.in_offsets_[d] + in_degree[d];
    }
    t.out_followees_.resize(edges.size());
    t.in_followers_.resize(edges.size());
    t.in_weights_.resize(edges.size());

    t.inv_out_degree_.assign(n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
        if (out_degree[d] > 0)
            t.inv_out_degree_[d] = 1.0 / static_cast<double>(out_degree[d]);
        else
            t.dangling_.push_back(static_cast<std::uint32_t>(d));
    }

    // Edges arrive sorted by (follower, followee), so both fills produce
    // per-node neighbor lists in ascending index order.
    std::vector<std::uint32_t> out_cursor(t.out_offsets_.begin(), t.out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_cursor(t.in_offsets_.begin(), t.in_offsets_.end() - 1);
    for (const auto& e : edges) {
        t.out_followees_[out_cursor[e.follower]++] = e.followee;
        const auto slot = in_cursor[e.followee]++;
        t.in_followers_[slot] = e.follower;
        t.in_weights_[slot] = t.inv_out_degree_[e.follower];
    }
    return t;
}

std::uint32_t FollowTransition::out_degree(std::uint32_t developer) const {
    return out_offsets_[developer + 1] - out_offsets_[developer];
}

std::span<const std::uint32_t> FollowTransition::followees(std::uint32_t developer) const {
    return {out_followees_.data() + out_offsets_[developer],
            out_followees_.data() + out_offsets_[developer + 1]};
}

void FollowTransition::apply(std::span<const double> scores, std::span<double> inflow,
                             int threads) const {
    const std::size_t n = n_developers();
    check_length(scores.size(), n, "apply_follow scores");
    check_length(inflow.size(), n, "apply_follow inflow");
    if (n == 0) return;

    double dangling_mass = 0.0;
    for (const std::uint32_t d : dangling_) dangling_mass += scores[d];
    const double base = dangling_mass / static_cast<double>(n);

    detail::parallel_for(n, threads, [&](std::size_t d) {
        double acc = base;
        const std::uint32_t begin = in_offsets_[d], end = in_offsets_[d + 1];
        for (std::uint32_t i = begin; i < end; ++i)
            acc += scores[in_followers_[i]] * in_weights_[i];
        inflow[d] = acc;
    });
}

std::vector<double> FollowTransition::apply(std::span<const double> scores, int threads) const {
    std::vector<double> inflow(n_developers());
    apply(scores, inflow, threads);
    return inflow;
}

CommitPropagation CommitPropagation::build(const HeteroNetwork& net) {
    CommitPropagation c;
    const std::size_t n_d = net.n_developers(), n_p = net.n_projects();
    c.edges_.assign(net.commits().begin(), net.commits().end());
    c.dev_totals_.assign(n_d, 0);
    c.proj_totals_.assign(n_p, 0);
    for (const auto& e : c.edges_) {
        c.dev_totals_[e.developer] += e.count;
        c.proj_totals_[e.project] += e.count;
    }

    std::vector<std::uint32_t> dev_degree(n_d, 0), proj_degree(n_p, 0);
    for (const auto& e : c.edges_) {
        ++dev_degree[e.developer];
        ++proj_degree[e.project];
    }
    c.dev_offsets_.assign(n_d + 1, 0);
    c.proj_offsets_.assign(n_p + 1, 0);
    for (std::size_t d = 0; d < n_d; ++d) c.dev_offsets_[d + 1] = c.dev_offsets_[d] + dev_degree[d];
    for (std::size_t p = 0; p < n_p; ++p)
        c.proj_offsets_[p + 1] = c.proj_offsets_[p] + proj_degree[p];

    c.dev_projs_.resize(c.edges_.size());
    c.dev_weights_.resize(c.edges_.size());
    c.proj_devs_.resize(c.edges_.size());
    c.proj_weights_.resize(c.edges_.size());
    std::vector<std::uint32_t> dev_cursor(c.dev_offsets_.begin(), c.dev_offsets_.end() - 1);
    std::vector<std::uint32_t> proj_cursor(c.proj_offsets_.begin(), c.proj_offsets_.end() - 1);
    // Scanning edges sorted by (developer, project) leaves both gather lists
    // sorted, which pins the accumulation order.
    for (const auto& e : c.edges_) {
        const auto count = static_cast<double>(e.count);
        const auto dslot = dev_cursor[e.developer]++;
        c.dev_projs_[dslot] = e.project;
        c.dev_weights_[dslot] = count / static_cast<double>(c.proj_totals_[e.project]);
        const auto pslot = proj_cursor[e.project]++;
        c.proj_devs_[pslot] = e.developer;
        c.proj_weights_[pslot] = count / static_cast<double>(c.dev_totals_[e.developer]);
    }
    return c;
}

void CommitPropagation::apply_dev_to_proj(std::span<const double> dev_scores,
                                          std::span<double> inflow, int threads) const {
    check_length(dev_scores.size(), n_developers(), "apply_dev_to_proj scores");
    check_length(inflow.size(), n_projects(), "apply_dev_to_proj inflow");
    detail::parallel_for(n_projects(), threads, [&](std::size_t p) {
        double acc = 0.0;
        const std::uint32_t begin = proj_offsets_[p], end = proj_offsets_[p + 1];
        for (std::uint32_t i = begin; i < end; ++i)
            acc += dev_scores[proj_devs_[i]] * proj_weights_[i];
        inflow[p] = acc;
    });
}

void CommitPropagation::apply_proj_to_dev(std::span<const double> proj_scores,
                                          std::span<double> inflow, int threads) const {
    check_length(proj_scores.size(), n_projects(), "apply_proj_to_dev scores");
    check_length(inflow.size(), n_developers(), "apply_proj_to_dev inflow");
    detail::parallel_for(n_developers(), threads, [&](std::size_t d) {
        double acc = 0.0;
        const std::uint32_t begin = dev_offsets_[d], end = dev_offsets_[d + 1];
        for (std::uint32_t i = begin; i < end; ++i)
            acc += proj_scores[dev_projs_[i]] * dev_weights_[i];
        inflow[d] = acc;
    });
}

void CommitPropagation::apply_binary_dev_to_proj(std::span<const double> dev_scores,
                                                 std::span<double> inflow, int threads) const {
    check_length(dev_scores.size(), n_developers(), "apply_binary_dev_to_proj scores");
    check_length(inflow.size(), n_projects(), "apply_binary_dev_to_proj inflow");
    detail::parallel_for(n_projects(), threads, [&](std::size_t p) {
        double acc = 0.0;
        const std::uint32_t begin = proj_offsets_[p], end = proj_offsets_[p + 1];
        for (std::uint32_t i = begin; i < end; ++i) acc += dev_scores[proj_devs_[i]];
        inflow[p] = acc;
    });
}

void CommitPropagation::apply_binary_proj_to_dev(std::span<const double> proj_scores,
                                                 std::span<double> inflow, int threads) const {
    check_length(proj_scores.size(), n_projects(), "apply_binary_proj_to_dev scores");
    check_length(inflow.size(), n_developers(), "apply_binary_proj_to_dev inflow");
    detail::parallel_for(n_developers(), threads, [&](std::size_t d) {
        double acc = 0.0;
        const std::uint32_t begin = dev_offsets_[d], end = dev_offsets_[d + 1];
        for (std::uint32_t i = begin; i < end; ++i) acc += proj_scores[dev_projs_[i]];
        inflow[d] = acc;
    });
}

std::vector<double> apply_dev_to_proj(const CommitPropagation& c,
                                      std::span<const double> dev_scores, int threads) {
    std::vector<double> inflow(c.n_projects());
    c.apply_dev_to_proj(dev_scores, inflow, threads);
    return inflow;
}

std::vector<double> apply_proj_to_dev(const CommitPropagation& c,
                                      std::span<const double> proj_scores, int threads) {
    std::vector<double> inflow(c.n_developers());
    c.apply_proj_to_dev(proj_scores, inflow, threads);
    return inflow;
}

std::vector<double> apply_binary_dev_to_proj(const CommitPropagation& c,
                                             std::span<const double> dev_scores, int threads) {
    std::vector<double> inflow(c.n_projects());
    c.apply_binary_dev_to_proj(dev_scores, inflow, threads);
    return inflow;
}

std::vector<double> apply_binary_proj_to_dev(const CommitPropagation& c,
                                             std::span<const double> proj_scores, int threads) {
    std::vector<double> inflow(c.n_developers());
    c.apply_binary_proj_to_dev(proj_scores, inflow, threads);
    return inflow;
}

}  // namespace devrank
