#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "devrank/network.hpp"

namespace devrank::test {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint32_t below(std::mt19937_64& rng, std::uint32_t bound) {
    return static_cast<std::uint32_t>(rng() % bound);
}

struct EdgeLists {
    std::vector<std::pair<std::string, std::string>> follows;
    std::vector<std::tuple<std::string, std::string, std::uint64_t>> commits;
    std::vector<std::pair<std::string, std::string>> stars;
};

// Random small instance: up to max_d developers and max_p projects, follow
// density ~0.2, commit density ~0.3 with counts in [1, 6].
inline EdgeLists random_edges(std::mt19937_64& rng, std::uint32_t max_d = 20,
                              std::uint32_t max_p = 10) {
    const std::uint32_t n_d = 1 + below(rng, max_d);
    const std::uint32_t n_p = 1 + below(rng, max_p);
    EdgeLists lists;
    for (std::uint32_t i = 0; i < n_d; ++i) {
        for (std::uint32_t j = 0; j < n_d; ++j) {
            if (i != j && uniform01(rng) < 0.2)
                lists.follows.emplace_back("d" + std::to_string(i), "d" + std::to_string(j));
        }
    }
    for (std::uint32_t i = 0; i < n_d; ++i) {
        for (std::uint32_t p = 0; p < n_p; ++p) {
            if (uniform01(rng) < 0.3)
                lists.commits.emplace_back("d" + std::to_string(i), "p" + std::to_string(p),
                                           1 + below(rng, 6));
        }
    }
    // Pin interning to d0..d(n_d-1), p0..p(n_p-1) even when some entity has
    // no random edge: give every developer a star on p0 and star every
    // project from d0.
    for (std::uint32_t i = 0; i < n_d; ++i)
        lists.stars.emplace_back("d" + std::to_string(i), "p0");
    for (std::uint32_t p = 0; p < n_p; ++p)
        lists.stars.emplace_back("d0", "p" + std::to_string(p));
    return lists;
}

inline HeteroNetwork random_network(std::mt19937_64& rng, std::uint32_t max_d = 20,
                                    std::uint32_t max_p = 10) {
    const EdgeLists lists = random_edges(rng, max_d, max_p);
    return HeteroNetwork::from_edges(lists.follows, lists.commits, lists.stars);
}

// Test-local dense propagation oracles, written straight from the edge list.

inline std::vector<double> dense_apply_follow(const HeteroNetwork& net,
                                              const std::vector<double>& scores) {
    const std::size_t n = net.n_developers();
    std::vector<double> out_degree(n, 0.0);
    for (const auto& e : net.follows()) out_degree[e.follower] += 1.0;
    std::vector<double> inflow(n, 0.0);
    double dangling = 0.0;
    for (std::size_t d = 0; d < n; ++d)
        if (out_degree[d] == 0.0) dangling += scores[d];
    for (std::size_t d = 0; d < n; ++d) inflow[d] = dangling / static_cast<double>(n);
    for (const auto& e : net.follows())
        inflow[e.followee] += scores[e.follower] / out_degree[e.follower];
    return inflow;
}

inline std::vector<double> dense_dev_to_proj(const HeteroNetwork& net,
                                             const std::vector<double>& dev_scores,
                                             bool weighted) {
    std::vector<double> dev_total(net.n_developers(), 0.0);
    for (const auto& e : net.commits()) dev_total[e.developer] += static_cast<double>(e.count);
    std::vector<double> inflow(net.n_projects(), 0.0);
    for (const auto& e : net.commits()) {
        const double w =
            weighted ? static_cast<double>(e.count) / dev_total[e.developer] : 1.0;
        inflow[e.project] += dev_scores[e.developer] * w;
    }
    return inflow;
}

inline std::vector<double> dense_proj_to_dev(const HeteroNetwork& net,
                                             const std::vector<double>& proj_scores,
                                             bool weighted) {
    std::vector<double> proj_total(net.n_projects(), 0.0);
    for (const auto& e : net.commits()) proj_total[e.project] += static_cast<double>(e.count);
    std::vector<double> inflow(net.n_developers(), 0.0);
    for (const auto& e : net.commits()) {
        const double w = weighted ? static_cast<double>(e.count) / proj_total[e.project] : 1.0;
        inflow[e.developer] += proj_scores[e.project] * w;
    }
    return inflow;
}

}  // namespace devrank::test
