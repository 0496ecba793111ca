#include "devrank/dense_reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace devrank::dense {

namespace {

constexpr std::size_t kMaxSide = 4096;
constexpr double kInitDamping = 0.85;

struct Matrices {
    std::size_t n_d = 0, n_p = 0;
    std::vector<double> follow;       // n_d x n_d; row f = outflow distribution of f
    std::vector<double> dev_to_proj;  // n_d x n_p; count/dev_total
    std::vector<double> proj_to_dev;  // n_p x n_d; count/proj_total
    std::vector<double> binary;       // n_d x n_p; 0/1 adjacency
};

Matrices materialize(const HeteroNetwork& net) {
    Matrices m;
    m.n_d = net.n_developers();
    m.n_p = net.n_projects();
    if (m.n_d > kMaxSide || m.n_p > kMaxSide)
        throw std::invalid_argument("dense reference is limited to small networks");

    m.follow.assign(m.n_d * m.n_d, 0.0);
    std::vector<double> out_degree(m.n_d, 0.0);
    for (const auto& e : net.follows()) out_degree[e.follower] += 1.0;
    for (const auto& e : net.follows())
        m.follow[e.follower * m.n_d + e.followee] = 1.0 / out_degree[e.follower];
    for (std::size_t d = 0; d < m.n_d; ++d) {
        if (out_degree[d] == 0.0) {
            const double uniform = 1.0 / static_cast<double>(m.n_d);
            for (std::size_t j = 0; j < m.n_d; ++j) m.follow[d * m.n_d + j] = uniform;
        }
    }

    m.dev_to_proj.assign(m.n_d * m.n_p, 0.0);
    m.proj_to_dev.assign(m.n_p * m.n_d, 0.0);
    m.binary.assign(m.n_d * m.n_p, 0.0);
    std::vector<double> dev_total(m.n_d, 0.0), proj_total(m.n_p, 0.0);
    for (const auto& e : net.commits()) {
        dev_total[e.developer] += static_cast<double>(e.count);
        proj_total[e.project] += static_cast<double>(e.count);
    }
    for (const auto& e : net.commits()) {
        const auto count = static_cast<double>(e.count);
        m.dev_to_proj[e.developer * m.n_p + e.project] = count / dev_total[e.developer];
        m.proj_to_dev[e.project * m.n_d + e.developer] = count / proj_total[e.project];
        m.binary[e.developer * m.n_p + e.project] = 1.0;
    }
    return m;
}

// out[j] = sum_i x[i] * rows[i*cols + j]
std::vector<double> left_multiply(const std::vector<double>& rows, std::size_t n_rows,
                                  std::size_t n_cols, const std::vector<double>& x) {
    std::vector<double> out(n_cols, 0.0);
    for (std::size_t i = 0; i < n_rows; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        const double* row = rows.data() + i * n_cols;
        for (std::size_t j = 0; j < n_cols; ++j) out[j] += xi * row[j];
    }
    return out;
}

void normalize(std::vector<double>& v) {
    if (v.empty()) return;
    double sum = 0.0;
    for (const double x : v) sum += x;
    if (sum > 0.0) {
        for (double& x : v) x /= sum;
    } else {
        const double uniform = 1.0 / static_cast<double>(v.size());
        for (double& x : v) x = uniform;
    }
}

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) err += std::abs(a[i] - b[i]);
    return err;
}

struct IterationTally {
    int iterations = 0;
    std::vector<double> trace;
    bool converged = false;
};

std::vector<double> pagerank_vector(const Matrices& m, double alpha, double threshold,
                                    int max_iters, IterationTally* tally,
                                    const IterationObserver* observer) {
    std::vector<double> x(m.n_d, 1.0 / static_cast<double>(m.n_d));
    const double teleport = (1.0 - alpha) / static_cast<double>(m.n_d);
    for (int iter = 1; iter <= max_iters; ++iter) {
        std::vector<double> next = left_multiply(m.follow, m.n_d, m.n_d, x);
        for (double& v : next) v = alpha * v + teleport;
        normalize(next);
        const double err = l1_diff(next, x);
        x = std::move(next);
        if (tally) {
            tally->iterations = iter;
            tally->trace.push_back(err);
        }
        if (observer && *observer) (*observer)(iter, x, {}, err);
        if (err < threshold) {
            if (tally) tally->converged = true;
            break;
        }
    }
    return x;
}

enum class Flow { Weighted, Binary };
enum class Start { FollowPagerank, Uniform };

RankState joint(AlgorithmKind kind, const Matrices& m, double alpha, double beta, Flow flow,
                Start start, double threshold, int max_iters, const RankOptions& options,
                bool final_projection) {
    RankState state;
    state.kind = kind;
    state.params = RankParams{alpha, beta, threshold, max_iters};

    std::vector<double> dev;
    if (start == Start::FollowPagerank)
        dev = pagerank_vector(m, kInitDamping, threshold, max_iters, nullptr, nullptr);
    else
        dev.assign(m.n_d, 1.0 / static_cast<double>(m.n_d));
    std::vector<double> proj(m.n_p, m.n_p ? 1.0 / static_cast<double>(m.n_p) : 0.0);

    const auto& forward = flow == Flow::Weighted ? m.dev_to_proj : m.binary;
    const double teleport = std::max(0.0, 1.0 - alpha - beta) / static_cast<double>(m.n_d);

    for (int iter = 1; iter <= max_iters; ++iter) {
        std::vector<double> new_proj = left_multiply(forward, m.n_d, m.n_p, dev);
        normalize(new_proj);

        std::vector<double> follow_term = left_multiply(m.follow, m.n_d, m.n_d, dev);
        std::vector<double> commit_term(m.n_d, 0.0);
        if (m.n_p > 0) {
            if (flow == Flow::Weighted) {
                commit_term = left_multiply(m.proj_to_dev, m.n_p, m.n_d, proj);
            } else {
                for (std::size_t i = 0; i < m.n_d; ++i) {
                    double acc = 0.0;
                    for (std::size_t p = 0; p < m.n_p; ++p)
                        acc += m.binary[i * m.n_p + p] * proj[p];
                    commit_term[i] = acc;
                }
            }
        }
        std::vector<double> new_dev(m.n_d);
        for (std::size_t i = 0; i < m.n_d; ++i)
            new_dev[i] = alpha * follow_term[i] + beta * commit_term[i] + teleport;
        normalize(new_dev);

        const double err = l1_diff(new_dev, dev) + l1_diff(new_proj, proj);
        dev = std::move(new_dev);
        proj = std::move(new_proj);
        state.iterations = iter;
        state.trace.push_back(err);
        if (options.observer) options.observer(iter, dev, proj, err);
        if (err < threshold) {
            state.converged = true;
            break;
        }
    }

    if (final_projection && m.n_p > 0) {
        proj = left_multiply(m.dev_to_proj, m.n_d, m.n_p, dev);
        normalize(proj);
    }
    state.dev_scores = std::move(dev);
    state.proj_scores = std::move(proj);
    return state;
}

}  // namespace

RankState run(AlgorithmKind kind, const HeteroNetwork& net, const RunRequest& request,
              const RankOptions& options) {
    if (net.n_developers() == 0) throw std::invalid_argument("network has no developers");
    const Matrices m = materialize(net);
    const double threshold = request.threshold;
    const int max_iters = request.max_iters;

    switch (kind) {
        case AlgorithmKind::DevRank: {
            RankParams params{request.alpha.value_or(0.37), request.beta.value_or(0.63), threshold,
                              max_iters};
            params.validate();
            return joint(kind, m, params.alpha, params.beta, Flow::Weighted,
                         Start::FollowPagerank, threshold, max_iters, options, false);
        }
        case AlgorithmKind::PageRank: {
            const double alpha = request.alpha.value_or(0.85);
            RankParams{alpha, 0.0, threshold, max_iters}.validate();
            RankState state;
            state.kind = kind;
            state.params = RankParams{alpha, 0.0, threshold, max_iters};
            IterationTally tally;
            state.dev_scores =
                pagerank_vector(m, alpha, threshold, max_iters, &tally, &options.observer);
            state.iterations = tally.iterations;
            state.trace = std::move(tally.trace);
            state.converged = tally.converged;
            state.proj_scores = left_multiply(m.binary, m.n_d, m.n_p, state.dev_scores);
            normalize(state.proj_scores);
            return state;
        }
        case AlgorithmKind::Hits: {
            const double alpha = request.alpha.value_or(0.85);
            RankParams{0.0, alpha, threshold, max_iters}.validate();
            RankState state = joint(kind, m, 0.0, alpha, Flow::Binary, Start::Uniform, threshold,
                                    max_iters, options, false);
            state.params = RankParams{alpha, 0.0, threshold, max_iters};
            return state;
        }
        case AlgorithmKind::Df: {
            const double alpha = request.alpha.value_or(1.0);
            RankParams{alpha, 0.0, threshold, max_iters}.validate();
            return joint(kind, m, alpha, 0.0, Flow::Weighted, Start::FollowPagerank, threshold,
                         max_iters, options, true);
        }
        case AlgorithmKind::Dc: {
            const double beta = request.beta.value_or(1.0);
            RankParams{0.0, beta, threshold, max_iters}.validate();
            return joint(kind, m, 0.0, beta, Flow::Weighted, Start::FollowPagerank, threshold,
                         max_iters, options, false);
        }
    }
    throw std::invalid_argument("unknown algorithm kind");
}

}  // namespace devrank::dense
