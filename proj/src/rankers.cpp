#include "devrank/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "devrank/propagation.hpp"

namespace devrank {

namespace {

constexpr double kInitDamping = 0.85;  // follow-graph pagerank used as the starting point

// Neumaier-compensated sum; keeps the normalization invariant tight on large
// vectors without giving up fixed-order determinism.
double stable_sum(std::span<const double> v) {
    double sum = 0.0, comp = 0.0;
    for (const double x : v) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

// Normalizes to sum 1. A zero-mass vector (possible when no commit edge
// exists) degenerates to uniform so downstream ranking stays defined.
void normalize(std::span<double> v) {
    if (v.empty()) return;
    const double sum = stable_sum(v);
    if (sum > 0.0) {
        for (double& x : v) x /= sum;
    } else {
        const double uniform = 1.0 / static_cast<double>(v.size());
        for (double& x : v) x = uniform;
    }
}

double l1_diff(std::span<const double> a, std::span<const double> b) {
    double err = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = std::abs(a[i] - b[i]);
        const double t = err + x;
        if (err >= x)
            comp += (err - t) + x;
        else
            comp += (x - t) + err;
        err = t;
    }
    return err + comp;
}

void fill_uniform(std::span<double> v) {
    if (v.empty()) return;
    const double uniform = 1.0 / static_cast<double>(v.size());
    for (double& x : v) x = uniform;
}

PageRankResult pagerank_iterate(const FollowTransition& transition, double alpha,
                                double threshold, int max_iters, const RankOptions& options) {
    const std::size_t n = transition.n_developers();
    PageRankResult result;
    result.scores.resize(n);
    fill_uniform(result.scores);
    if (n == 0) {
        result.converged = true;
        return result;
    }
    const double teleport = (1.0 - alpha) / static_cast<double>(n);
    std::vector<double> next(n);
    for (int iter = 1; iter <= max_iters; ++iter) {
        transition.apply(result.scores, next, options.threads);
        for (double& x : next) x = alpha * x + teleport;
        normalize(next);
        const double err = l1_diff(next, result.scores);
        result.scores.swap(next);
        result.iterations = iter;
        result.trace.push_back(err);
        if (options.observer) options.observer(iter, result.scores, {}, err);
        if (err < threshold) {
            result.converged = true;
            break;
        }
    }
    return result;
}

enum class CommitFlow { Weighted, Binary };
enum class DevStart { FollowPagerank, Uniform };

// Shared joint iteration behind devrank, df, dc and hits. df/dc call it with
// the corresponding parameter pinned to zero, which makes the reduction
// identities hold bitwise rather than within tolerance.
RankState joint_iteration(AlgorithmKind kind, const HeteroNetwork& net, double alpha, double beta,
                          CommitFlow flow, DevStart start, double threshold, int max_iters,
                          const RankOptions& options, bool final_weighted_projection) {
    const std::size_t n_d = net.n_developers(), n_p = net.n_projects();
    if (n_d == 0) throw std::invalid_argument("network has no developers");

    const FollowTransition transition = FollowTransition::build(net);
    const CommitPropagation commit = CommitPropagation::build(net);

    RankState state;
    state.kind = kind;
    state.params = RankParams{alpha, beta, threshold, max_iters};

    std::vector<double> dev(n_d), proj(n_p);
    if (start == DevStart::FollowPagerank) {
        RankOptions init_options;
        init_options.threads = options.threads;  // init runs unobserved
        dev = pagerank_iterate(transition, kInitDamping, threshold, max_iters, init_options)
                  .scores;
    } else {
        fill_uniform(dev);
    }
    fill_uniform(proj);

    const double teleport = std::max(0.0, 1.0 - alpha - beta) / static_cast<double>(n_d);
    std::vector<double> new_dev(n_d), new_proj(n_p), follow_term(n_d), commit_term(n_d, 0.0);

    for (int iter = 1; iter <= max_iters; ++iter) {
        if (n_p > 0) {
            if (flow == CommitFlow::Weighted)
                commit.apply_dev_to_proj(dev, new_proj, options.threads);
            else
                commit.apply_binary_dev_to_proj(dev, new_proj, options.threads);
            normalize(new_proj);
        }
        transition.apply(dev, follow_term, options.threads);
        if (n_p > 0) {
            if (flow == CommitFlow::Weighted)
                commit.apply_proj_to_dev(proj, commit_term, options.threads);
            else
                commit.apply_binary_proj_to_dev(proj, commit_term, options.threads);
        }
        for (std::size_t i = 0; i < n_d; ++i)
            new_dev[i] = alpha * follow_term[i] + beta * commit_term[i] + teleport;
        normalize(new_dev);

        const double err = l1_diff(new_dev, dev) + l1_diff(new_proj, proj);
        dev.swap(new_dev);
        proj.swap(new_proj);
        state.iterations = iter;
        state.trace.push_back(err);
        if (options.observer) options.observer(iter, dev, proj, err);
        if (err < threshold) {
            state.converged = true;
            break;
        }
    }

    if (final_weighted_projection && n_p > 0) {
        commit.apply_dev_to_proj(dev, proj, options.threads);
        normalize(proj);
    }
    state.dev_scores = std::move(dev);
    state.proj_scores = std::move(proj);
    return state;
}

void check_scalar_params(double alpha, double beta, double threshold, int max_iters) {
    RankParams params{alpha, beta, threshold, max_iters};
    params.validate();
}

}  // namespace

void RankParams::validate() const {
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw std::invalid_argument("alpha and beta must be non-negative");
    if (alpha + beta > 1.0 + 1e-9)
        throw std::invalid_argument("alpha + beta must not exceed 1");
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
}

std::string_view to_string(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::DevRank: return "devrank";
        case AlgorithmKind::PageRank: return "pagerank";
        case AlgorithmKind::Hits: return "hits";
        case AlgorithmKind::Df: return "df";
        case AlgorithmKind::Dc: return "dc";
    }
    return "unknown";
}

std::optional<AlgorithmKind> parse_algorithm(std::string_view name) {
    for (const AlgorithmKind kind : kAllAlgorithms)
        if (name == to_string(kind)) return kind;
    return std::nullopt;
}

PageRankResult pagerank_follow(const HeteroNetwork& net, double alpha, double threshold,
                               int max_iters, const RankOptions& options) {
    check_scalar_params(alpha, 0.0, threshold, max_iters);
    if (net.n_developers() == 0) throw std::invalid_argument("network has no developers");
    return pagerank_iterate(FollowTransition::build(net), alpha, threshold, max_iters, options);
}

RankState devrank(const HeteroNetwork& net, const RankParams& params, const RankOptions& options) {
    params.validate();
    return joint_iteration(AlgorithmKind::DevRank, net, params.alpha, params.beta,
                           CommitFlow::Weighted, DevStart::FollowPagerank, params.threshold,
                           params.max_iters, options, false);
}

RankState pagerank_variant(const HeteroNetwork& net, double alpha, double threshold, int max_iters,
                           const RankOptions& options) {
    check_scalar_params(alpha, 0.0, threshold, max_iters);
    if (net.n_developers() == 0) throw std::invalid_argument("network has no developers");

    const FollowTransition transition = FollowTransition::build(net);
    PageRankResult pr = pagerank_iterate(transition, alpha, threshold, max_iters, options);

    RankState state;
    state.kind = AlgorithmKind::PageRank;
    state.params = RankParams{alpha, 0.0, threshold, max_iters};
    state.iterations = pr.iterations;
    state.trace = std::move(pr.trace);
    state.converged = pr.converged;
    state.proj_scores.assign(net.n_projects(), 0.0);
    if (net.n_projects() > 0) {
        const CommitPropagation commit = CommitPropagation::build(net);
        commit.apply_binary_dev_to_proj(pr.scores, state.proj_scores, options.threads);
        normalize(state.proj_scores);
    }
    state.dev_scores = std::move(pr.scores);
    return state;
}

RankState hits_variant(const HeteroNetwork& net, double alpha, double threshold, int max_iters,
                       const RankOptions& options) {
    check_scalar_params(0.0, alpha, threshold, max_iters);
    RankState state = joint_iteration(AlgorithmKind::Hits, net, 0.0, alpha, CommitFlow::Binary,
                                      DevStart::Uniform, threshold, max_iters, options, false);
    state.params = RankParams{alpha, 0.0, threshold, max_iters};  // alpha is the damping here
    return state;
}

RankState df_variant(const HeteroNetwork& net, double alpha, double threshold, int max_iters,
                     const RankOptions& options) {
    check_scalar_params(alpha, 0.0, threshold, max_iters);
    return joint_iteration(AlgorithmKind::Df, net, alpha, 0.0, CommitFlow::Weighted,
                           DevStart::FollowPagerank, threshold, max_iters, options, true);
}

RankState dc_variant(const HeteroNetwork& net, double beta, double threshold, int max_iters,
                     const RankOptions& options) {
    check_scalar_params(0.0, beta, threshold, max_iters);
    return joint_iteration(AlgorithmKind::Dc, net, 0.0, beta, CommitFlow::Weighted,
                           DevStart::FollowPagerank, threshold, max_iters, options, false);
}

RankState run(AlgorithmKind kind, const HeteroNetwork& net, const RunRequest& request,
              const RankOptions& options) {
    std::vector<std::string> warnings;
    const auto ignored = [&warnings, kind](const char* name) {
        warnings.push_back(std::string(to_string(kind)) + " ignores " + name +
                           "; the supplied value has no effect");
    };

    RankState state;
    switch (kind) {
        case AlgorithmKind::DevRank: {
            RankParams params;
            params.alpha = request.alpha.value_or(0.37);
            params.beta = request.beta.value_or(0.63);
            params.threshold = request.threshold;
            params.max_iters = request.max_iters;
            state = devrank(net, params, options);
            break;
        }
        case AlgorithmKind::PageRank:
            if (request.beta) ignored("beta");
            state = pagerank_variant(net, request.alpha.value_or(0.85), request.threshold,
                                     request.max_iters, options);
            break;
        case AlgorithmKind::Hits:
            if (request.beta) ignored("beta");
            state = hits_variant(net, request.alpha.value_or(0.85), request.threshold,
                                 request.max_iters, options);
            break;
        case AlgorithmKind::Df:
            if (request.beta) ignored("beta");
            state = df_variant(net, request.alpha.value_or(1.0), request.threshold,
                               request.max_iters, options);
            break;
        case AlgorithmKind::Dc:
            if (request.alpha) ignored("alpha");
            state = dc_variant(net, request.beta.value_or(1.0), request.threshold,
                               request.max_iters, options);
            break;
    }
    state.warnings = std::move(warnings);
    return state;
}

namespace {

template <typename T>
std::vector<std::uint32_t> order_desc(std::span<const T> values) {
    std::vector<std::uint32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&values](std::uint32_t a, std::uint32_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });
    return order;
}

}  // namespace

std::vector<std::uint32_t> ranking_order(std::span<const double> scores) {
    return order_desc(scores);
}

std::vector<std::uint32_t> ranking_order(std::span<const std::uint64_t> counts) {
    return order_desc(counts);
}

}  // namespace devrank
