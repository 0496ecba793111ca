#include "devrank/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace devrank {

void SyntheticSpec::validate() const {
    if (n_developers == 0 || n_projects == 0)
        throw std::invalid_argument("developer and project counts must be positive");
    if (follow_exponent < 0.0 || commit_exponent < 0.0)
        throw std::invalid_argument("attachment exponents must be non-negative");
    if (repeat_affinity < 0.0 || repeat_affinity > 1.0)
        throw std::invalid_argument("repeat_affinity must be in [0, 1]");
    if (!(mean_commits > 0.0) || !(mean_follows > 0.0) || !(mean_stars > 0.0))
        throw std::invalid_argument("event means must be positive");
    if (!(span_start < span_end))
        throw std::invalid_argument("span_start must precede span_end");
}

namespace {

// Fenwick tree over non-negative weights; samples an index proportional to
// its weight in O(log n). Weight updates keep the process one deterministic
// sequence for a fixed seed.
class WeightTree {
  public:
    explicit WeightTree(std::size_t n) : tree_(n + 1, 0.0), weights_(n, 0.0) {}

    void set(std::size_t i, double w) {
        const double delta = w - weights_[i];
        weights_[i] = w;
        for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
    }

    double total() const {
        double sum = 0.0;
        std::size_t j = tree_.size() - 1;
        // total = prefix sum over the whole range
        for (; j > 0; j -= j & (~j + 1)) sum += tree_[j];
        return sum;
    }

    // Largest index with prefix-sum <= target; target in [0, total()).
    std::size_t sample(double target) const {
        std::size_t pos = 0;
        std::size_t mask = 1;
        while ((mask << 1) < tree_.size()) mask <<= 1;
        for (; mask > 0; mask >>= 1) {
            const std::size_t next = pos + mask;
            if (next < tree_.size() && tree_[next] <= target) {
                target -= tree_[next];
                pos = next;
            }
        }
        return pos;  // 0-based index
    }

  private:
    std::vector<double> tree_;
    std::vector<double> weights_;
};

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double next_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;  // bias is irrelevant at these bounds
}

std::uint64_t follow_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

EventLog generate_events(const SyntheticSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);

    const std::uint32_t n_d = spec.n_developers, n_p = spec.n_projects;
    const auto n_follows = static_cast<std::uint64_t>(std::llround(spec.mean_follows * n_d));
    const auto n_commits = static_cast<std::uint64_t>(std::llround(spec.mean_commits * n_d));
    const auto n_stars = static_cast<std::uint64_t>(std::llround(spec.mean_stars * n_p));
    const std::uint64_t n_events = n_follows + n_commits + n_stars;

    // Interleave the three event streams uniformly over the span.
    std::vector<EventKind> schedule;
    schedule.reserve(n_events);
    schedule.insert(schedule.end(), n_follows, EventKind::Follow);
    schedule.insert(schedule.end(), n_commits, EventKind::Commit);
    schedule.insert(schedule.end(), n_stars, EventKind::Star);
    for (std::uint64_t i = n_events; i > 1; --i)
        std::swap(schedule[i - 1], schedule[next_below(rng, i)]);

    const auto span_days = static_cast<std::uint64_t>(spec.span_end.days - spec.span_start.days);

    std::vector<std::string> dev_ids(n_d), proj_ids(n_p);
    for (std::uint32_t d = 0; d < n_d; ++d) dev_ids[d] = "dev" + std::to_string(d);
    for (std::uint32_t p = 0; p < n_p; ++p) proj_ids[p] = "proj" + std::to_string(p);

    // Popularity tree: follow targets and committing developers both draw
    // from (in-degree + 1)^follow_exponent.
    WeightTree popularity(n_d);
    std::vector<std::uint64_t> in_degree(n_d, 0);
    for (std::uint32_t d = 0; d < n_d; ++d) popularity.set(d, 1.0);

    // Project attraction tree: (received commits + 1)^commit_exponent.
    WeightTree attraction(n_p);
    std::vector<std::uint64_t> received(n_p, 0);
    for (std::uint32_t p = 0; p < n_p; ++p) attraction.set(p, 1.0);

    // Established projects only (already committed to), same exponent. A
    // developer's first commit draws from here, so every committer attaches
    // to the existing ecosystem and the commit graph stays connected; fresh
    // projects enter through established developers branching out.
    WeightTree established(n_p);

    // Star tree: plain received-commit totals (uniform until any commit).
    WeightTree star_weights(n_p);
    std::uint64_t total_received = 0;

    // Per-developer commit history for the own-project re-commit branch.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> own_targets(n_d);
    std::vector<std::uint64_t> own_total(n_d, 0);

    std::unordered_set<std::uint64_t> follow_pairs;
    std::vector<Event> events;
    events.reserve(n_events);

    for (std::uint64_t i = 0; i < n_events; ++i) {
        Event event;
        event.kind = schedule[i];
        event.date = Date{spec.span_start.days +
                          static_cast<std::int32_t>(i * span_days / n_events)};
        switch (schedule[i]) {
            case EventKind::Follow: {
                const auto follower = static_cast<std::uint32_t>(next_below(rng, n_d));
                std::uint32_t followee = follower;
                for (int attempt = 0; attempt < 16; ++attempt) {
                    followee = static_cast<std::uint32_t>(
                        popularity.sample(next_double(rng) * popularity.total()));
                    if (followee != follower &&
                        !follow_pairs.count(follow_key(follower, followee)))
                        break;
                }
                if (followee == follower) break;  // drop the rare unresolvable draw
                follow_pairs.insert(follow_key(follower, followee));
                ++in_degree[followee];
                popularity.set(followee, std::pow(static_cast<double>(in_degree[followee]) + 1.0,
                                                  spec.follow_exponent));
                event.actor = dev_ids[follower];
                event.target = dev_ids[followee];
                events.push_back(std::move(event));
                break;
            }
            case EventKind::Commit: {
                const auto developer = static_cast<std::uint32_t>(
                    popularity.sample(next_double(rng) * popularity.total()));
                std::uint32_t project;
                if (own_total[developer] > 0 && next_double(rng) < spec.repeat_affinity) {
                    // revisit one of the developer's own projects, by own share
                    auto pick = static_cast<std::uint64_t>(
                        next_double(rng) * static_cast<double>(own_total[developer]));
                    project = own_targets[developer].back().first;
                    for (const auto& [proj, count] : own_targets[developer]) {
                        if (pick < count) {
                            project = proj;
                            break;
                        }
                        pick -= count;
                    }
                } else if (own_total[developer] == 0 && total_received > 0) {
                    project = static_cast<std::uint32_t>(
                        established.sample(next_double(rng) * established.total()));
                } else {
                    project = static_cast<std::uint32_t>(
                        attraction.sample(next_double(rng) * attraction.total()));
                }
                auto& history = own_targets[developer];
                const auto slot = std::find_if(history.begin(), history.end(),
                                               [project](const auto& e) {
                                                   return e.first == project;
                                               });
                if (slot == history.end())
                    history.emplace_back(project, 1);
                else
                    ++slot->second;
                ++own_total[developer];
                ++received[project];
                ++total_received;
                const double weight = std::pow(static_cast<double>(received[project]) + 1.0,
                                               spec.commit_exponent);
                attraction.set(project, weight);
                established.set(project, weight);
                star_weights.set(project, static_cast<double>(received[project]));
                event.actor = dev_ids[developer];
                event.target = proj_ids[project];
                events.push_back(std::move(event));
                break;
            }
            case EventKind::Star: {
                const auto developer = static_cast<std::uint32_t>(next_below(rng, n_d));
                std::uint32_t project = 0;
                if (total_received > 0)
                    project = static_cast<std::uint32_t>(
                        star_weights.sample(next_double(rng) * star_weights.total()));
                else
                    project = static_cast<std::uint32_t>(next_below(rng, n_p));
                event.actor = dev_ids[developer];
                event.target = proj_ids[project];
                events.push_back(std::move(event));
                break;
            }
        }
    }
    return EventLog(std::move(events), {});
}

}  // namespace devrank
