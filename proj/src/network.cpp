#include "devrank/network.hpp"

#include <algorithm>

namespace devrank {

namespace {

std::uint64_t pair_key(std::uint32_t developer, std::uint32_t project) {
    return (static_cast<std::uint64_t>(developer) << 32) | project;
}

}  // namespace

std::optional<std::uint32_t> HeteroNetwork::find_developer(const std::string& id) const {
    const auto it = developer_index_.find(id);
    if (it == developer_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> HeteroNetwork::find_project(const std::string& id) const {
    const auto it = project_index_.find(id);
    if (it == project_index_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t HeteroNetwork::developer_commit_total(std::uint32_t developer) const {
    std::uint64_t total = 0;
    for (const auto& edge : commits_)
        if (edge.developer == developer) total += edge.count;
    return total;
}

std::uint64_t HeteroNetwork::project_commit_total(std::uint32_t project) const {
    std::uint64_t total = 0;
    for (const auto& edge : commits_)
        if (edge.project == project) total += edge.count;
    return total;
}

std::uint64_t HeteroNetwork::follower_count(std::uint32_t developer) const {
    std::uint64_t total = 0;
    for (const auto& edge : follows_)
        if (edge.followee == developer) ++total;
    return total;
}

std::uint32_t HeteroNetwork::intern(EntityKind kind, const std::string& id) {
    auto& index = kind == EntityKind::Developer ? developer_index_ : project_index_;
    auto& names = kind == EntityKind::Developer ? developers_ : projects_;
    const auto it = index.find(id);
    if (it != index.end()) return it->second;
    const auto handle = static_cast<std::uint32_t>(names.size());
    names.push_back(id);
    index.emplace(id, handle);
    return handle;
}

void HeteroNetwork::finalize(const std::vector<FollowEdge>& follow_pairs,
                             const std::unordered_map<std::uint64_t, std::uint64_t>& commit_counts,
                             const std::vector<StarEdge>& star_pairs) {
    follows_ = follow_pairs;
    std::sort(follows_.begin(), follows_.end());
    follows_.erase(std::unique(follows_.begin(), follows_.end()), follows_.end());

    commits_.reserve(commit_counts.size());
    for (const auto& [key, count] : commit_counts) {
        commits_.push_back({static_cast<std::uint32_t>(key >> 32),
                            static_cast<std::uint32_t>(key & 0xffffffffu), count});
    }
    std::sort(commits_.begin(), commits_.end());

    stars_ = star_pairs;
    std::sort(stars_.begin(), stars_.end());
    stars_.erase(std::unique(stars_.begin(), stars_.end()), stars_.end());
}

HeteroNetwork snapshot(const EventLog& log, Date cutoff) {
    HeteroNetwork net;
    std::vector<FollowEdge> follow_pairs;
    std::unordered_map<std::uint64_t, std::uint64_t> commit_counts;
    std::vector<StarEdge> star_pairs;

    for (const Event& event : log.events()) {
        if (!(event.date < cutoff)) continue;
        switch (event.kind) {
            case EventKind::Follow: {
                if (event.actor == event.target) break;  // self-follows dropped
                const auto follower = net.intern(EntityKind::Developer, event.actor);
                const auto followee = net.intern(EntityKind::Developer, event.target);
                follow_pairs.push_back({follower, followee});
                break;
            }
            case EventKind::Commit: {
                const auto developer = net.intern(EntityKind::Developer, event.actor);
                const auto project =
                    net.intern(EntityKind::Project, log.canonical_project(event.target));
                commit_counts[pair_key(developer, project)] += event.count;
                break;
            }
            case EventKind::Star: {
                const auto developer = net.intern(EntityKind::Developer, event.actor);
                const auto project =
                    net.intern(EntityKind::Project, log.canonical_project(event.target));
                star_pairs.push_back({developer, project});
                break;
            }
        }
    }
    net.finalize(follow_pairs, commit_counts, star_pairs);
    return net;
}

HeteroNetwork HeteroNetwork::from_edges(
    std::span<const std::pair<std::string, std::string>> follows,
    std::span<const std::tuple<std::string, std::string, std::uint64_t>> commits,
    std::span<const std::pair<std::string, std::string>> stars) {
    HeteroNetwork net;
    std::vector<FollowEdge> follow_pairs;
    std::unordered_map<std::uint64_t, std::uint64_t> commit_counts;
    std::vector<StarEdge> star_pairs;

    for (const auto& [follower, followee] : follows) {
        if (follower == followee) continue;
        const auto f = net.intern(EntityKind::Developer, follower);
        const auto t = net.intern(EntityKind::Developer, followee);
        follow_pairs.push_back({f, t});
    }
    for (const auto& [developer, project, count] : commits) {
        const auto d = net.intern(EntityKind::Developer, developer);
        const auto p = net.intern(EntityKind::Project, project);
        commit_counts[pair_key(d, p)] += count;
    }
    for (const auto& [developer, project] : stars) {
        const auto d = net.intern(EntityKind::Developer, developer);
        const auto p = net.intern(EntityKind::Project, project);
        star_pairs.push_back({d, p});
    }
    net.finalize(follow_pairs, commit_counts, star_pairs);
    return net;
}

std::pair<FollowView, CommitView> decompose(const HeteroNetwork& net) {
    return {FollowView(net), CommitView(net)};
}

}  // namespace devrank
