#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "devrank/events.hpp"

namespace devrank {

enum class EntityKind : std::uint8_t { Developer, Project };

/// Dense handle for an interned developer or project. Indices are contiguous
/// per kind, starting at 0.
struct EntityId {
    EntityKind kind = EntityKind::Developer;
    std::uint32_t index = 0;

    friend bool operator==(const EntityId&, const EntityId&) = default;
};

struct FollowEdge {
    std::uint32_t follower = 0;
    std::uint32_t followee = 0;

    friend auto operator<=>(const FollowEdge&, const FollowEdge&) = default;
};

struct CommitEdge {
    std::uint32_t developer = 0;
    std::uint32_t project = 0;
    std::uint64_t count = 1;

    friend auto operator<=>(const CommitEdge&, const CommitEdge&) = default;
};

struct StarEdge {
    std::uint32_t developer = 0;
    std::uint32_t project = 0;

    friend auto operator<=>(const StarEdge&, const StarEdge&) = default;
};

/// Immutable heterogeneous developer/project network.
///
/// Construction canonicalizes the raw records: project aliases applied,
/// duplicate follows collapsed, self-follows dropped, commit counts summed
/// per (developer, project) pair. Interning covers exactly the entities that
/// appear in at least one retained record, in first-appearance order, and is
/// a bijection with the external string ids. Safe for concurrent reads.
class HeteroNetwork {
  public:
    HeteroNetwork() = default;

    std::size_t n_developers() const { return developers_.size(); }
    std::size_t n_projects() const { return projects_.size(); }

    /// Sorted by (follower, followee); unique; no self-loops.
    std::span<const FollowEdge> follows() const { return follows_; }
    /// Sorted by (developer, project); one entry per pair; counts >= 1.
    std::span<const CommitEdge> commits() const { return commits_; }
    /// Sorted by (developer, project); unique.
    std::span<const StarEdge> stars() const { return stars_; }

    const std::string& developer_id(std::uint32_t index) const { return developers_[index]; }
    const std::string& project_id(std::uint32_t index) const { return projects_[index]; }
    std::optional<std::uint32_t> find_developer(const std::string& id) const;
    std::optional<std::uint32_t> find_project(const std::string& id) const;

    /// Total commits made by a developer / received by a project.
    std::uint64_t developer_commit_total(std::uint32_t developer) const;
    std::uint64_t project_commit_total(std::uint32_t project) const;
    /// Number of distinct followers of a developer.
    std::uint64_t follower_count(std::uint32_t developer) const;

    /// Builds a network directly from external-id edge lists, with the same
    /// canonicalization as snapshot(). Interning order: follows, then
    /// commits, then stars, by first appearance.
    static HeteroNetwork from_edges(
        std::span<const std::pair<std::string, std::string>> follows,
        std::span<const std::tuple<std::string, std::string, std::uint64_t>> commits,
        std::span<const std::pair<std::string, std::string>> stars = {});

  private:
    friend HeteroNetwork snapshot(const EventLog&, Date);

    std::uint32_t intern(EntityKind kind, const std::string& id);
    void finalize(const std::vector<FollowEdge>& follow_pairs,
                  const std::unordered_map<std::uint64_t, std::uint64_t>& commit_counts,
                  const std::vector<StarEdge>& star_pairs);

    std::vector<std::string> developers_;
    std::vector<std::string> projects_;
    std::unordered_map<std::string, std::uint32_t> developer_index_;
    std::unordered_map<std::string, std::uint32_t> project_index_;
    std::vector<FollowEdge> follows_;
    std::vector<CommitEdge> commits_;
    std::vector<StarEdge> stars_;
};

/// Network induced by events strictly before the cutoff date.
HeteroNetwork snapshot(const EventLog& log, Date cutoff);

/// Read-only view of the developer-only follow graph.
class FollowView {
  public:
    explicit FollowView(const HeteroNetwork& net) : net_(&net) {}

    std::size_t n_nodes() const { return net_->n_developers(); }
    std::span<const FollowEdge> edges() const { return net_->follows(); }
    EntityId node(std::uint32_t index) const { return {EntityKind::Developer, index}; }
    const HeteroNetwork& network() const { return *net_; }

  private:
    const HeteroNetwork* net_;
};

/// Read-only view of the weighted developer-project bipartite graph.
class CommitView {
  public:
    explicit CommitView(const HeteroNetwork& net) : net_(&net) {}

    std::size_t n_developers() const { return net_->n_developers(); }
    std::size_t n_projects() const { return net_->n_projects(); }
    std::size_t n_nodes() const { return n_developers() + n_projects(); }
    std::span<const CommitEdge> edges() const { return net_->commits(); }
    const HeteroNetwork& network() const { return *net_; }

  private:
    const HeteroNetwork* net_;
};

/// Splits the network into its follow and commit views. Both share the
/// network's entity ids.
std::pair<FollowView, CommitView> decompose(const HeteroNetwork& net);

}  // namespace devrank
