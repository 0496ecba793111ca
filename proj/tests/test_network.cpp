#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "devrank/network.hpp"
#include "support.hpp"

using namespace devrank;
using devrank::test::below;

namespace {

EventLog sample_log() {
    std::vector<Event> events;
    events.push_back({EventKind::Follow, "mike", "jack", make_date(2011, 5, 1), 1});
    events.push_back({EventKind::Follow, "john", "jack", make_date(2011, 6, 1), 1});
    events.push_back({EventKind::Follow, "john", "jack", make_date(2011, 7, 1), 1});  // duplicate
    events.push_back({EventKind::Follow, "mike", "mike", make_date(2011, 7, 2), 1});  // self
    events.push_back({EventKind::Commit, "jack", "js", make_date(2011, 8, 1), 2});
    events.push_back({EventKind::Commit, "jack", "ruby", make_date(2011, 8, 2), 1});
    events.push_back({EventKind::Commit, "mike", "js", make_date(2011, 8, 3), 1});
    events.push_back({EventKind::Star, "john", "js", make_date(2011, 9, 1), 1});
    events.push_back({EventKind::Follow, "late", "jack", make_date(2012, 1, 1), 1});
    return EventLog(std::move(events), {});
}

}  // namespace

TEST_CASE("snapshot keeps events strictly before the cutoff") {
    const EventLog log = sample_log();

    const HeteroNetwork net = snapshot(log, make_date(2012, 1, 1));
    CHECK(net.n_developers() == 3);  // mike, jack, john; "late" is on the test side
    CHECK(net.n_projects() == 2);
    CHECK(net.follows().size() == 2);  // duplicate collapsed, self-follow dropped
    CHECK(net.commits().size() == 3);
    CHECK(net.stars().size() == 1);

    // boundary: an event dated exactly at the cutoff is excluded
    const HeteroNetwork later = snapshot(log, make_date(2012, 1, 2));
    CHECK(later.n_developers() == 4);
    CHECK(later.follows().size() == 3);
}

TEST_CASE("interning round-trips external ids") {
    const HeteroNetwork net = snapshot(sample_log(), make_date(2012, 1, 1));
    for (std::uint32_t d = 0; d < net.n_developers(); ++d) {
        const auto back = net.find_developer(net.developer_id(d));
        REQUIRE(back.has_value());
        CHECK(*back == d);
    }
    for (std::uint32_t p = 0; p < net.n_projects(); ++p) {
        const auto back = net.find_project(net.project_id(p));
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
    CHECK(!net.find_developer("nobody").has_value());
}

TEST_CASE("commits to aliased projects merge under the canonical id") {
    std::vector<Event> events;
    events.push_back({EventKind::Commit, "d", "B", make_date(2011, 1, 1), 1});
    events.push_back({EventKind::Commit, "d", "B", make_date(2011, 1, 2), 1});
    events.push_back({EventKind::Commit, "d", "B", make_date(2011, 1, 3), 1});
    events.push_back({EventKind::Commit, "d", "A", make_date(2011, 1, 4), 2});
    const EventLog log(std::move(events), {{"B", "A"}});

    const HeteroNetwork net = snapshot(log, make_date(2012, 1, 1));
    REQUIRE(net.n_projects() == 1);
    CHECK(net.project_id(0) == "A");
    REQUIRE(net.commits().size() == 1);
    CHECK(net.commits()[0].count == 5);  // 3 via the alias + 2 direct
}

TEST_CASE("alias-then-count equals count-then-merge on random forests") {
    std::mt19937_64 rng(7341);
    for (int round = 0; round < 25; ++round) {
        const std::uint32_t n_projects = 2 + below(rng, 8);
        std::unordered_map<std::string, std::string> aliases;
        std::vector<std::string> names;
        for (std::uint32_t p = 0; p < n_projects; ++p) names.push_back("P" + std::to_string(p));
        for (std::uint32_t p = 1; p < n_projects; ++p) {
            if (rng() % 2 == 0) continue;
            std::string root = names[below(rng, p)];
            while (aliases.count(root)) root = aliases[root];  // keep the map fully resolved
            if (root != names[p]) aliases[names[p]] = root;
        }
        std::vector<Event> events;
        std::map<std::pair<std::string, std::string>, std::uint64_t> raw_counts;
        for (int e = 0; e < 40; ++e) {
            const std::string dev = "d" + std::to_string(below(rng, 5));
            const std::string proj = names[below(rng, n_projects)];
            const std::uint64_t count = 1 + below(rng, 4);
            events.push_back({EventKind::Commit, dev, proj, make_date(2011, 1, 1), count});
            raw_counts[{dev, proj}] += count;
        }
        const EventLog log(std::move(events), aliases);
        const HeteroNetwork net = snapshot(log, make_date(2012, 1, 1));

        // oracle: count per raw key, then merge by canonical project
        std::map<std::pair<std::string, std::string>, std::uint64_t> merged;
        for (const auto& [key, count] : raw_counts) {
            auto canonical = key.second;
            if (aliases.count(canonical)) canonical = aliases.at(canonical);
            merged[{key.first, canonical}] += count;
        }
        REQUIRE(net.commits().size() == merged.size());
        for (const auto& edge : net.commits()) {
            const auto key = std::make_pair(net.developer_id(edge.developer),
                                            net.project_id(edge.project));
            CHECK(merged.at(key) == edge.count);
        }
    }
}

TEST_CASE("snapshot is monotone in the cutoff") {
    std::mt19937_64 rng(99);
    std::vector<Event> events;
    for (int e = 0; e < 120; ++e) {
        const auto day = static_cast<int>(below(rng, 700));
        Event event;
        event.date = Date{make_date(2010, 1, 1).days + day};
        switch (below(rng, 3)) {
            case 0:
                event.kind = EventKind::Follow;
                event.actor = "d" + std::to_string(below(rng, 8));
                event.target = "d" + std::to_string(below(rng, 8));
                break;
            case 1:
                event.kind = EventKind::Commit;
                event.actor = "d" + std::to_string(below(rng, 8));
                event.target = "p" + std::to_string(below(rng, 4));
                event.count = 1 + below(rng, 3);
                break;
            default:
                event.kind = EventKind::Star;
                event.actor = "d" + std::to_string(below(rng, 8));
                event.target = "p" + std::to_string(below(rng, 4));
                break;
        }
        events.push_back(std::move(event));
    }
    const EventLog log(std::move(events), {});

    const HeteroNetwork early = snapshot(log, make_date(2010, 9, 1));
    const HeteroNetwork late = snapshot(log, make_date(2012, 6, 1));

    for (const auto& edge : early.follows()) {
        const auto f = late.find_developer(early.developer_id(edge.follower));
        const auto t = late.find_developer(early.developer_id(edge.followee));
        REQUIRE(f.has_value());
        REQUIRE(t.has_value());
        const auto& lf = late.follows();
        CHECK(std::find(lf.begin(), lf.end(), FollowEdge{*f, *t}) != lf.end());
    }
    for (const auto& edge : early.commits()) {
        const auto d = late.find_developer(early.developer_id(edge.developer));
        const auto p = late.find_project(early.project_id(edge.project));
        REQUIRE(d.has_value());
        REQUIRE(p.has_value());
        std::uint64_t late_count = 0;
        for (const auto& le : late.commits())
            if (le.developer == *d && le.project == *p) late_count = le.count;
        CHECK(late_count >= edge.count);
    }
}

TEST_CASE("decompose splits nodes and shares ids") {
    // three developers, two projects; bipartite side has all five nodes
    const EventLog log = sample_log();
    const HeteroNetwork net = snapshot(log, make_date(2012, 1, 1));
    const auto [follow_view, commit_view] = decompose(net);

    CHECK(follow_view.n_nodes() == 3);
    CHECK(commit_view.n_nodes() == 5);
    CHECK(follow_view.edges().size() == 2);
    CHECK(commit_view.edges().size() == 3);
    CHECK(&follow_view.network() == &commit_view.network());
    CHECK(follow_view.node(0).kind == EntityKind::Developer);
}

TEST_CASE("commit view of a commit-free network keeps nodes") {
    std::vector<std::pair<std::string, std::string>> follows{{"a", "b"}, {"b", "c"}};
    const auto net = HeteroNetwork::from_edges(follows, {}, {});
    const auto [follow_view, commit_view] = decompose(net);
    CHECK(commit_view.edges().empty());
    CHECK(commit_view.n_developers() == 3);
    CHECK(follow_view.n_nodes() == 3);
}

TEST_CASE("follow view exposes only developer nodes on random networks") {
    std::mt19937_64 rng(512);
    for (int round = 0; round < 20; ++round) {
        const HeteroNetwork net = test::random_network(rng);
        const auto [follow_view, commit_view] = decompose(net);
        CHECK(follow_view.n_nodes() == net.n_developers());
        for (const auto& edge : follow_view.edges()) {
            CHECK(edge.follower < net.n_developers());
            CHECK(edge.followee < net.n_developers());
            CHECK(follow_view.node(edge.follower).kind == EntityKind::Developer);
        }
        CHECK(commit_view.n_nodes() == net.n_developers() + net.n_projects());
    }
}

TEST_CASE("from_edges canonicalizes like snapshot") {
    std::vector<std::pair<std::string, std::string>> follows{
        {"a", "b"}, {"a", "b"}, {"c", "c"}, {"b", "a"}};
    std::vector<std::tuple<std::string, std::string, std::uint64_t>> commits{
        {"a", "p", 2}, {"a", "p", 3}};
    const auto net = HeteroNetwork::from_edges(follows, commits, {});
    CHECK(net.follows().size() == 2);   // duplicate collapsed, self dropped
    CHECK(net.n_developers() == 2);     // "c" only appeared in a self-follow
    REQUIRE(net.commits().size() == 1);
    CHECK(net.commits()[0].count == 5);
    CHECK(net.follower_count(*net.find_developer("b")) == 1);
    CHECK(net.developer_commit_total(*net.find_developer("a")) == 5);
    CHECK(net.project_commit_total(*net.find_project("p")) == 5);
}
