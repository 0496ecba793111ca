#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "devrank/evaluation.hpp"
#include "devrank/synthetic.hpp"
#include "support.hpp"

using namespace devrank;
using devrank::test::below;
using devrank::test::uniform01;

namespace {

std::vector<double> random_scores(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> scores(n);
    for (double& s : scores) s = uniform01(rng);
    return scores;
}

std::vector<std::uint64_t> random_counts(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> counts(n);
    for (auto& c : counts) c = below(rng, 50);
    return counts;
}

// textbook two-pass Pearson, used as the oracle
double pearson_naive(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

TEST_CASE("ground truth counts window events against the training snapshot") {
    std::vector<Event> events;
    events.push_back({EventKind::Follow, "a", "b", make_date(2011, 3, 1), 1});
    events.push_back({EventKind::Commit, "b", "p", make_date(2011, 4, 1), 2});
    events.push_back({EventKind::Star, "a", "p", make_date(2011, 5, 1), 1});
    // window events
    events.push_back({EventKind::Follow, "a", "b", make_date(2012, 2, 1), 1});   // counted
    events.push_back({EventKind::Follow, "a", "zz", make_date(2012, 3, 1), 1});  // target absent
    events.push_back({EventKind::Follow, "zz", "b", make_date(2012, 4, 1), 1});  // actor absent
    events.push_back({EventKind::Star, "b", "p", make_date(2012, 5, 1), 1});     // counted
    events.push_back({EventKind::Follow, "a", "b", make_date(2013, 1, 1), 1});   // at test_end
    const EventLog log(std::move(events), {});

    const SplitSpec split{make_date(2012, 1, 1), make_date(2013, 1, 1), "plan"};
    const HeteroNetwork net = snapshot(log, split.train_end);
    const GroundTruth truth = compute_ground_truth(log, split, net);

    CHECK(truth.new_followers[*net.find_developer("b")] == 1);
    CHECK(truth.new_followers[*net.find_developer("a")] == 0);
    CHECK(truth.new_stars[*net.find_project("p")] == 1);
    CHECK(truth.window_follows == 3);  // the 2013-01-01 record is outside the window
    CHECK(truth.dropped_follows == 2);
    CHECK(truth.window_stars == 1);
    CHECK(truth.dropped_stars == 0);
}

TEST_CASE("window boundaries are [train_end, test_end)") {
    std::vector<Event> events;
    events.push_back({EventKind::Commit, "a", "p", make_date(2011, 1, 1), 1});
    events.push_back({EventKind::Follow, "a", "a2", make_date(2011, 1, 1), 1});
    events.push_back({EventKind::Follow, "a", "a2", make_date(2012, 1, 1), 1});   // on train_end
    events.push_back({EventKind::Follow, "a", "a2", make_date(2012, 12, 31), 1});
    events.push_back({EventKind::Follow, "a", "a2", make_date(2013, 1, 1), 1});   // on test_end
    const EventLog log(std::move(events), {});
    const SplitSpec split{make_date(2012, 1, 1), make_date(2013, 1, 1), ""};
    const HeteroNetwork net = snapshot(log, split.train_end);
    const GroundTruth truth = compute_ground_truth(log, split, net);
    CHECK(truth.new_followers[*net.find_developer("a2")] == 2);
    CHECK(truth.window_follows == 2);
}

TEST_CASE("ground truth matches a naive scan and balances the window totals") {
    std::mt19937_64 rng(5151);
    for (int round = 0; round < 20; ++round) {
        std::vector<Event> events;
        for (int e = 0; e < 150; ++e) {
            Event event;
            event.date = Date{make_date(2011, 1, 1).days + static_cast<int>(below(rng, 730))};
            const auto roll = below(rng, 3);
            event.kind = roll == 0   ? EventKind::Follow
                         : roll == 1 ? EventKind::Commit
                                     : EventKind::Star;
            event.actor = "d" + std::to_string(below(rng, 12));
            event.target = event.kind == EventKind::Follow
                               ? "d" + std::to_string(below(rng, 12))
                               : "p" + std::to_string(below(rng, 5));
            events.push_back(std::move(event));
        }
        const EventLog log(std::move(events), {});
        const SplitSpec split{make_date(2011, 10, 1), make_date(2012, 6, 1), ""};
        const HeteroNetwork net = snapshot(log, split.train_end);
        const GroundTruth truth = compute_ground_truth(log, split, net);

        std::uint64_t window_follows = 0, counted_follows = 0;
        for (const Event& e : log.events()) {
            if (e.kind != EventKind::Follow) continue;
            if (e.date < split.train_end || !(e.date < split.test_end)) continue;
            ++window_follows;
            if (net.find_developer(e.actor) && net.find_developer(e.target) &&
                e.actor != e.target) {
                ++counted_follows;
                CHECK(truth.new_followers[*net.find_developer(e.target)] > 0);
            }
        }
        CHECK(truth.window_follows == window_follows);
        CHECK(truth.window_follows == truth.dropped_follows + counted_follows);
        std::uint64_t sum = 0;
        for (const auto c : truth.new_followers) sum += c;
        CHECK(sum == counted_follows);
    }
}

TEST_CASE("precision is 1 on matching orders and 0 on disjoint top-k") {
    const std::vector<double> scores{0.9, 0.7, 0.5, 0.3, 0.1};
    const std::vector<std::uint64_t> aligned{90, 70, 50, 30, 10};
    CHECK(precision_at_k(scores, aligned, 3) == 1.0);
    CHECK(precision_at_k(scores, aligned, 5) == 1.0);

    const std::vector<std::uint64_t> reversed{1, 2, 3, 40, 50};
    CHECK(precision_at_k(scores, reversed, 2) == 0.0);
    CHECK(precision_at_k(scores, reversed, 5) == 1.0);  // whole population overlaps

    CHECK_THROWS_AS((void)precision_at_k(scores, aligned, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)precision_at_k(scores, aligned, 6), std::invalid_argument);
}

TEST_CASE("precision agrees with a brute-force oracle and stays in [0,1]") {
    std::mt19937_64 rng(9876);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 3 + below(rng, 40);
        const auto scores = random_scores(rng, n);
        const auto truth = random_counts(rng, n);
        const std::size_t k = 1 + below(rng, static_cast<std::uint32_t>(n));

        // oracle: selection sort by (value desc, index asc), count overlap
        auto top_of = [&](auto values) {
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                if (values[a] != values[b]) return values[a] > values[b];
                return a < b;
            });
            idx.resize(k);
            return idx;
        };
        const auto ts = top_of(scores);
        const auto tt = top_of(truth);
        std::size_t overlap = 0;
        for (const auto i : ts)
            if (std::find(tt.begin(), tt.end(), i) != tt.end()) ++overlap;

        const double got = precision_at_k(scores, truth, k);
        CHECK(got == doctest::Approx(static_cast<double>(overlap) / static_cast<double>(k))
                         .epsilon(1e-12));
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
    }
}

TEST_CASE("precision is invariant under strictly increasing score transforms") {
    std::mt19937_64 rng(1123);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 4 + below(rng, 30);
        const auto scores = random_scores(rng, n);
        const auto truth = random_counts(rng, n);
        const std::size_t k = 1 + below(rng, static_cast<std::uint32_t>(n));
        auto transformed = scores;
        for (double& s : transformed) s = 3.0 * s + 1.0;
        auto cubed = scores;
        for (double& s : cubed) s = s * s * s + s;
        CHECK(precision_at_k(scores, truth, k) == precision_at_k(transformed, truth, k));
        CHECK(precision_at_k(scores, truth, k) == precision_at_k(cubed, truth, k));
    }
}

TEST_CASE("pearson hits +1 and -1 on exact linear relations") {
    const std::vector<double> scores{0.5, 0.4, 0.3, 0.2, 0.1};
    const std::vector<std::uint64_t> doubled{100, 80, 60, 40, 20};
    CHECK(*pearson_top_k(scores, doubled, 5) == doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<std::uint64_t> negated{10, 20, 30, 40, 50};
    CHECK(*pearson_top_k(scores, negated, 5) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("pearson matches the direct formula on random series") {
    std::mt19937_64 rng(2718);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 10;
        const auto scores = random_scores(rng, n);
        const auto truth = random_counts(rng, n);
        const std::size_t k = 2 + below(rng, n - 1);

        const auto order = ranking_order(std::span<const double>(scores));
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < k; ++i) {
            xs.push_back(scores[order[i]]);
            ys.push_back(static_cast<double>(truth[order[i]]));
        }
        double syy = 0.0;
        for (const double y : ys) syy += (y - ys[0]) * (y - ys[0]);
        const auto got = pearson_top_k(scores, truth, k);
        if (syy == 0.0) {
            CHECK(!got.has_value());
            continue;
        }
        REQUIRE(got.has_value());
        CHECK(*got == doctest::Approx(pearson_naive(xs, ys)).epsilon(1e-12));
    }
}

TEST_CASE("pearson is invariant under positive affine transforms") {
    std::mt19937_64 rng(3141);
    const std::size_t n = 20;
    const auto scores = random_scores(rng, n);
    const auto truth = random_counts(rng, n);
    auto shifted = scores;
    for (double& s : shifted) s = 2.5 * s + 4.0;
    const auto base = pearson_top_k(scores, truth, 12);
    // a positive affine map keeps both the selection and the correlation
    const auto moved = pearson_top_k(shifted, truth, 12);
    REQUIRE(base.has_value());
    REQUIRE(moved.has_value());
    CHECK(*base == doctest::Approx(*moved).epsilon(1e-12));
}

TEST_CASE("pearson returns an explicit marker on zero variance") {
    const std::vector<double> scores{0.4, 0.3, 0.2, 0.1};
    const std::vector<std::uint64_t> constant{5, 5, 5, 5};
    CHECK(!pearson_top_k(scores, constant, 4).has_value());
    CHECK_THROWS_AS((void)pearson_top_k(scores, constant, 1), std::invalid_argument);
}

TEST_CASE("pearson can select by truth instead of score") {
    const std::vector<double> scores{0.1, 0.9, 0.5, 0.7};
    const std::vector<std::uint64_t> truth{100, 1, 50, 2};
    const auto by_score = pearson_top_k(scores, truth, 3, false);
    const auto by_truth = pearson_top_k(scores, truth, 3, true);
    REQUIRE(by_score.has_value());
    REQUIRE(by_truth.has_value());
    CHECK(*by_score != *by_truth);
}

TEST_CASE("sweep lattice has the closed-form cell count") {
    CHECK(sweep_cell_count(0.5) == 6);
    CHECK(sweep_cell_count(1.0) == 3);
    CHECK(sweep_cell_count(0.25) == 15);
    CHECK(sweep_cell_count(0.1) == 66);

    std::mt19937_64 rng(22);
    const auto net = test::random_network(rng, 8, 4);
    GroundTruth truth;
    truth.new_followers = random_counts(rng, net.n_developers());
    truth.new_stars.assign(net.n_projects(), 0);

    const auto grid = sweep_alpha_beta(net, truth, 2, 0.5, 1e-8, 200);
    REQUIRE(grid.cells.size() == 6);
    // exactly the triangle lattice
    std::vector<std::pair<double, double>> expect{{0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0},
                                                  {0.5, 0.0}, {0.5, 0.5}, {1.0, 0.0}};
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(grid.cells[i].alpha == doctest::Approx(expect[i].first));
        CHECK(grid.cells[i].beta == doctest::Approx(expect[i].second));
        CHECK(grid.cells[i].precision >= 0.0);
        CHECK(grid.cells[i].precision <= 1.0);
    }
}

TEST_CASE("sweep cells on the alpha edge equal the follow-only variant") {
    std::mt19937_64 rng(808);
    const auto net = test::random_network(rng, 12, 6);
    GroundTruth truth;
    truth.new_followers = random_counts(rng, net.n_developers());
    truth.new_stars.assign(net.n_projects(), 0);
    const std::size_t k = 3;

    const auto grid = sweep_alpha_beta(net, truth, k, 0.5, 1e-10, 500);
    for (const auto& cell : grid.cells) {
        if (cell.beta != 0.0) continue;
        const auto df = df_variant(net, cell.alpha, 1e-10, 500);
        CHECK(cell.precision ==
              precision_at_k(df.dev_scores, truth.new_followers, k));  // bitwise identical scores
    }
}

TEST_CASE("sweep results are identical across thread counts") {
    std::mt19937_64 rng(909);
    const auto net = test::random_network(rng, 10, 5);
    GroundTruth truth;
    truth.new_followers = random_counts(rng, net.n_developers());
    const auto one = sweep_alpha_beta(net, truth, 2, 0.25, 1e-8, 200, 1);
    const auto four = sweep_alpha_beta(net, truth, 2, 0.25, 1e-8, 200, 4);
    REQUIRE(one.cells.size() == sweep_cell_count(0.25));
    REQUIRE(one.cells.size() == four.cells.size());
    for (std::size_t i = 0; i < one.cells.size(); ++i)
        CHECK(one.cells[i].precision == four.cells[i].precision);
}

TEST_CASE("commit bins report half-open ranges with hand-computed means") {
    std::vector<Event> events;
    // developer commit totals before the cutoff: u 650, v 660 -> bin (600, 700]
    for (int i = 0; i < 650; ++i)
        events.push_back({EventKind::Commit, "u", "p", make_date(2011, 1, 1), 1});
    events.push_back({EventKind::Commit, "v", "p", make_date(2011, 1, 2), 650});
    events.push_back({EventKind::Commit, "v", "q", make_date(2011, 1, 3), 10});
    // gains in the window: u gains 80 followers, v gains 81
    for (int i = 0; i < 80; ++i)
        events.push_back(
            {EventKind::Follow, "f" + std::to_string(i), "u", make_date(2012, 2, 1), 1});
    for (int i = 0; i < 81; ++i)
        events.push_back(
            {EventKind::Follow, "f" + std::to_string(i), "v", make_date(2012, 3, 1), 1});
    // follower devs must exist in the training snapshot to count
    for (int i = 0; i < 81; ++i)
        events.push_back(
            {EventKind::Star, "f" + std::to_string(i), "p", make_date(2011, 6, 1), 1});
    const EventLog log(std::move(events), {});

    const auto stats =
        commit_follower_stats(log, make_date(2012, 1, 1), make_date(2013, 1, 1), 100);
    REQUIRE(stats.bin_width == 100);

    bool found = false;
    for (const auto& bin : stats.bins) {
        if (bin.kind != EntityKind::Developer) continue;
        if (bin.lo == 600) {
            CHECK(bin.hi == 700);
            CHECK(bin.population == 2);
            CHECK(bin.mean_gain == doctest::Approx(80.5));
            found = true;
        } else {
            CHECK(bin.population == 0);
            CHECK(std::isnan(bin.mean_gain));  // empty bin, undefined mean
        }
    }
    CHECK(found);

    // boundary: a 700-commit developer belongs to (600, 700], not (700, 800]
    std::vector<Event> edge_events;
    edge_events.push_back({EventKind::Commit, "w", "p", make_date(2011, 1, 1), 700});
    const EventLog edge_log(std::move(edge_events), {});
    const auto edge_stats =
        commit_follower_stats(edge_log, make_date(2012, 1, 1), make_date(2013, 1, 1), 100);
    CHECK(edge_stats.bins.size() >= 7);
    CHECK(edge_stats.bins[6].lo == 600);
    CHECK(edge_stats.bins[6].population == 1);
}

TEST_CASE("stats on an empty log produce an empty report") {
    const EventLog log({}, {});
    const auto stats =
        commit_follower_stats(log, make_date(2012, 1, 1), make_date(2013, 1, 1), 100);
    CHECK(stats.bins.empty());
}

TEST_CASE("benchmark iterations never decrease as the threshold tightens") {
    std::mt19937_64 rng(5225);
    const auto net = test::random_network(rng, 15, 8);
    const std::vector<double> thresholds{1e-8, 1e-10, 1e-12};
    const auto rows = convergence_benchmark(net, kAllAlgorithms, thresholds, 1000);
    REQUIRE(rows.size() == 15);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].millis >= 0.0);
        if (i % 3 != 0) {
            CHECK(rows[i].kind == rows[i - 1].kind);
            CHECK(rows[i].iterations >= rows[i - 1].iterations);
        }
    }
}

TEST_CASE("benchmark on a single-node network takes one iteration everywhere") {
    std::vector<std::tuple<std::string, std::string, std::uint64_t>> commits{{"d", "p", 1}};
    const auto net = HeteroNetwork::from_edges({}, commits, {});
    const std::vector<double> thresholds{1e-8};
    const auto rows = convergence_benchmark(net, kAllAlgorithms, thresholds, 1000);
    for (const auto& row : rows) {
        CHECK(row.iterations == 1);
        CHECK(row.converged);
    }
}

TEST_CASE("top table rows carry training stats and per-algorithm ranks") {
    const HeteroNetwork net = [] {
        std::vector<std::pair<std::string, std::string>> follows{
            {"x", "a"}, {"y", "a"}, {"z", "a"}, {"x", "b"}};
        std::vector<std::tuple<std::string, std::string, std::uint64_t>> commits{
            {"a", "p", 5}, {"b", "p", 2}, {"x", "p", 1}};
        return HeteroNetwork::from_edges(follows, commits, {});
    }();
    GroundTruth truth;
    truth.new_followers.assign(net.n_developers(), 0);
    truth.new_followers[*net.find_developer("a")] = 10;
    truth.new_followers[*net.find_developer("b")] = 25;
    truth.new_stars.assign(net.n_projects(), 0);

    const auto devrank_state = run(AlgorithmKind::DevRank, net, RunRequest{});
    const auto pagerank_state = run(AlgorithmKind::PageRank, net, RunRequest{});
    const RankState* states[] = {&devrank_state, &pagerank_state};

    const auto rows = top_table(net, truth, 2, states);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].developer_id == "b");  // most future followers first
    CHECK(rows[0].new_followers == 25);
    CHECK(rows[0].followers_before == 1);
    CHECK(rows[0].commits_before == 2);
    CHECK(rows[1].developer_id == "a");
    CHECK(rows[1].followers_before == 3);
    CHECK(rows[1].commits_before == 5);

    // ranks match an independent re-sort of each algorithm's scores
    for (std::size_t s = 0; s < 2; ++s) {
        const auto order = ranking_order(std::span<const double>(states[s]->dev_scores));
        for (const auto& row : rows) {
            const auto dev = *net.find_developer(row.developer_id);
            const auto pos = std::find(order.begin(), order.end(), dev) - order.begin();
            CHECK(row.ranks[s] == static_cast<std::uint32_t>(pos + 1));
        }
    }

    // n beyond the population returns every row without padding
    CHECK(top_table(net, truth, 50, states).size() == net.n_developers());
}

TEST_CASE("generated events correlate commits with future follower gains") {
    SyntheticSpec spec;
    spec.n_developers = 400;
    spec.n_projects = 40;
    spec.mean_commits = 12.0;
    spec.mean_follows = 6.0;
    spec.mean_stars = 8.0;
    spec.seed = 31;
    const EventLog log = generate_events(spec);

    const Date cutoff = make_date(2012, 1, 1);
    const auto stats = commit_follower_stats(log, cutoff, spec.span_end, 5);
    REQUIRE(!stats.bins.empty());

    // gains should rise with commit volume: compare low vs high populated bins
    double low = -1.0, high = -1.0;
    for (const auto& bin : stats.bins) {
        if (bin.kind != EntityKind::Developer || bin.population < 3) continue;
        if (low < 0.0) low = bin.mean_gain;
        high = bin.mean_gain;
    }
    REQUIRE(low >= 0.0);
    CHECK(high > low);

    // and the per-developer Pearson correlation is positive
    const HeteroNetwork net = snapshot(log, cutoff);
    const GroundTruth truth =
        compute_ground_truth(log, {cutoff, spec.span_end, ""}, net);
    std::vector<double> totals(net.n_developers(), 0.0);
    for (const auto& e : net.commits()) totals[e.developer] += static_cast<double>(e.count);
    const auto correlation =
        pearson_top_k(totals, truth.new_followers, net.n_developers(), false);
    REQUIRE(correlation.has_value());
    CHECK(*correlation > 0.2);
}
