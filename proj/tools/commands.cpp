#include "commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>

#include "devrank/dense_reference.hpp"
#include "devrank/digest.hpp"
#include "devrank/evaluation.hpp"
#include "devrank/rankers.hpp"
#include "devrank/synthetic.hpp"
#include "output.hpp"

namespace devrank::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Date parse_date_arg(const std::string& text, const char* what) {
    const auto date = parse_date(text);
    if (!date) throw ConfigError(std::string(what) + ": invalid date '" + text + "'");
    return *date;
}

// Values from --config fill in only the flags that were not passed explicitly.
class ConfigPatch {
  public:
    ConfigPatch(CLI::App* cmd, const std::string& path) : cmd_(cmd) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read config file " + path);
        try {
            in >> data_;
        } catch (const json::exception& e) {
            throw ConfigError("bad config file " + path + ": " + e.what());
        }
        if (!data_.is_object()) throw ConfigError("config file must hold a JSON object");
    }

    template <typename T>
    void fallback(const char* flag, const char* key, T& target) const {
        if (cmd_->count(flag) > 0 || !data_.contains(key)) return;
        try {
            target = data_.at(key).get<T>();
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config key '") + key + "': " + e.what());
        }
    }

    bool has(const char* flag, const char* key) const {
        return cmd_->count(flag) > 0 || data_.contains(key);
    }

  private:
    CLI::App* cmd_;
    json data_;
};

LoadResult load_inputs(const CommonArgs& args) {
    if (args.follows.empty() || args.commits.empty() || args.stars.empty())
        throw ConfigError("--follows, --commits and --stars are required");
    LoadOptions options;
    options.skip_malformed = args.skip_malformed;
    options.merge_same_name = args.merge_same_name;
    std::optional<fs::path> projects;
    if (!args.projects.empty()) projects = args.projects;
    const auto result = load_event_log(args.follows, args.commits, args.stars, projects, options);
    if (result.skipped > 0)
        std::cerr << "note: skipped " << result.skipped << " malformed row(s)\n";
    return result;
}

json input_digests(const CommonArgs& args) {
    json inputs = json::object();
    const auto add = [&inputs](const char* key, const std::string& path) {
        if (path.empty()) return;
        inputs[key] = {{"path", path}, {"sha256", sha256_file(path)}};
    };
    add("follows", args.follows);
    add("commits", args.commits);
    add("stars", args.stars);
    add("projects", args.projects);
    return inputs;
}

fs::path ensure_out_dir(const CommonArgs& args) {
    if (args.out.empty()) throw ConfigError("--out is required");
    fs::create_directories(args.out);
    return args.out;
}

// nlohmann's default object keeps keys sorted, so dumps are reproducible.
// --threads is deliberately not recorded: outputs are guaranteed identical
// for any thread count, so it is not needed to re-execute a run.
void write_meta(const fs::path& dir, json meta) {
    std::ofstream out(dir / "run_meta.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write run_meta.json");
    out << meta.dump(2) << '\n';
}

RunRequest build_request(const CommonArgs& args, bool alpha_set, bool beta_set) {
    RunRequest request;
    if (alpha_set) request.alpha = args.alpha;
    if (beta_set) request.beta = args.beta;
    request.threshold = args.threshold;
    request.max_iters = args.max_iters;
    return request;
}

RankState run_engine(bool dense_oracle, AlgorithmKind kind, const HeteroNetwork& net,
                     const RunRequest& request, int threads) {
    RankOptions options;
    options.threads = threads;
    return dense_oracle ? dense::run(kind, net, request, options)
                        : run(kind, net, request, options);
}

void report_warnings(const RankState& state) {
    for (const auto& warning : state.warnings)
        std::cerr << "warning: " << warning << '\n';
}

void write_scores(const fs::path& path, const std::string& id_header,
                  const std::vector<double>& scores, const HeteroNetwork& net, bool developers) {
    CsvWriter csv(path, id_header + ",score,rank");
    const auto order = ranking_order(std::span<const double>(scores));
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto index = order[pos];
        const auto& id = developers ? net.developer_id(index) : net.project_id(index);
        csv.row(id, scores[index], pos + 1);
    }
}

json state_summary(const RankState& state) {
    return {{"algorithm", std::string(to_string(state.kind))},
            {"alpha", state.params.alpha},
            {"beta", state.params.beta},
            {"threshold", state.params.threshold},
            {"max_iters", state.params.max_iters},
            {"iterations", state.iterations},
            {"final_err", state.final_err()},
            {"converged", state.converged}};
}

Date train_cutoff(const CommonArgs& args) {
    return args.train_end.empty() ? Date::max() : parse_date_arg(args.train_end, "--train-end");
}

SplitSpec split_from(const CommonArgs& args) {
    if (args.train_end.empty() || args.test_end.empty())
        throw ConfigError("--train-end and --test-end are required");
    SplitSpec split{parse_date_arg(args.train_end, "--train-end"),
                    parse_date_arg(args.test_end, "--test-end"), "cli"};
    split.validate();
    return split;
}

int wrap(const char* command, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << command << ": input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ConfigError& e) {
        std::cerr << command << ": " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << command << ": " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << command << ": error: " << e.what() << '\n';
        return kExitInputError;
    }
}

constexpr const char* kAlgoColumns = "devrank,pagerank,hits,df,dc";

// The five standard configurations compared by eval and bench: DevRank with
// the configured weights, damped PageRank and HITS, and the two pure
// variants at their endpoint weights.
std::vector<RunRequest> standard_requests(const CommonArgs& args, bool alpha_set, bool beta_set) {
    std::vector<RunRequest> requests(kAllAlgorithms.size());
    for (std::size_t i = 0; i < kAllAlgorithms.size(); ++i) {
        requests[i].threshold = args.threshold;
        requests[i].max_iters = args.max_iters;
    }
    if (alpha_set) requests[0].alpha = args.alpha;
    if (beta_set) requests[0].beta = args.beta;
    return requests;
}

}  // namespace

int cmd_gen(CLI::App* cmd, CommonArgs& args) {
    return wrap("gen", [&] {
        const ConfigPatch config(cmd, args.config);
        config.fallback("--developers", "developers", args.gen_developers);
        config.fallback("--projects", "projects", args.gen_projects);
        config.fallback("--follow-exponent", "follow-exponent", args.follow_exponent);
        config.fallback("--commit-exponent", "commit-exponent", args.commit_exponent);
        config.fallback("--repeat-affinity", "repeat-affinity", args.repeat_affinity);
        config.fallback("--mean-commits", "mean-commits", args.mean_commits);
        config.fallback("--mean-follows", "mean-follows", args.mean_follows);
        config.fallback("--mean-stars", "mean-stars", args.mean_stars);
        config.fallback("--span-start", "span-start", args.span_start);
        config.fallback("--span-end", "span-end", args.span_end);
        config.fallback("--seed", "seed", args.seed);
        config.fallback("--out", "out", args.out);

        SyntheticSpec spec;
        spec.n_developers = args.gen_developers;
        spec.n_projects = args.gen_projects;
        spec.follow_exponent = args.follow_exponent;
        spec.commit_exponent = args.commit_exponent;
        spec.repeat_affinity = args.repeat_affinity;
        spec.mean_commits = args.mean_commits;
        spec.mean_follows = args.mean_follows;
        spec.mean_stars = args.mean_stars;
        spec.span_start = parse_date_arg(args.span_start, "--span-start");
        spec.span_end = parse_date_arg(args.span_end, "--span-end");
        spec.seed = args.seed;

        const fs::path dir = ensure_out_dir(args);
        const EventLog log = generate_events(spec);
        write_event_files(log, dir);

        json meta;
        meta["command"] = "gen";
        meta["params"] = {{"developers", spec.n_developers},
                          {"projects", spec.n_projects},
                          {"follow_exponent", spec.follow_exponent},
                          {"commit_exponent", spec.commit_exponent},
                          {"repeat_affinity", spec.repeat_affinity},
                          {"mean_commits", spec.mean_commits},
                          {"mean_follows", spec.mean_follows},
                          {"mean_stars", spec.mean_stars},
                          {"span_start", to_string(spec.span_start)},
                          {"span_end", to_string(spec.span_end)},
                          {"seed", spec.seed}};
        meta["outputs"] = {"follows.csv", "commits.csv", "stars.csv"};
        meta["results"] = {{"events", log.events().size()},
                           {"follows", log.count(EventKind::Follow)},
                           {"commits", log.count(EventKind::Commit)},
                           {"stars", log.count(EventKind::Star)}};
        meta["output_digests"] = {
            {"follows.csv", sha256_file(dir / "follows.csv")},
            {"commits.csv", sha256_file(dir / "commits.csv")},
            {"stars.csv", sha256_file(dir / "stars.csv")}};
        write_meta(dir, std::move(meta));
        std::cout << "gen: wrote " << log.events().size() << " events to " << dir.string()
                  << '\n';
        return kExitOk;
    });
}

int cmd_rank(CLI::App* cmd, CommonArgs& args) {
    return wrap("rank", [&] {
        const ConfigPatch config(cmd, args.config);
        config.fallback("--follows", "follows", args.follows);
        config.fallback("--commits", "commits", args.commits);
        config.fallback("--stars", "stars", args.stars);
        config.fallback("--projects", "projects", args.projects);
        config.fallback("--train-end", "train-end", args.train_end);
        config.fallback("--algo", "algo", args.algo);
        config.fallback("--alpha", "alpha", args.alpha);
        config.fallback("--beta", "beta", args.beta);
        config.fallback("--threshold", "threshold", args.threshold);
        config.fallback("--max-iters", "max-iters", args.max_iters);
        config.fallback("--out", "out", args.out);
        config.fallback("--dense-oracle", "dense-oracle", args.dense_oracle);
        config.fallback("--skip-malformed", "skip-malformed", args.skip_malformed);
        config.fallback("--merge-same-name", "merge-same-name", args.merge_same_name);

        const auto kind = parse_algorithm(args.algo);
        if (!kind) throw ConfigError("unknown algorithm '" + args.algo + "'");

        const auto loaded = load_inputs(args);
        const fs::path dir = ensure_out_dir(args);
        const Date cutoff = train_cutoff(args);
        const HeteroNetwork net = snapshot(loaded.log, cutoff);

        const RunRequest request = build_request(args, config.has("--alpha", "alpha"),
                                                 config.has("--beta", "beta"));
        const RankState state = run_engine(args.dense_oracle, *kind, net, request, args.threads);
        report_warnings(state);

        write_scores(dir / "dev_scores.csv", "developer_id", state.dev_scores, net, true);
        write_scores(dir / "proj_scores.csv", "project_id", state.proj_scores, net, false);

        json meta;
        meta["command"] = "rank";
        meta["inputs"] = input_digests(args);
        meta["params"] = state_summary(state);
        meta["params"]["train_end"] = args.train_end.empty() ? "" : args.train_end;
        meta["params"]["dense_oracle"] = args.dense_oracle;
        meta["params"]["seed"] = args.seed;
        meta["results"] = {{"developers", net.n_developers()},
                           {"projects", net.n_projects()},
                           {"iterations", state.iterations},
                           {"final_err", state.final_err()},
                           {"converged", state.converged},
                           {"skipped_rows", loaded.skipped}};
        meta["outputs"] = {"dev_scores.csv", "proj_scores.csv"};
        write_meta(dir, std::move(meta));

        std::cout << "rank: " << to_string(*kind) << " on " << net.n_developers()
                  << " developers / " << net.n_projects() << " projects, " << state.iterations
                  << " iterations\n";
        return state.converged ? kExitOk : kExitNonConvergence;
    });
}

int cmd_eval(CLI::App* cmd, CommonArgs& args) {
    return wrap("eval", [&] {
        const ConfigPatch config(cmd, args.config);
        config.fallback("--follows", "follows", args.follows);
        config.fallback("--commits", "commits", args.commits);
        config.fallback("--stars", "stars", args.stars);
        config.fallback("--projects", "projects", args.projects);
        config.fallback("--train-end", "train-end", args.train_end);
        config.fallback("--test-end", "test-end", args.test_end);
        config.fallback("--alpha", "alpha", args.alpha);
        config.fallback("--beta", "beta", args.beta);
        config.fallback("--threshold", "threshold", args.threshold);
        config.fallback("--max-iters", "max-iters", args.max_iters);
        config.fallback("--k", "k", args.k_list);
        config.fallback("--top", "top", args.top);
        config.fallback("--out", "out", args.out);
        config.fallback("--dense-oracle", "dense-oracle", args.dense_oracle);
        config.fallback("--skip-malformed", "skip-malformed", args.skip_malformed);
        config.fallback("--merge-same-name", "merge-same-name", args.merge_same_name);
        config.fallback("--truth-selected-pearson", "truth-selected-pearson",
                        args.truth_selected_pearson);

        const auto loaded = load_inputs(args);
        const fs::path dir = ensure_out_dir(args);
        const SplitSpec split = split_from(args);
        const HeteroNetwork net = snapshot(loaded.log, split.train_end);
        const GroundTruth truth = compute_ground_truth(loaded.log, split, net);

        const auto requests = standard_requests(args, config.has("--alpha", "alpha"),
                                                config.has("--beta", "beta"));
        std::vector<RankState> states;
        for (std::size_t i = 0; i < kAllAlgorithms.size(); ++i) {
            states.push_back(run_engine(args.dense_oracle, kAllAlgorithms[i], net, requests[i],
                                        args.threads));
            report_warnings(states.back());
        }

        if (args.k_list.empty()) args.k_list = {5, 10, 20, 30, 40, 50};

        const auto write_precision = [&](const fs::path& path, bool developers) {
            CsvWriter csv(path, std::string("k,") + kAlgoColumns);
            const std::size_t population = developers ? net.n_developers() : net.n_projects();
            for (const std::size_t k : args.k_list) {
                if (k == 0 || k > population) {
                    std::cerr << "note: skipping k=" << k << " (population " << population
                              << ")\n";
                    continue;
                }
                std::vector<double> row;
                for (const auto& state : states)
                    row.push_back(developers ? precision_at_k(state.dev_scores,
                                                              truth.new_followers, k)
                                             : precision_at_k(state.proj_scores, truth.new_stars,
                                                              k));
                csv.row(k, row[0], row[1], row[2], row[3], row[4]);
            }
        };
        write_precision(dir / "precision_developers.csv", true);
        write_precision(dir / "precision_projects.csv", false);

        {
            CsvWriter csv(dir / "pearson_developers.csv", std::string("k,") + kAlgoColumns);
            for (const std::size_t k : args.k_list) {
                if (k < 2 || k > net.n_developers()) continue;
                std::vector<std::string> row;
                for (const auto& state : states) {
                    const auto r = pearson_top_k(state.dev_scores, truth.new_followers, k,
                                                 args.truth_selected_pearson);
                    row.push_back(r ? format_double(*r) : "nan");
                    if (!r)
                        std::cerr << "note: pearson undefined (zero variance) for "
                                  << to_string(state.kind) << " at k=" << k << '\n';
                }
                csv.row(k, row[0], row[1], row[2], row[3], row[4]);
            }
        }

        {
            std::vector<const RankState*> state_ptrs;
            for (const auto& state : states) state_ptrs.push_back(&state);
            const auto rows = top_table(net, truth, args.top, state_ptrs);
            CsvWriter csv(dir / "top_developers.csv",
                          "developer_id,new_followers,followers_before,commits_before,"
                          "rank_devrank,rank_pagerank,rank_hits,rank_df,rank_dc");
            for (const auto& row : rows)
                csv.row(row.developer_id, row.new_followers, row.followers_before,
                        row.commits_before, row.ranks[0], row.ranks[1], row.ranks[2],
                        row.ranks[3], row.ranks[4]);
        }

        json meta;
        meta["command"] = "eval";
        meta["inputs"] = input_digests(args);
        meta["params"] = {{"train_end", args.train_end},
                          {"test_end", args.test_end},
                          {"k", args.k_list},
                          {"top", args.top},
                          {"threshold", args.threshold},
                          {"max_iters", args.max_iters},
                          {"dense_oracle", args.dense_oracle},
                          {"truth_selected_pearson", args.truth_selected_pearson},
                          {"seed", args.seed}};
        json algos = json::array();
        for (const auto& state : states) algos.push_back(state_summary(state));
        meta["results"] = {{"developers", net.n_developers()},
                           {"projects", net.n_projects()},
                           {"window_follows", truth.window_follows},
                           {"dropped_follows", truth.dropped_follows},
                           {"window_stars", truth.window_stars},
                           {"dropped_stars", truth.dropped_stars},
                           {"skipped_rows", loaded.skipped},
                           {"algorithms", algos}};
        meta["outputs"] = {"precision_developers.csv", "precision_projects.csv",
                           "pearson_developers.csv", "top_developers.csv"};
        write_meta(dir, std::move(meta));

        const bool all_converged =
            std::all_of(states.begin(), states.end(),
                        [](const RankState& s) { return s.converged; });
        std::cout << "eval: " << net.n_developers() << " developers, " << net.n_projects()
                  << " projects; window follows " << truth.window_follows << " (dropped "
                  << truth.dropped_follows << ")\n";
        return all_converged ? kExitOk : kExitNonConvergence;
    });
}

int cmd_sweep(CLI::App* cmd, CommonArgs& args) {
    return wrap("sweep", [&] {
        const ConfigPatch config(cmd, args.config);
        config.fallback("--follows", "follows", args.follows);
        config.fallback("--commits", "commits", args.commits);
        config.fallback("--stars", "stars", args.stars);
        config.fallback("--projects", "projects", args.projects);
        config.fallback("--train-end", "train-end", args.train_end);
        config.fallback("--test-end", "test-end", args.test_end);
        config.fallback("--threshold", "threshold", args.threshold);
        config.fallback("--max-iters", "max-iters", args.max_iters);
        config.fallback("--k", "k", args.k_list);
        config.fallback("--step", "step", args.step);
        config.fallback("--out", "out", args.out);
        config.fallback("--skip-malformed", "skip-malformed", args.skip_malformed);
        config.fallback("--merge-same-name", "merge-same-name", args.merge_same_name);
        if (args.dense_oracle)
            throw ConfigError("--dense-oracle is not supported for sweep");

        const auto loaded = load_inputs(args);
        const fs::path dir = ensure_out_dir(args);
        const SplitSpec split = split_from(args);
        const HeteroNetwork net = snapshot(loaded.log, split.train_end);
        const GroundTruth truth = compute_ground_truth(loaded.log, split, net);

        std::size_t k = args.k_list.empty() ? 50 : args.k_list.front();
        if (k > net.n_developers()) {
            std::cerr << "note: clamping k=" << k << " to the population of "
                      << net.n_developers() << " developers\n";
            k = net.n_developers();
        }

        const SweepGrid grid = sweep_alpha_beta(net, truth, k, args.step, args.threshold,
                                                args.max_iters, args.threads);
        CsvWriter csv(dir / "sweep.csv", "alpha,beta,precision");
        for (const auto& cell : grid.cells) csv.row(cell.alpha, cell.beta, cell.precision);

        json meta;
        meta["command"] = "sweep";
        meta["inputs"] = input_digests(args);
        meta["params"] = {{"train_end", args.train_end}, {"test_end", args.test_end},
                          {"k", k},
                          {"step", args.step},
                          {"threshold", args.threshold},
                          {"max_iters", args.max_iters},
                          {"seed", args.seed}};
        meta["results"] = {{"cells", grid.cells.size()},
                           {"developers", net.n_developers()},
                           {"skipped_rows", loaded.skipped}};
        meta["outputs"] = {"sweep.csv"};
        write_meta(dir, std::move(meta));

        std::cout << "sweep: " << grid.cells.size() << " cells at step " << args.step << '\n';
        return kExitOk;
    });
}

int cmd_stats(CLI::App* cmd, CommonArgs& args) {
    return wrap("stats", [&] {
        const ConfigPatch config(cmd, args.config);
        config.fallback("--follows", "follows", args.follows);
        config.fallback("--commits", "commits", args.commits);
        config.fallback("--stars", "stars", args.stars);
        config.fallback("--projects", "projects", args.projects);
        config.fallback("--train-end", "train-end", args.train_end);
        config.fallback("--test-end", "test-end", args.test_end);
        config.fallback("--bin-width", "bin-width", args.bin_width);
        config.fallback("--out", "out", args.out);
        config.fallback("--skip-malformed", "skip-malformed", args.skip_malformed);
        config.fallback("--merge-same-name", "merge-same-name", args.merge_same_name);
        if (args.dense_oracle)
            throw ConfigError("--dense-oracle is not supported for stats");

        const auto loaded = load_inputs(args);
        const fs::path dir = ensure_out_dir(args);
        const SplitSpec split = split_from(args);

        const StatsBins stats = commit_follower_stats(loaded.log, split.train_end, split.test_end,
                                                      args.bin_width);
        CsvWriter csv(dir / "stats.csv", "kind,commits_lo,commits_hi,population,mean_gain");
        for (const auto& bin : stats.bins)
            csv.row(bin.kind == EntityKind::Developer ? "developer" : "project", bin.lo, bin.hi,
                    bin.population, bin.mean_gain);

        json meta;
        meta["command"] = "stats";
        meta["inputs"] = input_digests(args);
        meta["params"] = {{"train_end", args.train_end},
                          {"test_end", args.test_end},
                          {"bin_width", args.bin_width},
                          {"seed", args.seed}};
        meta["results"] = {{"bins", stats.bins.size()}, {"skipped_rows", loaded.skipped}};
        meta["outputs"] = {"stats.csv"};
        write_meta(dir, std::move(meta));

        std::cout << "stats: " << stats.bins.size() << " bins (width " << args.bin_width
                  << ")\n";
        return kExitOk;
    });
}

int cmd_bench(CLI::App* cmd, CommonArgs& args) {
    return wrap("bench", [&] {
        const ConfigPatch config(cmd, args.config);
        config.fallback("--follows", "follows", args.follows);
        config.fallback("--commits", "commits", args.commits);
        config.fallback("--stars", "stars", args.stars);
        config.fallback("--projects", "projects", args.projects);
        config.fallback("--train-end", "train-end", args.train_end);
        config.fallback("--alpha", "alpha", args.alpha);
        config.fallback("--beta", "beta", args.beta);
        config.fallback("--thresholds", "thresholds", args.thresholds);
        config.fallback("--max-iters", "max-iters", args.max_iters);
        config.fallback("--out", "out", args.out);
        config.fallback("--skip-malformed", "skip-malformed", args.skip_malformed);
        config.fallback("--merge-same-name", "merge-same-name", args.merge_same_name);
        if (args.dense_oracle)
            throw ConfigError("--dense-oracle is not supported for bench");
        for (const double threshold : args.thresholds)
            if (!(threshold > 0.0)) throw ConfigError("thresholds must be positive");

        const auto loaded = load_inputs(args);
        const fs::path dir = ensure_out_dir(args);
        const HeteroNetwork net = snapshot(loaded.log, train_cutoff(args));

        std::optional<double> alpha, beta;
        if (config.has("--alpha", "alpha")) alpha = args.alpha;
        if (config.has("--beta", "beta")) beta = args.beta;
        const auto rows = convergence_benchmark(net, kAllAlgorithms, args.thresholds,
                                                args.max_iters, args.threads, alpha, beta);

        // The millis column measures the machine, not the computation; it is
        // the one field exempt from byte-for-byte reproducibility.
        CsvWriter csv(dir / "convergence.csv", "algorithm,threshold,iterations,millis,converged");
        for (const auto& row : rows)
            csv.row(to_string(row.kind), row.threshold, row.iterations, row.millis,
                    row.converged ? 1 : 0);

        json meta;
        meta["command"] = "bench";
        meta["inputs"] = input_digests(args);
        meta["params"] = {{"train_end", args.train_end},
                          {"thresholds", args.thresholds},
                          {"max_iters", args.max_iters},
                          {"seed", args.seed}};
        meta["results"] = {{"rows", rows.size()},
                           {"developers", net.n_developers()},
                           {"projects", net.n_projects()},
                           {"skipped_rows", loaded.skipped}};
        meta["outputs"] = {"convergence.csv"};
        write_meta(dir, std::move(meta));

        std::cout << "bench: " << rows.size() << " rows over " << args.thresholds.size()
                  << " thresholds\n";
        return kExitOk;
    });
}

}  // namespace devrank::cli
