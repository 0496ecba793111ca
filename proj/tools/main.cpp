#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using devrank::cli::CommonArgs;

void add_input_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--follows", args.follows, "follows.csv (follower_id,followee_id,date)");
    cmd->add_option("--commits", args.commits,
                    "commits.csv (developer_id,project_id,date[,count])");
    cmd->add_option("--stars", args.stars, "stars.csv (developer_id,project_id,date)");
    cmd->add_option("--projects", args.projects,
                    "projects.csv (project_id,name,forked_from), optional");
    cmd->add_flag("--skip-malformed", args.skip_malformed,
                  "skip and count malformed rows instead of aborting");
    cmd->add_flag("--merge-same-name", args.merge_same_name,
                  "also merge projects that share a name");
}

void add_common_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--seed", args.seed, "random seed recorded with the run");
    cmd->add_option("--threads", args.threads, "worker threads (outputs are identical for any value)")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--out", args.out, "output directory");
    cmd->add_option("--config", args.config, "JSON config file; explicit flags win");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"influence ranking over developer/project event networks"};
    app.require_subcommand(1);
    CommonArgs args;

    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic seeded event log");
    gen->add_option("--developers", args.gen_developers, "number of developers");
    gen->add_option("--projects", args.gen_projects, "number of projects");
    gen->add_option("--follow-exponent", args.follow_exponent,
                    "preferential-attachment exponent for follow targets");
    gen->add_option("--commit-exponent", args.commit_exponent,
                    "preferential-attachment exponent for commit targets");
    gen->add_option("--repeat-affinity", args.repeat_affinity,
                    "probability a commit revisits one of the developer's own projects");
    gen->add_option("--mean-commits", args.mean_commits, "commit events per developer");
    gen->add_option("--mean-follows", args.mean_follows, "follow events per developer");
    gen->add_option("--mean-stars", args.mean_stars, "star events per project");
    gen->add_option("--span-start", args.span_start, "first event date (inclusive)");
    gen->add_option("--span-end", args.span_end, "event date bound (exclusive)");
    add_common_flags(gen, args);

    CLI::App* rank = app.add_subcommand("rank", "rank developers and projects");
    add_input_flags(rank, args);
    rank->add_option("--train-end", args.train_end,
                     "use events strictly before this date (default: all)");
    rank->add_option("--algo", args.algo, "devrank|pagerank|hits|df|dc");
    rank->add_option("--alpha", args.alpha, "follow weight (damping for pagerank/hits)");
    rank->add_option("--beta", args.beta, "commit weight");
    rank->add_option("--threshold", args.threshold, "L1 convergence threshold");
    rank->add_option("--max-iters", args.max_iters, "iteration cap");
    rank->add_flag("--dense-oracle", args.dense_oracle,
                   "run the dense reference engine (small networks only)");
    add_common_flags(rank, args);

    CLI::App* eval = app.add_subcommand(
        "eval", "temporal-split evaluation of all five algorithms");
    add_input_flags(eval, args);
    eval->add_option("--train-end", args.train_end, "training cutoff (required)");
    eval->add_option("--test-end", args.test_end, "end of the evaluation window (required)");
    eval->add_option("--alpha", args.alpha, "devrank follow weight");
    eval->add_option("--beta", args.beta, "devrank commit weight");
    eval->add_option("--threshold", args.threshold, "L1 convergence threshold");
    eval->add_option("--max-iters", args.max_iters, "iteration cap");
    eval->add_option("--k", args.k_list, "top-k list for precision/pearson tables")
        ->delimiter(',');
    eval->add_option("--top", args.top, "rows in the top-developers table");
    eval->add_flag("--dense-oracle", args.dense_oracle,
                   "run the dense reference engine (small networks only)");
    eval->add_flag("--truth-selected-pearson", args.truth_selected_pearson,
                   "select the pearson top-k by truth instead of score");
    add_common_flags(eval, args);

    CLI::App* sweep = app.add_subcommand("sweep", "alpha/beta precision grid for devrank");
    add_input_flags(sweep, args);
    sweep->add_option("--train-end", args.train_end, "training cutoff (required)");
    sweep->add_option("--test-end", args.test_end, "end of the evaluation window (required)");
    sweep->add_option("--k", args.k_list, "top-k for the precision in each cell")->delimiter(',');
    sweep->add_option("--step", args.step, "lattice spacing in (0, 1]");
    sweep->add_option("--threshold", args.threshold, "L1 convergence threshold");
    sweep->add_option("--max-iters", args.max_iters, "iteration cap");
    sweep->add_flag("--dense-oracle", args.dense_oracle,
                   "not supported for this command");
    add_common_flags(sweep, args);

    CLI::App* stats = app.add_subcommand(
        "stats", "commit-count bins vs follower/star gains");
    add_input_flags(stats, args);
    stats->add_option("--train-end", args.train_end, "commit-count cutoff (required)");
    stats->add_option("--test-end", args.test_end, "end of the gain window (required)");
    stats->add_option("--bin-width", args.bin_width, "commit-count bin width");
    stats->add_flag("--dense-oracle", args.dense_oracle,
                   "not supported for this command");
    add_common_flags(stats, args);

    CLI::App* bench = app.add_subcommand("bench", "convergence benchmark for all algorithms");
    add_input_flags(bench, args);
    bench->add_option("--train-end", args.train_end,
                      "use events strictly before this date (default: all)");
    bench->add_option("--alpha", args.alpha, "devrank follow weight");
    bench->add_option("--beta", args.beta, "devrank commit weight");
    bench->add_option("--thresholds", args.thresholds, "thresholds to benchmark")
        ->delimiter(',');
    bench->add_option("--max-iters", args.max_iters, "iteration cap");
    bench->add_flag("--dense-oracle", args.dense_oracle,
                   "not supported for this command");
    add_common_flags(bench, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? devrank::cli::kExitOk : devrank::cli::kExitConfigError;
    }

    if (gen->parsed()) return devrank::cli::cmd_gen(gen, args);
    if (rank->parsed()) return devrank::cli::cmd_rank(rank, args);
    if (eval->parsed()) return devrank::cli::cmd_eval(eval, args);
    if (sweep->parsed()) return devrank::cli::cmd_sweep(sweep, args);
    if (stats->parsed()) return devrank::cli::cmd_stats(stats, args);
    if (bench->parsed()) return devrank::cli::cmd_bench(bench, args);
    return devrank::cli::kExitConfigError;
}
