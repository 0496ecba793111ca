#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "devrank/dense_reference.hpp"
#include "devrank/evaluation.hpp"
#include "devrank/propagation.hpp"
#include "devrank/rankers.hpp"
#include "devrank/synthetic.hpp"

namespace py = pybind11;
using namespace devrank;

namespace {

Date date_arg(const std::string& text, const char* what) {
    const auto date = parse_date(text);
    if (!date) throw py::value_error(std::string(what) + ": invalid date '" + text + "'");
    return *date;
}

AlgorithmKind kind_arg(const std::string& name) {
    const auto kind = parse_algorithm(name);
    if (!kind) throw py::value_error("unknown algorithm '" + name + "' (devrank|pagerank|hits|df|dc)");
    return *kind;
}

RankState run_impl(const std::string& algorithm, const HeteroNetwork& net,
                   std::optional<double> alpha, std::optional<double> beta, double threshold,
                   int max_iters, int threads, bool dense) {
    RunRequest request;
    request.alpha = alpha;
    request.beta = beta;
    request.threshold = threshold;
    request.max_iters = max_iters;
    RankOptions options;
    options.threads = threads;
    const AlgorithmKind kind = kind_arg(algorithm);
    return dense ? dense::run(kind, net, request, options) : run(kind, net, request, options);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Influence ranking over developer/project event networks";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Event>(m, "Event")
        .def_readonly("actor", &Event::actor)
        .def_readonly("target", &Event::target)
        .def_readonly("count", &Event::count)
        .def_property_readonly("kind",
                               [](const Event& e) {
                                   switch (e.kind) {
                                       case EventKind::Follow: return "follow";
                                       case EventKind::Commit: return "commit";
                                       default: return "star";
                                   }
                               })
        .def_property_readonly("date", [](const Event& e) { return to_string(e.date); });

    py::class_<EventLog>(m, "EventLog")
        .def("__len__", [](const EventLog& log) { return log.events().size(); })
        .def_property_readonly("n_follows",
                               [](const EventLog& log) { return log.count(EventKind::Follow); })
        .def_property_readonly("n_commits",
                               [](const EventLog& log) { return log.count(EventKind::Commit); })
        .def_property_readonly("n_stars",
                               [](const EventLog& log) { return log.count(EventKind::Star); })
        .def("events", &EventLog::events, py::return_value_policy::reference_internal)
        .def("canonical_project",
             [](const EventLog& log, const std::string& id) { return log.canonical_project(id); });

    py::class_<HeteroNetwork>(m, "HeteroNetwork")
        .def_property_readonly("n_developers", &HeteroNetwork::n_developers)
        .def_property_readonly("n_projects", &HeteroNetwork::n_projects)
        .def("developer_ids",
             [](const HeteroNetwork& net) {
                 std::vector<std::string> ids;
                 for (std::uint32_t d = 0; d < net.n_developers(); ++d)
                     ids.push_back(net.developer_id(d));
                 return ids;
             })
        .def("project_ids",
             [](const HeteroNetwork& net) {
                 std::vector<std::string> ids;
                 for (std::uint32_t p = 0; p < net.n_projects(); ++p)
                     ids.push_back(net.project_id(p));
                 return ids;
             })
        .def("follows",
             [](const HeteroNetwork& net) {
                 std::vector<std::pair<std::string, std::string>> edges;
                 for (const auto& e : net.follows())
                     edges.emplace_back(net.developer_id(e.follower),
                                        net.developer_id(e.followee));
                 return edges;
             })
        .def("commits",
             [](const HeteroNetwork& net) {
                 std::vector<std::tuple<std::string, std::string, std::uint64_t>> edges;
                 for (const auto& e : net.commits())
                     edges.emplace_back(net.developer_id(e.developer), net.project_id(e.project),
                                        e.count);
                 return edges;
             })
        .def("follower_count",
             [](const HeteroNetwork& net, const std::string& id) -> std::uint64_t {
                 const auto d = net.find_developer(id);
                 if (!d) throw py::value_error("unknown developer '" + id + "'");
                 return net.follower_count(*d);
             })
        .def("__repr__", [](const HeteroNetwork& net) {
            return "<HeteroNetwork " + std::to_string(net.n_developers()) + " developers, " +
                   std::to_string(net.n_projects()) + " projects, " +
                   std::to_string(net.follows().size()) + " follows, " +
                   std::to_string(net.commits().size()) + " commit edges>";
        });

    py::class_<RankState>(m, "RankState")
        .def_property_readonly("algorithm",
                               [](const RankState& s) { return std::string(to_string(s.kind)); })
        .def_property_readonly("alpha", [](const RankState& s) { return s.params.alpha; })
        .def_property_readonly("beta", [](const RankState& s) { return s.params.beta; })
        .def_readonly("dev_scores", &RankState::dev_scores)
        .def_readonly("proj_scores", &RankState::proj_scores)
        .def_readonly("iterations", &RankState::iterations)
        .def_readonly("trace", &RankState::trace)
        .def_readonly("converged", &RankState::converged)
        .def_readonly("warnings", &RankState::warnings)
        .def("__repr__", [](const RankState& s) {
            return "<RankState " + std::string(to_string(s.kind)) + " iterations=" +
                   std::to_string(s.iterations) + (s.converged ? " converged>" : " capped>");
        });

    py::class_<GroundTruth>(m, "GroundTruth")
        .def_readonly("new_followers", &GroundTruth::new_followers)
        .def_readonly("new_stars", &GroundTruth::new_stars)
        .def_readonly("window_follows", &GroundTruth::window_follows)
        .def_readonly("window_stars", &GroundTruth::window_stars)
        .def_readonly("dropped_follows", &GroundTruth::dropped_follows)
        .def_readonly("dropped_stars", &GroundTruth::dropped_stars);

    m.def(
        "load_event_log",
        [](const std::filesystem::path& follows, const std::filesystem::path& commits,
           const std::filesystem::path& stars, std::optional<std::filesystem::path> projects,
           bool skip_malformed, bool merge_same_name) {
            LoadOptions options;
            options.skip_malformed = skip_malformed;
            options.merge_same_name = merge_same_name;
            auto result = load_event_log(follows, commits, stars, projects, options);
            return py::make_tuple(std::move(result.log), result.skipped);
        },
        py::arg("follows"), py::arg("commits"), py::arg("stars"), py::arg("projects") = py::none(),
        py::arg("skip_malformed") = false, py::arg("merge_same_name") = false,
        "Load follow/commit/star CSV exports; returns (EventLog, skipped_rows).");

    m.def(
        "build_network",
        [](const std::vector<std::pair<std::string, std::string>>& follows,
           const std::vector<std::tuple<std::string, std::string, std::uint64_t>>& commits,
           const std::vector<std::pair<std::string, std::string>>& stars) {
            return HeteroNetwork::from_edges(follows, commits, stars);
        },
        py::arg("follows") = std::vector<std::pair<std::string, std::string>>{},
        py::arg("commits") = std::vector<std::tuple<std::string, std::string, std::uint64_t>>{},
        py::arg("stars") = std::vector<std::pair<std::string, std::string>>{},
        "Build a network from external-id edge lists (snapshot canonicalization rules).");

    m.def(
        "snapshot",
        [](const EventLog& log, const std::string& cutoff) {
            return snapshot(log, date_arg(cutoff, "cutoff"));
        },
        py::arg("log"), py::arg("cutoff"),
        "Network induced by events strictly before the cutoff date.");

    m.def("run", &run_impl, py::arg("algorithm"), py::arg("net"), py::arg("alpha") = py::none(),
          py::arg("beta") = py::none(), py::arg("threshold") = 1e-8, py::arg("max_iters") = 1000,
          py::arg("threads") = 1, py::arg("dense") = false,
          "Run devrank|pagerank|hits|df|dc; dense=True uses the dense reference engine.");

    m.def(
        "compute_ground_truth",
        [](const EventLog& log, const std::string& train_end, const std::string& test_end,
           const HeteroNetwork& net) {
            const SplitSpec split{date_arg(train_end, "train_end"), date_arg(test_end, "test_end"),
                                  "py"};
            return compute_ground_truth(log, split, net);
        },
        py::arg("log"), py::arg("train_end"), py::arg("test_end"), py::arg("train_net"),
        "Future follower/star gains over [train_end, test_end) for training-side entities.");

    m.def(
        "precision_at_k",
        [](const std::vector<double>& scores, const std::vector<std::uint64_t>& truth,
           std::size_t k) { return precision_at_k(scores, truth, k); },
        py::arg("scores"), py::arg("truth"), py::arg("k"));

    m.def(
        "pearson_top_k",
        [](const std::vector<double>& scores, const std::vector<std::uint64_t>& truth,
           std::size_t k, bool truth_selected) {
            return pearson_top_k(scores, truth, k, truth_selected);
        },
        py::arg("scores"), py::arg("truth"), py::arg("k"), py::arg("truth_selected") = false,
        "Pearson over the top-k selection; None when a series has zero variance.");

    m.def(
        "generate_events",
        [](std::uint32_t developers, std::uint32_t projects, double follow_exponent,
           double commit_exponent, double repeat_affinity, double mean_commits,
           double mean_follows, double mean_stars, const std::string& span_start,
           const std::string& span_end, std::uint64_t seed) {
            SyntheticSpec spec;
            spec.n_developers = developers;
            spec.n_projects = projects;
            spec.follow_exponent = follow_exponent;
            spec.commit_exponent = commit_exponent;
            spec.repeat_affinity = repeat_affinity;
            spec.mean_commits = mean_commits;
            spec.mean_follows = mean_follows;
            spec.mean_stars = mean_stars;
            spec.span_start = date_arg(span_start, "span_start");
            spec.span_end = date_arg(span_end, "span_end");
            spec.seed = seed;
            return generate_events(spec);
        },
        py::arg("developers") = 10000, py::arg("projects") = 1000,
        py::arg("follow_exponent") = 1.0, py::arg("commit_exponent") = 1.0,
        py::arg("repeat_affinity") = 0.8, py::arg("mean_commits") = 20.0,
        py::arg("mean_follows") = 10.0, py::arg("mean_stars") = 10.0,
        py::arg("span_start") = "2010-01-01", py::arg("span_end") = "2014-01-01",
        py::arg("seed") = 42, "Seeded preferential-attachment event generator.");

    m.def("write_event_files", &write_event_files, py::arg("log"), py::arg("directory"),
          "Write follows.csv/commits.csv/stars.csv under the directory.");

#ifdef DEVRANK_VERSION
    m.attr("__version__") = DEVRANK_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
