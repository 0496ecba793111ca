#pragma once

#include <cstdint>

#include "devrank/dates.hpp"
#include "devrank/events.hpp"

namespace devrank {

/// Parameters for the seeded preferential-attachment event generator.
///
/// Per follow event the followee is drawn proportional to
/// (in-degree + 1)^follow_exponent. Per commit event the developer is drawn
/// by follow popularity and the target project with probability
/// repeat_affinity is one of the developer's own previous targets (by own
/// commit share), otherwise any project proportional to
/// (received commits + 1)^commit_exponent. Stars pick projects proportional
/// to their received commit totals. Popular developers therefore commit
/// often and deep into few projects: the commit-count concentration carries
/// the influence signal, while the number of distinct projects a developer
/// touches saturates.
struct SyntheticSpec {
    std::uint32_t n_developers = 10000;
    std::uint32_t n_projects = 1000;
    double follow_exponent = 1.0;
    double commit_exponent = 1.0;
    double repeat_affinity = 0.8;  // own-project re-commit probability
    double mean_commits = 20.0;    // commit events per developer
    double mean_follows = 10.0;    // follow events per developer
    double mean_stars = 10.0;      // star events per project
    Date span_start = make_date(2010, 1, 1);
    Date span_end = make_date(2014, 1, 1);  // exclusive
    std::uint64_t seed = 42;

    void validate() const;
};

/// Generates a dated event log; identical spec -> identical log.
EventLog generate_events(const SyntheticSpec& spec);

}  // namespace devrank
