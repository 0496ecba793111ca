#pragma once

#include "devrank/network.hpp"
#include "devrank/rankers.hpp"

namespace devrank::dense {

/// Dense-matrix reference engine. Runs the same iteration protocol as the
/// sparse engine but over explicitly materialized propagation matrices with
/// plain O(n^2) products; it shares no code with the sparse path and exists
/// as the independent second route for verifying it. Feasible only for small
/// networks; throws std::invalid_argument above 4096 nodes per side.
RankState run(AlgorithmKind kind, const HeteroNetwork& net, const RunRequest& request = {},
              const RankOptions& options = {});

}  // namespace devrank::dense
