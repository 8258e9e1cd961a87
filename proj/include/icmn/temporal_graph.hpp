// Time-indexed sequence of undirected edge sets over a fixed node set.
// Snapshot t holds the links that are up during step t; the topology is
// static within a step.
#pragma once

#include <utility>
#include <vector>

namespace icmn {

struct TemporalGraph {
    int n = 0;
    double tau = 1.0;  // step duration in seconds
    // edges[t] lists the undirected pairs (u, v), u < v, present at step t.
    std::vector<std::vector<std::pair<int, int>>> edges;

    int steps() const { return static_cast<int>(edges.size()); }
};

}  // namespace icmn
