// Seeded Monte Carlo side: Markovian temporal-graph generation and an
// epidemic-spread simulator with packet-size semantics. Serves as the
// independent oracle for the analytic chain.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "icmn/link_model.hpp"
#include "icmn/temporal_graph.hpp"

namespace icmn {

// Each of the n(n-1)/2 links is an independent two-state chain; snapshot 0
// is drawn from the stationary distribution, later snapshots follow
// q_c / q_i. Deterministic given the seed.
TemporalGraph generate_graph(int n, const LinkModel& m, int steps, std::uint64_t seed,
                             double tau = 1.0);

struct EpidemicRun {
    int source = 0;
    int destination = 0;
    bool delivered = false;
    std::optional<int> delivery_step;  // 1-based; snapshot t infects at step t+1
    std::vector<int> infected_at;      // first-infection step per node, -1 if never
};

// Spreads a packet of size alpha from source, using snapshots
// start_step .. start_step+d-1. The source holds the packet from step 0 and
// transmits from the first snapshot on; a node infected at step k transmits
// from step k+1 (it needs a full copy first).
//   alpha == 1: each snapshot, every transmitting node infects its current
//     neighbors.
//   alpha < 1: up to floor(1/alpha) hops per snapshot; the first hop sees the
//     fresh topology, the remaining hops reuse the same frozen snapshot, and
//     intra-step relays forward immediately.
//   alpha > 1: a transfer needs the link up for ceil(alpha) consecutive
//     snapshots with the sender holding a full copy; a drop loses all
//     progress. Transfers may start at any snapshot.
// The run stops at the first destination infection.
EpidemicRun epidemic_run(const TemporalGraph& g, int source, int destination, double alpha,
                         int d, int start_step = 0);

struct McEstimate {
    long trials = 0;
    long successes = 0;
    double ratio = 0.0;
    double half_width_95 = 0.0;  // 1.96 * sqrt(ratio*(1-ratio)/trials)
};

// Delivery ratio over `trials` independent (graph, run) pairs with
// source 0 and destination 1; trial k draws its links from stream
// mix_seed(seed, k). Deterministic given the seed.
McEstimate mc_delivery_ratio(int n, const LinkModel& m, double alpha, int d, long trials,
                             std::uint64_t seed);

}  // namespace icmn
