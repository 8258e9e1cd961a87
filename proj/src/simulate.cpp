#include "icmn/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "icmn/rng.hpp"

namespace icmn {

namespace {

void generate_into(TemporalGraph& g, int n, const LinkModel& m, int steps,
                   std::uint64_t seed, double tau) {
    g.n = n;
    g.tau = tau;
    g.edges.resize(static_cast<std::size_t>(steps));
    for (auto& snap : g.edges) snap.clear();
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool up = uniform01(rng) < m.pi_up;
            if (up) g.edges[0].emplace_back(u, v);
            for (int t = 1; t < steps; ++t) {
                const double stay = up ? m.q_c : m.q_i;
                up = (uniform01(rng) < stay) == up;
                if (up) g.edges[static_cast<std::size_t>(t)].emplace_back(u, v);
            }
        }
    }
}

struct RunState {
    std::vector<int> infected_at;
    std::vector<int> frontier, next_frontier;
    std::vector<std::vector<int>> adj;
    std::unordered_map<long, int> progress, progress_next;
};

bool can_transmit(const std::vector<int>& infected_at, int node, int t) {
    const int k = infected_at[static_cast<std::size_t>(node)];
    return k >= 0 && k <= t;
}

EpidemicRun run_epidemic(RunState& st, const TemporalGraph& g, int source, int destination,
                         double alpha, int d, int start_step) {
    if (source == destination || source < 0 || destination < 0 || source >= g.n ||
        destination >= g.n) {
        throw std::domain_error("epidemic run: bad source/destination");
    }
    if (d < 1 || start_step < 0 || start_step + d > g.steps()) {
        throw std::domain_error("epidemic run: window exceeds graph");
    }

    EpidemicRun run;
    run.source = source;
    run.destination = destination;
    st.infected_at.assign(static_cast<std::size_t>(g.n), -1);
    st.infected_at[static_cast<std::size_t>(source)] = 0;

    auto deliver = [&](int step) {
        run.delivered = true;
        run.delivery_step = step;
    };

    if (alpha > 1.0) {
        const int a = static_cast<int>(std::ceil(alpha));
        st.progress.clear();
        std::vector<int> completed;
        for (int t = 0; t < d; ++t) {
            const auto& snap = g.edges[static_cast<std::size_t>(start_step + t)];
            st.progress_next.clear();
            completed.clear();
            for (const auto& [u, v] : snap) {
                const bool tu = can_transmit(st.infected_at, u, t);
                const bool tv = can_transmit(st.infected_at, v, t);
                const bool su = st.infected_at[static_cast<std::size_t>(u)] < 0;
                const bool sv = st.infected_at[static_cast<std::size_t>(v)] < 0;
                if (!((tu && sv) || (tv && su))) continue;  // no transfer; progress lost
                const long key = static_cast<long>(u) * g.n + v;
                auto it = st.progress.find(key);
                const int done = (it == st.progress.end() ? 0 : it->second) + 1;
                if (done >= a) {
                    completed.push_back(tu ? v : u);
                } else {
                    st.progress_next.emplace(key, done);
                }
            }
            st.progress.swap(st.progress_next);
            for (int node : completed) {
                st.infected_at[static_cast<std::size_t>(node)] = t + 1;
            }
            if (st.infected_at[static_cast<std::size_t>(destination)] >= 0) {
                deliver(t + 1);
                break;
            }
        }
        run.infected_at = st.infected_at;
        return run;
    }

    const int hops = static_cast<int>(std::floor(1.0 / alpha));
    const bool multi_hop = hops > 1;
    if (multi_hop) st.adj.assign(static_cast<std::size_t>(g.n), {});

    for (int t = 0; t < d && !run.delivered; ++t) {
        const auto& snap = g.edges[static_cast<std::size_t>(start_step + t)];

        if (!multi_hop) {
            st.frontier.clear();  // nodes infected this snapshot
            for (const auto& [u, v] : snap) {
                const bool tu = can_transmit(st.infected_at, u, t);
                const bool tv = can_transmit(st.infected_at, v, t);
                if (tu && st.infected_at[static_cast<std::size_t>(v)] < 0) {
                    st.frontier.push_back(v);
                } else if (tv && st.infected_at[static_cast<std::size_t>(u)] < 0) {
                    st.frontier.push_back(u);
                }
            }
            for (int node : st.frontier) {
                st.infected_at[static_cast<std::size_t>(node)] = t + 1;
                if (node == destination) deliver(t + 1);
            }
            continue;
        }

        for (auto& lst : st.adj) lst.clear();
        for (const auto& [u, v] : snap) {
            st.adj[static_cast<std::size_t>(u)].push_back(v);
            st.adj[static_cast<std::size_t>(v)].push_back(u);
        }
        st.frontier.clear();
        for (int node = 0; node < g.n; ++node) {
            if (can_transmit(st.infected_at, node, t)) st.frontier.push_back(node);
        }
        for (int hop = 0; hop < hops && !run.delivered && !st.frontier.empty(); ++hop) {
            st.next_frontier.clear();
            for (int x : st.frontier) {
                for (int y : st.adj[static_cast<std::size_t>(x)]) {
                    if (st.infected_at[static_cast<std::size_t>(y)] >= 0) continue;
                    st.infected_at[static_cast<std::size_t>(y)] = t + 1;
                    st.next_frontier.push_back(y);
                    if (y == destination) {
                        deliver(t + 1);
                        break;
                    }
                }
                if (run.delivered) break;
            }
            st.frontier.swap(st.next_frontier);
        }
    }
    run.infected_at = st.infected_at;
    return run;
}

}  // namespace

TemporalGraph generate_graph(int n, const LinkModel& m, int steps, std::uint64_t seed,
                             double tau) {
    if (n < 2) throw std::domain_error("generate_graph: n must be >= 2");
    if (steps < 1) throw std::domain_error("generate_graph: steps must be >= 1");
    if (!(tau > 0.0)) throw std::domain_error("generate_graph: tau must be > 0");
    TemporalGraph g;
    generate_into(g, n, m, steps, seed, tau);
    return g;
}

EpidemicRun epidemic_run(const TemporalGraph& g, int source, int destination, double alpha,
                         int d, int start_step) {
    if (!(alpha > 0.0)) throw std::domain_error("epidemic run: alpha must be > 0");
    RunState st;
    return run_epidemic(st, g, source, destination, alpha, d, start_step);
}

McEstimate mc_delivery_ratio(int n, const LinkModel& m, double alpha, int d, long trials,
                             std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("mc_delivery_ratio: trials must be >= 1");
    if (!(alpha > 0.0)) throw std::domain_error("mc_delivery_ratio: alpha must be > 0");

    TemporalGraph g;
    RunState st;
    long successes = 0;
    for (long k = 0; k < trials; ++k) {
        generate_into(g, n, m, d, mix_seed(seed, static_cast<std::uint64_t>(k)), 1.0);
        if (run_epidemic(st, g, 0, 1, alpha, d, 0).delivered) ++successes;
    }
    McEstimate est;
    est.trials = trials;
    est.successes = successes;
    est.ratio = static_cast<double>(successes) / static_cast<double>(trials);
    est.half_width_95 =
        1.96 * std::sqrt(est.ratio * (1.0 - est.ratio) / static_cast<double>(trials));
    return est;
}

}  // namespace icmn
