// Row-stochastic transition matrices over the epidemic state space.
//
// All four matrix kinds share one construction, parameterized by the two
// per-pair infection probabilities:
//   from_just_infected — a node infected last step reaches a given
//     susceptible across a link whose state is stationary;
//   from_long_infected — a node infected for two or more steps reaches a
//     given susceptible only if its (currently down) link comes up.
// The dynamic step uses (pi_up, 1-q_i); the static intra-step hop uses
// (pi_up, 0) since no new link can appear on a frozen topology; the
// interval bounds for oversized packets substitute the discounted
// probabilities of links that persist a whole transfer.
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "icmn/link_model.hpp"
#include "icmn/state_space.hpp"

namespace icmn {

// Probability that exactly m of w susceptible nodes get contaminated when
// each of u attackers independently reaches each of them with probability p.
// Binomial pdf with per-trial probability 1-(1-p)^u, evaluated in log space.
// Returns 0 when m > w; returns 1 when w == 0 and m == 0.
double p_cont(int m, double p, int u, int w);

// Probability that the destination is infected at the next step from state
// (i, j): 1 - pi_down^j * q_i^i.
double p_succ(int i, int j, const LinkModel& m);

enum class MatrixKind { Dynamic, Static, LowerBound, UpperBound };

struct TransitionMatrix {
    EpidemicStateSpace space;
    MatrixKind kind;
    // rows[r] holds (column, probability) pairs; zero entries are dropped.
    std::vector<std::vector<std::pair<int, double>>> rows;

    // y = x * M (row-vector times matrix). x and y must have size space.size().
    void apply(std::span<const double> x, std::span<double> y) const;

    // Entry lookup for tests and diagnostics; 0 when absent.
    double entry(int row, int col) const;

    // Maximum absolute deviation of any row sum from 1.
    double max_row_sum_error() const;
};

TransitionMatrix build_dynamic_matrix(int n, const LinkModel& m);
TransitionMatrix build_static_matrix(int n, const LinkModel& m);

// Bound matrices for packets larger than the link capacity, alpha > 1.
// Returns (lower, upper) built over intervals of ceil(alpha) steps.
std::pair<TransitionMatrix, TransitionMatrix> build_bound_matrices(int n, const LinkModel& m,
                                                                   double alpha);

// Same construction with an explicit interval length a >= 1. With a == 1
// both results coincide with the dynamic matrix.
std::pair<TransitionMatrix, TransitionMatrix> build_bound_matrices_for_interval(
    int n, const LinkModel& m, int a);

}  // namespace icmn
