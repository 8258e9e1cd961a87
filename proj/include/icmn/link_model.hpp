// Per-link two-state Markov chain and the scenario parameters shared by
// every other module. A link is up or down; q_c is the probability it
// stays up across a step, q_i the probability it stays down.
#pragma once

#include <stdexcept>
#include <utility>

namespace icmn {

struct LinkModel {
    double r;        // mean link lifetime, in steps
    double lambda;   // mean down-time / mean up-time
    double q_c;      // P(up -> up)
    double q_i;      // P(down -> down)
    double pi_up;    // stationary P(up)  = 1/(1+lambda)
    double pi_down;  // stationary P(down) = lambda/(1+lambda)
    // True when q_c == 0 or q_i == 0 (r == 1 or lambda == 1/r). The chain
    // leaves that state every step; absorption math still works but
    // ergodicity arguments do not.
    bool degenerate;
};

// Builds a LinkModel from (r, lambda). Requires r >= 1 and lambda >= 1/r;
// throws std::domain_error otherwise.
LinkModel link_model(double r, double lambda);

// Expected contact and inter-contact durations in seconds: (r*tau, lambda*r*tau).
std::pair<double, double> expected_durations(const LinkModel& m, double tau);

// Mean node degree (n-1)/(1+lambda).
double mean_degree(const LinkModel& m, int n);

struct ScenarioParams {
    int n;         // node count, >= 2
    double tau;    // step duration in seconds, > 0
    double alpha;  // packet size in link-capacity units, > 0
    int d;         // max tolerated delay in steps, >= 1
};

// Throws std::domain_error when any field is out of range.
void validate(const ScenarioParams& p);

}  // namespace icmn
