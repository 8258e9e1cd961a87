// Delivery probability of epidemic routing under a delay budget, computed
// as the absorption probability of the epidemic chain, plus grid sweeps.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "icmn/link_model.hpp"
#include "icmn/transition.hpp"

namespace icmn {

struct DeliveryResult {
    enum class Kind { Exact, Interval };
    Kind kind;
    double value = 0.0;  // exact case
    double lower = 0.0;  // interval case
    double upper = 0.0;
    // Chain iterations actually applied: d for alpha <= 1, floor(d/ceil(alpha))
    // intervals for alpha > 1 (leftover steps shorter than one interval are
    // discarded).
    int steps_used = 0;
};

// alpha <= 1: exact value i (T R^(floor(1/alpha)-1))^d s, which for alpha = 1
// is i T^d s. alpha > 1: (lower, upper) from the bound matrices iterated
// floor(d/ceil(alpha)) times; (0, 0) when d < ceil(alpha). All powers are
// evaluated as iterated vector-matrix products.
DeliveryResult delivery_probability(const ScenarioParams& params, const LinkModel& m);

struct SweepGrid {
    std::vector<int> n;
    std::vector<double> r;
    std::vector<double> lambda;
    std::vector<double> alpha;
    std::vector<int> d;
    double tau = 1.0;
};

struct SweepRow {
    int n;
    double r;
    double lambda;
    double alpha;
    int d;
    std::optional<DeliveryResult> result;  // empty on per-point failure
    std::string error;
};

// One row per grid point in grid-major order (n, r, lambda, alpha, d with d
// innermost). Per-point domain errors become rows with an error message
// instead of aborting the sweep.
std::vector<SweepRow> sweep(const SweepGrid& grid);

// CSV with header n,r,lambda,alpha,d,kind,value,lower,upper. Exact rows
// leave lower/upper empty, interval rows leave value empty, error rows leave
// all three empty and set kind=error.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace icmn
