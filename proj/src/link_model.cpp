#include "icmn/link_model.hpp"

#include <string>

namespace icmn {

LinkModel link_model(double r, double lambda) {
    if (!(r >= 1.0)) {
        throw std::domain_error("link model: r must be >= 1 (got " + std::to_string(r) + ")");
    }
    if (!(lambda >= 1.0 / r)) {
        throw std::domain_error("link model: lambda must be >= 1/r = " +
                                std::to_string(1.0 / r) + " (got " + std::to_string(lambda) +
                                ")");
    }
    LinkModel m;
    m.r = r;
    m.lambda = lambda;
    m.q_c = 1.0 - 1.0 / r;
    m.q_i = 1.0 - 1.0 / (lambda * r);
    m.pi_up = 1.0 / (1.0 + lambda);
    m.pi_down = lambda / (1.0 + lambda);
    m.degenerate = (m.q_c == 0.0 || m.q_i == 0.0);
    return m;
}

std::pair<double, double> expected_durations(const LinkModel& m, double tau) {
    if (!(tau > 0.0)) {
        throw std::domain_error("expected_durations: tau must be > 0");
    }
    return {m.r * tau, m.lambda * m.r * tau};
}

double mean_degree(const LinkModel& m, int n) {
    if (n < 2) {
        throw std::domain_error("mean_degree: n must be >= 2");
    }
    return (n - 1) / (1.0 + m.lambda);
}

void validate(const ScenarioParams& p) {
    if (p.n < 2) throw std::domain_error("scenario: n must be >= 2");
    if (!(p.tau > 0.0)) throw std::domain_error("scenario: tau must be > 0");
    if (!(p.alpha > 0.0)) throw std::domain_error("scenario: alpha must be > 0");
    if (p.d < 1) throw std::domain_error("scenario: d must be >= 1");
}

}  // namespace icmn
