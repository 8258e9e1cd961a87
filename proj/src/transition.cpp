#include "icmn/transition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icmn {

namespace {

// Binomial pdf with per-trial probability q given through log(q) and
// log(1-q), so callers can keep precision when q is close to 0 or 1.
double binomial_pdf_log(int m, int w, double q, double log_q, double log_1m_q) {
    if (m < 0 || m > w) return 0.0;
    if (q == 0.0) return m == 0 ? 1.0 : 0.0;
    if (q == 1.0) return m == w ? 1.0 : 0.0;
    const double log_pdf = std::lgamma(w + 1.0) - std::lgamma(m + 1.0) -
                           std::lgamma(w - m + 1.0) + m * log_q + (w - m) * log_1m_q;
    return std::exp(log_pdf);
}

struct ContaminationProbs {
    double from_just_infected;
    double from_long_infected;
};

// Per-trial contamination probability 1-(1-p)^u and its complement's log.
struct Trial {
    double q;
    double log_q;
    double log_1m_q;
};

Trial per_trial(double p, int u) {
    if (u == 0 || p == 0.0) return {0.0, -INFINITY, 0.0};
    const double log_1m_q = u * std::log1p(-p);  // log((1-p)^u)
    const double q = -std::expm1(log_1m_q);
    return {q, std::log(q), log_1m_q};
}

TransitionMatrix build_matrix(int n, const ContaminationProbs& cp, MatrixKind kind) {
    EpidemicStateSpace space(n);
    TransitionMatrix t{space, kind, {}};
    t.rows.resize(space.size());

    const auto& states = space.infection_states();
    for (std::size_t row = 0; row < states.size(); ++row) {
        const auto [i, j] = states[row];
        const int w = n - 1 - i - j;  // susceptible nodes other than the destination
        const double stay_just = std::pow(1.0 - cp.from_just_infected, j);
        const double stay_long = std::pow(1.0 - cp.from_long_infected, i);
        const double succ = 1.0 - stay_just * stay_long;

        auto& out = t.rows[row];
        if (succ > 0.0) out.emplace_back(space.succ_index(), succ);

        const double miss = stay_just * stay_long;
        if (miss == 0.0) continue;

        const Trial just = per_trial(cp.from_just_infected, j);
        const Trial lng = per_trial(cp.from_long_infected, i);
        for (int j2 = 0; j2 <= w; ++j2) {
            double p = 0.0;
            for (int m = 0; m <= j2; ++m) {
                const double a = binomial_pdf_log(m, w, just.q, just.log_q, just.log_1m_q);
                if (a == 0.0) continue;
                const double b =
                    binomial_pdf_log(j2 - m, w - m, lng.q, lng.log_q, lng.log_1m_q);
                p += a * b;
            }
            const double entry = miss * p;
            if (entry != 0.0) out.emplace_back(space.index_of(i + j, j2), entry);
        }
    }
    t.rows[static_cast<std::size_t>(space.succ_index())] = {{space.succ_index(), 1.0}};

    const double err = t.max_row_sum_error();
    if (err > 1e-10) {
        throw std::logic_error("transition matrix rows not stochastic (max deviation " +
                               std::to_string(err) + ")");
    }
    return t;
}

}  // namespace

double p_cont(int m, double p, int u, int w) {
    if (m < 0 || u < 0 || w < 0) {
        throw std::domain_error("p_cont: counts must be non-negative");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("p_cont: p must be in [0, 1]");
    }
    const Trial t = per_trial(p, u);
    return binomial_pdf_log(m, w, t.q, t.log_q, t.log_1m_q);
}

double p_succ(int i, int j, const LinkModel& m) {
    if (i < 0 || j < 0 || i + j < 1) {
        throw std::domain_error("p_succ: needs i >= 0, j >= 0, i+j >= 1");
    }
    return 1.0 - std::pow(m.pi_down, j) * std::pow(m.q_i, i);
}

void TransitionMatrix::apply(std::span<const double> x, std::span<double> y) const {
    for (auto& v : y) v = 0.0;
    for (std::size_t row = 0; row < rows.size(); ++row) {
        const double xr = x[row];
        if (xr == 0.0) continue;
        for (const auto& [col, p] : rows[row]) {
            y[static_cast<std::size_t>(col)] += xr * p;
        }
    }
}

double TransitionMatrix::entry(int row, int col) const {
    for (const auto& [c, p] : rows[static_cast<std::size_t>(row)]) {
        if (c == col) return p;
    }
    return 0.0;
}

double TransitionMatrix::max_row_sum_error() const {
    double worst = 0.0;
    for (const auto& row : rows) {
        double sum = 0.0;
        for (const auto& [col, p] : row) sum += p;
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

TransitionMatrix build_dynamic_matrix(int n, const LinkModel& m) {
    return build_matrix(n, {m.pi_up, 1.0 - m.q_i}, MatrixKind::Dynamic);
}

TransitionMatrix build_static_matrix(int n, const LinkModel& m) {
    // Frozen topology: nodes infected for two or more steps have no up link
    // to any susceptible, and no link can appear.
    return build_matrix(n, {m.pi_up, 0.0}, MatrixKind::Static);
}

std::pair<TransitionMatrix, TransitionMatrix> build_bound_matrices_for_interval(
    int n, const LinkModel& m, int a) {
    if (a < 1) {
        throw std::domain_error("bound matrices: interval length must be >= 1");
    }
    const double persist = std::pow(m.q_c, a - 1);  // link survives a whole transfer
    const ContaminationProbs lower{m.pi_up * persist, (1.0 - m.q_i) * persist};
    const ContaminationProbs upper{
        (m.pi_up + m.pi_down * (1.0 - std::pow(m.q_i, a - 1))) * persist,
        (1.0 - std::pow(m.q_i, a)) * persist};
    return {build_matrix(n, lower, MatrixKind::LowerBound),
            build_matrix(n, upper, MatrixKind::UpperBound)};
}

std::pair<TransitionMatrix, TransitionMatrix> build_bound_matrices(int n, const LinkModel& m,
                                                                   double alpha) {
    if (!(alpha > 1.0)) {
        throw std::domain_error("bound matrices: alpha must be > 1");
    }
    return build_bound_matrices_for_interval(n, m, static_cast<int>(std::ceil(alpha)));
}

}  // namespace icmn
