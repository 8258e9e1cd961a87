#include "icmn/delivery.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

namespace icmn {

namespace {

// Mass on Succ after applying the given per-step matrix sequence `steps`
// times, starting from all mass on Init.
class AbsorptionWalk {
  public:
    explicit AbsorptionWalk(const EpidemicStateSpace& space)
        : cur_(space.size(), 0.0), next_(space.size(), 0.0), succ_(space.succ_index()) {
        cur_[static_cast<std::size_t>(space.init_index())] = 1.0;
    }

    void step(const TransitionMatrix& m) {
        m.apply(cur_, next_);
        cur_.swap(next_);
    }

    double succ_mass() const { return cur_[static_cast<std::size_t>(succ_)]; }

  private:
    std::vector<double> cur_, next_;
    int succ_;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

DeliveryResult delivery_probability(const ScenarioParams& params, const LinkModel& m) {
    validate(params);

    if (params.alpha > 1.0) {
        const int a = static_cast<int>(std::ceil(params.alpha));
        const int k = params.d / a;
        DeliveryResult res;
        res.kind = DeliveryResult::Kind::Interval;
        res.steps_used = k;
        if (k == 0) return res;  // no full transfer interval fits in the budget
        auto [t_inf, t_sup] = build_bound_matrices(params.n, m, params.alpha);
        AbsorptionWalk lo(t_inf.space), hi(t_sup.space);
        for (int s = 0; s < k; ++s) {
            lo.step(t_inf);
            hi.step(t_sup);
        }
        res.lower = lo.succ_mass();
        res.upper = hi.succ_mass();
        return res;
    }

    const int hops = static_cast<int>(std::floor(1.0 / params.alpha));
    const TransitionMatrix t = build_dynamic_matrix(params.n, m);
    AbsorptionWalk walk(t.space);
    if (hops > 1) {
        const TransitionMatrix r = build_static_matrix(params.n, m);
        for (int s = 0; s < params.d; ++s) {
            walk.step(t);
            for (int h = 1; h < hops; ++h) walk.step(r);
        }
    } else {
        for (int s = 0; s < params.d; ++s) walk.step(t);
    }
    DeliveryResult res;
    res.kind = DeliveryResult::Kind::Exact;
    res.value = walk.succ_mass();
    res.steps_used = params.d;
    return res;
}

std::vector<SweepRow> sweep(const SweepGrid& grid) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.n.size() * grid.r.size() * grid.lambda.size() * grid.alpha.size() *
                 grid.d.size());
    for (int n : grid.n)
        for (double r : grid.r)
            for (double lambda : grid.lambda)
                for (double alpha : grid.alpha)
                    for (int d : grid.d) {
                        SweepRow row{n, r, lambda, alpha, d, std::nullopt, {}};
                        try {
                            const LinkModel m = link_model(r, lambda);
                            row.result =
                                delivery_probability({n, grid.tau, alpha, d}, m);
                        } catch (const std::exception& e) {
                            row.error = e.what();
                        }
                        rows.push_back(std::move(row));
                    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "n,r,lambda,alpha,d,kind,value,lower,upper\n";
    for (const auto& row : rows) {
        out << row.n << ',' << format_double(row.r) << ',' << format_double(row.lambda)
            << ',' << format_double(row.alpha) << ',' << row.d << ',';
        if (!row.result) {
            out << "error,,,\n";
        } else if (row.result->kind == DeliveryResult::Kind::Exact) {
            out << "exact," << format_double(row.result->value) << ",,\n";
        } else {
            out << "interval,," << format_double(row.result->lower) << ','
                << format_double(row.result->upper) << '\n';
        }
    }
}

}  // namespace icmn
