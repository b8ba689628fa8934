#include "mixorder/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mixorder/errors.hpp"

namespace mixorder {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double scale_of(double v) { return std::max(1.0, std::abs(v)); }

// Fills holds_* and the witness summary once both violation maxima are known.
void settle(OrderVerdict& v) {
    v.holds_leq = v.max_violation_leq <= v.slack;
    v.holds_geq = v.max_violation_geq <= v.slack;
    if (v.holds_leq && v.holds_geq) {
        v.witness_t = kNaN;
    } else if (v.holds_leq) {
        v.witness_t = v.witness_t_geq;
    } else if (v.holds_geq) {
        v.witness_t = v.witness_t_leq;
    } else {
        v.witness_t = v.max_violation_leq >= v.max_violation_geq ? v.witness_t_leq : v.witness_t_geq;
    }
}

OrderVerdict blank(OrderKind kind, double slack) {
    OrderVerdict v;
    v.order = kind;
    v.slack = slack;
    v.witness_t = v.witness_t_leq = v.witness_t_geq = kNaN;
    return v;
}

// Monotonicity verdict over a tabulated sequence; leq means nondecreasing.
void judge_monotone(OrderVerdict& v, const std::vector<double>& values, const std::vector<double>& coords) {
    const MonotoneScan scan = scan_monotone(values);
    v.max_violation_leq = scan.worst_decrease;
    v.max_violation_geq = scan.worst_increase;
    v.witness_t_leq = scan.worst_decrease > 0.0 ? coords[scan.decrease_at] : kNaN;
    v.witness_t_geq = scan.worst_increase > 0.0 ? coords[scan.increase_at] : kNaN;
    v.points_used = values.size();
    settle(v);
}

}  // namespace

std::string to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::St:
            return "st";
        case OrderKind::Hr:
            return "hr";
        case OrderKind::Star:
            return "star";
        case OrderKind::Lorenz:
            return "lorenz";
    }
    return "unknown";
}

OrderKind parse_order_kind(const std::string& name) {
    if (name == "st") return OrderKind::St;
    if (name == "hr") return OrderKind::Hr;
    if (name == "star") return OrderKind::Star;
    if (name == "lorenz") return OrderKind::Lorenz;
    throw ParameterError("unknown order '" + name + "' (expected st, hr, star or lorenz)");
}

std::string OrderVerdict::relation() const {
    if (inconclusive) return "inconclusive";
    if (holds_leq && holds_geq) return "==";
    if (holds_leq) return "<=";
    if (holds_geq) return ">=";
    return "none";
}

MonotoneScan scan_monotone(const std::vector<double>& values) {
    MonotoneScan scan;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double step = (values[i] - values[i - 1]) / scale_of(values[i]);
        if (-step > scan.worst_decrease) {
            scan.worst_decrease = -step;
            scan.decrease_at = i;
        }
        if (step > scan.worst_increase) {
            scan.worst_increase = step;
            scan.increase_at = i;
        }
    }
    return scan;
}

OrderVerdict check_st(const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid, double slack) {
    OrderVerdict v = blank(OrderKind::St, slack);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double diff = 0.0;
        try {
            diff = m1.survival(grid.x(i)) - m2.survival(grid.x(i));
        } catch (const Error& e) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "survival comparison failed at t = " << grid.t(i) << ": " << e.what();
            throw NumericalError(msg.str(), grid.t(i));
        }
        if (diff > v.max_violation_leq) {
            v.max_violation_leq = diff;
            v.witness_t_leq = grid.t(i);
        }
        if (-diff > v.max_violation_geq) {
            v.max_violation_geq = -diff;
            v.witness_t_geq = grid.t(i);
        }
    }
    v.points_used = grid.size();
    settle(v);
    return v;
}

OrderVerdict check_hr(const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid, double slack) {
    OrderVerdict v = blank(OrderKind::Hr, slack);
    std::vector<double> ratio;
    std::vector<double> coords;
    std::vector<double> h1;
    std::vector<double> h2;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        double log_ratio = kNaN;
        double r1 = kNaN;
        double r2 = kNaN;
        try {
            log_ratio = m2.log_survival(x) - m1.log_survival(x);
            r1 = m1.hazard(x);
            r2 = m2.hazard(x);
        } catch (const NumericalError&) {
        }
        const double value = std::exp(log_ratio);
        if (!std::isfinite(value) || !std::isfinite(r1) || !std::isfinite(r2)) {
            v.truncated = true;
            std::ostringstream msg;
            msg.precision(17);
            msg << "survival ratio unavailable from t = " << grid.t(i) << "; grid truncated";
            v.reason = msg.str();
            break;
        }
        ratio.push_back(value);
        coords.push_back(grid.t(i));
        h1.push_back(r1);
        h2.push_back(r2);
    }
    if (ratio.size() < 2) {
        v.inconclusive = true;
        if (v.reason.empty()) v.reason = "fewer than two usable grid points";
        v.points_used = ratio.size();
        return v;
    }
    // survival(m2)/survival(m1) nondecreasing is m1 <= m2
    judge_monotone(v, ratio, coords);

    HazardCrossCheck cross;
    for (std::size_t i = 0; i < h1.size(); ++i) {
        const double scale = std::max(scale_of(h1[i]), scale_of(h2[i]));
        cross.max_violation_leq = std::max(cross.max_violation_leq, (h2[i] - h1[i]) / scale);
        cross.max_violation_geq = std::max(cross.max_violation_geq, (h1[i] - h2[i]) / scale);
    }
    cross.holds_leq = cross.max_violation_leq <= slack;
    cross.holds_geq = cross.max_violation_geq <= slack;
    cross.disagrees = cross.holds_leq != v.holds_leq || cross.holds_geq != v.holds_geq;
    v.hazard_check = cross;
    return v;
}

OrderVerdict check_star(const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid, double slack) {
    OrderVerdict v = blank(OrderKind::Star, slack);
    std::vector<double> ratio;
    ratio.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        try {
            const double s = m2.inverse_log_survival(m1.log_survival(x));
            ratio.push_back(s / x);
        } catch (const TailError& e) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "quantile inversion failed at t = " << grid.t(i) << ": " << e.what();
            v.inconclusive = true;
            v.reason = msg.str();
            v.points_used = ratio.size();
            return v;
        }
    }
    judge_monotone(v, ratio, grid.t_values());
    return v;
}

double LorenzCurve::at(double p) const {
    if (p_values.empty()) return kNaN;
    if (p <= p_values.front()) {
        return p_values.front() > 0.0 ? l_values.front() * std::max(p, 0.0) / p_values.front() : l_values.front();
    }
    if (p >= p_values.back()) {
        const double span = 1.0 - p_values.back();
        if (span <= 0.0) return l_values.back();
        return l_values.back() + (1.0 - l_values.back()) * (std::min(p, 1.0) - p_values.back()) / span;
    }
    const auto it = std::upper_bound(p_values.begin(), p_values.end(), p);
    const std::size_t hi = static_cast<std::size_t>(it - p_values.begin());
    const std::size_t lo = hi - 1;
    const double w = (p - p_values[lo]) / (p_values[hi] - p_values[lo]);
    return l_values[lo] + w * (l_values[hi] - l_values[lo]);
}

std::vector<double> default_lorenz_grid(std::size_t uniform_points, std::size_t tail_points) {
    if (uniform_points < 2 || tail_points < 2) {
        throw ParameterError("Lorenz grid needs at least two points in each segment");
    }
    constexpr double kBreak = 0.99;
    std::vector<double> u;
    u.reserve(uniform_points + tail_points);
    const double step = (kBreak - kLorenzUMin) / static_cast<double>(uniform_points - 1);
    for (std::size_t i = 0; i + 1 < uniform_points; ++i) {
        u.push_back(kLorenzUMin + step * static_cast<double>(i));
    }
    // 1 - u runs geometrically from 1e-2 to 1e-6
    const double log_hi = std::log(1.0 - kBreak);
    const double log_lo = std::log(1.0 - kLorenzUMax);
    for (std::size_t i = 0; i < tail_points; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(tail_points - 1);
        u.push_back(1.0 - std::exp(log_hi + frac * (log_lo - log_hi)));
    }
    u.front() = kLorenzUMin;
    u.back() = kLorenzUMax;
    return u;
}

LorenzCurve lorenz_curve(const MixtureModel& m, const std::vector<double>& u_grid) {
    if (u_grid.size() < 2) {
        throw ParameterError("Lorenz curve needs at least two u values");
    }
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
        if (!(u_grid[i] > 0.0 && u_grid[i] < 1.0) || (i > 0 && !(u_grid[i] > u_grid[i - 1]))) {
            throw ParameterError("Lorenz u grid must be strictly increasing inside (0, 1)");
        }
    }
    std::vector<double> q(u_grid.size());
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
        try {
            q[i] = m.quantile(u_grid[i]);
        } catch (const TailError& e) {
            // the quantile already exceeds the bracket, so the mean is at least (1 - u) * kTailGuard
            std::ostringstream msg;
            msg.precision(6);
            msg << "quantile exceeds " << kTailGuard << " at u = " << u_grid[i]
                << "; the mean is not finite at working precision";
            throw InfiniteMeanSuspected(msg.str());
        }
    }
    LorenzCurve curve;
    curve.p_values = u_grid;
    curve.l_values.assign(u_grid.size(), 0.0);
    double total = 0.0;
    double top_share = 0.0;
    for (std::size_t i = 1; i < u_grid.size(); ++i) {
        const double piece = 0.5 * (q[i] + q[i - 1]) * (u_grid[i] - u_grid[i - 1]);
        total += piece;
        if (u_grid[i - 1] >= 0.99 - 1e-12) top_share += piece;
        curve.l_values[i] = total;
    }
    if (total > 0.0 && top_share > 0.5 * total && q.back() > 1e9) {
        std::ostringstream msg;
        msg << "top 1% of the quantile range carries " << top_share / total
            << " of the integral and the quantile reaches " << q.back();
        throw InfiniteMeanSuspected(msg.str());
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw InfiniteMeanSuspected("quantile integral is not a finite positive number");
    }
    for (double& l : curve.l_values) l /= total;
    curve.mean = total;
    return curve;
}

OrderVerdict check_lorenz(const MixtureModel& m1, const MixtureModel& m2, const std::vector<double>& u_grid,
                          double slack) {
    OrderVerdict v = blank(OrderKind::Lorenz, slack);
    const LorenzCurve l1 = lorenz_curve(m1, u_grid);
    const LorenzCurve l2 = lorenz_curve(m2, u_grid);
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
        // m1 <= m2 iff L1 >= L2
        const double diff = l2.l_values[i] - l1.l_values[i];
        if (diff > v.max_violation_leq) {
            v.max_violation_leq = diff;
            v.witness_t_leq = u_grid[i];
        }
        if (-diff > v.max_violation_geq) {
            v.max_violation_geq = -diff;
            v.witness_t_geq = u_grid[i];
        }
    }
    v.points_used = u_grid.size();
    settle(v);
    return v;
}

OrderVerdict check_order(OrderKind kind, const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid,
                         double slack) {
    switch (kind) {
        case OrderKind::St:
            return check_st(m1, m2, grid, slack);
        case OrderKind::Hr:
            return check_hr(m1, m2, grid, slack);
        case OrderKind::Star:
            return check_star(m1, m2, grid, slack);
        case OrderKind::Lorenz:
            return check_lorenz(m1, m2, default_lorenz_grid(), slack);
    }
    throw ParameterError("unknown order kind");
}

}  // namespace mixorder
