#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixorder/mixture.hpp"

namespace mixorder {

inline constexpr double kDefaultSlack = 1e-9;

enum class OrderKind { St, Hr, Star, Lorenz };

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(const std::string& name);

/// Pointwise hazard comparison reported next to the survival-ratio test of check_hr.
struct HazardCrossCheck {
    bool holds_leq = false;  // r_m1 >= r_m2 everywhere
    bool holds_geq = false;
    double max_violation_leq = 0.0;
    double max_violation_geq = 0.0;
    /// Set when the cross-check disagrees with the ratio test in either direction.
    bool disagrees = false;
};

/**
 * Outcome of a grid-based order check between model A (m1) and model B (m2).
 *
 * holds_leq means m1 <= m2 in the order, holds_geq means m1 >= m2. Violations
 * are measured so that a direction holds iff its violation is <= slack.
 * Witness coordinates are grid t values (or Lorenz p values); NaN when there
 * is no violation at all.
 */
struct OrderVerdict {
    OrderKind order = OrderKind::St;
    double slack = kDefaultSlack;
    bool holds_leq = false;
    bool holds_geq = false;
    double max_violation_leq = 0.0;
    double max_violation_geq = 0.0;
    double witness_t = 0.0;
    double witness_t_leq = 0.0;
    double witness_t_geq = 0.0;
    std::size_t points_used = 0;
    bool truncated = false;
    bool inconclusive = false;
    std::string reason;
    std::optional<HazardCrossCheck> hazard_check;

    /// "<=", ">=", "==" or "none" (or "inconclusive").
    std::string relation() const;
    bool holds(bool leq_direction) const { return leq_direction ? holds_leq : holds_geq; }
};

OrderVerdict check_st(const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid,
                      double slack = kDefaultSlack);

/// Primary test: monotonicity of survival(m2) / survival(m1). Hazards are compared as a cross-check.
OrderVerdict check_hr(const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid,
                      double slack = kDefaultSlack);

/// S(x) = quantile_m2(cdf_m1(x)); m1 <= m2 iff S(x)/x is nondecreasing.
OrderVerdict check_star(const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid,
                        double slack = kDefaultSlack);

struct LorenzCurve {
    std::vector<double> p_values;
    std::vector<double> l_values;
    /// Integral of the quantile over the clipped u range.
    double mean = 0.0;

    /// Linear interpolation on the tabulated points.
    double at(double p) const;
};

inline constexpr double kLorenzUMin = 1e-6;
inline constexpr double kLorenzUMax = 1.0 - 1e-6;

/// Uniform on [1e-6, 0.99] followed by a geometric run of 1 - u down to 1e-6.
std::vector<double> default_lorenz_grid(std::size_t uniform_points = 1001, std::size_t tail_points = 241);

/// Trapezoid quadrature of the quantile. Throws InfiniteMeanSuspected when the
/// heavy-tail guard fires or the quantile escapes the search bracket.
LorenzCurve lorenz_curve(const MixtureModel& m, const std::vector<double>& u_grid = default_lorenz_grid());

/// m1 <= m2 iff L_m1(p) >= L_m2(p) - slack for every p.
OrderVerdict check_lorenz(const MixtureModel& m1, const MixtureModel& m2,
                          const std::vector<double>& u_grid = default_lorenz_grid(), double slack = kDefaultSlack);

OrderVerdict check_order(OrderKind kind, const MixtureModel& m1, const MixtureModel& m2, const EvaluationGrid& grid,
                         double slack = kDefaultSlack);

/// Worst relative decrease of a sequence: max (v[i-1] - v[i]) / max(1, |v[i]|), floored at 0.
struct MonotoneScan {
    double worst_decrease = 0.0;
    double worst_increase = 0.0;
    std::size_t decrease_at = 0;
    std::size_t increase_at = 0;
};
MonotoneScan scan_monotone(const std::vector<double>& values);

}  // namespace mixorder
