#pragma once

#include <array>

#include "mixorder/baseline.hpp"

namespace mixorder {

using Pair = std::array<double, 2>;

// Schur-type sign functions of two-component mixtures. Each returns
//
//   (u1 - u2)(dG/du1 - dG/du2) + (v1 - v2)(dG/dv1 - dG/dv2)
//
// in closed form, where G is the quantity being compared and (u, v) the two
// parameter rows. Every value is exact, not just sign-equivalent, so it can
// be checked against finite differences.

/// G = mixture survival with varying tilts (p, alpha) and common lambda.
double h_pa(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x);

/// G = mixture survival with varying rate powers (p, lambda) and common alpha.
double h_plambda(Pair p, Pair lambda, double alpha, const Baseline& baseline, double x);

/// G = mixture hazard with varying tilts. Throws PreconditionError unless
/// p1 * alpha1 = p2 * alpha2 within 1e-10.
double h_hr(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x);

/// Same combination as h_hr without the balance precondition.
double h_hr_general(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x);

/// The four-term expansion of the hazard combination as it is usually printed.
/// Kept for comparison only: it does not equal h_hr_general, even under the
/// balance condition.
double h_hr_expanded_form(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x);

inline constexpr double kBalanceTolerance = 1e-10;

}  // namespace mixorder
