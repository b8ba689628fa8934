#include "mixorder/hfunctions.hpp"

#include <cmath>
#include <sstream>

#include "mixorder/errors.hpp"
#include "mixorder/mphr.hpp"

namespace mixorder {

namespace {

void require_positive_x(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "H-function evaluated at x = " << x << "; x must be finite and > 0";
        throw DomainError(msg.str());
    }
}

void require_pair(Pair v, const char* name) {
    for (double e : v) {
        if (!(e > 0.0) || !std::isfinite(e)) {
            std::ostringstream msg;
            msg << name << " entries must be finite and > 0, got " << e;
            throw ParameterError(msg.str());
        }
    }
}

void validate_tilts(Pair alpha, double lambda) {
    for (double a : alpha) static_cast<void>(MphrParams{a, lambda});
}

}  // namespace

double h_pa(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x) {
    require_positive_x(x);
    require_pair(p, "p");
    require_pair(alpha, "alpha");
    validate_tilts(alpha, lambda);
    const double s = std::exp(lambda * baseline.log_survival(x));
    const double m1 = 1.0 - (1.0 - alpha[0]) * s;
    const double m2 = 1.0 - (1.0 - alpha[1]) * s;
    // dG/dp_i = alpha_i s / M_i and dG/dalpha_i = p_i s (1 - s) / M_i^2 collapse to one product
    const double d = s - s * s;
    return (alpha[0] - alpha[1]) * d * (m1 + m2) * (p[0] * m2 - p[1] * m1) / (m1 * m1 * m2 * m2);
}

double h_plambda(Pair p, Pair lambda, double alpha, const Baseline& baseline, double x) {
    require_positive_x(x);
    require_pair(p, "p");
    require_pair(lambda, "lambda");
    validate_tilts({alpha, alpha}, lambda[0]);
    const double log_s = baseline.log_survival(x);
    const double s1 = std::exp(lambda[0] * log_s);
    const double s2 = std::exp(lambda[1] * log_s);
    const double abar = 1.0 - alpha;
    const double m1 = 1.0 - abar * s1;
    const double m2 = 1.0 - abar * s2;
    const double weight_part = (p[0] - p[1]) * alpha * (s1 - s2) / (m1 * m2);
    const double power_part = (lambda[0] - lambda[1]) * alpha * log_s *
                              (p[0] * s1 * m2 * m2 - p[1] * s2 * m1 * m1) / (m1 * m1 * m2 * m2);
    return weight_part + power_part;
}

double h_hr_general(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x) {
    require_positive_x(x);
    require_pair(p, "p");
    require_pair(alpha, "alpha");
    validate_tilts(alpha, lambda);
    const double s = std::exp(lambda * baseline.log_survival(x));
    const double lr = lambda * baseline.hazard(x);
    const double m[2] = {1.0 - (1.0 - alpha[0]) * s, 1.0 - (1.0 - alpha[1]) * s};
    const double c[2] = {p[0] * alpha[0], p[1] * alpha[1]};
    // hazard = lr * A / B. B - A m_i = s * sum_j c_j (alpha_j - alpha_i) / m_j^2, so every
    // partial carries an explicit factor s and nothing cancels in the far tail.
    const double a = c[0] / (m[0] * m[0]) + c[1] / (m[1] * m[1]);
    const double b = c[0] / m[0] + c[1] / m[1];
    double dp[2];
    double da[2];
    for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        const double d = c[j] * (alpha[j] - alpha[i]) / (m[j] * m[j]);
        dp[i] = lr * alpha[i] * s * d / (m[i] * m[i] * b * b);
        da[i] = lr * s * (p[i] * d / (m[i] * m[i]) + c[i] * (a * m[i] - 2.0 * b) / (m[i] * m[i] * m[i])) / (b * b);
    }
    return (p[0] - p[1]) * (dp[0] - dp[1]) + (alpha[0] - alpha[1]) * (da[0] - da[1]);
}

double h_hr(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x) {
    const double gap = p[0] * alpha[0] - p[1] * alpha[1];
    if (std::abs(gap) > kBalanceTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "hazard H-function needs p1*alpha1 = p2*alpha2; got " << p[0] * alpha[0] << " vs "
            << p[1] * alpha[1];
        throw PreconditionError(msg.str());
    }
    return h_hr_general(p, alpha, lambda, baseline, x);
}

double h_hr_expanded_form(Pair p, Pair alpha, double lambda, const Baseline& baseline, double x) {
    require_positive_x(x);
    require_pair(p, "p");
    require_pair(alpha, "alpha");
    validate_tilts(alpha, lambda);
    const double s = std::exp(lambda * baseline.log_survival(x));
    const double lr = lambda * baseline.hazard(x);
    const double m1 = 1.0 - (1.0 - alpha[0]) * s;
    const double m2 = 1.0 - (1.0 - alpha[1]) * s;
    const double root = p[0] * alpha[0] * m1 * m1 * m2 + p[1] * alpha[1] * m1 * m2 * m2;
    const double den = root * root;
    const double cube_gap = m2 * m2 * m2 - m1 * m1 * m1;
    const double pa1 = p[0] * p[0] * alpha[0] * alpha[0];
    const double pa2 = p[1] * p[1] * alpha[1] * alpha[1];
    const double t1 = (p[0] - p[1]) * alpha[0] * alpha[1] * m1 * m2 * (p[0] + p[1]) * cube_gap;
    const double t2 = (alpha[0] - alpha[1]) * p[0] * p[1] * m1 * m2 * (alpha[0] + alpha[1]) * cube_gap;
    const double t3 = (alpha[0] - alpha[1]) * m1 * m2 * s *
                      (m1 * m2 * (pa2 - pa1) + 2.0 * s * (pa2 * m1 * m1 - pa1 * m2 * m2));
    const double t4 = (alpha[0] - alpha[1]) * p[0] * p[1] * alpha[0] * alpha[1] * s *
                      (m1 * m1 * m1 * m1 - m2 * m2 * m2 * m2);
    return lr * (t1 + t2 + t3 + t4) / den;
}

}  // namespace mixorder
