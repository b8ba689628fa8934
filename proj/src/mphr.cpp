#include "mixorder/mphr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mixorder/errors.hpp"

namespace mixorder {

namespace {

// S^lambda is always formed as exp(lambda * log S) so far-tail points
// underflow gracefully to 0 instead of producing pow(0, .) edge cases.
struct Tilted {
    double log_s_pow;  // lambda * log S(x)
    double s_pow;      // S(x)^lambda
    double denom;      // 1 - alpha_bar * S(x)^lambda
};

Tilted tilt(const MphrParams& p, const Baseline& d, double x) {
    const double log_s_pow = p.lambda() * d.log_survival(x);
    const double s_pow = std::exp(log_s_pow);
    const double denom = 1.0 - p.alpha_bar() * s_pow;
    if (!(denom > 0.0)) {
        std::ostringstream msg;
        msg << "MPHR denominator 1 - (1 - alpha) S^lambda = " << denom << " is not positive at x = " << x;
        throw NumericalError(msg.str(), x);
    }
    return {log_s_pow, s_pow, denom};
}

}  // namespace

MphrParams::MphrParams(double alpha, double lambda) : alpha_(alpha), lambda_(lambda) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        std::ostringstream msg;
        msg << "MPHR tilt alpha must be finite and > 0, got " << alpha;
        throw ParameterError(msg.str());
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        std::ostringstream msg;
        msg << "MPHR rate power lambda must be finite and > 0, got " << lambda;
        throw ParameterError(msg.str());
    }
}

double mphr_log_survival(const MphrParams& p, const Baseline& d, double x) {
    const Tilted t = tilt(p, d, x);
    return std::log(p.alpha()) + t.log_s_pow - std::log(t.denom);
}

double mphr_survival(const MphrParams& p, const Baseline& d, double x) {
    const Tilted t = tilt(p, d, x);
    return p.alpha() * t.s_pow / t.denom;
}

double mphr_density(const MphrParams& p, const Baseline& d, double x) {
    const Tilted t = tilt(p, d, x);
    const double r = d.hazard(x);
    if (t.s_pow == 0.0) {
        return 0.0;
    }
    // S^(lambda-1) f = S^lambda r
    return p.lambda() * p.alpha() * t.s_pow * r / (t.denom * t.denom);
}

double mphr_hazard(const MphrParams& p, const Baseline& d, double x) {
    const Tilted t = tilt(p, d, x);
    return p.lambda() * d.hazard(x) / t.denom;
}

double mphr_inverse_survival(const MphrParams& p, const Baseline& d, double u) {
    if (!(u > 0.0 && u <= 1.0)) {
        std::ostringstream msg;
        msg << "MPHR inverse survival needs u in (0, 1], got " << u;
        throw DomainError(msg.str());
    }
    if (u == 1.0) {
        return 0.0;
    }
    // S^lambda = u / (alpha + u (1 - alpha))
    const double log_s_pow = std::log(u) - std::log(p.alpha() + u * p.alpha_bar());
    return d.inverse_log_survival(std::min(0.0, log_s_pow / p.lambda()));
}

}  // namespace mixorder
