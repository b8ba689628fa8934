#pragma once

#include "mixorder/baseline.hpp"

namespace mixorder {

/**
 * Parameters of a modified proportional hazard rate (MPHR) law
 *
 *     Fbar(x; alpha, lambda) = alpha * S(x)^lambda / (1 - (1 - alpha) * S(x)^lambda)
 *
 * with S the baseline survival. alpha = 1 gives the proportional hazards
 * model S^lambda; lambda = 1 gives the proportional odds model.
 *
 * Any alpha > 0 is admitted here. Theorem checks that need alpha <= 1
 * state that as a hypothesis of their own.
 */
class MphrParams {
  public:
    /// Throws ParameterError unless both values are finite and > 0.
    MphrParams(double alpha, double lambda);

    double alpha() const { return alpha_; }
    double lambda() const { return lambda_; }
    double alpha_bar() const { return 1.0 - alpha_; }

    friend bool operator==(const MphrParams&, const MphrParams&) = default;

  private:
    double alpha_;
    double lambda_;
};

double mphr_survival(const MphrParams& p, const Baseline& d, double x);
double mphr_log_survival(const MphrParams& p, const Baseline& d, double x);
/// lambda * alpha * S^(lambda-1) * f / (1 - alpha_bar * S^lambda)^2
double mphr_density(const MphrParams& p, const Baseline& d, double x);
/// lambda * r(x) / (1 - alpha_bar * S^lambda); stays finite in the far tail.
double mphr_hazard(const MphrParams& p, const Baseline& d, double x);

/// x with mphr_survival(x) = u, for u in (0, 1].
double mphr_inverse_survival(const MphrParams& p, const Baseline& d, double u);

}  // namespace mixorder
