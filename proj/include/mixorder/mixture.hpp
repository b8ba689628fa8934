#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mixorder/baseline.hpp"
#include "mixorder/mphr.hpp"

namespace mixorder {

/// Which MPHR parameter varies across components; the other one is shared.
enum class MixtureVariant { VaryAlpha, VaryLambda };

std::string to_string(MixtureVariant variant);
MixtureVariant parse_mixture_variant(const std::string& name);

struct MixtureComponent {
    double weight;
    MphrParams params;
};

/**
 * Finite mixture of MPHR laws over one baseline.
 *
 * VaryAlpha: components (p_i, alpha_i) with a common lambda.
 * VaryLambda: components (p_i, lambda_i) with a common alpha.
 *
 * Weights must be > 0 and sum to 1 within 1e-12. Everything is evaluated
 * through log-survivals so grids reaching far into the tail stay finite.
 */
class MixtureModel {
  public:
    static MixtureModel vary_alpha(Baseline baseline, double lambda, std::span<const double> weights,
                                   std::span<const double> alphas);
    static MixtureModel vary_lambda(Baseline baseline, double alpha, std::span<const double> weights,
                                    std::span<const double> lambdas);

    MixtureVariant variant() const { return variant_; }
    const Baseline& baseline() const { return baseline_; }
    /// The shared parameter: lambda for VaryAlpha, alpha for VaryLambda.
    double common() const { return common_; }
    const std::vector<double>& weights() const { return weights_; }
    /// The per-component parameter row: alphas for VaryAlpha, lambdas for VaryLambda.
    const std::vector<double>& varying() const { return varying_; }
    const std::vector<MixtureComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    double survival(double x) const;
    double log_survival(double x) const;
    double cdf(double x) const;
    double density(double x) const;
    /// sum p_i f_i / sum p_i Fbar_i, with weights formed in log space.
    double hazard(double x) const;

    /// x with cdf(x) = u for u in (0, 1).
    double quantile(double u) const;
    /// x with survival(x) = exp(log_u), log_u < 0.
    double inverse_log_survival(double log_u) const;

    /// Inverse-transform draws; identical output for identical seeds.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

  private:
    MixtureModel(MixtureVariant variant, Baseline baseline, double common, std::vector<double> weights,
                 std::vector<double> varying);

    MixtureVariant variant_;
    Baseline baseline_;
    double common_;
    std::vector<double> weights_;
    std::vector<double> varying_;
    std::vector<MixtureComponent> components_;
};

/// Quantile search gives up once the bracket passes this abscissa.
inline constexpr double kTailGuard = 1e18;

/// Points t in (0,1) mapped to x = t / (1 - t).
class EvaluationGrid {
  public:
    static constexpr std::size_t kDefaultPoints = 2001;
    static constexpr double kDefaultTMin = 1e-4;
    static constexpr double kDefaultTMax = 1.0 - 1e-4;

    /// Throws ParameterError unless the values are strictly increasing inside (0, 1).
    explicit EvaluationGrid(std::vector<double> t_values);
    /// Uniform in t; a single point sits at t_min.
    static EvaluationGrid uniform(std::size_t points = kDefaultPoints, double t_min = kDefaultTMin,
                                  double t_max = kDefaultTMax);

    std::size_t size() const { return t_.size(); }
    double t(std::size_t i) const { return t_[i]; }
    double x(std::size_t i) const { return x_[i]; }
    const std::vector<double>& t_values() const { return t_; }
    const std::vector<double>& x_values() const { return x_; }

  private:
    std::vector<double> t_;
    std::vector<double> x_;
};

enum class CurveKind { Survival, Hazard, Density, Cdf };

std::string to_string(CurveKind kind);
CurveKind parse_curve_kind(const std::string& name);

struct CurvePoint {
    double t;
    double x;
    double value;
};

/// Pointwise tabulation; failures are rethrown as NumericalError naming the offending t.
std::vector<CurvePoint> evaluate_curve(const MixtureModel& m, const EvaluationGrid& grid, CurveKind which);

}  // namespace mixorder
