#include "mixorder/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "mixorder/errors.hpp"

namespace mixorder {

namespace {

constexpr double kWeightSumTolerance = 1e-12;
constexpr int kMaxBisections = 200;

void validate_rows(std::span<const double> weights, std::span<const double> varying, const char* row_name) {
    if (weights.empty()) {
        throw ParameterError("mixture needs at least one component");
    }
    if (weights.size() != varying.size()) {
        std::ostringstream msg;
        msg << "mixture has " << weights.size() << " weights but " << varying.size() << " " << row_name
            << " values";
        throw ShapeError(msg.str());
    }
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
            std::ostringstream msg;
            msg << "mixing weight p[" << i << "] = " << weights[i] << " must be > 0";
            throw ParameterError(msg.str());
        }
        total += weights[i];
    }
    if (std::abs(total - 1.0) > kWeightSumTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "mixing weights sum to " << total << ", expected 1 within " << kWeightSumTolerance;
        throw ParameterError(msg.str());
    }
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string to_string(MixtureVariant variant) {
    return variant == MixtureVariant::VaryAlpha ? "vary_alpha" : "vary_lambda";
}

MixtureVariant parse_mixture_variant(const std::string& name) {
    if (name == "vary_alpha") return MixtureVariant::VaryAlpha;
    if (name == "vary_lambda") return MixtureVariant::VaryLambda;
    throw ParameterError("unknown model variant '" + name + "' (expected vary_alpha or vary_lambda)");
}

MixtureModel::MixtureModel(MixtureVariant variant, Baseline baseline, double common, std::vector<double> weights,
                           std::vector<double> varying)
    : variant_(variant),
      baseline_(std::move(baseline)),
      common_(common),
      weights_(std::move(weights)),
      varying_(std::move(varying)) {
    components_.reserve(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (variant_ == MixtureVariant::VaryAlpha) {
            components_.push_back({weights_[i], MphrParams(varying_[i], common_)});
        } else {
            components_.push_back({weights_[i], MphrParams(common_, varying_[i])});
        }
    }
}

MixtureModel MixtureModel::vary_alpha(Baseline baseline, double lambda, std::span<const double> weights,
                                      std::span<const double> alphas) {
    validate_rows(weights, alphas, "alpha");
    return MixtureModel(MixtureVariant::VaryAlpha, std::move(baseline), lambda,
                        std::vector<double>(weights.begin(), weights.end()),
                        std::vector<double>(alphas.begin(), alphas.end()));
}

MixtureModel MixtureModel::vary_lambda(Baseline baseline, double alpha, std::span<const double> weights,
                                       std::span<const double> lambdas) {
    validate_rows(weights, lambdas, "lambda");
    return MixtureModel(MixtureVariant::VaryLambda, std::move(baseline), alpha,
                        std::vector<double>(weights.begin(), weights.end()),
                        std::vector<double>(lambdas.begin(), lambdas.end()));
}

double MixtureModel::log_survival(double x) const {
    // log-sum-exp over log p_i + log Fbar_i
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> terms(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        terms[i] = std::log(components_[i].weight) + mphr_log_survival(components_[i].params, baseline_, x);
        peak = std::max(peak, terms[i]);
    }
    if (!std::isfinite(peak)) {
        return peak;
    }
    double acc = 0.0;
    for (double term : terms) {
        acc += std::exp(term - peak);
    }
    return peak + std::log(acc);
}

double MixtureModel::survival(double x) const {
    double total = 0.0;
    for (const auto& c : components_) {
        total += c.weight * mphr_survival(c.params, baseline_, x);
    }
    return total;
}

double MixtureModel::cdf(double x) const { return 1.0 - survival(x); }

double MixtureModel::density(double x) const {
    double total = 0.0;
    for (const auto& c : components_) {
        total += c.weight * mphr_density(c.params, baseline_, x);
    }
    return total;
}

double MixtureModel::hazard(double x) const {
    const double log_total = log_survival(x);
    if (!std::isfinite(log_total)) {
        std::ostringstream msg;
        msg << "mixture log-survival is not finite at x = " << x;
        throw NumericalError(msg.str(), x);
    }
    double rate = 0.0;
    for (const auto& c : components_) {
        const double log_weight = std::log(c.weight) + mphr_log_survival(c.params, baseline_, x) - log_total;
        rate += std::exp(log_weight) * mphr_hazard(c.params, baseline_, x);
    }
    return rate;
}

double MixtureModel::inverse_log_survival(double log_u) const {
    if (!(log_u <= 0.0)) {
        throw DomainError("mixture inverse survival needs a level in (0, 1]");
    }
    if (log_u == 0.0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = 1.0;
    while (log_survival(hi) > log_u) {
        lo = hi;
        hi *= 2.0;
        if (hi > kTailGuard) {
            const double level = -std::expm1(log_u);
            std::ostringstream msg;
            msg.precision(17);
            msg << "quantile bracket passed x = " << kTailGuard << " at cdf level " << level;
            throw TailError(msg.str(), level);
        }
    }
    for (int iter = 0; iter < kMaxBisections; ++iter) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (log_survival(mid) > log_u) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

double MixtureModel::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        std::ostringstream msg;
        msg << "mixture quantile needs u in (0, 1), got " << u;
        throw DomainError(msg.str());
    }
    return inverse_log_survival(std::log1p(-u));
}

std::vector<double> MixtureModel::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) {
        throw ParameterError("sample size must be >= 1");
    }
    std::vector<double> cumulative(weights_.size());
    std::partial_sum(weights_.begin(), weights_.end(), cumulative.begin());
    cumulative.back() = 1.0;

    std::mt19937_64 rng(seed);
    std::vector<double> draws;
    draws.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double pick = uniform01(rng);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), pick);
        const std::size_t idx =
            std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), components_.size() - 1);
        const double level = 1.0 - uniform01(rng);  // (0, 1]
        draws.push_back(mphr_inverse_survival(components_[idx].params, baseline_, level));
    }
    return draws;
}

EvaluationGrid::EvaluationGrid(std::vector<double> t_values) : t_(std::move(t_values)) {
    if (t_.empty()) {
        throw ParameterError("evaluation grid is empty");
    }
    x_.reserve(t_.size());
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const double t = t_[i];
        if (!(t > 0.0 && t < 1.0)) {
            std::ostringstream msg;
            msg << "grid value t[" << i << "] = " << t << " is not strictly inside (0, 1)";
            throw ParameterError(msg.str());
        }
        if (i > 0 && !(t > t_[i - 1])) {
            throw ParameterError("grid values must be strictly increasing");
        }
        x_.push_back(t / (1.0 - t));
    }
}

EvaluationGrid EvaluationGrid::uniform(std::size_t points, double t_min, double t_max) {
    if (points == 0) {
        throw ParameterError("grid needs at least one point");
    }
    if (!(t_min > 0.0 && t_max < 1.0 && t_min <= t_max) || (points > 1 && !(t_min < t_max))) {
        std::ostringstream msg;
        msg << "grid range [" << t_min << ", " << t_max << "] must satisfy 0 < t_min < t_max < 1";
        throw ParameterError(msg.str());
    }
    std::vector<double> t(points);
    if (points == 1) {
        t[0] = t_min;
    } else {
        const double step = (t_max - t_min) / static_cast<double>(points - 1);
        for (std::size_t i = 0; i < points; ++i) {
            t[i] = t_min + step * static_cast<double>(i);
        }
        t.back() = t_max;
    }
    return EvaluationGrid(std::move(t));
}

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::Survival:
            return "survival";
        case CurveKind::Hazard:
            return "hazard";
        case CurveKind::Density:
            return "density";
        case CurveKind::Cdf:
            return "cdf";
    }
    return "unknown";
}

CurveKind parse_curve_kind(const std::string& name) {
    if (name == "survival") return CurveKind::Survival;
    if (name == "hazard") return CurveKind::Hazard;
    if (name == "density") return CurveKind::Density;
    if (name == "cdf") return CurveKind::Cdf;
    throw ParameterError("unknown curve '" + name + "' (expected survival, hazard, density or cdf)");
}

std::vector<CurvePoint> evaluate_curve(const MixtureModel& m, const EvaluationGrid& grid, CurveKind which) {
    std::vector<CurvePoint> series;
    series.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        try {
            double value = 0.0;
            switch (which) {
                case CurveKind::Survival:
                    value = m.survival(x);
                    break;
                case CurveKind::Hazard:
                    value = m.hazard(x);
                    break;
                case CurveKind::Density:
                    value = m.density(x);
                    break;
                case CurveKind::Cdf:
                    value = m.cdf(x);
                    break;
            }
            series.push_back({grid.t(i), x, value});
        } catch (const Error& e) {
            std::ostringstream msg;
            msg.precision(17);
            msg << to_string(which) << " evaluation failed at t = " << grid.t(i) << ": " << e.what();
            throw NumericalError(msg.str(), grid.t(i));
        }
    }
    return series;
}

}  // namespace mixorder
