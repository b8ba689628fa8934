#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mixorder {

/// Survival exp(-rate * x).
struct Exponential {
    double rate;
};

/// Survival (1 + x^a)^(-b), a Burr XII form with unit scale.
struct PowerBurr {
    double a;
    double b;
};

enum class BaselineKind { Exponential, PowerBurr };

struct BaselinePoint {
    double survival;
    double density;
    double hazard;
};

/**
 * Baseline lifetime distribution on (0, inf) underlying every MPHR component.
 *
 * New families are added by extending the variant and the four closed forms
 * in baseline.cpp; nothing downstream switches on the concrete family.
 *
 * Survival is also available in log form so that far-tail grid points
 * (x = t/(1-t) with t near 1) stay finite after raising to a power. The
 * hazard is always the closed form, so it stays finite where the survival
 * itself underflows.
 */
class Baseline {
  public:
    using Family = std::variant<Exponential, PowerBurr>;

    static Baseline exponential(double rate);
    static Baseline power_burr(double a, double b);
    /// Exponential takes {rate}; PowerBurr takes {a, b}.
    static Baseline make(BaselineKind kind, std::span<const double> params);

    BaselineKind kind() const;
    std::vector<double> params() const;
    const Family& family() const { return family_; }
    std::string describe() const;

    double survival(double x) const;
    double log_survival(double x) const;
    double density(double x) const;
    double hazard(double x) const;
    BaselinePoint eval(double x) const;

    /// Closed-form inverse of survival for u in (0, 1].
    double inverse_survival(double u) const;
    /// Inverse taking log(u) in (-inf, 0]; may return +inf when x overflows.
    double inverse_log_survival(double log_u) const;

    friend bool operator==(const Baseline& lhs, const Baseline& rhs);

  private:
    explicit Baseline(Family family) : family_(family) {}

    Family family_;
};

std::string to_string(BaselineKind kind);
BaselineKind parse_baseline_kind(const std::string& name);

}  // namespace mixorder
