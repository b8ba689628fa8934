#include "mixorder/baseline.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mixorder/errors.hpp"

namespace mixorder {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "baseline parameter '" << name << "' must be a finite positive number, got " << value;
        throw ParameterError(msg.str());
    }
}

void require_abscissa(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "baseline evaluated at x = " << x << "; x must be finite and >= 0";
        throw DomainError(msg.str());
    }
}

}  // namespace

Baseline Baseline::exponential(double rate) {
    require_positive(rate, "rate");
    return Baseline(Exponential{rate});
}

Baseline Baseline::power_burr(double a, double b) {
    require_positive(a, "a");
    require_positive(b, "b");
    return Baseline(PowerBurr{a, b});
}

Baseline Baseline::make(BaselineKind kind, std::span<const double> params) {
    switch (kind) {
        case BaselineKind::Exponential:
            if (params.size() != 1) {
                throw ParameterError("exponential baseline takes exactly one parameter (rate)");
            }
            return exponential(params[0]);
        case BaselineKind::PowerBurr:
            if (params.size() != 2) {
                throw ParameterError("power_burr baseline takes exactly two parameters (a, b)");
            }
            return power_burr(params[0], params[1]);
    }
    throw ParameterError("unknown baseline kind");
}

BaselineKind Baseline::kind() const {
    return std::visit(Overloaded{[](const Exponential&) { return BaselineKind::Exponential; },
                                 [](const PowerBurr&) { return BaselineKind::PowerBurr; }},
                      family_);
}

std::vector<double> Baseline::params() const {
    return std::visit(Overloaded{[](const Exponential& e) { return std::vector<double>{e.rate}; },
                                 [](const PowerBurr& p) { return std::vector<double>{p.a, p.b}; }},
                      family_);
}

std::string Baseline::describe() const {
    std::ostringstream out;
    out.precision(15);
    std::visit(Overloaded{[&](const Exponential& e) { out << "Exponential(rate=" << e.rate << ")"; },
                          [&](const PowerBurr& p) { out << "PowerBurr(a=" << p.a << ", b=" << p.b << ")"; }},
               family_);
    return out.str();
}

double Baseline::log_survival(double x) const {
    require_abscissa(x);
    return std::visit(Overloaded{[&](const Exponential& e) { return -e.rate * x; },
                                 [&](const PowerBurr& p) { return -p.b * std::log1p(std::pow(x, p.a)); }},
                      family_);
}

double Baseline::survival(double x) const { return std::exp(log_survival(x)); }

double Baseline::hazard(double x) const {
    require_abscissa(x);
    return std::visit(Overloaded{[&](const Exponential& e) { return e.rate; },
                                 [&](const PowerBurr& p) {
                                     // a*b*x^(a-1) / (1 + x^a); +inf at 0 when a < 1
                                     const double xa = std::pow(x, p.a);
                                     return p.a * p.b * std::pow(x, p.a - 1.0) / (1.0 + xa);
                                 }},
                      family_);
}

double Baseline::density(double x) const {
    require_abscissa(x);
    return std::visit(Overloaded{[&](const Exponential& e) { return e.rate * std::exp(-e.rate * x); },
                                 [&](const PowerBurr& p) {
                                     const double xa = std::pow(x, p.a);
                                     return p.a * p.b * std::pow(x, p.a - 1.0) *
                                            std::exp(-(p.b + 1.0) * std::log1p(xa));
                                 }},
                      family_);
}

BaselinePoint Baseline::eval(double x) const { return {survival(x), density(x), hazard(x)}; }

double Baseline::inverse_log_survival(double log_u) const {
    if (!(log_u <= 0.0)) {
        std::ostringstream msg;
        msg << "inverse survival needs a level in (0, 1], got log-level " << log_u;
        throw DomainError(msg.str());
    }
    if (log_u == 0.0) {
        return 0.0;
    }
    return std::visit(Overloaded{[&](const Exponential& e) { return -log_u / e.rate; },
                                 [&](const PowerBurr& p) {
                                     // (u^(-1/b) - 1)^(1/a)
                                     return std::pow(std::expm1(-log_u / p.b), 1.0 / p.a);
                                 }},
                      family_);
}

double Baseline::inverse_survival(double u) const {
    if (!(u > 0.0 && u <= 1.0)) {
        std::ostringstream msg;
        msg << "inverse survival needs u in (0, 1], got " << u;
        throw DomainError(msg.str());
    }
    return inverse_log_survival(std::log(u));
}

bool operator==(const Baseline& lhs, const Baseline& rhs) {
    return lhs.kind() == rhs.kind() && lhs.params() == rhs.params();
}

std::string to_string(BaselineKind kind) {
    switch (kind) {
        case BaselineKind::Exponential:
            return "exponential";
        case BaselineKind::PowerBurr:
            return "power_burr";
    }
    return "unknown";
}

BaselineKind parse_baseline_kind(const std::string& name) {
    if (name == "exponential") return BaselineKind::Exponential;
    if (name == "power_burr") return BaselineKind::PowerBurr;
    throw ParameterError("unknown baseline kind '" + name + "' (expected exponential or power_burr)");
}

}  // namespace mixorder
