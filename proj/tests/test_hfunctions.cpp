#include <doctest.h>

#include <random>

#include "mixorder/errors.hpp"
#include "mixorder/hfunctions.hpp"
#include "oracles.hpp"

using namespace mixorder;
using oracle::real;

namespace {

real base_survival(const Baseline& b, double x) {
    const auto params = b.params();
    return b.kind() == BaselineKind::Exponential ? oracle::exp_survival(params[0], x)
                                                 : oracle::burr_survival(params[0], params[1], x);
}

real base_hazard(const Baseline& b, double x) {
    const auto params = b.params();
    if (b.kind() == BaselineKind::Exponential) return params[0];
    const real a = params[0];
    const real xa = std::pow(static_cast<real>(x), a);
    return params[1] * a * xa / (x * (1.0L + xa));
}

double fd_pa(Pair p, Pair alpha, double lambda, const Baseline& b, double x) {
    const real s = base_survival(b, x);
    return static_cast<double>(oracle::schur_combination(
        [&](real p1, real p2, real a1, real a2) { return oracle::mix_alpha({p1, p2}, {a1, a2}, lambda, s); },
        p[0], p[1], alpha[0], alpha[1]));
}

double fd_plambda(Pair p, Pair lambda, double alpha, const Baseline& b, double x) {
    const real s = base_survival(b, x);
    return static_cast<double>(oracle::schur_combination(
        [&](real p1, real p2, real l1, real l2) { return oracle::mix_lambda({p1, p2}, {l1, l2}, alpha, s); },
        p[0], p[1], lambda[0], lambda[1]));
}

double fd_hr(Pair p, Pair alpha, double lambda, const Baseline& b, double x) {
    const real s = base_survival(b, x);
    const real r = base_hazard(b, x);
    return static_cast<double>(oracle::schur_combination(
        [&](real p1, real p2, real a1, real a2) {
            return oracle::mix_alpha_excess_hazard({p1, p2}, {a1, a2}, lambda, s, r);
        },
        p[0], p[1], alpha[0], alpha[1]));
}

Baseline random_baseline(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.2, 3.0);
    return rng() % 2 ? Baseline::exponential(u(rng)) : Baseline::power_burr(u(rng), u(rng));
}

}  // namespace

TEST_CASE("symmetric parameters give zero") {
    const auto b = Baseline::exponential(1.0);
    CHECK(h_pa({0.5, 0.5}, {0.3, 0.3}, 0.4, b, 1.0) == 0.0);
    CHECK(h_plambda({0.5, 0.5}, {2.0, 2.0}, 0.4, b, 1.0) == 0.0);
    CHECK(h_hr({0.5, 0.5}, {0.3, 0.3}, 0.4, b, 1.0) == 0.0);
}

TEST_CASE("preconditions") {
    const auto b = Baseline::exponential(1.0);
    CHECK_THROWS_AS(h_hr({0.4, 0.6}, {0.3, 0.3}, 0.4, b, 1.0), PreconditionError);
    CHECK_NOTHROW(h_hr_general({0.4, 0.6}, {0.3, 0.3}, 0.4, b, 1.0));
    CHECK_THROWS_AS(h_pa({0.4, 0.6}, {0.3, 0.3}, 0.4, b, 0.0), DomainError);
    CHECK_THROWS_AS(h_pa({0.4, 0.6}, {0.3, -0.3}, 0.4, b, 1.0), ParameterError);
}

TEST_CASE("closed forms match finite differences of the defining combination") {
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::uniform_real_distribution<double> tilt(0.05, 3.0);
    std::uniform_real_distribution<double> power(0.1, 3.0);
    std::uniform_real_distribution<double> xs(0.05, 8.0);
    for (int i = 0; i < 100; ++i) {
        const Baseline b = random_baseline(rng);
        const double x = xs(rng);
        const double p1 = u(rng);
        const Pair p{p1, 1 - p1};

        const Pair alpha{tilt(rng), tilt(rng)};
        const double lambda = power(rng);
        CHECK(oracle::close_rel(h_pa(p, alpha, lambda, b, x), fd_pa(p, alpha, lambda, b, x), 1e-5));

        const Pair lambdas{power(rng), power(rng)};
        const double a = tilt(rng);
        CHECK(oracle::close_rel(h_plambda(p, lambdas, a, b, x), fd_plambda(p, lambdas, a, b, x), 1e-5));

        const double a1 = tilt(rng);
        const Pair balanced{a1, p[0] * a1 / p[1]};
        const double first_order = static_cast<double>(lambda * base_hazard(b, x) *
                                                       std::pow(base_survival(b, x), static_cast<real>(lambda)));
        CHECK(oracle::close_with_floor(h_hr(p, balanced, lambda, b, x), fd_hr(p, balanced, lambda, b, x), 1e-5,
                                       1e-12 * first_order));
        CHECK(oracle::close_with_floor(h_hr_general(p, alpha, lambda, b, x), fd_hr(p, alpha, lambda, b, x), 1e-5,
                                       1e-12 * first_order));
    }
}

TEST_CASE("signs on the worked examples") {
    const auto e02 = Baseline::exponential(0.2);
    CHECK(h_pa({0.6, 0.4}, {0.3, 0.4}, 0.1, e02, 1.0) < 0.0);

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> xs(0.01, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double x = xs(rng);
        CHECK(h_pa({0.6, 0.4}, {0.3, 0.4}, 0.1, e02, x) <= 0.0);
        CHECK(h_plambda({0.2, 0.8}, {0.5, 0.25}, 0.2, Baseline::exponential(2.0), x) >= 0.0);
        CHECK(h_hr({0.3, 0.7}, {0.7, 0.3}, 0.2, Baseline::exponential(3.0), x) >= -1e-15);
    }
}

TEST_CASE("K2 tilts give a nonpositive survival combination") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        double p1 = u(rng);
        double a1 = u(rng);
        double a2 = u(rng);
        if (p1 < 0.5) p1 = 1 - p1;
        if (a1 > a2) std::swap(a1, a2);
        const Baseline b = random_baseline(rng);
        const double x = 0.01 + 10 * u(rng);
        CHECK(h_pa({p1, 1 - p1}, {a1 + 1e-3, a2 + 1e-3}, 0.1 + 2 * u(rng), b, x) <= 1e-15);
    }
}

TEST_CASE("L2 rate powers under the power side condition give a nonpositive combination") {
    // p1 Fbar_l1 / (1 - abar S^l1) >= p2 Fbar_l2 / (1 - abar S^l2) at x, Fbar_l the component survival,
    // with (p, lambda) similarly ordered
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int i = 0; i < 20000 && checked < 200; ++i) {
        const double p1 = 0.05 + 0.9 * u(rng);
        const double l1 = 0.1 + 3 * u(rng);
        const double l2 = 0.1 + 3 * u(rng);
        const double alpha = 0.05 + 0.95 * u(rng);
        const double x = 0.01 + 5 * u(rng);
        const Baseline b = Baseline::exponential(0.2 + 2 * u(rng));
        const double p2 = 1 - p1;
        // labels are oriented with the larger weight first
        if (p1 < p2 || l1 < l2) continue;
        const real s = base_survival(b, x);
        const real s1 = std::pow(s, static_cast<real>(l1));
        const real s2 = std::pow(s, static_cast<real>(l2));
        const real m1 = 1 - (1 - alpha) * s1;
        const real m2 = 1 - (1 - alpha) * s2;
        if (p1 * alpha * s1 / (m1 * m1) < p2 * alpha * s2 / (m2 * m2)) continue;
        ++checked;
        CHECK(h_plambda({p1, p2}, {l1, l2}, alpha, b, x) <= 1e-15);
    }
    CHECK(checked == 200);
}

TEST_CASE("the four-term hazard expansion is not the same function") {
    const auto b = Baseline::exponential(3.0);
    const double exact = h_hr({0.3, 0.7}, {0.7, 0.3}, 0.2, b, 1.0);
    const double printed = h_hr_expanded_form({0.3, 0.7}, {0.7, 0.3}, 0.2, b, 1.0);
    CHECK(exact > 0.0);
    CHECK(printed > 0.0);
    CHECK_FALSE(oracle::close_rel(exact, printed, 1e-3));
}
