#include <doctest.h>

#include <cmath>
#include <random>

#include "mixorder/baseline.hpp"
#include "mixorder/errors.hpp"
#include "mixorder/mphr.hpp"
#include "oracles.hpp"

using namespace mixorder;
using doctest::Approx;

TEST_CASE("baseline construction") {
    CHECK(Baseline::exponential(0.2).survival(5.0) == Approx(std::exp(-1.0)).epsilon(1e-15));
    const Baseline burr = Baseline::power_burr(0.2, 0.5);
    CHECK(burr.survival(3.0) == Approx(std::pow(1.0 + std::pow(3.0, 0.2), -0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(Baseline::exponential(0.0), ParameterError);
    CHECK_THROWS_AS(Baseline::power_burr(1.0, -1.0), ParameterError);
    const std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(Baseline::make(BaselineKind::Exponential, two), ParameterError);
    CHECK(parse_baseline_kind(to_string(BaselineKind::PowerBurr)) == BaselineKind::PowerBurr);
    CHECK_THROWS_AS(parse_baseline_kind("weibull"), ParameterError);
}

TEST_CASE("baseline point values") {
    const auto e1 = Baseline::exponential(1.0).eval(0.0);
    CHECK(e1.survival == 1.0);
    CHECK(e1.hazard == 1.0);

    const auto b = Baseline::power_burr(1.0, 1.0).eval(1.0);
    CHECK(b.survival == Approx(0.5).epsilon(1e-15));
    CHECK(b.density == Approx(0.25).epsilon(1e-15));
    CHECK(b.hazard == Approx(0.5).epsilon(1e-15));

    // a b x^(a-1) (1+x^a)^-(b+1)
    const double x = 2.5;
    const double a = 0.7;
    const double bb = 1.3;
    CHECK(Baseline::power_burr(a, bb).density(x) ==
          Approx(a * bb * std::pow(x, a - 1) * std::pow(1 + std::pow(x, a), -(bb + 1))).epsilon(1e-14));

    CHECK(Baseline::exponential(0.3).hazard(17.0) == Approx(0.3).epsilon(1e-15));
    CHECK_THROWS_AS(Baseline::exponential(1.0).survival(-1.0), DomainError);
}

TEST_CASE("baseline inverse survival") {
    CHECK(Baseline::exponential(1.0).inverse_survival(1.0) == 0.0);
    CHECK(Baseline::exponential(0.2).inverse_survival(std::exp(-1.0)) == Approx(5.0).epsilon(1e-14));
    CHECK(Baseline::power_burr(1.0, 1.0).inverse_survival(0.5) == Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(Baseline::exponential(1.0).inverse_survival(0.0), DomainError);
    CHECK_THROWS_AS(Baseline::exponential(1.0).inverse_survival(1.5), DomainError);

    for (const Baseline& d : {Baseline::exponential(0.7), Baseline::power_burr(0.2, 0.5), Baseline::power_burr(3, 2)}) {
        for (int k = 1; k <= 99; ++k) {
            const double u = k / 100.0;
            CHECK(std::abs(d.survival(d.inverse_survival(u)) - u) <= 1e-10);
        }
    }
}

TEST_CASE("baseline properties on random draws") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> par(0.1, 4.0);
    std::uniform_real_distribution<double> xs(0.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const Baseline d = (i % 2) ? Baseline::exponential(par(rng)) : Baseline::power_burr(par(rng), par(rng));
        const double x = xs(rng);
        const auto pt = d.eval(x);
        if (pt.survival > 0.0) {
            CHECK(oracle::close_rel(pt.hazard, pt.density / pt.survival, 1e-12));
        }
        CHECK(pt.density >= 0.0);
    }
    const Baseline d = Baseline::power_burr(0.5, 2.0);
    double prev = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double s = d.survival(k * 0.25);
        CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("far tail stays finite in log form") {
    const Baseline d = Baseline::exponential(3.0);
    CHECK(d.survival(1e4) == 0.0);
    CHECK(d.log_survival(1e4) == Approx(-3e4));
    CHECK(d.hazard(1e4) == 3.0);
}

TEST_CASE("mphr worked values") {
    const Baseline e1 = Baseline::exponential(1.0);
    CHECK(mphr_survival(MphrParams(1.0, 2.0), e1, 1.0) == Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(mphr_survival(MphrParams(0.5, 1.0), e1, std::log(2.0)) == Approx(1.0 / 3.0).epsilon(1e-15));
    const double s = std::exp(-0.02);
    CHECK(mphr_survival(MphrParams(0.3, 0.1), Baseline::exponential(0.2), 1.0) ==
          Approx(0.3 * s / (1 - 0.7 * s)).epsilon(1e-15));

    CHECK(mphr_density(MphrParams(1.0, 1.0), e1, 0.8) == Approx(e1.density(0.8)).epsilon(1e-15));
    CHECK(mphr_density(MphrParams(1.0, 2.0), e1, 1.0) == Approx(2 * std::exp(-2.0)).epsilon(1e-15));
    CHECK(mphr_density(MphrParams(0.5, 1.0), e1, std::log(2.0)) == Approx(4.0 / 9.0).epsilon(1e-15));

    CHECK(mphr_hazard(MphrParams(1.0, 3.0), Baseline::exponential(2.0), 0.37) == Approx(6.0).epsilon(1e-15));
    CHECK(mphr_hazard(MphrParams(0.5, 1.0), e1, std::log(2.0)) == Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(mphr_hazard(MphrParams(2.0, 1.0), e1, 0.0) == Approx(0.5).epsilon(1e-15));

    CHECK(mphr_inverse_survival(MphrParams(0.3, 0.4), e1, 1.0) == 0.0);
    CHECK(mphr_inverse_survival(MphrParams(0.5, 1.0), e1, 1.0 / 3.0) == Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(mphr_inverse_survival(MphrParams(1.0, 2.0), e1, std::exp(-2.0)) == Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(mphr_inverse_survival(MphrParams(1.0, 2.0), e1, 0.0), DomainError);
}

TEST_CASE("mphr parameters are validated") {
    CHECK_THROWS_AS(MphrParams(0.0, 1.0), ParameterError);
    CHECK_THROWS_AS(MphrParams(1.0, -2.0), ParameterError);
    CHECK_THROWS_AS(MphrParams(std::nan(""), 1.0), ParameterError);
    CHECK(MphrParams(3.0, 1.0).alpha_bar() == -2.0);
}

TEST_CASE("mphr reductions and identities") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> par(0.1, 3.0);
    std::uniform_real_distribution<double> xs(0.01, 10.0);
    for (int i = 0; i < 200; ++i) {
        const Baseline d = (i % 2) ? Baseline::exponential(par(rng)) : Baseline::power_burr(par(rng), par(rng));
        const double x = xs(rng);
        const double lambda = par(rng);
        const double alpha = par(rng);
        const double s = d.survival(x);

        CHECK(oracle::close_rel(mphr_survival(MphrParams(1.0, lambda), d, x), std::pow(s, lambda), 1e-14));
        CHECK(oracle::close_rel(mphr_survival(MphrParams(alpha, 1.0), d, x), alpha * s / (1 - (1 - alpha) * s),
                                1e-14));

        const MphrParams p(alpha, lambda);
        const double h = 1e-5 * std::max(1.0, x);
        const double fd = -(mphr_survival(p, d, x + h) - mphr_survival(p, d, x - h)) / (2 * h);
        CHECK(oracle::close_rel(fd, mphr_density(p, d, x), 1e-6));
        CHECK(oracle::close_rel(mphr_hazard(p, d, x), mphr_density(p, d, x) / mphr_survival(p, d, x), 1e-12));

        for (double u : {0.01, 0.3, 0.77, 0.999}) {
            CHECK(std::abs(mphr_survival(p, d, mphr_inverse_survival(p, d, u)) - u) <= 1e-10);
        }
    }
}
