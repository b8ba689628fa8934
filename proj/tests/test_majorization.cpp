#include <doctest.h>

#include <numeric>
#include <random>

#include "mixorder/errors.hpp"
#include "mixorder/majorization.hpp"

using namespace mixorder;
using doctest::Approx;

namespace {

void check_matrix(const ParameterMatrix& m, const std::vector<double>& top, const std::vector<double>& bottom,
                  double tol = 1e-12) {
    REQUIRE(m.size() == top.size());
    for (std::size_t i = 0; i < top.size(); ++i) {
        CHECK(std::abs(m.top()[i] - top[i]) <= tol);
        CHECK(std::abs(m.bottom()[i] - bottom[i]) <= tol);
    }
}

const ParameterMatrix ex1_a({0.6, 0.4}, {0.3, 0.4});
const ParameterMatrix ex1_b({0.48, 0.52}, {0.36, 0.34});

std::vector<double> random_row(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.05, 5.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("matrix and transform validation") {
    CHECK_THROWS_AS(ParameterMatrix({1.0}, {1.0}), ShapeError);
    CHECK_THROWS_AS(ParameterMatrix({1.0, 2.0}, {1.0}), ShapeError);
    CHECK_THROWS_AS(ParameterMatrix({1.0, 0.0}, {1.0, 1.0}), ParameterError);
    CHECK_THROWS_AS(TTransform(1.5, {1, 0}), ParameterError);
    CHECK_THROWS_AS(TTransform(0.5, {0, 0}), ParameterError);
    CHECK_THROWS_AS(TTransform::swap(2, 0, 2, 0.5), ShapeError);
    CHECK_THROWS_AS(apply_t_transform(ex1_a, TTransform::swap(3, 0, 1, 0.5)), ShapeError);
}

TEST_CASE("vector majorization") {
    const std::vector<double> extreme{1.0, 0.0};
    const std::vector<double> mean{0.5, 0.5};
    CHECK(majorizes(extreme, mean));
    CHECK_FALSE(majorizes(mean, extreme));
    CHECK(majorizes(mean, mean));
    CHECK_THROWS_AS(majorizes(mean, std::vector<double>{1.0}), ShapeError);

    const std::vector<double> alpha{2, 2, 8, 8, 8};
    const std::vector<double> beta{3, 3, 6, 6, 6};
    CHECK_FALSE(weakly_supermajorizes(alpha, beta));
    CHECK_FALSE(weakly_supermajorizes(beta, alpha));
    CHECK(weakly_supermajorizes(alpha, alpha));
}

TEST_CASE("majorization properties on random vectors") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto a = random_row(rng, n);
        CHECK(majorizes(a, a));
        // a T is majorized by a for any T-transform
        const TTransform t(std::uniform_real_distribution<double>(0, 1)(rng), random_perm(rng, n));
        const auto b = t.apply(a);
        const TTransform t2(std::uniform_real_distribution<double>(0, 1)(rng), random_perm(rng, n));
        const auto c = t2.apply(b);
        CHECK(majorizes(a, b));
        CHECK(majorizes(b, c));
        CHECK(majorizes(a, c));
        CHECK(weakly_supermajorizes(a, b));
    }
}

TEST_CASE("T-transforms on the worked examples") {
    check_matrix(apply_t_transform(ex1_a, TTransform::swap(2, 0, 1, 0.4)), {0.48, 0.52}, {0.36, 0.34});
    CHECK(apply_t_transform(ex1_a, TTransform::swap(2, 0, 1, 1.0)) == ex1_a);
    check_matrix(apply_t_transform(ParameterMatrix({0.2, 0.8}, {0.5, 0.25}), TTransform::swap(2, 0, 1, 0.3)),
                 {0.62, 0.38}, {0.325, 0.425});
    check_matrix(apply_t_transform(ParameterMatrix({0.3, 0.7}, {0.7, 0.3}), TTransform::swap(2, 0, 1, 0.9)),
                 {0.34, 0.66}, {0.66, 0.34});

    CHECK(apply_chain(ex1_a, {}) == ex1_a);
    const Chain ex2{TTransform::swap(3, 1, 2, 0.4), TTransform::swap(3, 1, 2, 0.2)};
    check_matrix(apply_chain(ParameterMatrix({0.2, 0.3, 0.5}, {0.5, 0.3, 0.1}), ex2), {0.2, 0.388, 0.412},
                 {0.5, 0.212, 0.188});
    check_matrix(apply_chain(ParameterMatrix({0.5, 0.4, 0.1}, {3, 4, 5}), ex2), {0.5, 0.268, 0.232},
                 {3, 4.44, 4.56});

    const Chain ex3{TTransform::swap(3, 1, 2, 0.3), TTransform::swap(3, 0, 1, 0.4), TTransform::swap(3, 0, 2, 0.1)};
    const auto b3 = apply_chain(ParameterMatrix({0.1, 0.4, 0.5}, {0.7, 0.5, 0.3}), ex3);
    check_matrix(b3, {0.4192, 0.248, 0.3328}, {0.4456, 0.564, 0.4904});
    // the middle beta entry is printed as 0.568 with the other five entries matching
    CHECK(std::abs(b3.bottom()[1] - 0.568) > 1e-3);

    const auto mids = chain_intermediates(ParameterMatrix({0.1, 0.4, 0.5}, {0.7, 0.5, 0.3}), ex3);
    REQUIRE(mids.size() == 2);
    CHECK(mids[1] == apply_chain(ParameterMatrix({0.1, 0.4, 0.5}, {0.7, 0.5, 0.3}), {ex3[0], ex3[1]}));
}

TEST_CASE("chain witnesses and structure") {
    CHECK(verify_chain_witness(ex1_a, ex1_b, {TTransform::swap(2, 0, 1, 0.4)}));
    CHECK(verify_chain_witness(ex1_a, ex1_a, {}));
    CHECK_FALSE(verify_chain_witness(ex1_a, ex1_b, {TTransform::swap(2, 0, 1, 0.5)}));

    CHECK(same_structure({TTransform::swap(3, 1, 2, 0.4), TTransform::swap(3, 1, 2, 0.2)}));
    CHECK_FALSE(same_structure(
        {TTransform::swap(3, 1, 2, 0.3), TTransform::swap(3, 0, 1, 0.4), TTransform::swap(3, 0, 2, 0.1)}));
    CHECK(same_structure({TTransform::swap(3, 0, 2, 0.1)}));
    CHECK_THROWS_AS(same_structure({}), ParameterError);
}

TEST_CASE("K and L spaces") {
    CHECK(in_space(ex1_a, Space::K));
    CHECK_FALSE(in_space(ex1_a, Space::L));
    CHECK(in_space(ParameterMatrix({0.5, 0.4, 0.1}, {3, 4, 5}), Space::K));
    const ParameterMatrix flat({0.2, 0.3, 0.5}, {2, 2, 2});
    CHECK(in_space(flat, Space::K));
    CHECK(in_space(flat, Space::L));
}

TEST_CASE("row majorization") {
    CHECK(row_majorizes(ex1_a, ex1_b));
    CHECK(row_majorizes(ex1_a, ex1_a));
    const ParameterMatrix rows_swapped({0.36, 0.34}, {0.48, 0.52});
    CHECK_FALSE(row_majorizes(ex1_a, rows_swapped));
}

TEST_CASE("recovering a 2x2 transform") {
    const auto w1 = recover_t_transform_2x2(ex1_a, ex1_b);
    REQUIRE(w1);
    CHECK(w1->omega() == Approx(0.4).epsilon(1e-12));
    const auto w6 = recover_t_transform_2x2(ParameterMatrix({0.3, 0.7}, {0.7, 0.3}), ParameterMatrix({0.34, 0.66}, {0.66, 0.34}));
    REQUIRE(w6);
    CHECK(w6->omega() == Approx(0.9).epsilon(1e-12));
    const auto same = recover_t_transform_2x2(ex1_a, ex1_a);
    REQUIRE(same);
    CHECK(same->omega() == 1.0);
    CHECK_FALSE(recover_t_transform_2x2(ex1_a, ParameterMatrix({0.48, 0.52}, {0.2, 0.5})));
}

TEST_CASE("doubly stochastic action on random matrices") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> w(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const ParameterMatrix m(random_row(rng, n), random_row(rng, n));
        const auto perm = random_perm(rng, n);

        Chain shared;
        Chain mixed;
        for (int k = 0; k < 1 + trial % 3; ++k) {
            shared.emplace_back(w(rng), perm);
            mixed.emplace_back(w(rng), random_perm(rng, n));
        }
        const auto b = apply_chain(m, shared);
        CHECK(row_majorizes(m, b));
        CHECK(verify_chain_witness(m, b, shared));

        const auto c = apply_chain(m, mixed);
        CHECK(std::abs(sum(c.top()) - sum(m.top())) <= 1e-12);
        CHECK(std::abs(sum(c.bottom()) - sum(m.bottom())) <= 1e-12);
        // chain majorization implies row majorization for any chain
        CHECK(row_majorizes(m, c));

        const auto one = apply_t_transform(m, mixed.front());
        CHECK(std::abs(sum(one.top()) - sum(m.top())) <= 1e-14 * sum(m.top()));
    }
}
