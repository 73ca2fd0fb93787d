#include <cmath>
#include <variant>

#include "doctest.h"

#include "leantree/asymptotics.hpp"
#include "leantree/series.hpp"

using namespace leantree;

namespace {

const double kSqrt5 = std::sqrt(5.0);

}  // namespace

TEST_CASE("dual numbers") {
    constexpr auto x = DualValue::variable(3.0);
    constexpr auto y = (x * x + DualValue::constant(1.0)) / x;
    static_assert(y.v == 10.0 / 3.0);
    CHECK(y.d == doctest::Approx(1.0 - 1.0 / 9.0));
}

TEST_CASE("S_k evaluation") {
    for (unsigned k = 1; k <= 20; ++k) {
        CHECK(std::get<double>(eval_sk(0.0, k)) == 1.0);
    }
    // 0.3819660113 lies just above z*_2 = 0.38196601125..., so the iteration
    // reports the crossing; just below it S_2 is tiny and positive.
    const auto above = eval_sk(0.3819660113, 2);
    REQUIRE(std::holds_alternative<BeyondRoot>(above));
    CHECK(std::get<BeyondRoot>(above).index == 2);
    const auto below = eval_sk(0.3819660112, 2);
    REQUIRE(std::holds_alternative<double>(below));
    CHECK(std::get<double>(below) > 0.0);
    CHECK(std::get<double>(below) < 1e-8);
    for (unsigned k = 1; k <= 50; ++k) {
        const auto at = eval_sk(1.0 / (2 * k), k);
        REQUIRE(std::holds_alternative<double>(at));
        CHECK(std::get<double>(at) > 0.0);
        CHECK(std::get<double>(at) <= std::pow(4.0 * k, -0.25));
    }
    const auto past = eval_sk(0.5, 3);
    REQUIRE(std::holds_alternative<BeyondRoot>(past));
    CHECK(std::get<BeyondRoot>(past).index == 2);
    CHECK_THROWS_AS(eval_sk(-0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(eval_sk(0.1, 0), std::invalid_argument);
    CHECK(below_root(0.38, 2));
    CHECK_FALSE(below_root(0.39, 2));
}

TEST_CASE("G_k evaluation agrees with its series and finite differences") {
    for (unsigned k = 1; k <= 8; ++k) {
        const double z = 0.5 * zstar_lower_bound(k);
        const auto g = gk_series(k, 60);
        double sum = 0.0;
        for (std::size_t n = 60; n-- > 0;) {
            sum = sum * z + g[n].get_d();
        }
        const auto d = eval_gk(z, k);
        CHECK(d.v == doctest::Approx(sum).epsilon(1e-9));
        const double h = 1e-6;
        const double fd = (eval_gk(z + h, k).v - eval_gk(z - h, k).v) / (2 * h);
        CHECK(std::abs(d.d - fd) <= 1e-5 * std::abs(fd));
    }
    CHECK_THROWS_AS(eval_gk(1.0, 2), std::domain_error);
}

TEST_CASE("analytic root bounds") {
    CHECK(zstar_lower_bound(1) == 1.0);
    CHECK(zstar_lower_bound(2) == doctest::Approx(2 - std::sqrt(3.0)));
    CHECK(zstar_upper_bound(2) == doctest::Approx(0.6166803).epsilon(1e-6));
}

TEST_CASE("root brackets") {
    const auto one = zstar(1);
    CHECK(one.lo <= 1.0);
    CHECK(one.hi >= 1.0);
    CHECK(one.width() <= 1e-11);
    const auto two = zstar(2);
    CHECK(std::abs(two.midpoint() - (3 - kSqrt5) / 2) < 1e-10);
    CHECK(below_root(two.lo, 2));
    CHECK_FALSE(below_root(two.hi, 2));
    const auto fifty = zstar(50);
    CHECK(fifty.lo >= 50 - std::sqrt(2499.0) - 1e-15);
    CHECK(fifty.hi <= 1 / (100 * (1 - std::pow(200.0, -0.25))));
    const auto loose = zstar(3, 1e-3);
    CHECK(loose.width() <= 1e-3);
    CHECK(loose.lo <= zstar(3).lo);
}

TEST_CASE("growth constants") {
    CHECK(alpha(2).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(alpha(3).value == doctest::Approx((3 + kSqrt5) / 2).epsilon(1e-9));
    CHECK(ck(2).value == doctest::Approx(1.0).epsilon(1e-9));
    const double z2 = (3 - kSqrt5) / 2;
    CHECK(ck(3).value == doctest::Approx(1 / (1 + 1 / ((1 - z2) * (1 - z2)))).epsilon(1e-9));
    const auto a = alpha(5);
    CHECK(a.lo <= a.value);
    CHECK(a.value <= a.hi);
    CHECK_THROWS(alpha(1));
    CHECK_THROWS(ck(1));
}

TEST_CASE("alpha bounds") {
    const auto b2 = alpha_bounds(2);
    CHECK(b2.lo == doctest::Approx(2 * (1 - 1 / std::sqrt(2.0))));
    CHECK(b2.hi == doctest::Approx(1.0));
    const auto a2 = alpha(2);
    CHECK(a2.lo <= b2.hi);
    CHECK(a2.hi >= b2.lo);
    const auto b3 = alpha_bounds(3);
    CHECK(b3.hi == doctest::Approx(1 / (2 - std::sqrt(3.0))));
    CHECK(b3.contains(alpha(3).value));
    CHECK(alpha_bounds(50).contains(alpha(50).value));
}

TEST_CASE("empirical residue at n = 60") {
    BigInt g = count_trees(60, 3);
    const double ratio = g.get_d() / std::pow(alpha(3).value, 60);
    CHECK(std::abs(ratio - ck(3).value) < 1e-4);
}
