#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lightcone/error.hpp"
#include "lightcone/quad.hpp"
#include "lightcone/specfun.hpp"

using namespace lightcone;

TEST_SUITE("quad") {

TEST_CASE("decay hints") {
  CHECK(DecayHint::exponential(2.0).rate() == 2.0);
  CHECK(DecayHint::algebraic(1.5).power() == 1.5);
  CHECK(DecayHint::compact(4.0).support_end() == 4.0);
  CHECK_THROWS_AS(DecayHint::exponential(0.0), DomainError);
  CHECK_THROWS_AS(DecayHint::algebraic(1.0), DomainError);
  CHECK_THROWS_AS(DecayHint::exponential(1.0).power(), DomainError);
  CHECK(DecayHint::exponential(1.0) == DecayHint::exponential(1.0));
  CHECK_FALSE(DecayHint::exponential(1.0) == DecayHint::algebraic(2.0));
}

TEST_CASE("finite intervals") {
  auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.error_estimate <= 1e-13);
  r = quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  r = quad::integrate([](double x) { return std::log(x); }, 0.0, 1.0, 1e-10);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-9));
  auto c = quad::integrate([](double x) { return Complex(std::cos(x), std::sin(x)); }, 0.0, 1.0, 1e-13);
  CHECK(std::abs(c.value - Complex(std::sin(1.0), 1.0 - std::cos(1.0))) < 1e-13);
  CHECK(quad::integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-10).value == 0.0);
  CHECK_THROWS_AS(quad::integrate([](double x) { return x; }, 1.0, 0.0, 1e-10), DomainError);
  CHECK_THROWS_AS(quad::integrate([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("accuracy failure reports the best estimate") {
  try {
    quad::integrate([](double x) { return std::sin(1.0 / x) / x; }, 1e-9, 1.0, 1e-14, 20);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_estimate() > 1e-14);
  }
}

TEST_CASE("semi-infinite with hints") {
  auto r = quad::integrate_semi_infinite([](double y) { return std::exp(-2.0 * y); }, 0.0, 1e-12,
                                         DecayHint::exponential(2.0));
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-11));
  r = quad::integrate_semi_infinite([](double y) { return 1.0 / (1.0 + y * y * y); }, 0.0, 1e-6,
                                    DecayHint::algebraic(3.0));
  CHECK(r.value == doctest::Approx(2.0 * std::numbers::pi / (3.0 * std::sqrt(3.0))).epsilon(1e-6));
  r = quad::integrate_semi_infinite([](double y) { return y < 1.0 ? 1.0 - y : 0.0; }, 0.0, 1e-12,
                                    DecayHint::compact(1.0));
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(quad::integrate_semi_infinite([](double y) { return std::exp(-0.1 * y); }, 0.0,
                                                1e-10, DecayHint::compact(1.0)),
                  HintError);
}

TEST_CASE("Bessel-kernel integrals") {
  // int_0^inf e^{-y} J0(y) dy = 1/sqrt(2)
  auto r = quad::integrate_bessel_kernel([](double y) { return std::exp(-y); }, BesselKernel::j0,
                                         [](double y) { return y; }, 0.0, 1e-12,
                                         DecayHint::exponential(1.0));
  CHECK(r.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-11));
  // int_0^inf y J0(y) / (1 + y^2) dy = K0(1), algebraic tail through Wynn
  r = quad::integrate_bessel_kernel([](double y) { return y / (1.0 + y * y); }, BesselKernel::j0,
                                    [](double y) { return y; }, 0.0, 1e-9,
                                    DecayHint::algebraic(1.5));
  CHECK(r.value == doctest::Approx(0.42102443824070833334).epsilon(1e-8));
  // int_0^inf J1(y)/y * y e^{-y} dy = int J1 e^{-y} = 1 - 1/sqrt(2)
  r = quad::integrate_bessel_kernel([](double y) { return y * std::exp(-y); }, BesselKernel::j1_ratio,
                                    [](double y) { return y; }, 0.0, 1e-12,
                                    DecayHint::exponential(1.0));
  CHECK(r.value == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-11));
  // J0(2 sqrt(x y)) against e^{-y}: the H transform of e^{-y} at x = 3
  const double x = 3.0;
  r = quad::integrate_bessel_kernel([](double y) { return std::exp(-y); }, BesselKernel::j0,
                                    [x](double y) { return 2.0 * std::sqrt(x * y); }, 0.0, 1e-12,
                                    DecayHint::exponential(1.0));
  CHECK(r.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-10));
}

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {1, 2, 6, 16, 64}) {
    const auto rule = quad::gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double w = 0.0, m4 = 0.0;
    for (int i = 0; i < n; ++i) {
      w += rule.weights[i];
      m4 += rule.weights[i] * std::pow(rule.nodes[i], 4);
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    if (n >= 3) CHECK(m4 == doctest::Approx(0.4).epsilon(1e-14));
  }
  CHECK_THROWS_AS(quad::gauss_legendre(0), DomainError);
}

TEST_CASE("Wynn epsilon accelerates an alternating series") {
  std::vector<double> sums;
  double s = 0.0;
  for (int k = 0; k < 20; ++k) {
    s += (k % 2 ? -1.0 : 1.0) / (k + 1);
    sums.push_back(s);
  }
  const auto w = quad::detail::wynn_epsilon(sums);
  CHECK(w.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

}
