#include <doctest.h>

#include <cmath>

#include "lightcone/error.hpp"
#include "lightcone/sampled.hpp"

using namespace lightcone;

TEST_SUITE("sampled") {

TEST_CASE("grids") {
  const auto u = uniform_grid(0.0, 1.0, 5);
  CHECK(u == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto g = log_uniform_grid(1e-2, 1e2, 5);
  CHECK(g.front() == 1e-2);
  CHECK(g.back() == 1e2);
  CHECK(g[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(log_uniform_grid(0.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 5), DomainError);
  CHECK(grid_kind_from_string("log") == GridKind::log_uniform);
  CHECK(to_string(GridKind::uniform) == "uniform");
  CHECK_THROWS_AS(grid_kind_from_string("chebyshev"), DomainError);
}

TEST_CASE("construction is validated") {
  const auto hint = DecayHint::exponential(1.0);
  CHECK_THROWS_AS(SampledFunction({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}, GridKind::uniform, hint),
                  DomainError);
  CHECK_THROWS_AS(SampledFunction({0.0, 2.0, 1.0, 3.0}, {1.0, 1.0, 1.0, 1.0}, GridKind::uniform, hint),
                  DomainError);
  CHECK_THROWS_AS(SampledFunction({0.0, 1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}, GridKind::uniform, hint),
                  DomainError);
  CHECK_THROWS_AS(SampledFunction({0.0, 1.0, 2.0, 3.0}, {1.0, 1.0, 1.0, 1.0}, GridKind::log_uniform, hint),
                  DomainError);
  CHECK_THROWS_AS(SampledFunction({0.0, 1.0, 2.0, 3.0}, {1.0, NAN, 1.0, 1.0}, GridKind::uniform, hint),
                  DomainError);
}

TEST_CASE("interpolation reproduces cubics") {
  auto p = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x * x; };
  const auto f = SampledFunction::from_function(p, uniform_grid(0.0, 3.0, 13), GridKind::uniform,
                                                DecayHint::exponential(1.0));
  for (double x : {0.01, 0.4, 1.33, 2.9}) CHECK(f(x) == doctest::Approx(p(x)).epsilon(1e-13));
  CHECK(f(0.0) == doctest::Approx(1.0));
}

TEST_CASE("log-grid interpolation and tails") {
  const auto hint = DecayHint::exponential(1.0);
  const auto f = SampledFunction::from_function([](double x) { return std::exp(-x); },
                                                log_uniform_grid(1e-3, 20.0, 400),
                                                GridKind::log_uniform, hint);
  for (double x : {2e-3, 0.37, 5.5, 19.0}) CHECK(f(x) == doctest::Approx(std::exp(-x)).epsilon(1e-7));
  CHECK(f(25.0) == doctest::Approx(std::exp(-25.0)).epsilon(1e-6));
  CHECK(f(1e-5) == doctest::Approx(std::exp(-1e-5)).epsilon(1e-6));
  const auto a = f.with_decay(DecayHint::algebraic(2.0));
  CHECK(a(40.0) == doctest::Approx(std::exp(-20.0) / 4.0).epsilon(1e-6));
  const auto c = f.with_decay(DecayHint::compact(20.0));
  CHECK(c(21.0) == 0.0);
}

TEST_CASE("L2 norms") {
  const auto f = SampledFunction::from_function([](double x) { return std::exp(-x); },
                                                log_uniform_grid(1e-3, 30.0, 800),
                                                GridKind::log_uniform, DecayHint::exponential(1.0));
  CHECK(f.l2_norm_squared() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(f.l2_norm() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  const auto g = f.with_values(std::vector<double>(f.size(), 0.0));
  CHECK(l2_distance(f, g) == doctest::Approx(f.l2_norm(false)).epsilon(1e-12));
  const auto alg = SampledFunction::from_function([](double x) { return 1.0 / (1.0 + x * x); },
                                                  uniform_grid(0.0, 50.0, 2001), GridKind::uniform,
                                                  DecayHint::algebraic(2.0));
  CHECK(alg.l2_norm_squared() == doctest::Approx(M_PI / 4.0).epsilon(1e-7));
}

TEST_CASE("derivatives") {
  const auto f = SampledFunction::from_function([](double x) { return std::sin(x); },
                                                uniform_grid(0.0, 6.0, 601), GridKind::uniform,
                                                DecayHint::compact(6.0));
  const auto d = f.derivative_samples();
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(d[i] - std::cos(f.grid()[i])));
  CHECK(worst < 1e-7);
  const auto lg = SampledFunction::from_function([](double x) { return std::exp(-x); },
                                                 log_uniform_grid(1e-3, 20.0, 1000),
                                                 GridKind::log_uniform, DecayHint::exponential(1.0));
  CHECK(lg.derivative()(1.0) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-7));
}

TEST_CASE("complex samples") {
  const auto z = ComplexSampledFunction::from_function(
      [](double x) { return Complex(std::cos(x), std::sin(x)); }, uniform_grid(0.0, 3.0, 301),
      GridKind::uniform, DecayHint::compact(3.0));
  CHECK(std::abs(z(1.234) - std::polar(1.0, 1.234)) < 1e-8);
  CHECK(real_part(z)(0.5) == doctest::Approx(std::cos(0.5)).epsilon(1e-8));
  CHECK(imag_part(z)(0.5) == doctest::Approx(std::sin(0.5)).epsilon(1e-8));
  CHECK(z.l2_norm_squared(false) == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("half-line wrapper") {
  const auto f = SampledFunction::from_function([](double x) { return x * x; },
                                                uniform_grid(0.0, 2.0, 9), GridKind::uniform,
                                                DecayHint::compact(2.0));
  const auto h = as_function(f);
  CHECK(h(1.5) == doctest::Approx(2.25));
  CHECK(h.decay == DecayHint::compact(2.0));
}

}
