#include <doctest.h>

#include <cmath>

#include "lightcone/error.hpp"
#include "lightcone/htransform.hpp"
#include "lightcone/specfun.hpp"

using namespace lightcone;

namespace {

HalfLineFunction exp_rate(double lam) {
  return {[lam](double y) { return std::exp(-lam * y); }, DecayHint::exponential(lam)};
}

}  // namespace

TEST_SUITE("htransform") {

TEST_CASE("e^{-y} is fixed") {
  const auto e = exp_rate(1.0);
  for (double x : {0.0, 0.01, 0.5, 3.0, 20.0}) {
    CHECK(std::abs(h_transform_point(e, x, 1e-11) - std::exp(-x)) < 1e-9);
  }
  CHECK_THROWS_AS(h_transform_point(e, -1.0, 1e-10), DomainError);
}

TEST_CASE("closed forms: e^{-lam y} and y e^{-y}") {
  // H(e^{-lam y}) = e^{-x/lam}/lam
  for (double lam : {0.5, 2.0}) {
    for (double x : {0.1, 1.0, 4.0}) {
      CHECK(h_transform_point(exp_rate(lam), x, 1e-12) ==
            doctest::Approx(std::exp(-x / lam) / lam).epsilon(1e-9));
    }
  }
  // H(y e^{-y}) = (1 - x) e^{-x}
  HalfLineFunction ye{[](double y) { return y * std::exp(-y); }, DecayHint::exponential(0.9)};
  for (double x : {0.2, 1.0, 2.5, 6.0}) {
    CHECK(std::abs(h_transform_point(ye, x, 1e-12) - (1.0 - x) * std::exp(-x)) < 1e-10);
  }
}

TEST_CASE("grid transform, default output hint and involution") {
  const auto grid = log_uniform_grid(1e-3, 60.0, 1024);
  HalfLineFunction f{[](double y) { return (1.0 - 0.5 * y) * std::exp(-0.8 * y); },
                     DecayHint::exponential(0.8)};
  const auto hf = h_transform(f, grid, GridKind::log_uniform);
  CHECK(hf.decay() == DecayHint::exponential(1.0 / 0.8));
  const auto fs = SampledFunction::from_function(f.f, grid, GridKind::log_uniform, f.decay);
  CHECK(hf.l2_norm() / fs.l2_norm() == doctest::Approx(1.0).epsilon(1e-7));
  TransformOptions to;
  to.output_decay = DecayHint::exponential(0.8);
  const auto hhf = h_transform(hf, grid, GridKind::log_uniform, to);
  CHECK(l2_distance(hhf, fs) / fs.l2_norm() < 1e-7);
  HalfLineFunction alg{[](double y) { return 1.0 / (1.0 + y * y); }, DecayHint::algebraic(2.0)};
  CHECK_THROWS(h_transform(alg, grid, GridKind::log_uniform));
}

TEST_CASE("Hankel order zero: sqrt(s) e^{-s^2/2} is fixed") {
  HalfLineFunction b{[](double s) { return std::sqrt(s) * std::exp(-0.5 * s * s); },
                     DecayHint::exponential(1.0)};
  for (double r : {0.1, 1.0, 2.5, 4.0}) {
    CHECK(std::abs(hankel0_transform_point(b, r, 1e-12) - b.f(r)) < 1e-9);
  }
}

TEST_CASE("Mellin transform of e^{-u} is Gamma(1 - s)") {
  const std::vector<double> tau{-2.0, -1.0, 0.0, 1.0, 2.0, 3.0};
  const auto m = mellin_transform(exp_rate(1.0), tau);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const Complex expect = specfun::gamma_complex({0.5, -tau[i]});
    CHECK(std::abs(m.values[i] - expect) < 1e-8);
  }
  // tau = 1 gives Gamma(1/2 - i)
  CHECK(m.values[3].real() == doctest::Approx(0.30069461726065581622).epsilon(1e-8));
  CHECK(m.values[3].imag() == doctest::Approx(0.42496787943312381261).epsilon(1e-8));
}

TEST_CASE("sampled Mellin transform and its range check") {
  const auto g = SampledFunction::from_function([](double y) { return std::exp(-y); },
                                                log_uniform_grid(1e-4, 50.0, 2048),
                                                GridKind::log_uniform, DecayHint::exponential(1.0));
  const std::vector<double> tau{0.5, 2.0};
  const auto m = mellin_transform(g, tau);
  CHECK(std::abs(m.values[0] - specfun::gamma_complex({0.5, -0.5})) < 1e-7);
  const auto short_g = SampledFunction::from_function([](double y) { return std::exp(-y); },
                                                      log_uniform_grid(1e-4, 5.0, 512),
                                                      GridKind::log_uniform,
                                                      DecayHint::exponential(1.0));
  CHECK_THROWS_AS(mellin_transform(short_g, tau), RangeError);
}

TEST_CASE("symmetric tau grid and inverse Mellin") {
  const auto tau = symmetric_tau_grid(40.0, 2049);
  CHECK(tau.front() == -40.0);
  CHECK(tau.back() == 40.0);
  for (std::size_t i = 0; i < tau.size(); ++i) CHECK(tau[i] == -tau[tau.size() - 1 - i]);
  const auto m = mellin_transform(exp_rate(1.0), tau);
  const auto back = inverse_mellin(m, log_uniform_grid(0.05, 10.0, 64), GridKind::log_uniform,
                                   DecayHint::exponential(1.0));
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(std::abs(back.values()[i] - std::exp(-back.grid()[i])) < 1e-6);
  }
}

TEST_CASE("Mellin path agrees with direct quadrature and the multiplier is chi") {
  const auto grid = log_uniform_grid(1e-3, 60.0, 2048);
  HalfLineFunction f{[](double y) { return (1.0 + y) * std::exp(-1.3 * y); }, DecayHint::exponential(1.3)};
  const auto fs = SampledFunction::from_function(f.f, grid, GridKind::log_uniform, f.decay);
  const auto direct = h_transform(f, grid, GridKind::log_uniform);
  MellinPathOptions mo;
  mo.output_decay = direct.decay();
  const auto mellin = h_via_mellin(fs, grid, GridKind::log_uniform, mo);
  CHECK(l2_distance(mellin, direct) / direct.l2_norm(false) < 1e-5);

  const std::vector<double> tau{-3.0, -1.0, 1.0, 3.0};
  const auto mult = empirical_multiplier(fs, direct, tau);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    CHECK(std::abs(mult.values[i] - specfun::chi_multiplier(tau[i])) < 1e-5);
    CHECK(std::abs(std::arg(mult.values[i]) - std::arg(specfun::scatter_S(tau[i]))) < 1e-5);
  }
}

}
