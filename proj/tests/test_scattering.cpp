#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lightcone/error.hpp"
#include "lightcone/htransform.hpp"
#include "lightcone/scattering.hpp"
#include "lightcone/specfun.hpp"

using namespace lightcone;

TEST_SUITE("scattering") {

TEST_CASE("potentials") {
  CHECK(potential(PotentialKind::KG, 0.0) == 4.0);
  CHECK(potential(PotentialKind::A_minus, 0.0) == 2.0);
  CHECK(potential(PotentialKind::B_plus, std::log(2.0)) == doctest::Approx(20.0));
  CHECK(potential_kind_from_string("B_plus") == PotentialKind::B_plus);
  CHECK_THROWS_AS(potential_kind_from_string("C"), DomainError);
}

TEST_CASE("boost flow") {
  const auto hint = DecayHint::exponential(1.0);
  auto g_fn = [](double u) { return u * std::exp(-u); };
  auto k_fn = [](double v) { return (1.0 - v) * std::exp(-v); };
  const ConeTraces tr{
      SampledFunction::from_function(g_fn, log_uniform_grid(1e-4, 50.0, 1500), GridKind::log_uniform, hint),
      SampledFunction::from_function(k_fn, log_uniform_grid(1e-4, 50.0, 1500), GridKind::log_uniform, hint),
      std::nullopt};
  const auto same = boost_flow(tr, 0.0);
  CHECK(same.g.grid() == tr.g.grid());
  CHECK(same.k.values() == tr.k.values());
  const auto b = boost_flow(tr, 1.3);
  CHECK(b.g.l2_norm() == doctest::Approx(tr.g.l2_norm()).epsilon(1e-8));
  CHECK(b.k.l2_norm() == doctest::Approx(tr.k.l2_norm()).epsilon(1e-8));
  CHECK(b.g(0.2) == doctest::Approx(std::exp(0.65) * g_fn(std::exp(1.3) * 0.2)).epsilon(1e-8));
  // intertwining: H(g_xi) = k_xi
  for (double x : {0.3, 1.0, 5.0}) {
    CHECK(std::abs(h_transform_point(b.g, x, 1e-11) - b.k(x)) < 1e-5);
  }
}

TEST_CASE("A and B from phi and psi") {
  auto ab = ab_from_phi_psi(0.0, 0.0, 0.3, 0.1);
  CHECK(ab.A == Complex(0.0));
  CHECK(ab.B == Complex(0.0));
  ab = ab_from_phi_psi(1.0, 1.0, 0.0, 0.0);
  CHECK(ab.A == Complex(1.0));
  CHECK(std::abs(ab.B) == 0.0);
  const auto packet = WavePacket::from_function(
      [](double l) { return Complex(std::exp(-0.5 * std::pow((l - 2.0) / 0.35, 2))); },
      uniform_grid(0.05, 6.2, 1200), Parity::even);
  for (double xi : {-0.5, 0.4}) {
    for (double zeta : {-1.0, 0.3}) CHECK(ab_system_residual(packet, xi, zeta) < 1e-4);
  }
}

TEST_CASE("reference solutions") {
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(-8.0 + 0.25 * i);
  const auto sol = reference_solution_K(1.0, grid);
  CHECK_FALSE(sol.underflow);
  for (double z : grid) CHECK(reference_residual(1.0, PotentialKind::A_minus, z) < 1e-6);
  for (double z : {1.5, 2.0, 3.0}) {
    CHECK(std::abs(reference_value(1.0, PotentialKind::A_minus, z).first) < std::exp(-std::exp(z)));
  }
  const auto neg = reference_solution_K(-1.0, grid, PotentialKind::KG);
  const auto pos = reference_solution_K(1.0, grid, PotentialKind::KG);
  CHECK(neg.values == pos.values);
  CHECK(reference_solution_K(1.0, {6.0}).underflow);
}

TEST_CASE("RK4 integration") {
  const auto free = integrate_schrodinger(0.0, PotentialKind::KG, -20.0, -9.0, 1.0, 0.0, 0.01);
  CHECK(free.values.back() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(integrate_schrodinger(2.0, PotentialKind::KG, 0.0, 1.0, 1.0, 0.0, 0.06),
                  ResolutionError);

  const double h = default_step(1.0, PotentialKind::A_minus, 2.0);
  const auto [phi, dphi] = reference_value(1.0, PotentialKind::A_minus, 2.0);
  const auto sol = integrate_schrodinger(1.0, PotentialKind::A_minus, 2.0, -10.0, phi, dphi, h);
  CHECK(sol.zeta.back() == -10.0);
  std::size_t i5 = 0;
  for (std::size_t i = 0; i < sol.zeta.size(); ++i) {
    if (std::abs(sol.zeta[i] + 5.0) < std::abs(sol.zeta[i5] + 5.0)) i5 = i;
  }
  const double ref = reference_value(1.0, PotentialKind::A_minus, sol.zeta[i5]).first;
  CHECK(sol.values[i5] == doctest::Approx(ref).epsilon(1e-5));
  CHECK(max_residual(sol) < 1e-7);

  const auto a = integrate_schrodinger(1.5, PotentialKind::B_plus, -10.0, 1.0, 1.0, 0.0, 0.005);
  const auto b = integrate_schrodinger(1.5, PotentialKind::B_plus, -10.0, 1.0, 0.0, 1.0, 0.005);
  for (double w : wronskian(a, b)) CHECK(w == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("phase shifts") {
  SweepOptions so;
  const auto row = phase_shift_row(1.0, so);
  CHECK(row.abs_error < 1e-3);
  CHECK(row.theta_reference == doctest::Approx(specfun::arg_gamma_half(1.0)));
  const auto half = phase_shift_row(0.5, so);
  CHECK(std::abs(specfun::wrap_angle(-2.0 * half.theta_extracted -
                                     std::arg(specfun::scatter_S(0.5)))) < 1e-3);
  so.kind = PotentialKind::B_plus;
  const auto b = phase_shift_row(1.0, so);
  CHECK(std::abs(specfun::wrap_angle(-2.0 * b.theta_extracted -
                                     std::arg(-specfun::scatter_S(1.0)))) < 1e-3);
  so.kind = PotentialKind::KG;
  CHECK(phase_shift_row(2.0, so).abs_error < 1e-6);

  so.kind = PotentialKind::A_minus;
  so.phase.zeta0 = -2.0;
  try {
    phase_shift_row(1.0, so);
    FAIL("expected ContaminationError");
  } catch (const ContaminationError& e) {
    CHECK(e.estimated_bias() == doctest::Approx(contamination_bias(PotentialKind::A_minus, 1.0, -2.0)));
  }
  const auto rows = phase_sweep({0.5, 1.0, 2.0, 4.0});
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) CHECK(r.abs_error < 1e-3);
}

}
