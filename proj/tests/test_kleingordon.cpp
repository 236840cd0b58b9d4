#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lightcone/error.hpp"
#include "lightcone/htransform.hpp"
#include "lightcone/kleingordon.hpp"

using namespace lightcone;

namespace {

WavePacket gaussian(double centre = 2.0, double width = 0.35) {
  return WavePacket::from_function(
      [=](double l) { return Complex(std::exp(-0.5 * std::pow((l - centre) / width, 2))); },
      uniform_grid(0.05, centre + 12.0 * width, 1200), Parity::even);
}

template <class F>
Complex d2(F&& f, double h) {
  return (-f(2) + 16.0 * f(1) - 30.0 * f(0) + 16.0 * f(-1) - f(-2)) / (12.0 * h * h);
}

}  // namespace

TEST_SUITE("kleingordon") {

TEST_CASE("packet construction") {
  CHECK_THROWS_AS(WavePacket({-0.5, 0.0, 0.5, 1.0}, {1, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(WavePacket({-2.0, -1.0, 1.0, 2.0}, {1, 2, 1, 1}, Parity::even), DomainError);
  const auto p = gaussian();
  CHECK(p.lambda_min() == doctest::Approx(0.05));
  CHECK(p.lambda_grid().front() == doctest::Approx(-p.lambda_grid().back()));
  CHECK(std::abs(p.alpha_at(2.0) - 1.0) < 1e-8);  // between nodes: interpolated
  CHECK(p.alpha_at(100.0) == Complex(0.0));
}

TEST_CASE("energy and momentum of an indicator packet") {
  const auto ind = WavePacket::from_function([](double) { return Complex(1.0); },
                                             uniform_grid(1.0, 2.0, 11), Parity::none);
  CHECK(packet_energy(ind) == doctest::Approx(10.0 / 3.0).epsilon(1e-13));
  CHECK(packet_momentum(ind) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(packet_inverse_moment(ind) == doctest::Approx(0.5).epsilon(1e-13));
  const auto em = packet_energy_momentum(ind);
  CHECK(em.mass_squared() == doctest::Approx(em.e_minus_p() * em.e_plus_p()));
}

TEST_CASE("synthesized fields solve Klein-Gordon and Dirac") {
  const auto p = gaussian();
  const double t = 0.3, x = 1.1, h = 1e-2;
  const Complex ptt = d2([&](int k) { return synthesize_phi(p, t + k * h, x); }, h);
  const Complex pxx = d2([&](int k) { return synthesize_phi(p, t, x + k * h); }, h);
  CHECK(std::abs(ptt - pxx + synthesize_phi(p, t, x)) < 1e-6);

  // psi_u = -phi along the u direction (t -> t - d, x -> x + d moves u by d)
  const auto f = packet_fields(p, 0.2, 1.0);
  auto psi_at = [&](double d) { return packet_fields(p, 0.2 - d, 1.0 + d).psi(); };
  const Complex psi_u = (-psi_at(2 * h) + 8.0 * psi_at(h) - 8.0 * psi_at(-h) + psi_at(-2 * h)) / (12 * h);
  CHECK(std::abs(psi_u + f.phi) < 1e-6);
  CHECK(std::abs(f.phi_x() - 0.5 * (f.phi_u + f.phi_v)) == 0.0);
}

TEST_CASE("boosts") {
  const auto p = gaussian();
  const auto em = packet_energy_momentum(p);
  const auto b = lorentz_boost(p, 0.7);
  const auto eb = packet_energy_momentum(b);
  CHECK(eb.mass_squared() == doctest::Approx(em.mass_squared()).epsilon(1e-10));
  const auto predicted = boost_energy_momentum(em, 0.7);
  CHECK(eb.E == doctest::Approx(predicted.E).epsilon(1e-10));
  CHECK(eb.P == doctest::Approx(predicted.P).epsilon(1e-10));
  // phi_xi(t, x) = phi at the boosted point
  const double xi = 0.4, t = 0.3, x = 1.2;
  const double tb = std::cosh(xi) * t + std::sinh(xi) * x;
  const double xb = std::cosh(xi) * x + std::sinh(xi) * t;
  const auto pb = lorentz_boost(p, xi);
  CHECK(std::abs(synthesize_phi(pb, t, x) - synthesize_phi(p, tb, xb)) < 1e-8);
}

TEST_CASE("Dirac partner and spinor boost") {
  const auto p = gaussian();
  const auto partner = dirac_partner(p);
  const auto f = packet_fields(p, 0.4, 1.5);
  CHECK(std::abs(synthesize_phi(partner, 0.4, 1.5) - f.psi()) < 1e-10);
  const auto pair = spinor_boost(p, 0.3);
  const auto g = packet_fields(pair.phi, 0.4, 1.5);
  CHECK(std::abs(synthesize_phi(pair.psi, 0.4, 1.5) - g.psi()) < 1e-10);
  const auto tiny = WavePacket::from_function([](double) { return Complex(1.0); },
                                              uniform_grid(1e-8, 1.0, 50), Parity::none);
  CHECK_THROWS_AS(dirac_partner(tiny), DomainError);
}

TEST_CASE("Cauchy energy is conserved") {
  const auto p = gaussian();
  const double E = packet_energy(p);
  const auto xg = uniform_grid(-60.0, 60.0, 4001);
  for (double t : {0.0, 1.0}) {
    std::vector<double> p0(xg.size()), p1(xg.size());
    for (std::size_t i = 0; i < xg.size(); ++i) {
      const auto f = packet_fields(p, t, xg[i]);
      p0[i] = f.phi.real();
      p1[i] = f.phi_t().real();
    }
    const auto hint = DecayHint::exponential(1.0);
    const double e = cauchy_energy(SampledFunction(xg, p0, GridKind::uniform, hint),
                                   SampledFunction(xg, p1, GridKind::uniform, hint));
    CHECK(e == doctest::Approx(E).epsilon(1e-6));
  }
}

TEST_CASE("Riemann propagator") {
  LineData stat{[](double y) { return std::exp(-std::abs(y)); }, [](double) { return 0.0; }};
  CHECK(riemann_propagate(stat, 0.5, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
  CHECK(riemann_propagate(stat, -0.5, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
  // phi = sin(x) sin(sqrt 2 t)/sqrt 2 from phi0 = 0, phi1 = sin x
  LineData vel{[](double) { return 0.0; }, [](double y) { return std::sin(y); }};
  CHECK(riemann_propagate(vel, 0.9, 0.4) ==
        doctest::Approx(std::sin(0.4) * std::sin(std::sqrt(2.0) * 0.9) / std::sqrt(2.0)).epsilon(1e-9));
  // against the packet itself
  const auto p = gaussian();
  const auto xg = uniform_grid(-40.0, 40.0, 4001);
  std::vector<double> p0(xg.size()), p1(xg.size());
  for (std::size_t i = 0; i < xg.size(); ++i) {
    const auto f = packet_fields(p, 0.0, xg[i]);
    p0[i] = f.phi.real();
    p1[i] = f.phi_t().real();
  }
  const auto hint = DecayHint::exponential(1.0);
  const auto data = line_data(SampledFunction(xg, p0, GridKind::uniform, hint), Mirror::none,
                              SampledFunction(xg, p1, GridKind::uniform, hint), Mirror::none);
  CHECK(riemann_propagate(data, 1.5, 0.7, 1e-10) ==
        doctest::Approx(synthesize_phi(p, 1.5, 0.7).real()).epsilon(1e-5));
  LineData half{[](double y) { return y; }, [](double) { return 0.0; }, 0.0, 10.0};
  CHECK_THROWS_AS(riemann_propagate(half, 1.0, 0.5), CoverageError);
}

TEST_CASE("light-cone traces and cone energy") {
  const auto p = gaussian();
  const auto hint = DecayHint::exponential(1.0);
  const auto g = real_part(trace_g(p, log_uniform_grid(1e-3, 40.0, 2048), GridKind::log_uniform, hint));
  const auto k = real_part(trace_k(p, log_uniform_grid(1e-3, 150.0, 4096), GridKind::log_uniform, hint));
  CHECK(g(1.3) == doctest::Approx(synthesize_phi(p, -1.3, 1.3).real()).epsilon(1e-8));
  const double E = packet_energy(p);
  const auto cone = cone_energy_momentum({g, k, std::nullopt});
  CHECK(cone.E == doctest::Approx(E).epsilon(1e-6));
  CHECK(cone.P == doctest::Approx(packet_momentum(p)).epsilon(1e-5));
  // p(v) = phi(v, v) and k = -p'
  const auto pk = p_from_k(k);
  CHECK(pk(2.0) == doctest::Approx(synthesize_phi(p, 2.0, 2.0).real()).epsilon(1e-6));
  // k = H g
  CHECK(h_transform_point(g, 3.0, 1e-11) == doctest::Approx(k(3.0)).epsilon(1e-7));
}

TEST_CASE("p from k for k = e^{-v}") {
  const auto k = SampledFunction::from_function([](double v) { return std::exp(-v); },
                                                log_uniform_grid(1e-3, 30.0, 600),
                                                GridKind::log_uniform, DecayHint::exponential(1.0));
  const auto p = p_from_k(k);
  for (double v : {0.01, 1.0, 10.0}) CHECK(p(v) == doctest::Approx(std::exp(-v)).epsilon(1e-8));
}

TEST_CASE("tail energy decreases") {
  const auto p = gaussian();
  double previous = tail_energy(p, 0.0).value;
  CHECK(previous == doctest::Approx(packet_energy(p)).epsilon(1e-6));
  for (double t : {1.0, 3.0}) {
    const double e = tail_energy(p, t).value;
    CHECK(e <= previous + 1e-6);
    previous = e;
  }
}

}
