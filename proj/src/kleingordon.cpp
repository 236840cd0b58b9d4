#include "lightcone/kleingordon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lightcone/error.hpp"

namespace lightcone {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI(0.0, 1.0);

}  // namespace

WavePacket::WavePacket(std::vector<double> lambda_grid, std::vector<Complex> alpha, Parity parity)
    : grid_(std::move(lambda_grid)), alpha_(std::move(alpha)), parity_(parity) {
  if (grid_.size() != alpha_.size()) throw DomainError("wave packet: size mismatch");
  if (grid_.size() < 2) throw DomainError("wave packet: need at least 2 samples");
  lambda_min_ = std::numeric_limits<double>::infinity();
  double peak = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(grid_[i]) || grid_[i] == 0.0) {
      throw DomainError("wave packet: grid must be finite and avoid lambda = 0");
    }
    if (i > 0 && !(grid_[i] > grid_[i - 1])) {
      throw DomainError("wave packet: grid must be strictly increasing");
    }
    if (!std::isfinite(alpha_[i].real()) || !std::isfinite(alpha_[i].imag())) {
      throw DomainError("wave packet: non-finite amplitude");
    }
    lambda_min_ = std::min(lambda_min_, std::abs(grid_[i]));
    peak = std::max(peak, std::abs(alpha_[i]));
  }
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= grid_.size(); ++i) {
    if (i == grid_.size() || (grid_[i] > 0.0) != (grid_[i - 1] > 0.0)) {
      if (i - begin >= 2) branches_.push_back({begin, i});
      begin = i;
    }
  }
  if (parity_ == Parity::even) {
    const std::size_t n = grid_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = n - 1 - i;
      if (std::abs(grid_[i] + grid_[j]) > 1e-12 * std::abs(grid_[i]) ||
          std::abs(alpha_[i] - alpha_[j]) > 1e-12 * peak) {
        throw DomainError("wave packet: even parity needs a symmetric grid and alpha(-l) = alpha(l)");
      }
    }
  }
}

WavePacket WavePacket::from_function(const std::function<Complex(double)>& alpha,
                                     const std::vector<double>& positive, Parity parity) {
  std::vector<Complex> values(positive.size());
  for (std::size_t i = 0; i < positive.size(); ++i) values[i] = alpha(positive[i]);
  if (parity == Parity::none) return WavePacket(positive, std::move(values), parity);
  const std::size_t n = positive.size();
  std::vector<double> grid(2 * n);
  std::vector<Complex> a(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[n - 1 - i] = -positive[i];
    grid[n + i] = positive[i];
    a[n - 1 - i] = values[i];
    a[n + i] = values[i];
  }
  return WavePacket(std::move(grid), std::move(a), parity);
}

Complex WavePacket::cell_alpha(const Branch& br, std::size_t cell, double lambda) const {
  const std::size_t width = std::min<std::size_t>(4, br.end - br.begin);
  std::size_t s = cell > br.begin ? cell - 1 : br.begin;
  s = std::min(s, br.end - width);
  Complex sum{};
  for (std::size_t j = s; j < s + width; ++j) {
    double w = 1.0;
    for (std::size_t m = s; m < s + width; ++m) {
      if (m != j) w *= (lambda - grid_[m]) / (grid_[j] - grid_[m]);
    }
    sum += w * alpha_[j];
  }
  return sum;
}

Complex WavePacket::alpha_at(double lambda) const {
  for (const auto& br : branches_) {
    if (lambda >= grid_[br.begin] && lambda <= grid_[br.end - 1]) {
      auto it = std::upper_bound(grid_.begin() + br.begin, grid_.begin() + br.end, lambda);
      std::size_t c = static_cast<std::size_t>(it - grid_.begin());
      c = c == br.begin ? br.begin : c - 1;
      c = std::min(c, br.end - 2);
      return cell_alpha(br, c, lambda);
    }
  }
  return Complex{};
}

PacketFields packet_fields(const WavePacket& packet, double t, double x) {
  const double u = 0.5 * (x - t);
  const double v = 0.5 * (x + t);
  PacketFields out{};
  packet.for_each_node(
      [&](double lambda, double w, Complex a) {
        const Complex e = std::polar(w, lambda * u - v / lambda) * a;
        out.phi += e;
        out.phi_u += kI * lambda * e;
        out.phi_v += -kI / lambda * e;
      },
      [&](double lambda) { return std::abs(u) + std::abs(v) / (lambda * lambda); });
  return out;
}

Complex synthesize_phi(const WavePacket& packet, double t, double x) {
  return packet_fields(packet, t, x).phi;
}

EnergyMomentum packet_energy_momentum(const WavePacket& packet) {
  double e = 0.0, p = 0.0;
  packet.for_each_node(
      [&](double lambda, double w, Complex a) {
        const double m = w * std::norm(a);
        e += (1.0 + lambda * lambda) * m;
        p += (lambda * lambda - 1.0) * m;
      },
      [](double) { return 0.0; });
  return {e, p};
}

double packet_energy(const WavePacket& packet) { return packet_energy_momentum(packet).E; }
double packet_momentum(const WavePacket& packet) { return packet_energy_momentum(packet).P; }

double packet_inverse_moment(const WavePacket& packet) {
  double s = 0.0;
  packet.for_each_node([&](double lambda, double w, Complex a) { s += w * std::norm(a) / (lambda * lambda); },
                       [](double) { return 0.0; });
  return s;
}

WavePacket lorentz_boost(const WavePacket& packet, double xi) {
  if (!std::isfinite(xi)) throw DomainError("lorentz_boost: non-finite rapidity");
  const double scale = std::exp(xi);
  std::vector<double> grid(packet.lambda_grid());
  std::vector<Complex> alpha(packet.alpha());
  for (auto& l : grid) l /= scale;
  for (auto& a : alpha) a *= scale;
  return WavePacket(std::move(grid), std::move(alpha), packet.parity());
}

EnergyMomentum boost_energy_momentum(const EnergyMomentum& em, double xi) {
  const double c = std::cosh(xi), s = std::sinh(xi);
  return {c * em.E - s * em.P, -s * em.E + c * em.P};
}

WavePacket dirac_partner(const WavePacket& packet) {
  if (packet.lambda_min() < 1e-6) {
    throw DomainError("dirac_partner: lambda_min too small for a finite-energy partner");
  }
  std::vector<Complex> beta(packet.alpha().size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    beta[i] = kI * packet.alpha()[i] / packet.lambda_grid()[i];
  }
  WavePacket partner(packet.lambda_grid(), std::move(beta), Parity::none);
  const double e_phi = packet_energy(packet);
  const double e_psi = packet_energy(partner);
  if (!std::isfinite(e_psi) || e_psi > 1e12 * std::max(e_phi, 1e-300)) {
    throw DomainError("dirac_partner: partner energy is not finite at double precision");
  }
  return partner;
}

DiracPair spinor_boost(const WavePacket& phi, double xi) {
  if (!std::isfinite(xi)) throw DomainError("spinor_boost: non-finite rapidity");
  const double scale = std::exp(xi);
  std::vector<double> grid(phi.lambda_grid());
  std::vector<Complex> alpha(phi.alpha());
  for (auto& l : grid) l /= scale;
  for (auto& a : alpha) a *= std::exp(0.5 * xi);
  WavePacket boosted(std::move(grid), std::move(alpha), phi.parity());
  WavePacket partner = dirac_partner(boosted);
  return {std::move(boosted), std::move(partner)};
}

LineData line_data(const SampledFunction& phi0, Mirror phi0_mirror,
                   const SampledFunction& dphi_dt0, Mirror dphi_mirror) {
  auto wrap = [](const SampledFunction& s, Mirror m) -> std::function<double(double)> {
    return [s, m](double x) {
      if (m == Mirror::none || x >= 0.0) return s(x);
      const double v = s(-x);
      return m == Mirror::even ? v : -v;
    };
  };
  LineData d;
  d.phi0 = wrap(phi0, phi0_mirror);
  d.dphi_dt0 = wrap(dphi_dt0, dphi_mirror);
  const bool mirrored = phi0_mirror != Mirror::none && dphi_mirror != Mirror::none;
  d.lo = mirrored ? -std::min(phi0.back(), dphi_dt0.back())
                  : std::max(phi0.front(), dphi_dt0.front());
  d.hi = std::min(phi0.back(), dphi_dt0.back());
  return d;
}

double cauchy_energy(const SampledFunction& phi0, const SampledFunction& dphi_dt0, Mirror mirror) {
  const double sum = phi0.l2_norm_squared() + phi0.derivative().l2_norm_squared() +
                     dphi_dt0.l2_norm_squared();
  return (mirror == Mirror::none ? 1.0 : 2.0) * sum / kTwoPi;
}

double riemann_propagate(const LineData& data, double t, double x, double tol) {
  if (!std::isfinite(t) || !std::isfinite(x)) throw DomainError("riemann_propagate: non-finite point");
  if (t < 0.0) {
    LineData reversed = data;
    auto d = data.dphi_dt0;
    reversed.dphi_dt0 = [d](double y) { return -d(y); };
    return riemann_propagate(reversed, -t, x, tol);
  }
  if (x - t < data.lo || x + t > data.hi) {
    throw CoverageError("riemann_propagate: data do not cover [x - t, x + t]");
  }
  if (t == 0.0) return data.phi0(x);
  const double endpoint = 0.5 * (data.phi0(x - t) + data.phi0(x + t));
  auto w = [t, x](double y) {
    const double d = x - y;
    return std::sqrt(std::max(0.0, t * t - d * d));
  };
  auto first = quad::integrate(
      [&](double y) { return specfun::bessel_j1_over_x(w(y)) * data.phi0(y); }, x - t, x + t, tol);
  auto second = quad::integrate(
      [&](double y) { return specfun::bessel_j0(w(y)) * data.dphi_dt0(y); }, x - t, x + t, tol);
  return endpoint - 0.5 * t * first.value + 0.5 * second.value;
}

namespace {

template <class Point>
ComplexSampledFunction trace(std::vector<double> grid, GridKind kind, DecayHint decay, Execution execution, Point&& point) {
  std::vector<Complex> values(grid.size());
  for_each_index(grid.size(), execution, [&](std::size_t i) { values[i] = point(grid[i]); });
  return ComplexSampledFunction(std::move(grid), std::move(values), kind, decay);
}

}  // namespace

ComplexSampledFunction trace_g(const WavePacket& packet, std::vector<double> u_grid, GridKind kind,
                               DecayHint decay, Execution execution) {
  return trace(std::move(u_grid), kind, decay, execution,
               [&](double u) { return packet_fields(packet, -u, u).phi; });
}

ComplexSampledFunction trace_p(const WavePacket& packet, std::vector<double> v_grid, GridKind kind,
                               DecayHint decay, Execution execution) {
  return trace(std::move(v_grid), kind, decay, execution,
               [&](double v) { return packet_fields(packet, v, v).phi; });
}

ComplexSampledFunction trace_k(const WavePacket& packet, std::vector<double> v_grid, GridKind kind,
                               DecayHint decay, Execution execution) {
  return trace(std::move(v_grid), kind, decay, execution,
               [&](double v) { return packet_fields(packet, v, v).psi(); });
}

SampledFunction p_from_k(const SampledFunction& k) {
  const auto& grid = k.grid();
  const std::size_t n = grid.size();
  double tail = 0.0;
  const double last = k.values().back();
  switch (k.decay().kind()) {
    case DecayHint::Kind::exponential:
      tail = last / k.decay().rate();
      break;
    case DecayHint::Kind::algebraic:
      tail = last * grid.back() / (k.decay().power() - 1.0);
      break;
    case DecayHint::Kind::compact:
      tail = 0.0;
      break;
  }
  const auto rule = quad::gauss_legendre(6);
  std::vector<double> p(n);
  p[n - 1] = tail;
  for (std::size_t i = n - 1; i-- > 0;) {
    const double a = grid[i], b = grid[i + 1];
    double cell = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      cell += rule.weights[j] * k(0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[j]);
    }
    p[i] = p[i + 1] + 0.5 * (b - a) * cell;
  }
  return k.with_values(std::move(p));
}

EnergyMomentum cone_energy_momentum(const ConeTraces& traces) {
  const SampledFunction p = traces.p ? *traces.p : p_from_k(traces.k);
  const double g2 = traces.g.l2_norm_squared();
  const double dg2 = traces.g.derivative().l2_norm_squared();
  const double p2 = p.l2_norm_squared();
  const double k2 = traces.k.l2_norm_squared();
  return {(g2 + dg2 + p2 + k2) / kTwoPi, (-g2 + dg2 + p2 - k2) / kTwoPi};
}

TailEnergy tail_energy(const WavePacket& packet, double t, double tol) {
  if (!std::isfinite(t) || t < 0.0) throw DomainError("tail_energy: t must be >= 0");
  auto density = [&](double x) {
    const auto f = packet_fields(packet, t, x);
    return std::norm(f.phi) + std::norm(f.phi_x()) + std::norm(f.phi_t());
  };
  const double scale = packet_energy(packet);
  constexpr double kChunk = 5.0;
  constexpr int kMinChunks = 4;
  constexpr int kMaxChunks = 400;
  TailEnergy out;
  for (int side = 0; side < 2; ++side) {
    double total = 0.0;
    double last = 0.0;
    int quiet = 0;
    for (int c = 0; c < kMaxChunks; ++c) {
      const double a = t + c * kChunk;
      const double b = a + kChunk;
      const double piece = side == 0
                               ? quad::integrate(density, a, b, tol * kTwoPi / 4.0).value
                               : quad::integrate(density, -b, -a, tol * kTwoPi / 4.0).value;
      total += piece;
      last = piece;
      if (piece < 1e-3 * tol * kTwoPi * std::max(scale, 1e-300) + 1e-300) {
        ++quiet;
      } else {
        quiet = 0;
      }
      if (c + 1 >= kMinChunks && quiet >= 2) break;
      if (c + 1 == kMaxChunks) throw RangeError("tail_energy: density did not decay");
    }
    out.value += total / kTwoPi;
    out.truncation += last / kTwoPi;
  }
  return out;
}

}  // namespace lightcone
