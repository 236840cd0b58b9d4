#include "lightcone/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lightcone/error.hpp"
#include "lightcone/specfun.hpp"

namespace lightcone {
namespace {

DecayHint scale_hint(const DecayHint& hint, double grid_factor) {
  switch (hint.kind()) {
    case DecayHint::Kind::exponential:
      return DecayHint::exponential(hint.rate() / grid_factor);
    case DecayHint::Kind::compact:
      return DecayHint::compact(hint.support_end() * grid_factor);
    case DecayHint::Kind::algebraic:
      break;
  }
  return hint;
}

// f(x) -> amp * f(x / grid_factor)
template <class T>
BasicSampledFunction<T> rescale(const BasicSampledFunction<T>& f, double grid_factor, double amp) {
  std::vector<double> grid = f.grid();
  for (auto& x : grid) x *= grid_factor;
  std::vector<T> values = f.values();
  for (auto& y : values) y *= amp;
  return BasicSampledFunction<T>(std::move(grid), std::move(values), f.kind(),
                                 scale_hint(f.decay(), grid_factor));
}

}  // namespace

const char* to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::KG: return "KG";
    case PotentialKind::A_minus: return "A_minus";
    case PotentialKind::B_plus: return "B_plus";
  }
  return "?";
}

PotentialKind potential_kind_from_string(const std::string& name) {
  if (name == "KG" || name == "kg") return PotentialKind::KG;
  if (name == "A_minus" || name == "a_minus" || name == "A") return PotentialKind::A_minus;
  if (name == "B_plus" || name == "b_plus" || name == "B") return PotentialKind::B_plus;
  throw DomainError("unknown potential: " + name);
}

double potential(PotentialKind kind, double zeta) {
  const double e = std::exp(zeta);
  switch (kind) {
    case PotentialKind::KG: return 4.0 * e * e;
    case PotentialKind::A_minus: return 4.0 * e * e - 2.0 * e;
    case PotentialKind::B_plus: return 4.0 * e * e + 2.0 * e;
  }
  return 0.0;
}

ConeTraces boost_flow(const ConeTraces& traces, double xi) {
  if (!std::isfinite(xi)) throw DomainError("boost_flow: xi must be finite");
  const double L = std::exp(xi);
  ConeTraces out{rescale(traces.g, 1.0 / L, std::sqrt(L)), rescale(traces.k, L, 1.0 / std::sqrt(L)),
                 std::nullopt};
  if (traces.p) out.p = rescale(*traces.p, L, std::sqrt(L));
  return out;
}

ABPair ab_from_phi_psi(Complex phi, Complex psi, double xi, double zeta) {
  const double s = std::exp(0.5 * zeta);
  const double em = std::exp(-0.5 * xi);
  const double ep = std::exp(0.5 * xi);
  const Complex i(0.0, 1.0);
  return {0.5 * s * (em * phi + ep * psi), 0.5 * i * s * (-em * phi + ep * psi)};
}

ABPair packet_ab(const WavePacket& packet, double xi, double zeta) {
  const double eta = 2.0 * std::exp(zeta);
  const auto f = packet_fields(packet, eta * std::sinh(xi), eta * std::cosh(xi));
  return ab_from_phi_psi(f.phi, f.psi(), xi, zeta);
}

double ab_system_residual(const WavePacket& packet, double xi, double zeta, double h) {
  const Complex i(0.0, 1.0);
  const auto xp = packet_ab(packet, xi + h, zeta);
  const auto xm = packet_ab(packet, xi - h, zeta);
  const auto zp = packet_ab(packet, xi, zeta + h);
  const auto zm = packet_ab(packet, xi, zeta - h);
  const auto c = packet_ab(packet, xi, zeta);
  const double w = 2.0 * std::exp(zeta);
  const Complex dA_xi = (xp.A - xm.A) / (2.0 * h);
  const Complex dB_xi = (xp.B - xm.B) / (2.0 * h);
  const Complex dA_z = (zp.A - zm.A) / (2.0 * h);
  const Complex dB_z = (zp.B - zm.B) / (2.0 * h);
  const double r1 = std::abs(i * dA_xi - (dB_z - w * c.B));
  const double r2 = std::abs(i * dB_xi + (dA_z + w * c.A));
  return std::max(r1, r2);
}

std::pair<double, double> reference_value(double gamma, PotentialKind kind, double zeta) {
  if (!std::isfinite(gamma) || !std::isfinite(zeta)) {
    throw DomainError("reference_value: arguments must be finite");
  }
  const double z = 2.0 * std::exp(zeta);
  if (kind == PotentialKind::KG) {
    const Complex order(0.0, gamma);
    const double k = specfun::bessel_k(order, z).value.real();
    const double dk = specfun::bessel_k_derivative(order, z).value.real();
    return {k, z * dk};
  }
  const Complex order(0.5, gamma);
  const Complex k = specfun::bessel_k(order, z).value;
  const Complex dk = specfun::bessel_k_derivative(order, z).value;
  const double s = std::exp(0.5 * zeta);
  const Complex value = 2.0 * s * k;
  const Complex deriv = s * k + 2.0 * s * z * dk;
  if (kind == PotentialKind::A_minus) return {value.real(), deriv.real()};
  return {-value.imag(), -deriv.imag()};
}

OdeSolution reference_solution_K(double gamma, std::vector<double> zeta_grid, PotentialKind kind,
                                 Execution execution) {
  OdeSolution sol;
  sol.gamma = gamma;
  sol.potential = kind;
  sol.values.resize(zeta_grid.size());
  sol.derivatives.resize(zeta_grid.size());
  for_each_index(zeta_grid.size(), execution, [&](std::size_t i) {
    const auto [v, d] = reference_value(gamma, kind, zeta_grid[i]);
    sol.values[i] = v;
    sol.derivatives[i] = d;
  });
  for (double zeta : zeta_grid) {
    if (2.0 * std::exp(zeta) >= 745.0) sol.underflow = true;
  }
  sol.zeta = std::move(zeta_grid);
  return sol;
}

double reference_residual(double gamma, PotentialKind kind, double zeta, double h) {
  const double f0 = reference_value(gamma, kind, zeta).first;
  const double fp1 = reference_value(gamma, kind, zeta + h).first;
  const double fm1 = reference_value(gamma, kind, zeta - h).first;
  const double fp2 = reference_value(gamma, kind, zeta + 2.0 * h).first;
  const double fm2 = reference_value(gamma, kind, zeta - 2.0 * h).first;
  const double d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  return std::abs(-d2 + (potential(kind, zeta) - gamma * gamma) * f0);
}

double default_step(double gamma, PotentialKind kind, double zeta_max) {
  const double barrier = std::sqrt(std::max(0.0, potential(kind, zeta_max)));
  return 0.1 / std::max({1.0, std::abs(gamma), barrier}) / 8.0;
}

OdeSolution integrate_schrodinger(double gamma, PotentialKind kind, double zeta_start,
                                  double zeta_end, double phi, double dphi, double h) {
  if (!(h > 0.0) || !std::isfinite(zeta_start) || !std::isfinite(zeta_end)) {
    throw DomainError("integrate_schrodinger: need finite endpoints and h > 0");
  }
  if (h > 0.1 / std::max(1.0, std::abs(gamma)) * (1.0 + 1e-12)) {
    throw ResolutionError("integrate_schrodinger: step does not resolve the oscillation");
  }
  const double span = zeta_end - zeta_start;
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(std::abs(span) / h)));
  const double step = span / static_cast<double>(n);
  const double g2 = gamma * gamma;
  auto accel = [&](double z, double y) { return (potential(kind, z) - g2) * y; };

  OdeSolution sol;
  sol.gamma = gamma;
  sol.potential = kind;
  sol.zeta.reserve(n + 1);
  sol.values.reserve(n + 1);
  sol.derivatives.reserve(n + 1);
  double y = phi, dy = dphi;
  sol.zeta.push_back(zeta_start);
  sol.values.push_back(y);
  sol.derivatives.push_back(dy);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = zeta_start + step * static_cast<double>(i);
    const double k1y = dy, k1d = accel(z, y);
    const double k2y = dy + 0.5 * step * k1d, k2d = accel(z + 0.5 * step, y + 0.5 * step * k1y);
    const double k3y = dy + 0.5 * step * k2d, k3d = accel(z + 0.5 * step, y + 0.5 * step * k2y);
    const double k4y = dy + step * k3d, k4d = accel(z + step, y + step * k3y);
    y += step / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    dy += step / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    sol.zeta.push_back(i + 1 == n ? zeta_end : zeta_start + step * static_cast<double>(i + 1));
    sol.values.push_back(y);
    sol.derivatives.push_back(dy);
  }
  return sol;
}

double max_residual(const OdeSolution& sol) {
  const std::size_t n = sol.zeta.size();
  if (n < 5) throw DomainError("max_residual: need at least 5 samples");
  const double h = (sol.zeta.back() - sol.zeta.front()) / static_cast<double>(n - 1);
  const double g2 = sol.gamma * sol.gamma;
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const auto& d = sol.derivatives;
    const double d2 = (-d[i + 2] + 8.0 * d[i + 1] - 8.0 * d[i - 1] + d[i - 2]) / (12.0 * h);
    worst = std::max(worst,
                     std::abs(d2 - (potential(sol.potential, sol.zeta[i]) - g2) * sol.values[i]));
  }
  return worst;
}

std::vector<double> wronskian(const OdeSolution& a, const OdeSolution& b) {
  if (a.zeta.size() != b.zeta.size()) throw DomainError("wronskian: grids differ");
  std::vector<double> w(a.zeta.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (a.zeta[i] != b.zeta[i]) throw DomainError("wronskian: grids differ");
    w[i] = a.values[i] * b.derivatives[i] - a.derivatives[i] * b.values[i];
  }
  return w;
}

double contamination_bias(PotentialKind kind, double gamma, double zeta0) {
  const double e = std::exp(zeta0);
  const double area = 2.0 * e * e + (kind == PotentialKind::KG ? 0.0 : 2.0 * e);
  return area / (2.0 * std::abs(gamma));
}

double extract_phase_shift(const OdeSolution& sol, const PhaseOptions& options) {
  if (sol.gamma == 0.0) throw DomainError("extract_phase_shift: gamma must be nonzero");
  if (sol.zeta.empty()) throw DomainError("extract_phase_shift: empty solution");
  std::size_t best = 0;
  for (std::size_t i = 1; i < sol.zeta.size(); ++i) {
    if (std::abs(sol.zeta[i] - options.zeta0) < std::abs(sol.zeta[best] - options.zeta0)) best = i;
  }
  const double z0 = sol.zeta[best];
  const double bias = contamination_bias(sol.potential, sol.gamma, z0);
  if (bias > options.max_bias) {
    throw ContaminationError("extract_phase_shift: potential not negligible at the matching point",
                             bias);
  }
  const double g = sol.gamma;
  return specfun::wrap_angle(g * z0 - std::atan2(-sol.derivatives[best] / g, sol.values[best]));
}

double reference_phase(PotentialKind kind, double gamma) {
  if (kind == PotentialKind::KG) {
    return specfun::wrap_angle(specfun::log_gamma(Complex(0.0, gamma)).imag());
  }
  const double base = specfun::arg_gamma_half(gamma);
  return kind == PotentialKind::B_plus ? specfun::wrap_angle(base + 0.5 * std::numbers::pi) : base;
}

PhaseRow phase_shift_row(double gamma, const SweepOptions& options) {
  const auto [phi, dphi] = reference_value(gamma, options.kind, options.zeta_seed);
  const double h = options.step > 0.0 ? options.step
                                      : default_step(gamma, options.kind, options.zeta_seed);
  const auto sol = integrate_schrodinger(gamma, options.kind, options.zeta_seed,
                                         options.phase.zeta0, phi, dphi, h);
  PhaseRow row;
  row.gamma = gamma;
  row.theta_extracted = extract_phase_shift(sol, options.phase);
  row.theta_reference = reference_phase(options.kind, gamma);
  row.abs_error = std::abs(specfun::wrap_angle(row.theta_extracted - row.theta_reference));
  row.bias_estimate = contamination_bias(options.kind, gamma, options.phase.zeta0);
  return row;
}

std::vector<PhaseRow> phase_sweep(const std::vector<double>& gammas, const SweepOptions& options) {
  std::vector<PhaseRow> rows(gammas.size());
  for_each_index(gammas.size(), options.execution,
                 [&](std::size_t i) { rows[i] = phase_shift_row(gammas[i], options); });
  return rows;
}

}  // namespace lightcone
