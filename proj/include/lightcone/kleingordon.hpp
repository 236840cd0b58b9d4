#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "lightcone/parallel.hpp"
#include "lightcone/sampled.hpp"

namespace lightcone {

enum class Parity { even, none };

/// Spectral amplitude of a finite-energy solution
///   phi(t, x) = int e^{i (lambda u - v / lambda)} alpha(lambda) d lambda,
///   u = (x - t)/2, v = (x + t)/2,
/// sampled on a grid that stays out of (-lambda_min, lambda_min). Between
/// samples alpha is the local cubic within each sign branch; it is zero
/// outside the sampled range.
class WavePacket {
 public:
  WavePacket(std::vector<double> lambda_grid, std::vector<Complex> alpha,
             Parity parity = Parity::none);

  /// Samples alpha on `positive` (and on its mirror image for even parity).
  static WavePacket from_function(const std::function<Complex(double)>& alpha,
                                  const std::vector<double>& positive, Parity parity);

  const std::vector<double>& lambda_grid() const noexcept { return grid_; }
  const std::vector<Complex>& alpha() const noexcept { return alpha_; }
  Parity parity() const noexcept { return parity_; }
  double lambda_min() const noexcept { return lambda_min_; }

  Complex alpha_at(double lambda) const;

  /// Visits the nodes of a per-cell Gauss-Legendre rule for integrals against
  /// alpha: kernel(lambda, weight, alpha(lambda)). `phase_rate(lambda)` bounds
  /// |d phase / d lambda| of whatever oscillation the caller multiplies in and
  /// sets how finely each cell is subdivided.
  template <class Kernel, class Rate>
  void for_each_node(Kernel&& kernel, Rate&& phase_rate) const;

 private:
  struct Branch {
    std::size_t begin, end;  // [begin, end) indices in the grid
  };

  std::vector<double> grid_;
  std::vector<Complex> alpha_;
  Parity parity_;
  double lambda_min_;
  std::vector<Branch> branches_;

  Complex cell_alpha(const Branch& br, std::size_t cell, double lambda) const;
};

/// phi and its light-cone derivatives at one spacetime point.
struct PacketFields {
  Complex phi, phi_u, phi_v;
  Complex phi_x() const { return 0.5 * (phi_u + phi_v); }
  Complex phi_t() const { return 0.5 * (phi_v - phi_u); }
  /// The Dirac partner psi = -phi_v.
  Complex psi() const { return -phi_v; }
};

PacketFields packet_fields(const WavePacket& packet, double t, double x);
Complex synthesize_phi(const WavePacket& packet, double t, double x);

double packet_energy(const WavePacket& packet);
double packet_momentum(const WavePacket& packet);
/// int |alpha|^2 / lambda^2.
double packet_inverse_moment(const WavePacket& packet);

struct EnergyMomentum {
  double E = 0.0;
  double P = 0.0;
  double e_minus_p() const { return E - P; }
  double e_plus_p() const { return E + P; }
  double mass_squared() const { return E * E - P * P; }
};

EnergyMomentum packet_energy_momentum(const WavePacket& packet);

/// alpha -> Lambda alpha(Lambda lambda), Lambda = e^xi.
WavePacket lorentz_boost(const WavePacket& packet, double xi);
EnergyMomentum boost_energy_momentum(const EnergyMomentum& em, double xi);

/// Packet of psi: beta = alpha / (-i lambda), so that psi_u = -phi, phi_v = -psi.
/// Throws DomainError if the partner's energy is not finite at double precision
/// (lambda_min below 1e-6 or energy ratio above 1e12).
WavePacket dirac_partner(const WavePacket& packet);

struct DiracPair {
  WavePacket phi;
  WavePacket psi;
};
/// Spinor boost: phi_xi[u, v] = e^{-xi/2} phi[e^{-xi} u, e^{xi} v] and
/// psi_xi[u, v] = e^{xi/2} psi[e^{-xi} u, e^{xi} v].
DiracPair spinor_boost(const WavePacket& phi, double xi);

/// Cauchy data F = phi(0, x), G = psi(0, x) sampled on x > 0; the extension
/// says how they continue to x < 0.
enum class Extension { F_even_G_odd, F_odd_G_even, both_finite_energy };

struct CauchyData {
  SampledFunction F;
  SampledFunction G;
  Extension extension = Extension::F_even_G_odd;
};

/// Data on a line segment [lo, hi] for the propagator.
struct LineData {
  std::function<double(double)> phi0;
  std::function<double(double)> dphi_dt0;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

enum class Mirror { none, even, odd };

/// Line data from half-line samples, mirrored to x < 0 with the given parities.
LineData line_data(const SampledFunction& phi0, Mirror phi0_mirror,
                   const SampledFunction& dphi_dt0, Mirror dphi_mirror);

/// (1/2 pi) int (|phi|^2 + |phi_x|^2 + |phi_t|^2) dx from samples. With a
/// mirror, the samples cover x > 0 and the integral is doubled; phi_x uses
/// fourth-order finite differences.
double cauchy_energy(const SampledFunction& phi0, const SampledFunction& dphi_dt0,
                     Mirror mirror = Mirror::none);

/// Riemann's formula:
///   phi(t,x) = [phi0(x-t) + phi0(x+t)]/2
///            - (t/2) int J1(w)/w phi0(y) dy + (1/2) int J0(w) phi1(y) dy,
/// w = sqrt(t^2 - (x-y)^2), y over [x-t, x+t]. Negative t by time reversal.
/// Throws CoverageError when [x-|t|, x+|t|] leaves [lo, hi].
double riemann_propagate(const LineData& data, double t, double x, double tol = 1e-11);

/// Light-cone traces. g on u > 0 is phi(-u, u); k on v > 0 is psi(v, v) = -p';
/// p(v) = phi(v, v) is optional (integrated from k when absent).
struct ConeTraces {
  SampledFunction g;
  SampledFunction k;
  std::optional<SampledFunction> p;
};

ComplexSampledFunction trace_g(const WavePacket& packet, std::vector<double> u_grid, GridKind kind,
                               DecayHint decay, Execution execution = Execution::parallel);
ComplexSampledFunction trace_p(const WavePacket& packet, std::vector<double> v_grid, GridKind kind,
                               DecayHint decay, Execution execution = Execution::parallel);
ComplexSampledFunction trace_k(const WavePacket& packet, std::vector<double> v_grid, GridKind kind,
                               DecayHint decay, Execution execution = Execution::parallel);

/// p(v) = int_v^inf k, on the grid of k.
SampledFunction p_from_k(const SampledFunction& k);

/// E and P from light-cone traces of a PT-even solution (g even in u):
/// E = (1/2pi)[int_0^inf (|g|^2 + |g'|^2) du + int_0^inf (|p|^2 + |p'|^2) dv]
/// P = (1/2pi)[int_0^inf (-|g|^2 + |g'|^2) du + int_0^inf (|p|^2 - |p'|^2) dv]
EnergyMomentum cone_energy_momentum(const ConeTraces& traces);

struct TailEnergy {
  double value = 0.0;
  /// Size of the last spatial chunk added before stopping.
  double truncation = 0.0;
};

/// (1/2pi) int_{|x| > t} energy density at time t.
TailEnergy tail_energy(const WavePacket& packet, double t, double tol = 1e-10);

// ---------------------------------------------------------------------------

template <class Kernel, class Rate>
void WavePacket::for_each_node(Kernel&& kernel, Rate&& phase_rate) const {
  static const auto rule = quad::gauss_legendre(8);
  for (const auto& br : branches_) {
    for (std::size_t c = br.begin; c + 1 < br.end; ++c) {
      const double a = grid_[c];
      const double b = grid_[c + 1];
      const double rate = std::max(phase_rate(a), phase_rate(b));
      const int sub = 1 + static_cast<int>(rate * (b - a) / 1.5);
      const double h = (b - a) / sub;
      for (int s = 0; s < sub; ++s) {
        const double mid = a + (s + 0.5) * h;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
          const double lambda = mid + 0.5 * h * rule.nodes[k];
          kernel(lambda, 0.5 * h * rule.weights[k], cell_alpha(br, c, lambda));
        }
      }
    }
  }
}

}  // namespace lightcone
