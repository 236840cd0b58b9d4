#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lightcone/kleingordon.hpp"
#include "lightcone/parallel.hpp"

namespace lightcone {

/// Potentials of -Phi'' + V(zeta) Phi = gamma^2 Phi.
enum class PotentialKind { KG, A_minus, B_plus };

const char* to_string(PotentialKind kind);
PotentialKind potential_kind_from_string(const std::string& name);

/// KG: 4e^{2 zeta}; A_minus: 4e^{2 zeta} - 2e^zeta; B_plus: 4e^{2 zeta} + 2e^zeta.
double potential(PotentialKind kind, double zeta);

/// g_xi(u) = e^{xi/2} g(e^xi u), k_xi(v) = e^{-xi/2} k(e^{-xi} v); p follows k.
ConeTraces boost_flow(const ConeTraces& traces, double xi);

struct ABPair {
  Complex A;
  Complex B;
};

/// A = (1/2) e^{zeta/2} (e^{-xi/2} phi + e^{xi/2} psi),
/// B = (i/2) e^{zeta/2} (-e^{-xi/2} phi + e^{xi/2} psi).
ABPair ab_from_phi_psi(Complex phi, Complex psi, double xi, double zeta);

/// A and B of a packet solution at boost coordinates (xi, zeta):
/// x = eta cosh xi, t = eta sinh xi, eta = 2 e^zeta.
ABPair packet_ab(const WavePacket& packet, double xi, double zeta);

/// Residual of i dA/dxi = (d/dzeta - 2e^zeta) B and i dB/dxi = -(d/dzeta + 2e^zeta) A
/// by central differences of step h; the larger of the two moduli.
double ab_system_residual(const WavePacket& packet, double xi, double zeta, double h = 1e-3);

struct OdeSolution {
  std::vector<double> zeta;
  std::vector<double> values;
  std::vector<double> derivatives;
  double gamma = 0.0;
  PotentialKind potential = PotentialKind::KG;
  /// Some reference samples were set to zero because K underflowed.
  bool underflow = false;
};

/// Solution decaying at +infinity:
///   KG:      K_{i gamma}(2 e^zeta)
///   A_minus:  2 e^{zeta/2} Re K_s(2 e^zeta)
///   B_plus:  -2 e^{zeta/2} Im K_s(2 e^zeta),  s = 1/2 + i gamma.
OdeSolution reference_solution_K(double gamma, std::vector<double> zeta_grid,
                                 PotentialKind kind = PotentialKind::A_minus,
                                 Execution execution = Execution::parallel);

/// Value and zeta-derivative of the reference solution at one point.
std::pair<double, double> reference_value(double gamma, PotentialKind kind, double zeta);

/// |-Phi'' + (V - gamma^2) Phi| of the reference solution at zeta, with Phi''
/// from a five-point difference of step h.
double reference_residual(double gamma, PotentialKind kind, double zeta, double h = 0.01);

/// Classical RK4 for Phi'' = (V - gamma^2) Phi from (zeta_start, phi, dphi) to
/// zeta_end (either direction) with |step| <= h. Throws ResolutionError when
/// h > 0.1 / max(1, |gamma|).
OdeSolution integrate_schrodinger(double gamma, PotentialKind kind, double zeta_start,
                                  double zeta_end, double phi, double dphi, double h);

/// Step used when none is given: 0.1 / max(1, |gamma|, sqrt(V(zeta_max))) / 8,
/// so that the barrier region is resolved as well as the oscillation.
double default_step(double gamma, PotentialKind kind, double zeta_max);

/// Max over interior samples of |Phi'' - (V - gamma^2) Phi|, with Phi'' from a
/// five-point difference of the stored derivatives. Requires a uniform grid.
double max_residual(const OdeSolution& sol);

/// Phi_a Phi_b' - Phi_a' Phi_b along a common grid.
std::vector<double> wronskian(const OdeSolution& a, const OdeSolution& b);

/// Integral of |V| over (-inf, zeta0) divided by 2 gamma: the size of the
/// phase error from matching to free waves at zeta0.
double contamination_bias(PotentialKind kind, double gamma, double zeta0);

struct PhaseOptions {
  double zeta0 = -10.0;
  double max_bias = 1e-3;
};

/// Fits Phi = A cos(gamma zeta - theta) at the sample nearest zeta0:
/// theta = gamma zeta0 - atan2(-Phi'/gamma, Phi), in (-pi, pi]. Throws
/// ContaminationError when contamination_bias exceeds max_bias, DomainError
/// for gamma = 0.
double extract_phase_shift(const OdeSolution& sol, const PhaseOptions& options = {});

/// Phase expected from extract_phase_shift: arg Gamma(1/2 + i gamma), shifted
/// by pi/2 for B_plus (whose -2 theta is then arg(-S)); arg Gamma(i gamma) for KG.
double reference_phase(PotentialKind kind, double gamma);

struct PhaseRow {
  double gamma = 0.0;
  double theta_extracted = 0.0;
  double theta_reference = 0.0;
  double abs_error = 0.0;
  double bias_estimate = 0.0;
};

struct SweepOptions {
  PotentialKind kind = PotentialKind::A_minus;
  double zeta_seed = 2.0;
  PhaseOptions phase;
  /// Step; 0 selects default_step.
  double step = 0.0;
  Execution execution = Execution::parallel;
};

/// Seeds from the reference solution at zeta_seed, integrates down to zeta0 and
/// compares the extracted phase with the reference. abs_error is wrapped.
PhaseRow phase_shift_row(double gamma, const SweepOptions& options = {});
std::vector<PhaseRow> phase_sweep(const std::vector<double>& gammas, const SweepOptions& options = {});

}  // namespace lightcone
