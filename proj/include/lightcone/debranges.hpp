#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "lightcone/kleingordon.hpp"
#include "lightcone/parallel.hpp"
#include "lightcone/sampled.hpp"

namespace lightcone {

/// Cauchy data as callables on x > 0. F and G may be nonzero only on
/// [support_begin, support_end]; they are defined up to coverage_end.
struct CauchyPair {
  std::function<double(double)> F;
  std::function<double(double)> G;
  double support_begin = 0.0;
  double support_end = std::numeric_limits<double>::infinity();
  double coverage_end = std::numeric_limits<double>::infinity();
};

CauchyPair cauchy_pair(const CauchyData& data);
/// (F, G) -> (G, F).
CauchyPair swapped(const CauchyPair& pair);

struct ExpansionOptions {
  double tol = 1e-10;
  Execution execution = Execution::parallel;
  quad::BesselKernelOptions kernel;
};

/// F(x) = int_{x/2}^inf J0(sqrt(x (2v - x))) k(v) dv.
double expand_F_from_k(const HalfLineFunction& k, double x, const ExpansionOptions& options = {});
/// G(x) = k(x/2) - int_{x/2}^inf x J1(z)/z k(v) dv, z = sqrt(x (2v - x)).
double expand_G_from_k(const HalfLineFunction& k, double x, const ExpansionOptions& options = {});

/// F and G on a grid. Exponentially decaying k is first written as
/// (k - k(0+) e^{-v}) + k(0+) e^{-v}; the second part expands to k(0+) e^{-x}
/// in closed form.
CauchyData expand(const HalfLineFunction& k, std::vector<double> x_grid, GridKind kind,
                  DecayHint output_decay, const ExpansionOptions& options = {});

/// k(v) = G(2v) + (1/2) int_0^{2v} [J0(z) F(x) - x J1(z)/z G(x)] dx.
double reconstruct_k(const CauchyPair& fg, double v, double tol = 1e-10);
/// g(u): the same formula with F and G exchanged.
double reconstruct_g(const CauchyPair& fg, double u, double tol = 1e-10);

SampledFunction reconstruct_k(const CauchyPair& fg, std::vector<double> v_grid, GridKind kind,
                              DecayHint decay, const ExpansionOptions& options = {});
SampledFunction reconstruct_g(const CauchyPair& fg, std::vector<double> u_grid, GridKind kind,
                              DecayHint decay, const ExpansionOptions& options = {});

struct IsometryReport {
  double trace_side = 0.0;   // 2 int |k|^2
  double cauchy_side = 0.0;  // int (|F|^2 + |G|^2)
  double g_side = std::numeric_limits<double>::quiet_NaN();  // 2 int |g|^2 when given
  double defect = 0.0;       // |trace_side - cauchy_side|
};

IsometryReport isometry_defect(const SampledFunction& k, const CauchyData& fg);
IsometryReport isometry_defect(const SampledFunction& k, const CauchyData& fg,
                               const SampledFunction& g);

struct OriginalForms {
  SampledFunction f;
  SampledFunction g;
};

/// Change of variables h(x) = sqrt(x) k(x^2/2), f(y) = sqrt(y) F(y^2),
/// g(y) = sqrt(y) G(y^2) around expand. `trace_decay` is the decay of
/// k(v) = h(sqrt(2v)) (2v)^{-1/4}.
OriginalForms original_debranges_forms(const HalfLineFunction& h, DecayHint trace_decay,
                                       std::vector<double> y_grid, GridKind kind,
                                       DecayHint output_decay,
                                       const ExpansionOptions& options = {});
/// Inverse: h from (f, g) through reconstruct_k.
SampledFunction original_debranges_inverse(const std::function<double(double)>& f,
                                           const std::function<double(double)>& g,
                                           std::vector<double> x_grid, GridKind kind,
                                           DecayHint decay, const ExpansionOptions& options = {});

struct SupportCheckOptions {
  int samples = 32;
  double tol = 1e-12;
  /// Also expand the reconstructed k forward and report F, G on (0, 2a).
  bool reexpand = false;
  /// Decay of the reconstructed k used for the forward expansion.
  DecayHint trace_decay = DecayHint::algebraic(2.0);
  double reexpand_tol = 1e-8;
  Execution execution = Execution::parallel;
};

struct SupportReport {
  double max_g = 0.0;  // sup |g| on (0, a)
  double max_k = 0.0;  // sup |k| on (0, a)
  double max_F = std::numeric_limits<double>::quiet_NaN();  // sup |F| on (0, 2a) after re-expansion
  double max_G = std::numeric_limits<double>::quiet_NaN();
};

/// Samples the reconstructed traces on (0, a) and optionally the forward
/// expansion of the reconstructed k on (0, 2a).
SupportReport support_equivalence_check(const CauchyPair& fg, double a,
                                        const SupportCheckOptions& options = {});

}  // namespace lightcone
