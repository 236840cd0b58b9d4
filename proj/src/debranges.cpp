#include "lightcone/debranges.hpp"

#include <algorithm>
#include <cmath>

#include "lightcone/error.hpp"
#include "lightcone/quad.hpp"
#include "lightcone/specfun.hpp"

namespace lightcone {
namespace {

auto cone_phase(double x) {
  return [x](double v) { return std::sqrt(std::max(0.0, x * (2.0 * v - x))); };
}

void require_positive(double x, const char* who) {
  if (!std::isfinite(x) || !(x > 0.0)) throw DomainError(std::string(who) + ": argument must be > 0");
}

}  // namespace

CauchyPair cauchy_pair(const CauchyData& data) {
  CauchyPair p;
  const SampledFunction F = data.F;
  const SampledFunction G = data.G;
  p.F = [F](double x) { return F(x); };
  p.G = [G](double x) { return G(x); };
  p.coverage_end = std::min(F.back(), G.back());
  return p;
}

CauchyPair swapped(const CauchyPair& pair) {
  CauchyPair s = pair;
  std::swap(s.F, s.G);
  return s;
}

double expand_F_from_k(const HalfLineFunction& k, double x, const ExpansionOptions& options) {
  require_positive(x, "expand_F_from_k");
  return quad::integrate_bessel_kernel(k.f, BesselKernel::j0, cone_phase(x), 0.5 * x, options.tol,
                                       k.decay, options.kernel)
      .value;
}

double expand_G_from_k(const HalfLineFunction& k, double x, const ExpansionOptions& options) {
  require_positive(x, "expand_G_from_k");
  auto weighted = [&](double v) { return x * k.f(v); };
  const auto r = quad::integrate_bessel_kernel(weighted, BesselKernel::j1_ratio, cone_phase(x),
                                               0.5 * x, options.tol, k.decay, options.kernel);
  return k.f(0.5 * x) - r.value;
}

CauchyData expand(const HalfLineFunction& k, std::vector<double> x_grid, GridKind kind,
                  DecayHint output_decay, const ExpansionOptions& options) {
  if (x_grid.empty() || !(x_grid.front() > 0.0)) throw DomainError("expand: grid must be positive");
  HalfLineFunction reduced = k;
  double boundary = 0.0;
  if (k.decay.kind() == DecayHint::Kind::exponential) {
    boundary = k.f(1e-12);
    const auto f = k.f;
    reduced.f = [f, boundary](double v) { return f(v) - boundary * std::exp(-v); };
    reduced.decay = DecayHint::exponential(std::min(k.decay.rate(), 1.0));
  }
  std::vector<double> F(x_grid.size()), G(x_grid.size());
  for_each_index(x_grid.size(), options.execution, [&](std::size_t i) {
    const double x = x_grid[i];
    const double closed = boundary * std::exp(-x);
    F[i] = expand_F_from_k(reduced, x, options) + closed;
    G[i] = expand_G_from_k(reduced, x, options) + closed;
  });
  SampledFunction Fs(x_grid, std::move(F), kind, output_decay);
  SampledFunction Gs(std::move(x_grid), std::move(G), kind, output_decay);
  return CauchyData{std::move(Fs), std::move(Gs), Extension::F_even_G_odd};
}

double reconstruct_k(const CauchyPair& fg, double v, double tol) {
  require_positive(v, "reconstruct_k");
  const double top = 2.0 * v;
  if (top > fg.coverage_end * (1.0 + 1e-12)) {
    throw CoverageError("reconstruct: Cauchy data do not cover (0, 2v]");
  }
  const double lo = std::max(0.0, fg.support_begin);
  const double hi = std::min(top, fg.support_end);
  double integral = 0.0;
  if (hi > lo) {
    auto integrand = [&](double x) {
      const double z = std::sqrt(std::max(0.0, x * (top - x)));
      return specfun::bessel_j0(z) * fg.F(x) - x * specfun::bessel_j1_over_x(z) * fg.G(x);
    };
    integral = quad::integrate(integrand, lo, hi, tol, 20000).value;
  }
  const double endpoint = (top >= fg.support_begin && top <= fg.support_end) ? fg.G(top) : 0.0;
  return endpoint + 0.5 * integral;
}

double reconstruct_g(const CauchyPair& fg, double u, double tol) {
  return reconstruct_k(swapped(fg), u, tol);
}

SampledFunction reconstruct_k(const CauchyPair& fg, std::vector<double> v_grid, GridKind kind,
                              DecayHint decay, const ExpansionOptions& options) {
  std::vector<double> values(v_grid.size());
  for_each_index(v_grid.size(), options.execution,
                 [&](std::size_t i) { values[i] = reconstruct_k(fg, v_grid[i], options.tol); });
  return SampledFunction(std::move(v_grid), std::move(values), kind, decay);
}

SampledFunction reconstruct_g(const CauchyPair& fg, std::vector<double> u_grid, GridKind kind,
                              DecayHint decay, const ExpansionOptions& options) {
  return reconstruct_k(swapped(fg), std::move(u_grid), kind, decay, options);
}

IsometryReport isometry_defect(const SampledFunction& k, const CauchyData& fg) {
  IsometryReport r;
  r.trace_side = 2.0 * k.l2_norm_squared();
  r.cauchy_side = fg.F.l2_norm_squared() + fg.G.l2_norm_squared();
  r.defect = std::abs(r.trace_side - r.cauchy_side);
  return r;
}

IsometryReport isometry_defect(const SampledFunction& k, const CauchyData& fg,
                               const SampledFunction& g) {
  IsometryReport r = isometry_defect(k, fg);
  r.g_side = 2.0 * g.l2_norm_squared();
  return r;
}

OriginalForms original_debranges_forms(const HalfLineFunction& h, DecayHint trace_decay,
                                       std::vector<double> y_grid, GridKind kind,
                                       DecayHint output_decay, const ExpansionOptions& options) {
  if (y_grid.empty() || !(y_grid.front() > 0.0)) {
    throw DomainError("original_debranges_forms: grid must be positive");
  }
  const auto hf = h.f;
  HalfLineFunction k{[hf](double v) {
                       if (v <= 0.0) v = 1e-300;
                       const double s = std::sqrt(2.0 * v);
                       return hf(s) / std::sqrt(s);
                     },
                     trace_decay};
  std::vector<double> x_grid(y_grid.size());
  for (std::size_t i = 0; i < y_grid.size(); ++i) x_grid[i] = y_grid[i] * y_grid[i];
  const auto FG = expand(k, std::move(x_grid), kind, output_decay, options);
  std::vector<double> f(y_grid.size()), g(y_grid.size());
  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    const double root = std::sqrt(y_grid[i]);
    f[i] = root * FG.F.values()[i];
    g[i] = root * FG.G.values()[i];
  }
  SampledFunction fs(y_grid, std::move(f), kind, output_decay);
  SampledFunction gs(std::move(y_grid), std::move(g), kind, output_decay);
  return {std::move(fs), std::move(gs)};
}

SampledFunction original_debranges_inverse(const std::function<double(double)>& f,
                                           const std::function<double(double)>& g,
                                           std::vector<double> x_grid, GridKind kind,
                                           DecayHint decay, const ExpansionOptions& options) {
  CauchyPair fg;
  fg.F = [f](double x) { return x > 0.0 ? f(std::sqrt(x)) / std::sqrt(std::sqrt(x)) : 0.0; };
  fg.G = [g](double x) { return x > 0.0 ? g(std::sqrt(x)) / std::sqrt(std::sqrt(x)) : 0.0; };
  std::vector<double> values(x_grid.size());
  for_each_index(x_grid.size(), options.execution, [&](std::size_t i) {
    const double x = x_grid[i];
    values[i] = std::sqrt(x) * reconstruct_k(fg, 0.5 * x * x, options.tol);
  });
  return SampledFunction(std::move(x_grid), std::move(values), kind, decay);
}

SupportReport support_equivalence_check(const CauchyPair& fg, double a,
                                        const SupportCheckOptions& options) {
  require_positive(a, "support_equivalence_check");
  if (options.samples < 1) throw DomainError("support_equivalence_check: need samples >= 1");
  const std::size_t n = static_cast<std::size_t>(options.samples);
  std::vector<double> gv(n), kv(n);
  for_each_index(n, options.execution, [&](std::size_t i) {
    const double v = a * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    gv[i] = std::abs(reconstruct_g(fg, v, options.tol));
    kv[i] = std::abs(reconstruct_k(fg, v, options.tol));
  });
  SupportReport report;
  report.max_g = *std::max_element(gv.begin(), gv.end());
  report.max_k = *std::max_element(kv.begin(), kv.end());
  if (!options.reexpand) return report;

  const double inner_tol = options.tol;
  HalfLineFunction k{[fg, inner_tol](double v) { return reconstruct_k(fg, v, inner_tol); },
                     options.trace_decay};
  ExpansionOptions eo;
  eo.tol = options.reexpand_tol;
  eo.execution = Execution::serial;
  std::vector<double> Fv(n), Gv(n);
  for_each_index(n, options.execution, [&](std::size_t i) {
    const double x = 2.0 * a * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    Fv[i] = std::abs(expand_F_from_k(k, x, eo));
    Gv[i] = std::abs(expand_G_from_k(k, x, eo));
  });
  report.max_F = *std::max_element(Fv.begin(), Fv.end());
  report.max_G = *std::max_element(Gv.begin(), Gv.end());
  return report;
}

}  // namespace lightcone
