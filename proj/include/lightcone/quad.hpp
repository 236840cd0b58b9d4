#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/specfun.hpp"

namespace lightcone {

/// How an integrand behaves at +infinity. Used to pick truncation points.
///   exponential(rate):   |f(y)| <= C exp(-rate y)
///   algebraic(power):    |f(y)| <= C y^{-power}, power > 1
///   compact(support_end): f(y) = 0 for y > support_end
class DecayHint {
 public:
  enum class Kind { exponential, algebraic, compact };

  static DecayHint exponential(double rate);
  static DecayHint algebraic(double power);
  static DecayHint compact(double support_end);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  double rate() const;
  double power() const;
  double support_end() const;

  bool operator==(const DecayHint&) const = default;

 private:
  DecayHint(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  double parameter_;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

enum class BesselKernel { j0, j1_ratio };

namespace quad {

inline constexpr int kDefaultMaxSubdivisions = 4000;

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  double abs_value;
};

template <class T, class F>
Panel<T> gauss_kronrod_15(F& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<T, 15> samples;
  const T fc = f(center);
  samples[14] = fc;
  T resk = kKronrodWeights[7] * fc;
  T resg = kGaussWeights[3] * fc;
  double resabs = kKronrodWeights[7] * magnitude(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    samples[2 * j] = f1;
    samples[2 * j + 1] = f2;
    resk += kKronrodWeights[j] * (f1 + f2);
    resabs += kKronrodWeights[j] * (magnitude(f1) + magnitude(f2));
    if (j % 2 == 1) resg += kGaussWeights[j / 2] * (f1 + f2);
  }
  const T mean = resk * 0.5;
  double resasc = kKronrodWeights[7] * magnitude(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kKronrodWeights[j] *
              (magnitude(samples[2 * j] - mean) + magnitude(samples[2 * j + 1] - mean));
  }
  const double scale = std::abs(half);
  resasc *= scale;
  resabs *= scale;
  double err = magnitude((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  // roundoff floor per panel; integrate() stops at four times the summed floor
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return Panel<T>{a, b, resk * half, err, resabs};
}

template <class T>
void throw_accuracy(const char* what, const T& best, double err) {
  if constexpr (std::is_same_v<T, double>) {
    throw AccuracyError(what, best, err);
  } else {
    throw AccuracyError(what, best.real(), err);
  }
}

/// Epsilon-algorithm extrapolation of a sequence of partial sums.
template <class T>
struct WynnResult {
  T value{};
  double error = std::numeric_limits<double>::infinity();
};

template <class T>
WynnResult<T> wynn_epsilon(const std::vector<T>& sums) {
  const std::size_t n = sums.size();
  WynnResult<T> out;
  if (n == 0) return out;
  out.value = sums.back();
  if (n < 3) return out;
  // e[k] holds column k of the table; even columns approximate the limit.
  std::vector<T> prev(n + 1, T{}), cur(sums.begin(), sums.end());
  std::vector<T> best_column = cur;
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<T> next(n - col);
    bool ok = true;
    for (std::size_t i = 0; i + col < n; ++i) {
      const T diff = cur[i + 1] - cur[i];
      if (magnitude(diff) < 1e-300) {
        ok = false;
        break;
      }
      next[i] = (col == 1 ? T{} : prev[i + 1]) + T(1.0) / diff;
    }
    if (!ok) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0) best_column = cur;
  }
  if (best_column.size() >= 2) {
    out.value = best_column.back();
    out.error = magnitude(best_column.back() - best_column[best_column.size() - 2]);
  } else if (!best_column.empty()) {
    out.value = best_column.back();
    out.error = magnitude(sums.back() - sums[n - 2]);
  }
  return out;
}

/// Brent-style bracketed root of g(y) = 0 on [lo, hi] with g(lo) g(hi) <= 0.
template <class G>
double bracketed_root(G&& g, double lo, double hi, double glo, double ghi, double xtol) {
  double a = lo, b = hi, fa = glo, fb = ghi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = g(b);
  }
  throw KernelZeroError("root finder did not converge");
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b] to absolute
/// tolerance tol, or rel_tol * |value| when that is larger. Bisects the panel
/// with the largest error estimate until the summed estimate meets the target
/// (or the roundoff floor of the panel sums).
template <class F>
auto integrate(F&& f, double a, double b, double tol,
               int max_subdivisions = kDefaultMaxSubdivisions, double rel_tol = 0.0)
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  using detail::Panel;
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: need finite a <= b");
  }
  if (!(tol > 0.0)) throw DomainError("integrate: tol must be positive");
  QuadratureResult<T> out;
  if (a == b) {
    out.evaluations = 0;
    return out;
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto worse = [](const Panel<T>& x, const Panel<T>& y) { return x.error < y.error; };
  std::vector<Panel<T>> heap;
  std::vector<Panel<T>> frozen;
  heap.push_back(detail::gauss_kronrod_15<T>(f, a, b));
  std::size_t evaluations = 15;
  const double min_width = 64.0 * eps * std::max(std::abs(a), std::abs(b));

  auto totals = [&](double& err, double& abs_sum) {
    err = 0.0;
    abs_sum = 0.0;
    for (const auto& p : heap) {
      err += p.error;
      abs_sum += p.abs_value;
    }
    for (const auto& p : frozen) {
      err += p.error;
      abs_sum += p.abs_value;
    }
  };

  auto current_value = [&]() {
    T sum{};
    for (const auto& p : heap) sum += p.value;
    for (const auto& p : frozen) sum += p.value;
    return sum;
  };
  auto target = [&](double abs_sum) {
    double t = std::max(tol, 200.0 * eps * abs_sum);
    if (rel_tol > 0.0) t = std::max(t, rel_tol * detail::magnitude(current_value()));
    return t;
  };

  int subdivisions = 0;
  double err = 0.0, abs_sum = 0.0;
  while (true) {
    totals(err, abs_sum);
    if (err <= target(abs_sum) || heap.empty()) break;
    if (subdivisions >= max_subdivisions) break;
    std::pop_heap(heap.begin(), heap.end(), worse);
    Panel<T> worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.b - worst.a <= min_width || mid <= worst.a || mid >= worst.b) {
      frozen.push_back(worst);
      continue;
    }
    Panel<T> left = detail::gauss_kronrod_15<T>(f, worst.a, mid);
    Panel<T> right = detail::gauss_kronrod_15<T>(f, mid, worst.b);
    evaluations += 30;
    ++subdivisions;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), worse);
  }

  std::vector<Panel<T>> all = heap;
  all.insert(all.end(), frozen.begin(), frozen.end());
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  T sum{};
  for (const auto& p : all) sum += p.value;
  out.value = sum;
  out.error_estimate = err;
  out.evaluations = evaluations;
  if (err > target(abs_sum)) {
    detail::throw_accuracy("integrate: maximum subdivisions reached", sum, err);
  }
  return out;
}

namespace detail {

inline constexpr int kEnvelopeSamples = 128;

/// Largest C with |f(y)| <= C * bound(y) over a coarse sample of [a, a + span].
template <class F, class Bound>
double envelope_constant(F& f, double a, double span, Bound&& bound) {
  double c = 0.0;
  for (int i = 0; i <= kEnvelopeSamples; ++i) {
    const double y = a + span * i / kEnvelopeSamples;
    const double b = bound(y);
    if (b <= 0.0) continue;
    c = std::max(c, magnitude(f(y)) / b);
  }
  return c;
}

/// Truncation point for a hinted integrand with tail below tail_tol; also
/// checks a few samples past it against the hinted bound.
template <class F>
double truncation_point(F& f, double a, double tail_tol, const DecayHint& hint,
                        double kernel_bound) {
  switch (hint.kind()) {
    case DecayHint::Kind::compact: {
      const double end = std::max(a, hint.support_end());
      for (int i = 1; i <= 4; ++i) {
        const double y = end + i * (1.0 + std::abs(end)) * 0.25;
        if (magnitude(f(y)) * kernel_bound > 10.0 * tail_tol) {
          throw HintError("integrand is nonzero beyond the declared compact support");
        }
      }
      return end;
    }
    case DecayHint::Kind::exponential: {
      const double r = hint.rate();
      const double span = 60.0 / r;
      const double c =
          kernel_bound * envelope_constant(f, a, span, [&](double y) { return std::exp(-r * (y - a)); });
      if (c == 0.0) return a;
      const double ratio = 2.0 * c / (r * tail_tol);
      const double t = a + (ratio > 1.0 ? std::log(ratio) / r : 0.0);
      for (int i = 0; i <= 4; ++i) {
        const double y = t + i / r;
        const double bound = c * std::exp(-r * (y - a));
        if (kernel_bound * magnitude(f(y)) > 10.0 * bound + 1e-300) {
          throw HintError("integrand exceeds its exponential decay hint");
        }
      }
      return t;
    }
    case DecayHint::Kind::algebraic: {
      const double p = hint.power();
      const double base = std::max(a, 1.0);
      const double c = kernel_bound * envelope_constant(f, base, 64.0 * base, [&](double y) {
                         return std::pow(y, -p);
                       });
      if (c == 0.0) return a;
      const double t = std::max(base, std::pow(2.0 * c / ((p - 1.0) * tail_tol), 1.0 / (p - 1.0)));
      for (int i = 1; i <= 4; ++i) {
        const double y = t * (1.0 + 0.5 * i);
        if (kernel_bound * magnitude(f(y)) > 10.0 * c * std::pow(y, -p)) {
          throw HintError("integrand exceeds its algebraic decay hint");
        }
      }
      return t;
    }
  }
  return a;
}

}  // namespace detail

/// Integral of f over [a, infinity). The hint fixes a truncation point T with
/// hinted tail below tol/2; the finite part is handed to integrate().
template <class F>
auto integrate_semi_infinite(F&& f, double a, double tol, const DecayHint& hint,
                             int max_subdivisions = kDefaultMaxSubdivisions)
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: a must be finite");
  if (!(tol > 0.0)) throw DomainError("integrate_semi_infinite: tol must be positive");
  const double t = detail::truncation_point(f, a, 0.5 * tol, hint, 1.0);
  auto r = integrate(f, a, t, 0.5 * tol, max_subdivisions);
  r.error_estimate += 0.5 * tol;
  r.evaluations += detail::kEnvelopeSamples + 1;
  return r;
}

/// Options for integrate_bessel_kernel.
struct BesselKernelOptions {
  /// Phase argument is monotone increasing from here on; zeros of the kernel
  /// are only located beyond this point.
  double monotone_from = std::numeric_limits<double>::quiet_NaN();
  /// Cap on the number of kernel-zero panels when summing an algebraic tail.
  int max_panels = 20000;
  int max_subdivisions = kDefaultMaxSubdivisions;
};

/// Integral over [a, infinity) of f(y) * K(phase(y)) where K is J0 or J1(z)/z.
/// The range is split at the kernel zeros, found by root finding of
/// phase(y) = j_k against the tabulated Bessel zeros. Exponential and compact
/// hints truncate at the hinted point; algebraic hints sum the zero-to-zero
/// panels and extrapolate the partial sums with Wynn's epsilon algorithm.
template <class F, class Phase>
auto integrate_bessel_kernel(F&& f, BesselKernel kernel, Phase&& phase, double a, double tol,
                             const DecayHint& hint, BesselKernelOptions options = {})
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  if (!std::isfinite(a)) throw DomainError("integrate_bessel_kernel: a must be finite");
  if (!(tol > 0.0)) throw DomainError("integrate_bessel_kernel: tol must be positive");
  const double mono = std::isnan(options.monotone_from) ? a : std::max(a, options.monotone_from);

  auto kernel_at = [kernel](double z) {
    return kernel == BesselKernel::j0 ? specfun::bessel_j0(z) : specfun::bessel_j1_over_x(z);
  };
  auto zero_at = [kernel](int k) {
    return kernel == BesselKernel::j0 ? specfun::bessel_j0_zero(k) : specfun::bessel_j1_zero(k);
  };
  auto integrand = [&](double y) -> T { return f(y) * kernel_at(phase(y)); };
  const double kernel_bound = kernel == BesselKernel::j0 ? 1.0 : 0.5;

  QuadratureResult<T> out;
  std::size_t evaluations = 0;

  // Next kernel zero beyond `from`. Returns +inf when `limit` is reached first.
  int next_k = 1;
  const double phase_start = phase(mono);
  while (zero_at(next_k) <= phase_start) ++next_k;
  auto next_zero = [&](double from, double limit) -> double {
    const double target = zero_at(next_k);
    auto g = [&](double y) { return phase(y) - target; };
    double lo = from;
    double glo = g(lo);
    double step = std::max(1e-3 * (1.0 + std::abs(from)), 1e-12);
    double hi = lo;
    double ghi = glo;
    for (int i = 0; i < 400; ++i) {
      hi = std::min(lo + step, limit);
      ghi = g(hi);
      ++evaluations;
      if (ghi >= 0.0) break;
      if (hi >= limit) return std::numeric_limits<double>::infinity();
      lo = hi;
      glo = ghi;
      step *= 2.0;
    }
    if (ghi < 0.0) throw KernelZeroError("could not bracket a kernel zero");
    const double root = detail::bracketed_root(g, lo, hi, glo, ghi, 1e-13 * (1.0 + std::abs(hi)));
    ++next_k;
    return root;
  };

  if (hint.kind() != DecayHint::Kind::algebraic) {
    const double t = detail::truncation_point(f, a, 0.5 * tol, hint, kernel_bound);
    evaluations += detail::kEnvelopeSamples + 5;
    std::vector<double> cuts{a};
    if (mono > a && mono < t) cuts.push_back(mono);
    double from = std::max(a, mono);
    while (from < t) {
      const double z = next_zero(from, t);
      if (!(z < t)) break;
      if (z > cuts.back()) cuts.push_back(z);
      from = z;
    }
    cuts.push_back(t);
    const std::size_t panels = cuts.size() - 1;
    const double panel_tol = 0.5 * tol / static_cast<double>(std::max<std::size_t>(panels, 1));
    T sum{};
    double err = 0.5 * tol;
    for (std::size_t i = 0; i < panels; ++i) {
      if (cuts[i + 1] <= cuts[i]) continue;
      auto r = integrate(integrand, cuts[i], cuts[i + 1], panel_tol, options.max_subdivisions);
      sum += r.value;
      err += r.error_estimate;
      evaluations += r.evaluations;
    }
    out.value = sum;
    out.error_estimate = err;
    out.evaluations = evaluations;
    return out;
  }

  // Algebraic tail: zero-to-zero panels, Wynn extrapolation of partial sums.
  std::vector<T> partial;
  T running{};
  double from = a;
  if (mono > a) {
    auto r = integrate(integrand, a, mono, 0.1 * tol, options.max_subdivisions);
    running += r.value;
    evaluations += r.evaluations;
    from = mono;
  }
  constexpr int kWindow = 24;
  T last_estimate{};
  int stable = 0;
  for (int panel = 0; panel < options.max_panels; ++panel) {
    const double z = next_zero(from, std::numeric_limits<double>::max());
    auto r = integrate(integrand, from, z, 0.01 * tol, options.max_subdivisions);
    evaluations += r.evaluations;
    running += r.value;
    from = z;
    partial.push_back(running);
    if (partial.size() > static_cast<std::size_t>(kWindow)) partial.erase(partial.begin());
    const auto w = detail::wynn_epsilon(partial);
    const double change = detail::magnitude(w.value - last_estimate);
    last_estimate = w.value;
    if (partial.size() >= 12 && change < tol && w.error < tol) {
      if (++stable >= 3) {
        out.value = w.value;
        out.error_estimate = std::max(change, w.error);
        out.evaluations = evaluations;
        return out;
      }
    } else {
      stable = 0;
    }
  }
  detail::throw_accuracy("integrate_bessel_kernel: algebraic tail did not converge", last_estimate, tol);
  return out;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

}  // namespace quad
}  // namespace lightcone
