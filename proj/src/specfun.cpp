#include "lightcone/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lightcone/error.hpp"
#include "lightcone/quad.hpp"

namespace lightcone::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimit = 8.0;
constexpr double kAsymptoticLimit = 20.0;
constexpr double kUnderflowExponent = 745.0;

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

// sum_k (-x^2/4)^k / (k! (k+nu)!) for nu = 0, 1.
double series_j(int nu, double x) {
  const long double q = -0.25L * static_cast<long double>(x) * x;
  long double term = 1.0L;
  for (int i = 1; i <= nu; ++i) term /= i;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + nu));
    sum += term;
    if (std::fabs(term) < 1e-21L * std::fabs(sum) && k > 2) break;
  }
  if (nu == 1) sum *= 0.5L * x;
  return static_cast<double>(sum);
}

// Miller backward recurrence normalised by J0 + 2 sum J_{2k} = 1.
void miller_j01(double x, double& j0, double& j1) {
  const int start = 2 * (static_cast<int>(x) / 2) + 40;
  double next = 0.0;     // J_{n+1}
  double current = 1e-30;  // J_n
  double norm = 0.0;
  double a0 = 0.0, a1 = 0.0;
  for (int n = start; n >= 1; --n) {
    const double previous = (2.0 * n / x) * current - next;  // J_{n-1}
    next = current;
    current = previous;
    if ((n - 1) % 2 == 0 && n - 1 > 0) norm += 2.0 * current;
    if (n - 1 == 1) a1 = current;
    if (n - 1 == 0) a0 = current;
    if (std::abs(current) > 1e250) {
      next *= 1e-250;
      current *= 1e-250;
      norm *= 1e-250;
      a1 *= 1e-250;
    }
  }
  norm += a0;
  j0 = a0 / norm;
  j1 = a1 / norm;
}

// Hankel asymptotic amplitudes P, Q for order nu.
void hankel_pq(int nu, double x, double& p, double& q) {
  const double mu = 4.0 * nu * nu;
  const double z = 8.0 * x;
  p = 1.0;
  q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * z);
    if (std::abs(term) > last && k > 2) break;
    last = std::abs(term);
    // a_k / (8x)^k enters P with sign (-1)^{k/2} for even k and Q for odd k
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? term : -term);
    } else {
      p += ((k / 2) % 2 == 0 ? term : -term);
    }
    if (std::abs(term) < 1e-18) break;
  }
}

double asymptotic_j(int nu, double x) {
  double p, q;
  hankel_pq(nu, x, p, q);
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double r = std::numbers::sqrt2 / 2.0;
  double cos_chi, sin_chi;
  if (nu == 0) {  // chi = x - pi/4
    cos_chi = r * (c + s);
    sin_chi = r * (s - c);
  } else {  // chi = x - 3 pi/4
    cos_chi = r * (s - c);
    sin_chi = -r * (s + c);
  }
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

double j_nonnegative(int nu, double x) {
  if (x < kSeriesLimit) return series_j(nu, x);
  if (x < kAsymptoticLimit) {
    double j0, j1;
    miller_j01(x, j0, j1);
    return nu == 0 ? j0 : j1;
  }
  return asymptotic_j(nu, x);
}

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex log_gamma_right(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

void check_pole(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real()) {
    throw PoleError("gamma: pole at non-positive integer", static_cast<long>(z.real()));
  }
}

double newton_zero(int nu, double guess) {
  double x = guess;
  for (int i = 0; i < 50; ++i) {
    double f, df;
    if (nu == 0) {
      f = bessel_j0(x);
      df = -bessel_j1(x);
    } else {
      f = bessel_j1(x);
      df = bessel_j0(x) - f / x;
    }
    const double step = f / df;
    x -= step;
    if (std::abs(step) < 1e-15 * x) break;
  }
  return x;
}

double mcmahon(int nu, int k) {
  const double beta = (k + 0.5 * nu - 0.25) * kPi;
  const double mu = 4.0 * nu * nu;
  const double b8 = 8.0 * beta;
  return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

constexpr int kZeroTable = 200;

const std::vector<double>& zero_table(int nu) {
  static const std::vector<double> j0 = [] {
    std::vector<double> z(kZeroTable);
    for (int k = 1; k <= kZeroTable; ++k) z[k - 1] = newton_zero(0, mcmahon(0, k));
    return z;
  }();
  static const std::vector<double> j1 = [] {
    std::vector<double> z(kZeroTable);
    for (int k = 1; k <= kZeroTable; ++k) z[k - 1] = newton_zero(1, mcmahon(1, k));
    return z;
  }();
  return nu == 0 ? j0 : j1;
}

// integral_0^T exp(-x cosh t) cosh(nu t) w(t) dt with w = 1 or cosh.
BesselKComplexValue k_integral(Complex order, double x, bool derivative) {
  require_finite(x, "bessel_k");
  if (!std::isfinite(order.real()) || !std::isfinite(order.imag())) {
    throw DomainError("bessel_k: non-finite order");
  }
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  if (x >= kUnderflowExponent) return {Complex{}, true};
  const double upper = std::acosh(kUnderflowExponent / x);
  auto f = [&](double t) -> Complex {
    const double ch = std::cosh(t);
    const double w = std::exp(-x * ch) * (derivative ? ch : 1.0);
    return w * std::cosh(order * t);
  };
  const auto r = quad::integrate(f, 0.0, upper, 1e-300, 20000, 1e-13);
  return {derivative ? -r.value : r.value, false};
}

}  // namespace

double bessel_j0(double x) {
  require_finite(x, "bessel_j0");
  return j_nonnegative(0, std::abs(x));
}

double bessel_j1(double x) {
  require_finite(x, "bessel_j1");
  const double v = j_nonnegative(1, std::abs(x));
  return x < 0.0 ? -v : v;
}

double bessel_j1_over_x(double x) {
  require_finite(x, "bessel_j1_over_x");
  const double a = std::abs(x);
  if (a < 1.0) {
    const long double q = -0.25L * static_cast<long double>(a) * a;
    long double term = 0.5L;
    long double sum = term;
    for (int k = 1; k < 40; ++k) {
      term *= q / (static_cast<long double>(k) * (k + 1));
      sum += term;
      if (std::fabs(term) < 1e-21L) break;
    }
    return static_cast<double>(sum);
  }
  return j_nonnegative(1, a) / a;
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  check_pole(z);
  if (z.real() >= 0.5) return log_gamma_right(z);
  // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
  return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

Complex gamma_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("gamma_complex: non-finite argument");
  }
  check_pole(z);
  if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
  return kPi / (std::sin(kPi * z) * std::exp(log_gamma_right(1.0 - z)));
}

BesselKValue bessel_k_imag_order(double gamma, double x) {
  require_finite(gamma, "bessel_k_imag_order");
  require_finite(x, "bessel_k_imag_order");
  if (!(x > 0.0)) throw DomainError("bessel_k_imag_order: x must be positive");
  if (x >= kUnderflowExponent) return {0.0, true};
  const double upper = std::acosh(kUnderflowExponent / x);
  auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(gamma * t); };
  const auto r = quad::integrate(f, 0.0, upper, 1e-300, 20000, 1e-13);
  return {r.value, false};
}

BesselKComplexValue bessel_k(Complex order, double x) { return k_integral(order, x, false); }

BesselKComplexValue bessel_k_derivative(Complex order, double x) {
  return k_integral(order, x, true);
}

double wrap_angle(double angle) {
  require_finite(angle, "wrap_angle");
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double arg_gamma_half(double gamma) {
  require_finite(gamma, "arg_gamma_half");
  return wrap_angle(log_gamma(Complex(0.5, gamma)).imag());
}

Complex chi_multiplier(double tau) {
  require_finite(tau, "chi_multiplier");
  return std::polar(1.0, -2.0 * log_gamma(Complex(0.5, tau)).imag());
}

Complex scatter_S(double gamma) { return chi_multiplier(gamma); }

Complex hankel0_multiplier(double tau) {
  require_finite(tau, "hankel0_multiplier");
  const double phase = -tau * std::numbers::ln2 - 2.0 * log_gamma(Complex(0.5, 0.5 * tau)).imag();
  return std::polar(1.0, phase);
}

double bessel_j0_zero(int k) {
  if (k < 1) throw DomainError("bessel_j0_zero: k must be >= 1");
  if (k <= kZeroTable) return zero_table(0)[k - 1];
  return newton_zero(0, mcmahon(0, k));
}

double bessel_j1_zero(int k) {
  if (k < 1) throw DomainError("bessel_j1_zero: k must be >= 1");
  if (k <= kZeroTable) return zero_table(1)[k - 1];
  return newton_zero(1, mcmahon(1, k));
}

}  // namespace lightcone::specfun
