#pragma once

#include <complex>

namespace lightcone {

using Complex = std::complex<double>;

namespace specfun {

/// Bessel function of the first kind, order zero. Even in x.
double bessel_j0(double x);

/// Bessel function of the first kind, order one. Odd in x.
double bessel_j1(double x);

/// J1(x)/x with the removable singularity at 0 filled in (value 1/2).
double bessel_j1_over_x(double x);

/// log Gamma(z) on the principal branch, continuous in the right half plane.
/// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

/// Gamma(z) for complex z. Lanczos approximation for Re z >= 1/2 and the
/// reflection formula elsewhere. Throws PoleError at non-positive integers.
Complex gamma_complex(Complex z);

struct BesselKValue {
  double value = 0.0;
  bool underflow = false;  // e^{-x} is below the smallest double
};

struct BesselKComplexValue {
  Complex value{};
  bool underflow = false;
};

/// K_{i gamma}(x) from K_{i gamma}(x) = int_0^inf exp(-x cosh t) cos(gamma t) dt,
/// truncated where x cosh(T) = 745. Real, even in gamma.
BesselKValue bessel_k_imag_order(double gamma, double x);

/// K_nu(x) for complex order nu and real x > 0, from
/// int_0^inf exp(-x cosh t) cosh(nu t) dt.
BesselKComplexValue bessel_k(Complex order, double x);

/// dK_nu/dx = -int_0^inf cosh(t) exp(-x cosh t) cosh(nu t) dt.
BesselKComplexValue bessel_k_derivative(Complex order, double x);

/// Gamma(1-s)/Gamma(s) on s = 1/2 + i tau.
Complex chi_multiplier(double tau);

/// Gamma(1/2 - i gamma)/Gamma(1/2 + i gamma).
Complex scatter_S(double gamma);

/// Mellin multiplier of the order-zero Hankel transform,
/// 2^{1/2-w} Gamma(3/4 - w/2)/Gamma(1/4 + w/2) at w = 1/2 + i tau.
Complex hankel0_multiplier(double tau);

/// arg Gamma(1/2 + i gamma) reduced to (-pi, pi].
double arg_gamma_half(double gamma);

/// Positive zeros of J0 and J1 (k >= 1). The first 200 are tabulated by
/// Newton iteration on bessel_j0/bessel_j1; beyond that McMahon's expansion
/// seeds one more Newton pass.
double bessel_j0_zero(int k);
double bessel_j1_zero(int k);

/// Reduce an angle to (-pi, pi].
double wrap_angle(double angle);

}  // namespace specfun
}  // namespace lightcone
