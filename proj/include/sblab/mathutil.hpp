#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace sblab {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

inline double log_sum_exp(std::span<const double> v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// log(1 - exp(x)) for x < 0, stable near both ends.
inline double log1mexp(double x) {
  return x > -M_LN2 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

inline double log_binomial(long n, long k) {
  if (k < 0 || k > n) return kNegInf;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// C(n, k) saturating at max(); used for enumeration budget checks.
inline unsigned long long choose_saturating(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (long i = 1; i <= k; ++i) {
    const long double next =
        static_cast<long double>(result) * static_cast<long double>(n - k + i) / i;
    if (next > 1.8e18L) return std::numeric_limits<unsigned long long>::max();
    result = static_cast<unsigned long long>(next + 0.5L);
  }
  return result;
}

// Scaled complementary error function exp(x^2) erfc(x), valid for all x
// where the result is representable.
inline double erfcx(double x) {
  if (x < 0.0) {
    // erfcx(x) = 2 exp(x^2) - erfcx(-x); overflows for x << 0.
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x <= 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic series; first neglected term < 1e-18 for x > 25.
  const double ix2 = 1.0 / (2.0 * x * x);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 6; ++k) {
    term *= -(2 * k - 1) * ix2;
    sum += term;
  }
  return sum / (x * std::sqrt(M_PI));
}

// log(erfc(x)) without underflow for large positive x.
inline double log_erfc(double x) {
  if (x <= 0.0) return std::log(std::erfc(x));
  return std::log(erfcx(x)) - x * x;
}

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / M_SQRT2); }

inline double log_norm_cdf(double x) {
  return std::log(0.5) + log_erfc(-x / M_SQRT2);
}

// Inverse standard normal CDF: Acklam's rational approximation with one
// Halley refinement, accurate to full double precision in practice.
inline double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return kNegInf;
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
  }
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1 - plow;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= phigh) {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    const double q = std::sqrt(-2 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  // Halley refinement on Phi(x) - p = 0.
  const double e = norm_cdf(x) - p;
  const double u = e * std::sqrt(2 * M_PI) * std::exp(x * x / 2);
  x = x - u / (1 + x * u / 2);
  return x;
}

// P(Poisson(m) >= s), stable for the small means used in tests.
inline double poisson_upper_tail(double m, long s) {
  if (s <= 0) return 1.0;
  // Sum the lower tail and complement when that is the shorter sum.
  double log_term = -m;  // k = 0
  double lower = 0.0;
  for (long k = 0; k < s; ++k) {
    if (k > 0) log_term += std::log(m) - std::log(static_cast<double>(k));
    lower += std::exp(log_term);
  }
  return std::max(0.0, 1.0 - lower);
}

}  // namespace sblab
