#pragma once

#include <cmath>

#include "sblab/mathutil.hpp"
#include "sblab/rng.hpp"

namespace sblab {

// Standard normal Z conditioned on Z >= a.
inline double rtnorm_lower(Rng& rng, double a) {
  if (a < 0.4) {
    for (;;) {
      const double z = rng.normal();
      if (z >= a) return z;
    }
  }
  // Robert (1995) translated-exponential rejection for the tail.
  const double alpha = 0.5 * (a + std::sqrt(a * a + 4.0));
  for (;;) {
    const double x = a + rng.exponential(alpha);
    const double d = x - alpha;
    if (rng.u01() <= std::exp(-0.5 * d * d)) return x;
  }
}

// Mills-type hazard phi(x) / Phi(-x), stable for all x.
inline double normal_hazard(double x) {
  return std::sqrt(2.0 / M_PI) / erfcx(x / M_SQRT2);
}

// The one-dimensional density proportional to
//   exp(-(x - m)^2 / (2 v) - lambda |x|),
// which is a two-piece truncated normal mixture: the piece on [0, inf)
// is N(m - lambda v, v), the piece on (-inf, 0] is N(m + lambda v, v),
// with closed-form mixture weights. This is the within-model full
// conditional of a single coefficient under a Laplace slab, and also the
// per-coordinate factor of marginal likelihoods in the sequence model.
class TiltedGaussian {
 public:
  TiltedGaussian(double m, double v, double lambda)
      : m_(m), v_(v), lambda_(lambda), sd_(std::sqrt(v)) {
    mu_plus_ = m - lambda * v;
    mu_minus_ = m + lambda * v;
    const double half = 0.5 * lambda * lambda * v;
    log_w_plus_ = half - lambda * m + log_norm_cdf(mu_plus_ / sd_);
    log_w_minus_ = half + lambda * m + log_norm_cdf(-mu_minus_ / sd_);
    log_w_total_ = log_sum_exp(log_w_plus_, log_w_minus_);
  }

  double m() const { return m_; }
  double v() const { return v_; }
  double lambda() const { return lambda_; }

  // log of the unnormalized integral  int exp(-(x-m)^2/(2v) - lambda|x|) dx.
  double log_normalizer() const {
    return 0.5 * std::log(2.0 * M_PI * v_) + log_w_total_;
  }

  double prob_positive() const { return std::exp(log_w_plus_ - log_w_total_); }

  double log_pdf(double x) const {
    return -0.5 * (x - m_) * (x - m_) / v_ - lambda_ * std::abs(x) -
           log_normalizer();
  }

  double sample(Rng& rng) const {
    if (rng.u01() < prob_positive()) {
      return mu_plus_ + sd_ * rtnorm_lower(rng, -mu_plus_ / sd_);
    }
    return mu_minus_ - sd_ * rtnorm_lower(rng, mu_minus_ / sd_);
  }

  double cdf(double x) const {
    const double w_minus = std::exp(log_w_minus_ - log_w_total_);
    if (x <= 0.0) {
      const double denom = norm_cdf(-mu_minus_ / sd_);
      if (denom <= 0.0) return 0.0;
      return w_minus * norm_cdf((x - mu_minus_) / sd_) / denom;
    }
    const double denom = norm_cdf(mu_plus_ / sd_);
    if (denom <= 0.0) return w_minus;
    const double inner =
        (norm_cdf((x - mu_plus_) / sd_) - norm_cdf(-mu_plus_ / sd_)) / denom;
    return w_minus + (1.0 - w_minus) * inner;
  }

  double quantile(double q) const {
    const double w_minus = std::exp(log_w_minus_ - log_w_total_);
    if (q <= 0.0) return kNegInf;
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    if (q <= w_minus) {
      const double target = (q / w_minus) * norm_cdf(-mu_minus_ / sd_);
      return mu_minus_ + sd_ * norm_quantile(std::min(1.0, target));
    }
    const double qr = (q - w_minus) / (1.0 - w_minus);
    const double target =
        norm_cdf(-mu_plus_ / sd_) + qr * norm_cdf(mu_plus_ / sd_);
    return mu_plus_ + sd_ * norm_quantile(std::min(1.0, target));
  }

  double mean() const {
    const double w_minus = std::exp(log_w_minus_ - log_w_total_);
    const double mean_plus = mu_plus_ + sd_ * normal_hazard(-mu_plus_ / sd_);
    const double mean_minus = mu_minus_ - sd_ * normal_hazard(mu_minus_ / sd_);
    return w_minus * mean_minus + (1.0 - w_minus) * mean_plus;
  }

 private:
  double m_, v_, lambda_, sd_;
  double mu_plus_, mu_minus_;
  double log_w_plus_, log_w_minus_, log_w_total_;
};

}  // namespace sblab
