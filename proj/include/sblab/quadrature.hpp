#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "sblab/errors.hpp"

namespace sblab::quad {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  long evals = 0;
  bool converged = true;
};

namespace detail {
struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
inline Panel gk15(F&& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    double fv;
    if (i == 7) {
      fv = f(c);
      kron += kWgk[7] * fv;
      gauss += kWg[3] * fv;
      ++evals;
    } else {
      const double f1 = f(c - dx), f2 = f(c + dx);
      kron += kWgk[i] * (f1 + f2);
      if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
      evals += 2;
    }
  }
  kron *= h;
  gauss *= h;
  return Panel{a, b, kron, std::abs(kron - gauss)};
}
}  // namespace detail

// Globally adaptive Gauss-Kronrod integration on [a, b].
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 0.0, long max_evals = 2000000) {
  Result out;
  if (a == b) return out;
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gk15(f, a, b, out.evals));
  double total = panels.top().value, err = panels.top().error;
  while (err > std::max(abs_tol, rel_tol * std::abs(total)) &&
         out.evals < max_evals) {
    detail::Panel worst = panels.top();
    panels.pop();
    if (!(worst.b - worst.a > 0.0) ||
        worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b) + 1e-300)) {
      // Interval cannot be split further; accept its contribution.
      total += 0.0;
      err -= worst.error;
      worst.error = 0.0;
      panels.push(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    detail::Panel left = detail::gk15(f, worst.a, mid, out.evals);
    detail::Panel right = detail::gk15(f, mid, worst.b, out.evals);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  out.value = total;
  out.abs_error = err;
  out.converged = err <= std::max(abs_tol, rel_tol * std::abs(total)) * 1.001 + 1e-300;
  return out;
}

// Integrate with mandatory breakpoints (e.g. kinks at zero).
template <class F>
Result integrate_split(F&& f, std::vector<double> pts, double rel_tol = 1e-10,
                       double abs_tol = 0.0, long max_evals = 2000000) {
  std::sort(pts.begin(), pts.end());
  Result out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Result r = integrate(f, pts[i], pts[i + 1], rel_tol, abs_tol, max_evals);
    out.value += r.value;
    out.abs_error += r.abs_error;
    out.evals += r.evals;
    out.converged = out.converged && r.converged;
  }
  return out;
}

// Iterated adaptive integration of f over a box in up to a few dimensions.
// Each axis interval is split at zero when zero lies inside (the users of
// this routine integrate |.|-kinked densities). Inner levels run at a
// tighter tolerance so the outer integrand stays smooth.
inline double integrate_box(const std::function<double(const double*)>& f,
                            const std::vector<double>& lo,
                            const std::vector<double>& hi, double rel_tol,
                            long max_evals_per_axis = 400000) {
  const std::size_t dim = lo.size();
  if (dim == 0) throw IntegralError("integrate_box: empty dimension");
  std::vector<double> x(dim, 0.0);
  std::function<double(std::size_t)> level = [&](std::size_t d) -> double {
    const double tol = rel_tol * std::pow(0.2, static_cast<double>(dim - 1 - d));
    std::vector<double> pts{lo[d], hi[d]};
    if (lo[d] < 0.0 && hi[d] > 0.0) pts.insert(pts.begin() + 1, 0.0);
    auto g = [&](double t) -> double {
      x[d] = t;
      return d + 1 == dim ? f(x.data()) : level(d + 1);
    };
    return integrate_split(g, pts, tol, 0.0, max_evals_per_axis).value;
  };
  return level(0);
}

}  // namespace sblab::quad
