#include "dgc/quadrature.hpp"

#include <cmath>
#include <limits>

#include "dgc/errors.hpp"

namespace dgc {

namespace {

double simpson(const RealFn& f, double a, double fa, double b, double fb,
               double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const RealFn& f, double a, double fa, double b, double fb,
                     double m, double fm, double whole, double tol,
                     int depth) {
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson(f, a, fa, m, fm, lm, flm);
  double right = simpson(f, m, fm, b, fb, rm, frm);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const RealFn& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(f, a, fa, b, fb, m, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double integrate_with_endpoint_singularity(const RealFn& f, double b,
                                           double rel_tol) {
  if (!(b > 0.0)) raise(ErrorKind::InvalidArgument, "upper limit must be > 0");

  // Geometric panels [b/2^{j+1}, b/2^j]; 60 halvings reach ~1e-18*b.
  constexpr int kPanels = 60;
  double total = 0.0;
  double hi = b;
  for (int j = 0; j < kPanels; ++j) {
    double lo = 0.5 * hi;
    double scale = std::max(std::abs(total), 1e-30);
    total += adaptive_simpson(f, lo, hi, rel_tol * scale * 0.01);
    hi = lo;
  }

  // Close the remainder (0, hi] with a local power model f ~ C x^p.
  double x1 = hi;
  double x2 = 2.0 * hi;
  double f1 = f(x1);
  double f2 = f(x2);
  double tail = 0.0;
  if (f1 > 0.0 && f2 > 0.0) {
    double p = std::log(f2 / f1) / std::log(x2 / x1);
    if (p <= -0.999) {
      raise(ErrorKind::DivergentIntegral,
            "endpoint exponent ~ " + std::to_string(p) +
                " indicates a divergent integral near 0");
    }
    tail = f1 * x1 / (p + 1.0);
  } else if (f1 < 0.0 || f2 < 0.0) {
    raise(ErrorKind::InvalidArgument, "integrand must be nonnegative near 0");
  }
  double result = total + tail;
  if (!std::isfinite(result)) {
    raise(ErrorKind::DivergentIntegral, "quadrature failed to converge");
  }
  return result;
}

}  // namespace dgc
