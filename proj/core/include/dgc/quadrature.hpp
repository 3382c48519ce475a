#pragma once

#include <functional>

namespace dgc {

using RealFn = std::function<double(double)>;

/// Adaptive Simpson integration on [a,b]. `tol` is an absolute tolerance for
/// the interval; recursion splits until the local Richardson estimate meets
/// the proportionally divided budget.
double adaptive_simpson(const RealFn& f, double a, double b, double tol,
                        int max_depth = 40);

/// Integral of f over (0, b] where f may have an algebraic singularity at 0
/// (f ~ C x^p with p > -1). The interval is subdivided geometrically toward
/// the origin and the remainder below the smallest panel is closed with a
/// local power-law model fitted to f. Throws DivergentIntegral when the
/// fitted exponent indicates a non-integrable endpoint.
double integrate_with_endpoint_singularity(const RealFn& f, double b,
                                           double rel_tol);

}  // namespace dgc
