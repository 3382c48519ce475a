#include "dgc/problem.hpp"

#include <cmath>

#include "dgc/errors.hpp"

namespace dgc {

const char* bc_kind_name(BcKind k) {
  switch (k) {
    case BcKind::DirichletBoth: return "dirichlet_both";
    case BcKind::WeightedNeumannLeft: return "weighted_neumann_left";
  }
  return "unknown";
}

Grid make_grid(double T, double h, double domain_right, int N, int M_target) {
  if (!(T > 0.0) || !(h > 0.0) || !(domain_right > 0.0)) {
    raise(ErrorKind::InvalidArgument, "T, h and the domain extent must be > 0");
  }
  if (N < 8) raise(ErrorKind::InvalidArgument, "N must be >= 8");
  if (M_target < 8) raise(ErrorKind::InvalidArgument, "M must be >= 8");

  // Find (m, M) near the target with M h = m T, i.e. h = m dt and T = M dt.
  int m0 = std::max(1, static_cast<int>(std::llround(h * M_target / T)));
  int best_m = -1, best_M = -1;
  double best_err = 1e300;
  for (int m = std::max(1, m0 - 64); m <= m0 + 64; ++m) {
    double M_real = m * T / h;
    int M = static_cast<int>(std::llround(M_real));
    if (M < 8) continue;
    double err = std::abs(M - M_real) / M_real;
    if (err < best_err) {
      best_err = err;
      best_m = m;
      best_M = M;
    }
  }
  if (best_m < 0 || best_err > 1e-9) {
    raise(ErrorKind::InvalidArgument,
          "delay and horizon cannot be aligned on a common step near M = " +
              std::to_string(M_target));
  }

  Grid g;
  g.N = N;
  g.M = best_M;
  g.m_delay = best_m;
  g.T = T;
  g.h = h;
  g.domain_right = domain_right;
  g.dt = T / g.M;
  g.dx = domain_right / N;
  return g;
}

void validate_problem(const DelayProblem& p) {
  if (!(p.T > 0.0) || !(p.h > 0.0)) {
    raise(ErrorKind::InvalidArgument, "horizon and delay must be positive");
  }
  if (!(p.omega_left > 0.0) || !(p.omega_left < p.omega_right) ||
      !(p.omega_right <= p.domain_right)) {
    raise(ErrorKind::BadControlWindow,
          "control window must satisfy 0 < left < right <= domain end");
  }
  switch (p.a.kind) {
    case DegeneracyKind::WeaklyDegenerate:
      if (p.bc_kind != BcKind::DirichletBoth) {
        raise(ErrorKind::InvalidArgument,
              "weakly degenerate coefficients take Dirichlet conditions at "
              "both ends");
      }
      break;
    case DegeneracyKind::StronglyDegenerate:
      if (p.bc_kind != BcKind::WeightedNeumannLeft) {
        raise(ErrorKind::InvalidArgument,
              "strongly degenerate coefficients take the weighted Neumann "
              "condition at x = 0");
      }
      break;
    case DegeneracyKind::NonDegenerate:
      break;  // either boundary operator is allowed in cross-check mode
  }
}

}  // namespace dgc
