#pragma once

#include <functional>
#include <string>
#include <utility>

#include "dgc/degeneracy.hpp"

namespace dgc {

/// Bounded space-time coefficient (t, x) -> value with its recorded sup norm.
struct CoefficientField {
  std::function<double(double, double)> f = [](double, double) { return 0.0; };
  double sup_norm = 0.0;
  std::string description = "zero";

  double operator()(double t, double x) const { return f(t, x); }

  static CoefficientField zero() { return {}; }

  static CoefficientField constant(double v) {
    return {[v](double, double) { return v; }, std::abs(v),
            "const " + std::to_string(v)};
  }
};

enum class BcKind {
  DirichletBoth,       // y(t,0) = y(t,right) = 0 (weak degeneracy)
  WeightedNeumannLeft  // (a y_x)(t,0) = 0, y(t,right) = 0 (strong degeneracy)
};

const char* bc_kind_name(BcKind k);

/// Uniform space-time grid with the delay aligned to the step: h = m_delay dt
/// and T = M dt hold simultaneously (M is adjusted at construction).
struct Grid {
  int N = 0;        // spatial cells, nodes x_i = i dx, i = 0..N
  int M = 0;        // time steps on (0, T)
  int m_delay = 0;  // h / dt
  double dx = 0.0;
  double dt = 0.0;
  double T = 0.0;
  double h = 0.0;
  double domain_right = 1.0;

  double x(int i) const { return i * dx; }
  double t(int k) const { return k * dt; }
  int n_nodes() const { return N + 1; }
};

/// Builds a grid for horizon T and delay h near the requested resolution.
/// M is adjusted so that the delay is an exact multiple of dt; incommensurable
/// (T, h) pairs that cannot be aligned near M_target are rejected.
Grid make_grid(double T, double h, double domain_right, int N, int M_target);

/// Full problem data for the controlled delay equation
///   y_t = (a y_x)_x + b y + c y(t - h) + 1_omega u.
struct DelayProblem {
  DegeneracyModel a;
  CoefficientField b;
  CoefficientField c;
  double h = 0.0;                  // delay
  double T = 0.0;                  // horizon
  double omega_left = 0.0;         // control window (omega_left, omega_right)
  double omega_right = 0.0;
  BcKind bc_kind = BcKind::DirichletBoth;
  double domain_right = 1.0;

  bool in_omega(double x) const { return x > omega_left && x < omega_right; }
};

/// Validates boundary-kind/degeneracy compatibility and the control window.
/// Throws InvalidArgument / BadControlWindow on violations.
void validate_problem(const DelayProblem& p);

/// Grid for a problem at the requested resolution.
inline Grid make_grid(const DelayProblem& p, int N, int M_target) {
  return make_grid(p.T, p.h, p.domain_right, N, M_target);
}

}  // namespace dgc
