#include "dgc/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dgc/errors.hpp"
#include "dgc/quadrature.hpp"

namespace dgc {

namespace {

// Collar for certifying theta > 1 from sampled data: the infimum of
// x a'/a over a shrinking neighborhood must clear 1 by this much before the
// strong case (iii) with K > 1 is accepted.
constexpr double kThetaMargin = 1e-3;

double interp(const std::vector<double>& xs, const std::vector<double>& ys,
              double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs.begin());
  double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

void validate_table(const Tabulated& tab) {
  if (tab.x.size() < 3 || tab.x.size() != tab.a.size() ||
      tab.x.size() != tab.da.size()) {
    raise(ErrorKind::InvalidArgument,
          "tabulated coefficient needs >= 3 aligned (x, a, a') samples");
  }
  if (tab.x.front() != 0.0) {
    raise(ErrorKind::InvalidArgument, "tabulated nodes must start at x = 0");
  }
  for (std::size_t i = 1; i < tab.x.size(); ++i) {
    if (!(tab.x[i] > tab.x[i - 1])) {
      raise(ErrorKind::InvalidArgument, "tabulated nodes must be increasing");
    }
  }
  for (double v : tab.a) {
    if (v < 0.0) {
      raise(ErrorKind::InvalidArgument, "coefficient values must be >= 0");
    }
  }
}

DegeneracyModel classify_power_law(const PowerLaw& pl) {
  if (pl.alpha < 0.0) {
    raise(ErrorKind::InvalidArgument, "power-law exponent must be >= 0");
  }
  if (pl.alpha >= 2.0) {
    raise(ErrorKind::RejectedCoefficient,
          "power-law exponent " + std::to_string(pl.alpha) + " has K >= 2");
  }
  DegeneracyModel m;
  m.form = pl;
  m.K = pl.alpha;
  if (pl.alpha == 0.0) {
    m.kind = DegeneracyKind::NonDegenerate;
  } else if (pl.alpha < 1.0) {
    m.kind = DegeneracyKind::WeaklyDegenerate;
  } else {
    m.kind = DegeneracyKind::StronglyDegenerate;
    // x a' = alpha a identically, so a/x^theta is nondecreasing exactly for
    // theta <= alpha; for K = 1 any exponent in (0,1) certifies (iii).
    m.theta_deg = (pl.alpha > 1.0) ? pl.alpha : 0.5;
  }
  return m;
}

DegeneracyModel classify_tabulated(const Tabulated& tab) {
  validate_table(tab);
  DegeneracyModel m;
  m.form = tab;

  if (tab.a.front() > 0.0) {
    // Nondegenerate cross-check mode: no (WD)/(SD) validation.
    m.kind = DegeneracyKind::NonDegenerate;
    double k = 0.0;
    for (std::size_t i = 1; i < tab.x.size(); ++i) {
      if (tab.a[i] > 0.0) k = std::max(k, tab.x[i] * tab.da[i] / tab.a[i]);
    }
    m.K = k;
    return m;
  }

  double k = 0.0;  // 0/0 at x = 0 resolves to 0
  for (std::size_t i = 1; i < tab.x.size(); ++i) {
    if (tab.a[i] <= 0.0) {
      raise(ErrorKind::RejectedCoefficient,
            "coefficient vanishes at interior node x = " +
                std::to_string(tab.x[i]));
    }
    k = std::max(k, tab.x[i] * tab.da[i] / tab.a[i]);
  }
  if (k >= 2.0) {
    raise(ErrorKind::RejectedCoefficient,
          "smallest admissible K = " + std::to_string(k) + " >= 2");
  }
  m.K = k;
  if (k < 1.0) {
    m.kind = DegeneracyKind::WeaklyDegenerate;
    return m;
  }

  // Strong case: certify a monotonicity exponent on (0, radius].
  m.kind = DegeneracyKind::StronglyDegenerate;
  double theta_inf = std::numeric_limits<double>::infinity();
  std::size_t n_near = 0;
  for (std::size_t i = 1; i < tab.x.size(); ++i) {
    if (tab.x[i] > tab.neighborhood_radius) break;
    theta_inf = std::min(theta_inf, tab.x[i] * tab.da[i] / tab.a[i]);
    ++n_near;
  }
  if (n_near < 2) {
    raise(ErrorKind::RejectedCoefficient,
          "too few samples inside the monotonicity neighborhood");
  }

  double theta;
  if (k > 1.0 + kThetaMargin) {
    theta = std::min(theta_inf, k);
    if (!(theta >= 1.0 + kThetaMargin)) {
      raise(ErrorKind::RejectedCoefficient,
            "no exponent in (1, K] keeps a(x)/x^theta nondecreasing near 0 "
            "(infimum of x a'/a is " +
                std::to_string(theta_inf) + ")");
    }
  } else {
    // K = 1 up to the collar: exponent must live in (0, 1).
    theta = std::min(theta_inf, 1.0 - kThetaMargin);
    if (!(theta >= kThetaMargin)) {
      raise(ErrorKind::RejectedCoefficient,
            "no exponent in (0, 1) keeps a(x)/x^theta nondecreasing near 0");
    }
  }

  // Authoritative sampled-ratio scan.
  double prev = 0.0;
  bool first = true;
  for (std::size_t i = 1; i < tab.x.size(); ++i) {
    if (tab.x[i] > tab.neighborhood_radius) break;
    double q = tab.a[i] / std::pow(tab.x[i], theta);
    if (!first && q < prev * (1.0 - 1e-10)) {
      raise(ErrorKind::RejectedCoefficient,
            "a(x)/x^theta decreases near 0 at x = " + std::to_string(tab.x[i]));
    }
    prev = q;
    first = false;
  }
  m.theta_deg = theta;
  return m;
}

}  // namespace

const char* degeneracy_kind_name(DegeneracyKind k) {
  switch (k) {
    case DegeneracyKind::WeaklyDegenerate: return "weakly_degenerate";
    case DegeneracyKind::StronglyDegenerate: return "strongly_degenerate";
    case DegeneracyKind::NonDegenerate: return "nondegenerate";
  }
  return "unknown";
}

double DegeneracyModel::operator()(double x) const {
  if (const auto* pl = std::get_if<PowerLaw>(&form)) {
    if (pl->alpha == 0.0) return 1.0;
    return x <= 0.0 ? 0.0 : std::pow(x, pl->alpha);
  }
  const auto& tab = std::get<Tabulated>(form);
  return interp(tab.x, tab.a, x);
}

double DegeneracyModel::deriv(double x) const {
  if (const auto* pl = std::get_if<PowerLaw>(&form)) {
    if (pl->alpha == 0.0) return 0.0;
    if (x <= 0.0) return pl->alpha < 1.0 ? 0.0 : (pl->alpha == 1.0 ? 1.0 : 0.0);
    return pl->alpha * std::pow(x, pl->alpha - 1.0);
  }
  const auto& tab = std::get<Tabulated>(form);
  return interp(tab.x, tab.da, x);
}

double DegeneracyModel::domain_right() const {
  if (std::holds_alternative<PowerLaw>(form)) return 1.0;
  return std::get<Tabulated>(form).x.back();
}

double DegeneracyModel::max_value() const {
  if (const auto* pl = std::get_if<PowerLaw>(&form)) {
    (void)pl;
    return (*this)(domain_right());
  }
  const auto& tab = std::get<Tabulated>(form);
  return *std::max_element(tab.a.begin(), tab.a.end());
}

DegeneracyModel classify_degeneracy(const CoefficientFamily& family) {
  if (const auto* pl = std::get_if<PowerLaw>(&family)) {
    return classify_power_law(*pl);
  }
  return classify_tabulated(std::get<Tabulated>(family));
}

double PsiPrimitive::operator()(double x) const {
  if (x <= 0.0) return 0.0;
  if (x < x_small_) {
    // Local power model: P ~ P(x_small) (x/x_small)^{p+1}.
    return ps_.front() * std::pow(x / x_small_, p_small_ + 1.0);
  }
  return interp(xs_, ps_, x);
}

PsiPrimitive c0_and_psi_primitive(const DegeneracyModel& model) {
  const auto integrand = [&model](double x) {
    double a = model(x);
    if (a <= 0.0) return 0.0;  // only reachable at x = 0 limits
    return x / a;
  };

  constexpr int kPanels = 60;
  constexpr int kPointsPerPanel = 8;

  double x_small = std::ldexp(1.0, -kPanels);  // 2^-60

  // Tail below the smallest panel from a fitted power model.
  double f1 = integrand(x_small);
  double f2 = integrand(2.0 * x_small);
  double p = 1.0;
  double tail = 0.0;
  if (f1 > 0.0 && f2 > 0.0) {
    p = std::log(f2 / f1) / std::log(2.0);
    if (p <= -0.999) {
      raise(ErrorKind::DivergentIntegral,
            "x/a(x) is not integrable near 0 (local exponent " +
                std::to_string(p) + ")");
    }
    tail = f1 * x_small / (p + 1.0);
  }

  PsiPrimitive prim;
  prim.x_small_ = x_small;
  prim.p_small_ = p;
  prim.xs_.push_back(x_small);
  prim.ps_.push_back(tail);

  double acc = tail;
  double lo = x_small;
  for (int j = kPanels - 1; j >= 0; --j) {
    double hi = std::ldexp(1.0, -j);
    double step = (hi - lo) / kPointsPerPanel;
    for (int q = 0; q < kPointsPerPanel; ++q) {
      double u = lo + q * step;
      double v = (q == kPointsPerPanel - 1) ? hi : u + step;
      double tol = 1e-14 + 1e-12 * acc;
      acc += adaptive_simpson(integrand, u, v, tol);
      prim.xs_.push_back(v);
      prim.ps_.push_back(acc);
    }
    lo = hi;
  }
  prim.c0_ = acc;
  if (!std::isfinite(acc)) {
    raise(ErrorKind::DivergentIntegral, "quadrature failed to converge");
  }
  return prim;
}

}  // namespace dgc
