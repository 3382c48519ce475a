#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dgc {

/// a(x) = x^alpha on [0, domain_right]. alpha = 0 is the constant
/// (nondegenerate) coefficient.
struct PowerLaw {
  double alpha = 0.0;
};

/// Sampled coefficient with derivative samples. Values are interpolated
/// linearly between nodes; nodes must start at x = 0.
struct Tabulated {
  std::vector<double> x;   // sorted, x.front() == 0
  std::vector<double> a;   // a(x_i) >= 0
  std::vector<double> da;  // a'(x_i)
  /// Window (0, radius] on which the strong-degeneracy monotonicity
  /// condition a(x)/x^theta is scanned.
  double neighborhood_radius = 0.2;
};

using CoefficientFamily = std::variant<PowerLaw, Tabulated>;

enum class DegeneracyKind { WeaklyDegenerate, StronglyDegenerate, NonDegenerate };

const char* degeneracy_kind_name(DegeneracyKind k);

/// Classified diffusion coefficient. `K` is the smallest constant with
/// x a'(x) <= K a(x) on the sampled domain; `theta_deg` is the monotonicity
/// exponent certified for strongly degenerate coefficients.
struct DegeneracyModel {
  CoefficientFamily form;
  DegeneracyKind kind = DegeneracyKind::NonDegenerate;
  double K = 0.0;
  std::optional<double> theta_deg;

  double operator()(double x) const;  // a(x)
  double deriv(double x) const;       // a'(x)
  double domain_right() const;
  double max_value() const;
};

/// Classify a coefficient family as weakly degenerate, strongly degenerate
/// or nondegenerate. Throws RejectedCoefficient when no admissible constant
/// exists (K >= 2, a vanishing inside the domain, or a failed strong-case
/// monotonicity scan).
DegeneracyModel classify_degeneracy(const CoefficientFamily& family);

/// Cumulative primitive P(x) = int_0^x y/a(y) dy together with
/// c0 = P(1). Backed by a table refined geometrically toward the
/// degenerate endpoint; below the smallest table point a fitted power model
/// extends P monotonically to P(0) = 0.
class PsiPrimitive {
 public:
  double c0() const { return c0_; }
  double operator()(double x) const;

 private:
  friend PsiPrimitive c0_and_psi_primitive(const DegeneracyModel& model);
  std::vector<double> xs_;
  std::vector<double> ps_;
  double c0_ = 0.0;
  double x_small_ = 0.0;
  double p_small_ = 0.0;  // local exponent of x/a(x) near 0
};

/// Computes (c0, P) for the weight construction with relative quadrature
/// error <= 1e-8. Throws DivergentIntegral when x/a(x) is not integrable.
PsiPrimitive c0_and_psi_primitive(const DegeneracyModel& model);

}  // namespace dgc
