#pragma once

#include "ccx/types.hpp"

#include <optional>
#include <string>

namespace ccx {

/// A sublinear gauge t -> kappa(t) with kappa(t) >= 1, monotone
/// non-decreasing and concave. Construction validates the shape conditions
/// on a sampled grid and rejects parameters that break sublinearity.
class KappaFunction {
 public:
  enum class Name { Constant, Log2p1, Sqrt, Power };

  static KappaFunction constant(double scale = 1.0);
  static KappaFunction log2p1(double scale = 1.0);
  static KappaFunction sqrt(double scale = 1.0);
  static KappaFunction power(double exponent, double scale = 1.0);

  /// Parse a CLI spec: "constant" | "log2p1" | "sqrt" | "power:<p>".
  static KappaFunction parse(const std::string& spec);

  double operator()(double t) const;

  Name name() const { return name_; }
  double exponent() const { return exponent_; }
  double scale() const { return scale_; }
  std::string label() const;

  /// Multiplicative comparability constants (d1, d2) such that
  /// d(x, y) <= d0 * kappa(x) implies d1 * kappa(x) <= kappa(y) <= d2 * kappa(x)
  /// over a sampled grid. Both are finite for every valid gauge.
  std::pair<double, double> comparability(double d0) const;

  /// True if this gauge is pointwise <= other on a sampled grid.
  bool dominated_by(const KappaFunction& other) const;

 private:
  KappaFunction(Name name, double exponent, double scale);
  double raw(double t) const;
  void validate() const;

  Name name_;
  double exponent_;
  double scale_;
};

KappaFunction make_kappa(const std::string& name, std::optional<double> exponent = std::nullopt,
                         double scale = 1.0);

}  // namespace ccx
