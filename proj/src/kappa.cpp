#include "ccx/kappa.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace ccx {

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> out;
  if (k >= n) {
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
  }
  // Floyd's sampling
  std::vector<bool> taken(n, false);
  for (std::size_t j = n - k; j < n; ++j) {
    std::size_t t = rng.below(j + 1);
    if (taken[t]) t = j;
    taken[t] = true;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

KappaFunction::KappaFunction(Name name, double exponent, double scale)
    : name_(name), exponent_(exponent), scale_(scale) {
  validate();
}

KappaFunction KappaFunction::constant(double scale) {
  return KappaFunction(Name::Constant, 0.0, scale);
}
KappaFunction KappaFunction::log2p1(double scale) { return KappaFunction(Name::Log2p1, 0.0, scale); }
KappaFunction KappaFunction::sqrt(double scale) { return KappaFunction(Name::Sqrt, 0.5, scale); }
KappaFunction KappaFunction::power(double exponent, double scale) {
  return KappaFunction(Name::Power, exponent, scale);
}

KappaFunction KappaFunction::parse(const std::string& spec) {
  if (spec == "constant") return constant();
  if (spec == "log2p1") return log2p1();
  if (spec == "sqrt") return sqrt();
  if (spec.rfind("power:", 0) == 0) {
    double p = 0.0;
    try {
      p = std::stod(spec.substr(6));
    } catch (const std::exception&) {
      fail(Fault::BadParameter, "bad power exponent in kappa spec: " + spec);
    }
    return power(p);
  }
  fail(Fault::BadParameter, "unknown kappa spec: " + spec);
}

KappaFunction make_kappa(const std::string& name, std::optional<double> exponent, double scale) {
  if (name == "constant") return KappaFunction::constant(scale);
  if (name == "log2p1") return KappaFunction::log2p1(scale);
  if (name == "sqrt") return KappaFunction::sqrt(scale);
  if (name == "power") {
    if (!exponent) fail(Fault::BadParameter, "power gauge needs an exponent");
    return KappaFunction::power(*exponent, scale);
  }
  fail(Fault::BadParameter, "unknown kappa name: " + name);
}

double KappaFunction::raw(double t) const {
  switch (name_) {
    case Name::Constant:
      return scale_;
    case Name::Log2p1:
      return scale_ * std::log2(t + 1.0);
    case Name::Sqrt:
    case Name::Power:
      return scale_ * std::pow(t, exponent_);
  }
  return 1.0;
}

double KappaFunction::operator()(double t) const {
  if (t < 0.0) t = 0.0;
  return std::max(1.0, raw(t));
}

std::string KappaFunction::label() const {
  switch (name_) {
    case Name::Constant:
      return "constant";
    case Name::Log2p1:
      return "log2p1";
    case Name::Sqrt:
      return "sqrt";
    case Name::Power:
      return fmt::format("power:{:.6g}", exponent_);
  }
  return "?";
}

void KappaFunction::validate() const {
  if (scale_ <= 0.0) fail(Fault::BadParameter, "kappa scale must be positive");
  if (name_ == Name::Power || name_ == Name::Sqrt) {
    if (exponent_ < 0.0 || exponent_ >= 1.0)
      fail(Fault::BadParameter, "power exponent must lie in [0,1) to stay sublinear");
  }
  // Shape checks on a doubling grid: monotone, concave scaling, sublinear.
  const auto& k = *this;
  double prev = k(0.0);
  for (int i = 0; i <= 40; ++i) {
    double t = std::ldexp(1.0, i) - 1.0;
    double v = k(t);
    if (v + 1e-12 < prev) fail(Fault::BadParameter, "kappa not monotone on grid");
    prev = v;
    for (double a : {1.5, 2.0, 4.0, 10.0}) {
      if (k(a * t) > a * k(t) + 1e-9) fail(Fault::BadParameter, "kappa fails concave scaling");
    }
  }
  // kappa(t)/t must fall below any fixed epsilon eventually.
  double tail = k(std::ldexp(1.0, 40)) / std::ldexp(1.0, 40);
  if (tail > 1e-3) fail(Fault::BadParameter, "kappa is not sublinear");
}

std::pair<double, double> KappaFunction::comparability(double d0) const {
  const auto& k = *this;
  double d1 = 1.0, d2 = 1.0;
  for (int i = 0; i <= 32; ++i) {
    double x = std::ldexp(1.0, i) - 1.0;
    double span = d0 * k(x);
    for (double y : {x - span, x + span}) {
      double ratio = k(std::max(0.0, y)) / k(x);
      d1 = std::min(d1, ratio);
      d2 = std::max(d2, ratio);
    }
  }
  return {d1, d2};
}

bool KappaFunction::dominated_by(const KappaFunction& other) const {
  for (int i = 0; i <= 40; ++i) {
    double t = std::ldexp(1.0, i) - 1.0;
    if ((*this)(t) > other(t) + 1e-9) return false;
  }
  return true;
}

}  // namespace ccx
