#pragma once

#include <string>
#include <variant>

namespace fuzzylens {

struct Gaussian {
  double center = 0.0;
  double sigma = 1.0;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

/// Rises a->b, flat at 1 on [b,c], falls c->d. Equal knots are allowed, so
/// shoulders ({0,0,10,40}) and triangles ({a,b,b,d}) are trapezoids too.
struct Trapezoid {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

/// A validated membership curve. Construct through the factories; the
/// default-constructed value is the standard Gaussian.
class MembershipFunction {
 public:
  MembershipFunction() = default;

  /// Throws std::invalid_argument unless sigma > 0 and both values are finite.
  static MembershipFunction gaussian(double center, double sigma);
  /// Throws std::invalid_argument unless a <= b <= c <= d, all finite.
  static MembershipFunction trapezoid(double a, double b, double c, double d);
  static MembershipFunction triangle(double a, double peak, double c) { return trapezoid(a, peak, peak, c); }

  /// Degree of membership of x, always in [0,1].
  double operator()(double x) const;

  const std::variant<Gaussian, Trapezoid>& shape() const { return shape_; }
  bool is_gaussian() const { return std::holds_alternative<Gaussian>(shape_); }

  std::string describe() const;

  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  explicit MembershipFunction(std::variant<Gaussian, Trapezoid> s) : shape_(s) {}
  std::variant<Gaussian, Trapezoid> shape_;
};

inline double mf_eval(const MembershipFunction& mf, double x) { return mf(x); }

}  // namespace fuzzylens
