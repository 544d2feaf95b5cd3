#include "fuzzylens/membership.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fuzzylens {

MembershipFunction MembershipFunction::gaussian(double center, double sigma) {
  if (!std::isfinite(center)) throw std::invalid_argument("center: must be finite");
  if (!std::isfinite(sigma) || !(sigma > 0.0)) throw std::invalid_argument("sigma: must be > 0");
  return MembershipFunction(Gaussian{center, sigma});
}

MembershipFunction MembershipFunction::trapezoid(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw std::invalid_argument("points: must be finite");
  }
  if (!(a <= b && b <= c && c <= d)) throw std::invalid_argument("points: must satisfy a <= b <= c <= d");
  return MembershipFunction(Trapezoid{a, b, c, d});
}

namespace {

double eval(const Gaussian& g, double x) {
  const double z = (x - g.center) / g.sigma;
  return std::exp(-0.5 * z * z);
}

// Plateau is tested first so vertical edges (a == b or c == d) take the
// plateau value at the knot.
double eval(const Trapezoid& t, double x) {
  if (x >= t.b && x <= t.c) return 1.0;
  if (x > t.a && x < t.b) return (x - t.a) / (t.b - t.a);
  if (x > t.c && x < t.d) return (t.d - x) / (t.d - t.c);
  return 0.0;
}

}  // namespace

double MembershipFunction::operator()(double x) const {
  return std::visit([x](const auto& s) { return eval(s, x); }, shape_);
}

std::string MembershipFunction::describe() const {
  std::ostringstream os;
  if (const auto* g = std::get_if<Gaussian>(&shape_)) {
    os << "gaussian(center=" << g->center << ", sigma=" << g->sigma << ")";
  } else {
    const auto& t = std::get<Trapezoid>(shape_);
    os << "trapezoid(" << t.a << ", " << t.b << ", " << t.c << ", " << t.d << ")";
  }
  return os.str();
}

}  // namespace fuzzylens
