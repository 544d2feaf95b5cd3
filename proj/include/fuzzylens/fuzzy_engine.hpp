#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzylens/membership.hpp"

namespace fuzzylens {

/// Raised for any invalid fuzzy system description. The message starts with
/// the path of the offending field, e.g. "rules[3].then: unknown output term".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Universe {
  double lo = 0.0;
  double hi = 1.0;

  double clamp(double x) const;
  double span() const { return hi - lo; }
  /// i-th of n evenly spaced samples, both endpoints included.
  double sample(std::size_t i, std::size_t n) const;
  friend bool operator==(const Universe&, const Universe&) = default;
};

struct Term {
  std::string label;
  MembershipFunction mf;
  friend bool operator==(const Term&, const Term&) = default;
};

struct LinguisticVariable {
  std::string name;
  Universe universe;
  std::vector<Term> terms;

  std::optional<std::size_t> find(std::string_view label) const;
  friend bool operator==(const LinguisticVariable&, const LinguisticVariable&) = default;
};

/// IF input is `antecedent` THEN output is `consequent`.
struct Rule {
  std::string antecedent;
  std::string consequent;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct TermDegree {
  std::string label;
  double degree = 0.0;
};

struct Activation {
  std::string consequent;
  double level = 0.0;
};

inline constexpr int kDefaultGridPoints = 1001;
inline constexpr int kMinGridPoints = 101;

/// Single-input single-output Mamdani system: min implication, max
/// aggregation, centroid defuzzification on a sampled output universe.
///
/// Construction validates everything (labels, rule targets, coverage of both
/// universes) and throws ConfigError on the first problem. The engine is
/// immutable afterwards, so one instance can be shared by any number of
/// threads calling infer().
class FisEngine {
 public:
  FisEngine(LinguisticVariable input, LinguisticVariable output, std::vector<Rule> rules,
            int grid_points = kDefaultGridPoints);

  const LinguisticVariable& input() const { return input_; }
  const LinguisticVariable& output() const { return output_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int grid_points() const { return grid_points_; }

  /// Non-fatal findings, e.g. input terms no rule refers to.
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Crisp output for x (clamped into the input universe).
  double infer(double x) const;

 private:
  LinguisticVariable input_;
  LinguisticVariable output_;
  std::vector<Rule> rules_;
  int grid_points_;
  std::vector<std::string> warnings_;
};

/// One entry per term of `var`, in term order. x is clamped to the universe.
std::vector<TermDegree> fuzzify(const LinguisticVariable& var, double x);

/// Activations of the rules whose antecedent degree is positive. Rules that
/// share a consequent are OR-ed (max). Output is in first-appearance order.
std::vector<Activation> fire_rules(const FisEngine& engine, std::span<const TermDegree> degrees);

/// Max over activations of min(level, consequent mf), sampled at
/// engine.grid_points() points of the output universe.
std::vector<double> aggregate(const FisEngine& engine, std::span<const Activation> activations);

/// Sum(y * mu) / Sum(mu) over the grid implied by curve.size(). Returns
/// `fallback` when the curve has no mass.
double defuzzify_centroid(std::span<const double> curve, const Universe& universe, double fallback = 0.0);

inline double infer(const FisEngine& engine, double x) { return engine.infer(x); }

}  // namespace fuzzylens
