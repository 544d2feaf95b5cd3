#include "fuzzylens/fuzzy_engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

namespace fuzzylens {

double Universe::clamp(double x) const {
  if (std::isnan(x)) return lo;
  return std::clamp(x, lo, hi);
}

double Universe::sample(std::size_t i, std::size_t n) const {
  if (n < 2) return lo;
  if (i + 1 >= n) return hi;
  return lo + span() * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::optional<std::size_t> LinguisticVariable::find(std::string_view label) const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].label == label) return i;
  }
  return std::nullopt;
}

namespace {

void validate_variable(const LinguisticVariable& var, const std::string& path, int grid_points) {
  const Universe& u = var.universe;
  if (!std::isfinite(u.lo) || !std::isfinite(u.hi) || !(u.lo < u.hi)) {
    throw ConfigError(path + ".universe: lo must be < hi and both finite");
  }
  if (var.terms.empty()) throw ConfigError(path + ".terms: must not be empty");

  std::set<std::string> seen;
  for (std::size_t i = 0; i < var.terms.size(); ++i) {
    const std::string& label = var.terms[i].label;
    const std::string where = path + ".terms[" + std::to_string(i) + "].label";
    if (label.empty()) throw ConfigError(where + ": must not be empty");
    if (!seen.insert(label).second) throw ConfigError(where + ": duplicate label '" + label + "'");
  }

  const auto n = static_cast<std::size_t>(grid_points);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = u.sample(i, n);
    const bool covered =
        std::any_of(var.terms.begin(), var.terms.end(), [x](const Term& t) { return t.mf(x) > 0.0; });
    if (!covered) {
      std::ostringstream os;
      os << path << ".terms: coverage gap at x=" << x << ", no term has positive membership";
      throw ConfigError(os.str());
    }
  }
}

}  // namespace

FisEngine::FisEngine(LinguisticVariable input, LinguisticVariable output, std::vector<Rule> rules,
                     int grid_points)
    : input_(std::move(input)), output_(std::move(output)), rules_(std::move(rules)), grid_points_(grid_points) {
  if (grid_points_ < kMinGridPoints) {
    throw ConfigError("grid_points: must be >= " + std::to_string(kMinGridPoints));
  }
  validate_variable(input_, "input_variable", grid_points_);
  validate_variable(output_, "output_variable", grid_points_);

  if (rules_.empty()) throw ConfigError("rules: must not be empty");
  std::set<std::string> antecedents;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    const std::string where = "rules[" + std::to_string(i) + "]";
    if (!input_.find(r.antecedent)) throw ConfigError(where + ".if: unknown input term '" + r.antecedent + "'");
    if (!output_.find(r.consequent)) throw ConfigError(where + ".then: unknown output term '" + r.consequent + "'");
    if (!antecedents.insert(r.antecedent).second) {
      throw ConfigError(where + ".if: more than one rule for input term '" + r.antecedent + "'");
    }
  }

  for (std::size_t i = 0; i < input_.terms.size(); ++i) {
    if (!antecedents.contains(input_.terms[i].label)) {
      warnings_.push_back("input_variable.terms[" + std::to_string(i) + "]: term '" + input_.terms[i].label +
                          "' is not used by any rule");
    }
  }
}

double FisEngine::infer(double x) const {
  const auto degrees = fuzzify(input_, x);
  const auto activations = fire_rules(*this, degrees);
  const auto curve = aggregate(*this, activations);
  return defuzzify_centroid(curve, output_.universe);
}

std::vector<TermDegree> fuzzify(const LinguisticVariable& var, double x) {
  const double xc = var.universe.clamp(x);
  std::vector<TermDegree> out;
  out.reserve(var.terms.size());
  for (const Term& t : var.terms) out.push_back({t.label, t.mf(xc)});
  return out;
}

std::vector<Activation> fire_rules(const FisEngine& engine, std::span<const TermDegree> degrees) {
  std::vector<Activation> out;
  for (const Rule& rule : engine.rules()) {
    auto d = std::find_if(degrees.begin(), degrees.end(),
                          [&](const TermDegree& td) { return td.label == rule.antecedent; });
    if (d == degrees.end() || !(d->degree > 0.0)) continue;

    auto same = std::find_if(out.begin(), out.end(),
                             [&](const Activation& a) { return a.consequent == rule.consequent; });
    if (same == out.end()) {
      out.push_back({rule.consequent, d->degree});
    } else {
      same->level = std::max(same->level, d->degree);
    }
  }
  return out;
}

std::vector<double> aggregate(const FisEngine& engine, std::span<const Activation> activations) {
  const auto n = static_cast<std::size_t>(engine.grid_points());
  const LinguisticVariable& out_var = engine.output();
  std::vector<double> curve(n, 0.0);

  for (const Activation& act : activations) {
    const auto idx = out_var.find(act.consequent);
    if (!idx) continue;
    const MembershipFunction& mf = out_var.terms[*idx].mf;
    for (std::size_t i = 0; i < n; ++i) {
      const double clipped = std::min(act.level, mf(out_var.universe.sample(i, n)));
      curve[i] = std::max(curve[i], clipped);
    }
  }
  return curve;
}

double defuzzify_centroid(std::span<const double> curve, const Universe& universe, double fallback) {
  double weighted = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    weighted += universe.sample(i, curve.size()) * curve[i];
    mass += curve[i];
  }
  if (!(mass > 0.0)) return fallback;
  // Rounding can push the ratio a hair past the universe bounds.
  return universe.clamp(weighted / mass);
}

}  // namespace fuzzylens
