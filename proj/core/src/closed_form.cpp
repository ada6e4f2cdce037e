#include "qgt/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qgt/random.hpp"

namespace qgt {
namespace {

constexpr double kPi = std::numbers::pi;

struct Brackets {
  double b00, b01, b10, b11;
};

// The four squared-amplitude weights of the entangled-basis payoff; each
// player's payoff is the weighted sum of their own matrix entries.
Brackets entangled_brackets(const StrategyParams& s1, const StrategyParams& s2) {
  const double c1 = std::cos(s1.theta / 2.0), n1 = std::sin(s1.theta / 2.0);
  const double c2 = std::cos(s2.theta / 2.0), n2 = std::sin(s2.theta / 2.0);
  const double phi_sum = s1.phi + s2.phi;

  const double b00 = std::pow(std::cos(phi_sum) * c1 * c2, 2);
  const double b01 = std::pow(std::cos(s1.phi) * c1 * n2 - std::sin(s2.phi) * n1 * c2, 2);
  const double b10 = std::pow(std::sin(s1.phi) * c1 * n2 - std::cos(s2.phi) * n1 * c2, 2);
  const double b11 = std::pow(c1 * c2 * std::sin(phi_sum) + n1 * n2, 2);
  return {b00, b01, b10, b11};
}

double weighted_payoff(const std::array<std::array<double, 2>, 2>& entries, double p,
                       const Brackets& br) {
  const double total = entries[0][0] + entries[0][1] + entries[1][0] + entries[1][1];
  return p * (entries[0][0] * br.b00 + entries[0][1] * br.b01 + entries[1][0] * br.b10 +
              entries[1][1] * br.b11) +
         (1.0 - p) / 4.0 * total;
}

void check_p(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
}

nlohmann::ordered_json slice_json(const AuditSlice& slice) {
  static constexpr std::array<const char*, 4> names{"t00", "t01", "t10", "t11"};
  nlohmann::ordered_json out;
  for (std::size_t k = 0; k < 4; ++k) {
    const TermDeviation& term = slice.terms[k];
    out[names[k]] = {{"max_abs_deviation", term.max_abs},
                     {"argmax",
                      {{"p", term.argmax.p},
                       {"delta", term.argmax.delta},
                       {"theta1", term.argmax.theta1},
                       {"phi1", term.argmax.phi1},
                       {"theta2", term.argmax.theta2},
                       {"phi2", term.argmax.phi2}}}};
  }
  return out;
}

}  // namespace

TraceTermSet closed_trace_terms(double p, double delta, const StrategyParams& s1,
                                const StrategyParams& s2) {
  check_p(p);
  const double c1 = std::cos(s1.theta / 2.0), n1 = std::sin(s1.theta / 2.0);
  const double c2 = std::cos(s2.theta / 2.0), n2 = std::sin(s2.theta / 2.0);
  const double sd = std::sin(delta);
  const double phi_sum = s1.phi + s2.phi;
  const double sin_t1 = std::sin(s1.theta), sin_t2 = std::sin(s2.theta);
  const double f1 = s1.phi, f2 = s2.phi;

  const double t00 =
      p * ((1.0 - std::pow(std::sin(phi_sum), 2) * sd) * c1 * c1 * c2 * c2 +
           (sd - 1.0) / 2.0 *
               (c1 * c1 + c2 * c2 - 0.5 * sin_t1 * sin_t2 * std::sin(phi_sum)) -
           sd / 2.0) +
      (1.0 + p) / 4.0;

  const double t01 =
      p * ((1.0 + std::cos(2.0 * f1) * sd) / 2.0 * c1 * c1 * n2 * n2 +
           (1.0 - std::cos(2.0 * f2) * sd) / 2.0 * n1 * n1 * c2 * c2 +
           ((-1.0 + sd) * std::sin(f1) * std::cos(f2) - (1.0 + sd) * std::cos(f1) * std::sin(f2)) /
               4.0 * sin_t1 * sin_t2) +
      (1.0 - p) / 4.0;

  const double t10 =
      p * ((1.0 - std::cos(2.0 * f1) * sd) / 2.0 * c1 * c1 * n2 * n2 +
           (1.0 + std::cos(2.0 * f2) * sd) / 2.0 * n1 * n1 * c2 * c2 -
           ((1.0 + sd) * std::sin(f1) * std::cos(f2) + (1.0 - sd) * std::cos(f1) * std::sin(f2)) /
               4.0 * sin_t1 * sin_t2) +
      (1.0 - p) / 4.0;

  // Kept exactly as the closed form states it; its general-delta first term
  // is what the audit flags away from delta = pi/2.
  const double t11 =
      p * ((1.0 - std::pow(std::cos(phi_sum), 2) * sd) * c1 * c1 * c2 * c2 +
           (sd + 1.0) / 2.0 * (n1 * n1 * n2 * n2 + 0.5 * sin_t1 * sin_t2 * std::sin(phi_sum))) +
      (1.0 - p) / 4.0;

  return TraceTermSet{t00, t01, t10, t11};
}

PayoffPair payoff_entangled(const GameDefinition& game, double p, const StrategyParams& s1,
                            const StrategyParams& s2) {
  check_p(p);
  const Brackets br = entangled_brackets(s1, s2);
  return PayoffPair{weighted_payoff(game.payoff_a, p, br), weighted_payoff(game.payoff_b, p, br)};
}

PayoffPair payoff_product(const GameDefinition& game, double p, const StrategyParams& s1,
                          const StrategyParams& s2) {
  check_p(p);
  const double c1 = std::cos(s1.theta / 2.0), n1 = std::sin(s1.theta / 2.0);
  const double c2 = std::cos(s2.theta / 2.0), n2 = std::sin(s2.theta / 2.0);
  const double cross = 0.5 * std::sin(s1.theta) * std::sin(s2.theta) * std::sin(s1.phi + s2.phi);

  const double matched = c1 * c1 * c2 * c2 + n1 * n1 * n2 * n2 + cross;
  const double mismatched = c1 * c1 * n2 * n2 + n1 * n1 * c2 * c2 - cross;

  const auto one = [&](const std::array<std::array<double, 2>, 2>& e) {
    const double total = e[0][0] + e[0][1] + e[1][0] + e[1][1];
    return p / 2.0 * ((e[0][0] + e[1][1]) * matched + (e[0][1] + e[1][0]) * mismatched) +
           (1.0 - p) / 4.0 * total;
  };
  return PayoffPair{one(game.payoff_a), one(game.payoff_b)};
}

double ne_margin(const GameDefinition& game, double p, const StrategyParams& s1) {
  check_p(p);
  const double c1sq = std::pow(std::cos(s1.theta / 2.0), 2);
  const double n1sq = std::pow(std::sin(s1.theta / 2.0), 2);
  const double cos_phi_sq = std::pow(std::cos(s1.phi), 2);
  if (game.name == "pd") {
    return p * (3.0 * n1sq + 2.0 * c1sq * cos_phi_sq);
  }
  if (game.name == "cg") {
    return p * (2.0 + c1sq * (3.0 * cos_phi_sq - 2.0));
  }
  throw std::invalid_argument("ne_margin: no closed-form margin for game '" + game.name + "'");
}

AuditReport audit_trace_terms(std::size_t sample_count, std::uint64_t seed) {
  AuditReport report;
  report.sample_count = sample_count;
  report.seed = seed;

  UniformStream stream(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const double p = stream.next();
    const StrategyParams s1(stream.next(0.0, kPi), stream.next(0.0, kPi / 2.0));
    const StrategyParams s2(stream.next(0.0, kPi), stream.next(0.0, kPi / 2.0));
    const double interior_delta = stream.next(0.0, kPi / 2.0);

    const auto record = [&](AuditSlice& slice, double delta) {
      const TraceTermSet closed = closed_trace_terms(p, delta, s1, s2);
      const std::array<double, 4> numeric = outcome_probabilities(WernerParameter(p), delta, s1, s2);
      for (std::size_t k = 0; k < 4; ++k) {
        const double dev = std::abs(closed[k] - numeric[k]);
        if (dev > slice.terms[k].max_abs) {
          slice.terms[k].max_abs = dev;
          slice.terms[k].argmax = AuditPoint{p, delta, s1.theta, s1.phi, s2.theta, s2.phi};
        }
      }
    };

    record(report.delta_zero, 0.0);
    record(report.delta_half_pi, kPi / 2.0);
    record(report.interior, interior_delta);
  }
  return report;
}

std::string audit_report_json(const AuditReport& report) {
  nlohmann::ordered_json doc;
  doc["sample_count"] = report.sample_count;
  doc["seed"] = report.seed;
  doc["slices"] = nlohmann::ordered_json::object();
  if (report.sample_count > 0) {
    doc["slices"]["delta=0"] = slice_json(report.delta_zero);
    doc["slices"]["delta=pi/2"] = slice_json(report.delta_half_pi);
    doc["slices"]["interior"] = slice_json(report.interior);
  }
  return doc.dump(2);
}

}  // namespace qgt
