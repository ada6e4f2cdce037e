#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "qgt/engine.hpp"

namespace qgt {

// The four measurement-outcome probabilities written as trigonometric
// closed forms in (p, delta, strategies). The general-delta expression for
// t11 is known to deviate from the numeric trace away from delta = pi/2
// (audit_trace_terms quantifies this), which is why payoff evaluation only
// goes through the certified endpoint forms payoff_entangled and
// payoff_product. Values outside [0, 1] are possible for t11 off the
// entangled endpoint and are reported by the audit rather than rejected.
struct TraceTermSet {
  double t00;
  double t01;
  double t10;
  double t11;

  double operator[](std::size_t outcome) const {
    const std::array<const double*, 4> slots{&t00, &t01, &t10, &t11};
    return *slots[outcome];
  }
};

TraceTermSet closed_trace_terms(double p, double delta, const StrategyParams& s1,
                                const StrategyParams& s2);

// Closed-form payoffs for measurement in the entangled basis (delta = pi/2).
PayoffPair payoff_entangled(const GameDefinition& game, double p, const StrategyParams& s1,
                            const StrategyParams& s2);

// Closed-form payoffs for measurement in the product basis (delta = 0).
// Phases enter only through sin(phi1 + phi2).
PayoffPair payoff_product(const GameDefinition& game, double p, const StrategyParams& s1,
                          const StrategyParams& s2);

// Closed-form unilateral-deviation margin for the row player against the
// quantum strategy Q in the entangled basis:
//   payoff_A(Q, Q) - payoff_A(s1, Q)
// Defined for the canonical "pd" and "cg" games only; other games are
// rejected (no closed margin exists for them here).
double ne_margin(const GameDefinition& game, double p, const StrategyParams& s1);

struct AuditPoint {
  double p = 0.0;
  double delta = 0.0;
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;
};

struct TermDeviation {
  double max_abs = 0.0;
  AuditPoint argmax;
};

// Worst observed |closed - numeric| per outcome term, indexed 2a+b.
struct AuditSlice {
  std::array<TermDeviation, 4> terms;
};

struct AuditReport {
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  AuditSlice delta_zero;     // product endpoint
  AuditSlice delta_half_pi;  // entangled endpoint
  AuditSlice interior;       // uniform delta in (0, pi/2)
};

// Draws sample_count random (p, s1, s2) tuples from a seeded deterministic
// stream and compares closed_trace_terms against the numeric engine on
// three delta slices per draw. Equal seeds give bit-identical sample
// sequences.
AuditReport audit_trace_terms(std::size_t sample_count, std::uint64_t seed);

std::string audit_report_json(const AuditReport& report);

}  // namespace qgt
