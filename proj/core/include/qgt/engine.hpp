#pragma once

#include <array>
#include <utility>

#include "qgt/complex_matrix.hpp"
#include "qgt/density_matrix.hpp"
#include "qgt/game.hpp"

namespace qgt {

// A player's two-parameter strategy (theta, phi) with theta in [0, pi] and
// phi in [0, pi/2]. Values within kDomainSlack of a bound are clamped onto
// it; anything further out is rejected.
struct StrategyParams {
  StrategyParams(double theta, double phi);
  double theta;
  double phi;
};

// The classical strategies and the quantum strategy Q = diag(i, -i) as
// points of the (theta, phi) domain.
StrategyParams strategy_cooperate();  // (0, 0) — first row/column (C or O)
StrategyParams strategy_defect();     // (pi, 0) — second row/column (D or T)
StrategyParams strategy_quantum_q();  // (0, pi/2)

// Mixing weight of the initial state, in [0, 1].
struct WernerParameter {
  explicit WernerParameter(double value);
  double value;
};

// Four orthogonal rank-1 measurement projectors whose basis entanglement
// is set by delta in [0, pi/2]: delta = 0 is the product (computational)
// basis, delta = pi/2 the maximally entangled one. Indexed by outcome
// 2a+b for outcome bits (a, b).
struct MeasurementBasis {
  double delta;
  std::array<ComplexMatrix, 4> projectors;
};

struct PayoffPair {
  double alice;
  double bob;
};

// p * |psi><psi| + (1-p)/4 * I with the pure component
// |psi> = (|00> + i|11>)/sqrt(2). The relative phase i is load-bearing:
// it is what makes the entangled-basis closed forms come out right, and
// the acceptance suite pins it against the alternative convention.
DensityMatrix werner_state(WernerParameter p);

// The 2x2 strategy unitary:
//   U|0> = e^{i phi} cos(theta/2)|0> - sin(theta/2)|1>
//   U|1> = sin(theta/2)|0> + e^{-i phi} cos(theta/2)|1>
ComplexMatrix strategy_unitary(const StrategyParams& s);

// (U1 (x) U2) rho (U1 (x) U2)^dagger, revalidated on the way out.
DensityMatrix evolve(const DensityMatrix& rho, const StrategyParams& s1, const StrategyParams& s2);

MeasurementBasis measurement_basis(double delta);

// Payoff observables P^A, P^B: the projectors weighted by each player's
// payoff entries.
std::pair<ComplexMatrix, ComplexMatrix> payoff_operators(const GameDefinition& game,
                                                         const MeasurementBasis& basis);

// The four outcome probabilities Tr(P_ab rho_f), indexed 2a+b.
std::array<double, 4> outcome_probabilities(WernerParameter p, double delta,
                                            const StrategyParams& s1, const StrategyParams& s2);

// Full numeric route: build the state, apply the strategies, measure.
// This is the ground truth the closed forms are audited against.
PayoffPair payoffs_numeric(const GameDefinition& game, WernerParameter p, double delta,
                           const StrategyParams& s1, const StrategyParams& s2);

}  // namespace qgt
