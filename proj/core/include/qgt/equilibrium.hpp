#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgt/engine.hpp"
#include "qgt/game.hpp"

namespace qgt {

struct StrategyProfile {
  StrategyParams s1;
  StrategyParams s2;
};

// Grid-plus-refinement settings for best-response search. Grid ties are
// broken toward the lexicographically smallest (theta, phi) point.
struct SearchConfig {
  std::size_t grid_theta = 65;
  std::size_t grid_phi = 33;
  std::size_t refine_iterations = 20;
  double tolerance = 1e-6;
};

enum class BasisKind { Entangled, Product };

// delta = pi/2 for the entangled basis, 0 for the product basis.
double basis_delta(BasisKind kind);

enum class Player { A, B };

// Evaluates the four classical profiles (both players drawn from
// {cooperate, defect}) and assembles the quantized payoff matrix entries:
// R,S,T,U from Alice's payoffs at (C,C),(C,D),(D,C),(D,D), or
// alpha,beta,sigma at (O,O),(T,T),(O,T) for games on the BoS template.
PayoffElements quantized_payoff_elements(const GameDefinition& game, WernerParameter p,
                                         BasisKind basis);

struct BestResponseResult {
  StrategyParams params;
  double payoff;
};

// Maximizes the responder's payoff against a fixed opponent strategy:
// exhaustive grid over the (theta, phi) domain followed by local
// coordinate refinement with halving steps.
BestResponseResult best_response(const GameDefinition& game, WernerParameter p, double delta,
                                 const StrategyParams& opponent, Player responder,
                                 const SearchConfig& cfg = {});

struct NashVerdict {
  bool is_nash;
  double max_violation;
  Player deviating_player;          // the player with the larger gain
  BestResponseResult best_deviation;
};

// Checks both players' unilateral-deviation gains via best_response;
// accepts the profile when the larger gain is at most cfg.tolerance.
NashVerdict is_nash(const GameDefinition& game, WernerParameter p, double delta,
                    const StrategyProfile& profile, const SearchConfig& cfg = {});

struct SweepRecord {
  double p;
  PayoffElements elements;
  StrategicForm form;
};

// One record per p: the quantized payoff elements and their strategic-form
// classification.
std::vector<SweepRecord> preservation_sweep(const GameDefinition& game, BasisKind basis,
                                            std::span<const double> p_grid);

}  // namespace qgt
