#include "qgt/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgt {
namespace {

constexpr double kPi = std::numbers::pi;

void check_config(const SearchConfig& cfg) {
  if (cfg.grid_theta < 2 || cfg.grid_phi < 2) {
    throw std::invalid_argument("search grid needs at least 2 points per axis");
  }
  if (!(cfg.tolerance > 0.0)) {
    throw std::invalid_argument("search tolerance must be positive");
  }
}

// Fixes the initial state and the responder's payoff operator once, so the
// search loop only pays for the per-strategy evolution and trace.
class ResponderPayoff {
 public:
  ResponderPayoff(const GameDefinition& game, WernerParameter p, double delta,
                  const StrategyParams& opponent, Player responder)
      : rho_in_(werner_state(p)), opponent_(opponent), responder_(responder) {
    const auto ops = payoff_operators(game, measurement_basis(delta));
    op_ = responder == Player::A ? ops.first : ops.second;
  }

  double operator()(const StrategyParams& s) const {
    const DensityMatrix rho_f = responder_ == Player::A ? evolve(rho_in_, s, opponent_)
                                                        : evolve(rho_in_, opponent_, s);
    return trace_of_product(op_, rho_f.matrix()).real();
  }

 private:
  DensityMatrix rho_in_;
  ComplexMatrix op_{4, 4};
  StrategyParams opponent_;
  Player responder_;
};

}  // namespace

double basis_delta(BasisKind kind) { return kind == BasisKind::Entangled ? kPi / 2.0 : 0.0; }

PayoffElements quantized_payoff_elements(const GameDefinition& game, WernerParameter p,
                                         BasisKind basis) {
  const double delta = basis_delta(basis);
  const StrategyParams first = strategy_cooperate();
  const StrategyParams second = strategy_defect();

  const double at_cc = payoffs_numeric(game, p, delta, first, first).alice;
  const double at_cd = payoffs_numeric(game, p, delta, first, second).alice;
  const double at_dc = payoffs_numeric(game, p, delta, second, first).alice;
  const double at_dd = payoffs_numeric(game, p, delta, second, second).alice;

  if (game.form_template == FormTemplate::BosOrdering) {
    return PayoffElements::alpha_beta_sigma(at_cc, at_dd, at_cd);
  }
  return PayoffElements::rstu(at_cc, at_cd, at_dc, at_dd);
}

BestResponseResult best_response(const GameDefinition& game, WernerParameter p, double delta,
                                 const StrategyParams& opponent, Player responder,
                                 const SearchConfig& cfg) {
  check_config(cfg);
  const ResponderPayoff payoff(game, p, delta, opponent, responder);

  const double theta_step = kPi / static_cast<double>(cfg.grid_theta - 1);
  const double phi_step = (kPi / 2.0) / static_cast<double>(cfg.grid_phi - 1);

  StrategyParams best(0.0, 0.0);
  double best_value = payoff(best);
  for (std::size_t i = 0; i < cfg.grid_theta; ++i) {
    const double theta = std::min(static_cast<double>(i) * theta_step, kPi);
    for (std::size_t j = 0; j < cfg.grid_phi; ++j) {
      if (i == 0 && j == 0) continue;
      const double phi = std::min(static_cast<double>(j) * phi_step, kPi / 2.0);
      const StrategyParams candidate(theta, phi);
      const double value = payoff(candidate);
      if (value > best_value) {
        best_value = value;
        best = candidate;
      }
    }
  }

  double step_theta = theta_step;
  double step_phi = phi_step;
  for (std::size_t it = 0; it < cfg.refine_iterations; ++it) {
    const std::array<StrategyParams, 4> candidates{
        StrategyParams(std::max(best.theta - step_theta, 0.0), best.phi),
        StrategyParams(std::min(best.theta + step_theta, kPi), best.phi),
        StrategyParams(best.theta, std::max(best.phi - step_phi, 0.0)),
        StrategyParams(best.theta, std::min(best.phi + step_phi, kPi / 2.0))};
    for (const StrategyParams& candidate : candidates) {
      const double value = payoff(candidate);
      if (value > best_value) {
        best_value = value;
        best = candidate;
      }
    }
    step_theta /= 2.0;
    step_phi /= 2.0;
  }
  return BestResponseResult{best, best_value};
}

NashVerdict is_nash(const GameDefinition& game, WernerParameter p, double delta,
                    const StrategyProfile& profile, const SearchConfig& cfg) {
  check_config(cfg);
  const PayoffPair at_profile = payoffs_numeric(game, p, delta, profile.s1, profile.s2);

  const BestResponseResult br_a = best_response(game, p, delta, profile.s2, Player::A, cfg);
  const BestResponseResult br_b = best_response(game, p, delta, profile.s1, Player::B, cfg);
  const double gain_a = br_a.payoff - at_profile.alice;
  const double gain_b = br_b.payoff - at_profile.bob;

  NashVerdict verdict{
      std::max(gain_a, gain_b) <= cfg.tolerance,
      std::max(gain_a, gain_b),
      gain_a >= gain_b ? Player::A : Player::B,
      gain_a >= gain_b ? br_a : br_b,
  };
  return verdict;
}

std::vector<SweepRecord> preservation_sweep(const GameDefinition& game, BasisKind basis,
                                            std::span<const double> p_grid) {
  std::vector<SweepRecord> records;
  records.reserve(p_grid.size());
  for (double p : p_grid) {
    PayoffElements elements = quantized_payoff_elements(game, WernerParameter(p), basis);
    const StrategicForm form = classify_strategic_form(elements);
    records.push_back(SweepRecord{p, std::move(elements), form});
  }
  return records;
}

}  // namespace qgt
