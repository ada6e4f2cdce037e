#include "qgt/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qgt/tolerances.hpp"

namespace qgt {
namespace {

constexpr double kPi = std::numbers::pi;

double checked_angle(double value, double lo, double hi, const char* name) {
  if (!std::isfinite(value) || value < lo - kDomainSlack || value > hi + kDomainSlack) {
    throw std::invalid_argument(std::string(name) + " out of domain [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]: " + std::to_string(value));
  }
  return std::clamp(value, lo, hi);
}

// |v><v| for a 4-component state vector.
ComplexMatrix outer_product(const std::array<Complex, 4>& v) {
  ComplexMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

}  // namespace

StrategyParams::StrategyParams(double theta_in, double phi_in)
    : theta(checked_angle(theta_in, 0.0, kPi, "theta")),
      phi(checked_angle(phi_in, 0.0, kPi / 2.0, "phi")) {}

StrategyParams strategy_cooperate() { return StrategyParams(0.0, 0.0); }
StrategyParams strategy_defect() { return StrategyParams(kPi, 0.0); }
StrategyParams strategy_quantum_q() { return StrategyParams(0.0, kPi / 2.0); }

WernerParameter::WernerParameter(double value_in) : value(value_in) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw std::invalid_argument("werner parameter p must lie in [0, 1], got " +
                                std::to_string(value_in));
  }
}

DensityMatrix werner_state(WernerParameter p) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> psi{Complex{inv_sqrt2, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                                   Complex{0.0, inv_sqrt2}};
  ComplexMatrix mat = outer_product(psi);
  mat *= p.value;
  mat += Complex{(1.0 - p.value) / 4.0, 0.0} * ComplexMatrix::identity(4);
  return validate_density(std::move(mat));
}

ComplexMatrix strategy_unitary(const StrategyParams& s) {
  const double c = std::cos(s.theta / 2.0);
  const double sn = std::sin(s.theta / 2.0);
  ComplexMatrix u(2, 2);
  u(0, 0) = std::polar(c, s.phi);
  u(0, 1) = Complex{sn, 0.0};
  u(1, 0) = Complex{-sn, 0.0};
  u(1, 1) = std::polar(c, -s.phi);
  return u;
}

DensityMatrix evolve(const DensityMatrix& rho, const StrategyParams& s1, const StrategyParams& s2) {
  const ComplexMatrix u = tensor_product(strategy_unitary(s1), strategy_unitary(s2));
  ComplexMatrix out = u * rho.matrix() * adjoint(u);
  try {
    return validate_density(std::move(out));
  } catch (const std::invalid_argument& e) {
    // Unitary conjugation preserves all density invariants, so this only
    // fires on a broken build.
    throw std::runtime_error(std::string("evolve produced an invalid state: ") + e.what());
  }
}

MeasurementBasis measurement_basis(double delta_in) {
  const double delta = checked_angle(delta_in, 0.0, kPi / 2.0, "delta");
  const double c = std::cos(delta / 2.0);
  const double s = std::sin(delta / 2.0);
  const Complex is{0.0, s};

  // |psi_00> = cos(d/2)|00> + i sin(d/2)|11>, |psi_11> = cos(d/2)|11> + i sin(d/2)|00>
  // |psi_01> = cos(d/2)|01> - i sin(d/2)|10>, |psi_10> = cos(d/2)|10> - i sin(d/2)|01>
  const Complex zero{0.0, 0.0};
  const std::array<Complex, 4> psi00{Complex{c, 0.0}, zero, zero, is};
  const std::array<Complex, 4> psi01{zero, Complex{c, 0.0}, -is, zero};
  const std::array<Complex, 4> psi10{zero, -is, Complex{c, 0.0}, zero};
  const std::array<Complex, 4> psi11{is, zero, zero, Complex{c, 0.0}};

  return MeasurementBasis{
      delta,
      {outer_product(psi00), outer_product(psi01), outer_product(psi10), outer_product(psi11)}};
}

std::pair<ComplexMatrix, ComplexMatrix> payoff_operators(const GameDefinition& game,
                                                         const MeasurementBasis& basis) {
  ComplexMatrix op_a(4, 4);
  ComplexMatrix op_b(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const ComplexMatrix& proj = basis.projectors[2 * a + b];
      op_a += Complex{game.payoff_a[a][b], 0.0} * proj;
      op_b += Complex{game.payoff_b[a][b], 0.0} * proj;
    }
  }
  return {op_a, op_b};
}

std::array<double, 4> outcome_probabilities(WernerParameter p, double delta,
                                            const StrategyParams& s1, const StrategyParams& s2) {
  const MeasurementBasis basis = measurement_basis(delta);
  const DensityMatrix rho_f = evolve(werner_state(p), s1, s2);
  std::array<double, 4> probs{};
  for (std::size_t k = 0; k < 4; ++k) {
    probs[k] = trace_of_product(basis.projectors[k], rho_f.matrix()).real();
  }
  return probs;
}

PayoffPair payoffs_numeric(const GameDefinition& game, WernerParameter p, double delta,
                           const StrategyParams& s1, const StrategyParams& s2) {
  const MeasurementBasis basis = measurement_basis(delta);
  const auto [op_a, op_b] = payoff_operators(game, basis);
  const DensityMatrix rho_f = evolve(werner_state(p), s1, s2);
  return PayoffPair{trace_of_product(op_a, rho_f.matrix()).real(),
                    trace_of_product(op_b, rho_f.matrix()).real()};
}

}  // namespace qgt
