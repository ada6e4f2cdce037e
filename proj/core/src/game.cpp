#include "qgt/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qgt/tolerances.hpp"

namespace qgt {
namespace {

bool strictly_greater(double a, double b) { return a > b + kNumericTol; }

std::array<std::array<double, 2>, 2> payoff_block(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != 2) {
    throw std::invalid_argument(std::string("game JSON: '") + key + "' must be a 2x2 array");
  }
  std::array<std::array<double, 2>, 2> out{};
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& row = doc[key][r];
    if (!row.is_array() || row.size() != 2) {
      throw std::invalid_argument(std::string("game JSON: '") + key + "' must be a 2x2 array");
    }
    for (std::size_t c = 0; c < 2; ++c) {
      if (!row[c].is_number()) {
        throw std::invalid_argument(std::string("game JSON: '") + key + "' entries must be numbers");
      }
      out[r][c] = row[c].get<double>();
      if (!std::isfinite(out[r][c])) {
        throw std::invalid_argument(std::string("game JSON: '") + key + "' entries must be finite");
      }
    }
  }
  return out;
}

FormTemplate template_from_string(std::string_view text) {
  if (text == "pd") return FormTemplate::PdOrdering;
  if (text == "cg") return FormTemplate::CgOrdering;
  if (text == "bos") return FormTemplate::BosOrdering;
  if (text == "none") return FormTemplate::None;
  throw std::invalid_argument("game JSON: 'form' must be one of pd|cg|bos|none");
}

}  // namespace

double GameDefinition::min_payoff() const {
  double m = payoff_a[0][0];
  for (const auto& mat : {payoff_a, payoff_b})
    for (const auto& row : mat)
      for (double v : row) m = std::min(m, v);
  return m;
}

double GameDefinition::max_payoff() const {
  double m = payoff_a[0][0];
  for (const auto& mat : {payoff_a, payoff_b})
    for (const auto& row : mat)
      for (double v : row) m = std::max(m, v);
  return m;
}

GameDefinition canonical_game(std::string_view name) {
  if (name == "pd") {
    return GameDefinition{"pd", {{{3, 0}, {5, 1}}}, {{{3, 5}, {0, 1}}}, FormTemplate::PdOrdering};
  }
  if (name == "cg") {
    return GameDefinition{"cg", {{{3, 1}, {4, 0}}}, {{{3, 4}, {1, 0}}}, FormTemplate::CgOrdering};
  }
  if (name == "bos") {
    return GameDefinition{"bos", {{{2, 0}, {0, 1}}}, {{{1, 0}, {0, 2}}}, FormTemplate::BosOrdering};
  }
  throw std::invalid_argument("unknown canonical game '" + std::string(name) +
                              "' (expected pd, cg or bos)");
}

GameDefinition game_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("game JSON: parse error: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("game JSON: document must be an object");
  }
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw std::invalid_argument("game JSON: 'name' must be a string");
  }

  GameDefinition game;
  game.name = doc["name"].get<std::string>();
  game.payoff_a = payoff_block(doc, "payoff_a");
  game.payoff_b = payoff_block(doc, "payoff_b");
  game.form_template =
      doc.contains("form") ? template_from_string(doc["form"].get<std::string>()) : FormTemplate::None;
  return game;
}

PayoffElements PayoffElements::rstu(double r, double s, double t, double u) {
  return PayoffElements{ElementKind::Rstu, {r, s, t, u}};
}

PayoffElements PayoffElements::alpha_beta_sigma(double alpha, double beta, double sigma) {
  return PayoffElements{ElementKind::AlphaBetaSigma, {alpha, beta, sigma}};
}

StrategicForm classify_strategic_form(const PayoffElements& elem) {
  for (double v : elem.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("payoff elements must be finite");
  }
  if (elem.kind == ElementKind::AlphaBetaSigma) {
    if (elem.values.size() != 3) throw std::invalid_argument("alpha/beta/sigma needs 3 values");
    if (strictly_greater(elem.alpha(), elem.beta()) && strictly_greater(elem.beta(), elem.sigma())) {
      return StrategicForm::BattleOfSexes;
    }
    return StrategicForm::Degenerate;
  }
  if (elem.values.size() != 4) throw std::invalid_argument("R/S/T/U needs 4 values");
  if (strictly_greater(elem.t(), elem.r()) && strictly_greater(elem.r(), elem.u()) &&
      strictly_greater(elem.u(), elem.s())) {
    return StrategicForm::PrisonersDilemma;
  }
  if (strictly_greater(elem.t(), elem.r()) && strictly_greater(elem.r(), elem.s()) &&
      strictly_greater(elem.s(), elem.u())) {
    return StrategicForm::Chicken;
  }
  return StrategicForm::Degenerate;
}

std::string_view to_string(StrategicForm form) {
  switch (form) {
    case StrategicForm::PrisonersDilemma: return "PrisonersDilemma";
    case StrategicForm::Chicken: return "Chicken";
    case StrategicForm::BattleOfSexes: return "BattleOfSexes";
    case StrategicForm::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

StrategicForm strategic_form_from_string(std::string_view text) {
  if (text == "PrisonersDilemma") return StrategicForm::PrisonersDilemma;
  if (text == "Chicken") return StrategicForm::Chicken;
  if (text == "BattleOfSexes") return StrategicForm::BattleOfSexes;
  if (text == "Degenerate") return StrategicForm::Degenerate;
  throw std::invalid_argument("unknown strategic form '" + std::string(text) + "'");
}

}  // namespace qgt
