#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace qgt {

// Which ordering constraints the game's classical form is expected to
// satisfy. Used to pick the element labels (R,S,T,U vs alpha,beta,sigma)
// when extracting the quantized payoff matrix.
enum class FormTemplate { PdOrdering, CgOrdering, BosOrdering, None };

// A 2x2 bimatrix game. payoff_a[r][c] is the row player's (Alice's) payoff
// when Alice plays row r and Bob plays column c; payoff_b likewise for Bob.
struct GameDefinition {
  std::string name;
  std::array<std::array<double, 2>, 2> payoff_a{};
  std::array<std::array<double, 2>, 2> payoff_b{};
  FormTemplate form_template = FormTemplate::None;

  double min_payoff() const;
  double max_payoff() const;
};

// The three canonical games: "pd", "cg", "bos".
GameDefinition canonical_game(std::string_view name);

// Parses the game JSON document:
//   { "name": string, "payoff_a": [[r,s],[t,u]], "payoff_b": [[..],[..]],
//     "form": "pd"|"cg"|"bos"|"none" }
// with row = Alice's strategy index and column = Bob's. Throws
// std::invalid_argument on schema violations or non-finite entries.
GameDefinition game_from_json(std::string_view json_text);

enum class ElementKind { Rstu, AlphaBetaSigma };

// Entries of a (possibly quantized) payoff matrix: four values R,S,T,U or
// three values alpha,beta,sigma depending on kind.
struct PayoffElements {
  ElementKind kind = ElementKind::Rstu;
  std::vector<double> values;

  static PayoffElements rstu(double r, double s, double t, double u);
  static PayoffElements alpha_beta_sigma(double alpha, double beta, double sigma);

  double r() const { return values[0]; }
  double s() const { return values[1]; }
  double t() const { return values[2]; }
  double u() const { return values[3]; }
  double alpha() const { return values[0]; }
  double beta() const { return values[1]; }
  double sigma() const { return values[2]; }
};

enum class StrategicForm { PrisonersDilemma, Chicken, BattleOfSexes, Degenerate };

// Classifies by strict orderings on the elements: T>R>U>S is a prisoners'
// dilemma, T>R>S>U a chicken game, alpha>beta>sigma a battle of the sexes.
// "Strictly greater" means exceeding by more than kNumericTol, so ties
// land in Degenerate.
StrategicForm classify_strategic_form(const PayoffElements& elem);

std::string_view to_string(StrategicForm form);
StrategicForm strategic_form_from_string(std::string_view text);

}  // namespace qgt
