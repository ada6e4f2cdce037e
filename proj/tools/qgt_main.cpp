// Command-line front end: payoff evaluation, payoff-element sweeps,
// Nash-equilibrium checks and the numeric validation suite.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgt/closed_form.hpp"
#include "qgt/equilibrium.hpp"
#include "qgt/random.hpp"
#include "qgt/sweep_io.hpp"
#include "qgt/tolerances.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) { return qgt::format_number(v); }

qgt::GameDefinition load_game(const std::string& spec) {
  if (spec == "pd" || spec == "cg" || spec == "bos") {
    return qgt::canonical_game(spec);
  }
  std::ifstream in(spec);
  if (!in) {
    throw IoError("cannot open game file '" + spec + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return qgt::game_from_json(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " (in '" + spec + "')");
  }
}

double resolve_delta(const std::string& basis, const std::optional<double>& delta) {
  if (!basis.empty() && delta.has_value()) {
    throw UsageError("--basis and --delta are mutually exclusive");
  }
  if (!basis.empty()) {
    if (basis == "entangled") return kPi / 2.0;
    if (basis == "product") return 0.0;
    throw UsageError("--basis must be 'entangled' or 'product'");
  }
  if (delta.has_value()) return *delta;
  throw UsageError("one of --basis or --delta is required");
}

qgt::BasisKind resolve_basis_kind(const std::string& basis) {
  if (basis == "entangled") return qgt::BasisKind::Entangled;
  if (basis == "product") return qgt::BasisKind::Product;
  throw UsageError("--basis must be 'entangled' or 'product'");
}

// "start:stop:steps" with inclusive endpoints; steps is the point count.
std::vector<double> parse_p_grid(const std::string& text) {
  const auto bad = [&] { return UsageError("--p-grid must be start:stop:steps, got '" + text + "'"); };
  const std::size_t first = text.find(':');
  const std::size_t second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw bad();
  }
  double start = 0.0, stop = 0.0;
  long steps = 0;
  try {
    std::size_t used = 0;
    start = std::stod(text.substr(0, first), &used);
    if (used != first) throw bad();
    stop = std::stod(text.substr(first + 1, second - first - 1), &used);
    if (used != second - first - 1) throw bad();
    const std::string steps_text = text.substr(second + 1);
    steps = std::stol(steps_text, &used);
    if (used != steps_text.size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (steps < 1) throw UsageError("--p-grid needs at least one step");
  if (steps == 1) {
    if (start != stop) throw UsageError("--p-grid with one step requires start == stop");
    return {start};
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (long i = 0; i < steps; ++i) {
    grid.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return grid;
}

// Relative output paths are resolved against QGT_OUTPUT_DIR when set.
std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("QGT_OUTPUT_DIR")) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path resolved = resolve_output(path);
  std::ofstream out(resolved);
  if (!out) {
    throw IoError("cannot open output file '" + resolved.string() + "'");
  }
  out << content;
  if (!out.good()) {
    throw IoError("failed writing output file '" + resolved.string() + "'");
  }
}

qgt::StrategyParams params_or_usage(double theta, double phi, const char* who) {
  try {
    return qgt::StrategyParams(theta, phi);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad strategy for ") + who + ": " + e.what());
  }
}

qgt::WernerParameter werner_or_usage(double p) {
  try {
    return qgt::WernerParameter(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct PayoffArgs {
  std::string game;
  double p = 0.0;
  std::string basis;
  std::optional<double> delta;
  std::vector<double> strategies;
  bool closed_form = false;
};

int run_payoff(const PayoffArgs& args) {
  const qgt::GameDefinition game = load_game(args.game);
  const qgt::WernerParameter p = werner_or_usage(args.p);
  const double delta = resolve_delta(args.basis, args.delta);
  const qgt::StrategyParams s1 = params_or_usage(args.strategies[0], args.strategies[1], "player A");
  const qgt::StrategyParams s2 = params_or_usage(args.strategies[2], args.strategies[3], "player B");

  const qgt::PayoffPair numeric = qgt::payoffs_numeric(game, p, delta, s1, s2);
  std::cout << fmt(numeric.alice) << ' ' << fmt(numeric.bob) << '\n';

  if (args.closed_form) {
    if (args.basis.empty()) {
      throw UsageError("--closed-form requires --basis (no closed form at interior delta)");
    }
    const qgt::PayoffPair closed = args.basis == "entangled"
                                       ? qgt::payoff_entangled(game, p.value, s1, s2)
                                       : qgt::payoff_product(game, p.value, s1, s2);
    const double diff = std::max(std::abs(closed.alice - numeric.alice),
                                 std::abs(closed.bob - numeric.bob));
    std::cout << "closed-form: " << fmt(closed.alice) << ' ' << fmt(closed.bob) << '\n';
    std::cout << "max-abs-diff: " << fmt(diff) << '\n';
  }
  return kExitOk;
}

struct SweepArgs {
  std::string game;
  std::string basis;
  std::string p_grid;
  std::string output;
  std::string format = "csv";
};

int run_sweep(const SweepArgs& args) {
  const qgt::GameDefinition game = load_game(args.game);
  const qgt::BasisKind basis = resolve_basis_kind(args.basis);
  const std::vector<double> grid = parse_p_grid(args.p_grid);
  for (double p : grid) {
    if (p < 0.0 || p > 1.0) throw UsageError("p grid values must lie in [0, 1]");
  }

  const std::vector<qgt::SweepRecord> records = qgt::preservation_sweep(game, basis, grid);
  const qgt::ElementKind kind = game.form_template == qgt::FormTemplate::BosOrdering
                                    ? qgt::ElementKind::AlphaBetaSigma
                                    : qgt::ElementKind::Rstu;

  std::string payload;
  if (args.format == "csv") {
    payload = qgt::sweep_to_csv(records, kind);
  } else if (args.format == "json") {
    payload = qgt::sweep_to_json(records, kind);
  } else {
    throw UsageError("--format must be 'csv' or 'json'");
  }

  if (args.output.empty()) {
    std::cout << payload;
  } else {
    write_file(args.output, payload);
  }
  return kExitOk;
}

struct NeCheckArgs {
  std::string game;
  double p = 0.0;
  std::string basis;
  std::optional<double> delta;
  std::vector<double> strategies;
  qgt::SearchConfig cfg;
};

int run_ne_check(const NeCheckArgs& args) {
  const qgt::GameDefinition game = load_game(args.game);
  const qgt::WernerParameter p = werner_or_usage(args.p);
  const double delta = resolve_delta(args.basis, args.delta);

  qgt::StrategyProfile profile{qgt::strategy_quantum_q(), qgt::strategy_quantum_q()};
  if (!args.strategies.empty()) {
    profile.s1 = params_or_usage(args.strategies[0], args.strategies[1], "player A");
    profile.s2 = params_or_usage(args.strategies[2], args.strategies[3], "player B");
  }

  const qgt::NashVerdict verdict = qgt::is_nash(game, p, delta, profile, args.cfg);

  std::cout << "game=" << game.name << " p=" << fmt(p.value) << " delta=" << fmt(delta) << '\n';
  std::cout << "profile: theta1=" << fmt(profile.s1.theta) << " phi1=" << fmt(profile.s1.phi)
            << " theta2=" << fmt(profile.s2.theta) << " phi2=" << fmt(profile.s2.phi) << '\n';
  std::cout << "NE=" << (verdict.is_nash ? "true" : "false")
            << " max_violation=" << fmt(verdict.max_violation) << '\n';
  std::cout << "best_deviation: player=" << (verdict.deviating_player == qgt::Player::A ? 'A' : 'B')
            << " theta=" << fmt(verdict.best_deviation.params.theta)
            << " phi=" << fmt(verdict.best_deviation.params.phi)
            << " payoff=" << fmt(verdict.best_deviation.payoff) << '\n';
  return kExitOk;
}

struct ValidateArgs {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string output;
};

// Oracle/property suite. A check is "certified" when its bound is part of
// the library's contract; the known general-delta t11 discrepancy is
// reported but never counted as a failure.
int run_validate(const ValidateArgs& args) {
  const std::array<qgt::GameDefinition, 3> games{
      qgt::canonical_game("pd"), qgt::canonical_game("cg"), qgt::canonical_game("bos")};

  bool all_ok = true;
  const auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << '\n';
    all_ok = all_ok && ok;
  };

  qgt::UniformStream stream(args.seed);
  double endpoint_dev = 0.0;
  double completeness_dev = 0.0;
  double linearity_dev = 0.0;
  std::size_t density_failures = 0;

  for (std::size_t i = 0; i < args.samples; ++i) {
    const double p = stream.next();
    const qgt::StrategyParams s1(stream.next(0.0, kPi), stream.next(0.0, kPi / 2.0));
    const qgt::StrategyParams s2(stream.next(0.0, kPi), stream.next(0.0, kPi / 2.0));
    const double interior_delta = stream.next(0.0, kPi / 2.0);
    const qgt::WernerParameter wp(p);

    for (const qgt::GameDefinition& game : games) {
      const qgt::PayoffPair ne = qgt::payoffs_numeric(game, wp, kPi / 2.0, s1, s2);
      const qgt::PayoffPair ce = qgt::payoff_entangled(game, p, s1, s2);
      const qgt::PayoffPair np = qgt::payoffs_numeric(game, wp, 0.0, s1, s2);
      const qgt::PayoffPair cp = qgt::payoff_product(game, p, s1, s2);
      endpoint_dev = std::max({endpoint_dev, std::abs(ne.alice - ce.alice),
                               std::abs(ne.bob - ce.bob), std::abs(np.alice - cp.alice),
                               std::abs(np.bob - cp.bob)});
    }

    const std::array<double, 4> probs = qgt::outcome_probabilities(wp, interior_delta, s1, s2);
    completeness_dev =
        std::max(completeness_dev, std::abs(probs[0] + probs[1] + probs[2] + probs[3] - 1.0));

    try {
      (void)qgt::evolve(qgt::werner_state(wp), s1, s2);
    } catch (const std::exception&) {
      ++density_failures;
    }

    const qgt::GameDefinition& game = games[i % games.size()];
    const qgt::PayoffPair at_p = qgt::payoffs_numeric(game, wp, interior_delta, s1, s2);
    const qgt::PayoffPair at_zero =
        qgt::payoffs_numeric(game, qgt::WernerParameter(0.0), interior_delta, s1, s2);
    const qgt::PayoffPair at_one =
        qgt::payoffs_numeric(game, qgt::WernerParameter(1.0), interior_delta, s1, s2);
    linearity_dev = std::max(
        {linearity_dev, std::abs(at_p.alice - (p * at_one.alice + (1.0 - p) * at_zero.alice)),
         std::abs(at_p.bob - (p * at_one.bob + (1.0 - p) * at_zero.bob))});
  }

  const std::string n = std::to_string(args.samples) + " samples";
  report(endpoint_dev <= qgt::kNumericTol, "closed-form endpoint payoffs",
         n + ", max |closed - numeric| = " + fmt(endpoint_dev));
  report(completeness_dev <= 1e-12, "measurement completeness",
         n + ", max |sum - 1| = " + fmt(completeness_dev));
  report(density_failures == 0, "density validity under evolve",
         n + ", " + std::to_string(density_failures) + " failures");
  report(linearity_dev <= 1e-12, "payoff linearity in p",
         n + ", max deviation = " + fmt(linearity_dev));

  const qgt::AuditReport audit = qgt::audit_trace_terms(args.samples, args.seed);
  const auto& zero = audit.delta_zero.terms;
  const auto& half = audit.delta_half_pi.terms;
  const double zero_certified =
      std::max({zero[0].max_abs, zero[1].max_abs, zero[2].max_abs});
  const double half_certified =
      std::max({half[0].max_abs, half[1].max_abs, half[2].max_abs, half[3].max_abs});
  report(half_certified <= qgt::kNumericTol, "trace terms at delta=pi/2",
         n + ", max deviation = " + fmt(half_certified));
  report(zero_certified <= qgt::kNumericTol, "trace terms t00,t01,t10 at delta=0",
         n + ", max deviation = " + fmt(zero_certified));
  std::cout << "[INFO] t11 at delta=0 deviates by up to " << fmt(zero[3].max_abs)
            << " (known discrepancy in the general-delta t11 closed form; not certified)\n";
  std::cout << "[INFO] interior delta: max deviations t00=" << fmt(audit.interior.terms[0].max_abs)
            << " t01=" << fmt(audit.interior.terms[1].max_abs)
            << " t10=" << fmt(audit.interior.terms[2].max_abs)
            << " t11=" << fmt(audit.interior.terms[3].max_abs) << " (reported only)\n";

  if (!args.output.empty()) {
    write_file(args.output, qgt::audit_report_json(audit) + "\n");
  }
  return all_ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized 2x2 games with Werner-like initial states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qgt 0.1.0");

  PayoffArgs payoff_args;
  double payoff_delta = 0.0;
  CLI::App* payoff = app.add_subcommand("payoff", "Evaluate both players' payoffs");
  payoff->add_option("--game", payoff_args.game, "pd|cg|bos or a game JSON file")->required();
  payoff->add_option("--p", payoff_args.p, "initial-state mixing parameter in [0,1]")->required();
  payoff->add_option("--basis", payoff_args.basis, "entangled|product");
  CLI::Option* payoff_delta_opt =
      payoff->add_option("--delta", payoff_delta, "measurement-basis entanglement in [0, pi/2]");
  payoff->add_option("--strategies", payoff_args.strategies, "theta1 phi1 theta2 phi2")
      ->expected(4)
      ->required();
  payoff->add_flag("--closed-form", payoff_args.closed_form,
                   "also print the endpoint closed form and the difference");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Payoff elements and classification over a p grid");
  sweep->add_option("--game", sweep_args.game, "pd|cg|bos or a game JSON file")->required();
  sweep->add_option("--basis", sweep_args.basis, "entangled|product")->required();
  sweep->add_option("--p-grid", sweep_args.p_grid, "start:stop:steps (inclusive endpoints)")
      ->required();
  sweep->add_option("--output", sweep_args.output,
                    "output file (default stdout; relative paths honor QGT_OUTPUT_DIR)");
  sweep->add_option("--format", sweep_args.format, "csv|json (default csv)");

  NeCheckArgs ne_args;
  double ne_delta = 0.0;
  CLI::App* ne = app.add_subcommand("ne-check", "Check a profile for Nash equilibrium");
  ne->add_option("--game", ne_args.game, "pd|cg|bos or a game JSON file")->required();
  ne->add_option("--p", ne_args.p, "initial-state mixing parameter in [0,1]")->required();
  ne->add_option("--basis", ne_args.basis, "entangled|product");
  CLI::Option* ne_delta_opt =
      ne->add_option("--delta", ne_delta, "measurement-basis entanglement in [0, pi/2]");
  ne->add_option("--strategies", ne_args.strategies,
                 "theta1 phi1 theta2 phi2 (default: the quantum strategy Q for both)")
      ->expected(4);
  ne->add_option("--grid-theta", ne_args.cfg.grid_theta, "theta grid points (default 65)");
  ne->add_option("--grid-phi", ne_args.cfg.grid_phi, "phi grid points (default 33)");
  ne->add_option("--refine-iterations", ne_args.cfg.refine_iterations,
                 "local refinement iterations (default 20)");
  ne->add_option("--tolerance", ne_args.cfg.tolerance, "accepted violation (default 1e-6)");

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "Run the oracle and property suite");
  validate->add_option("--samples", validate_args.samples, "random samples (default 1000)");
  validate->add_option("--seed", validate_args.seed, "random seed (default 1)");
  validate->add_option("--output", validate_args.output, "write the audit report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (payoff->parsed()) {
      if (payoff_delta_opt->count() > 0) payoff_args.delta = payoff_delta;
      return run_payoff(payoff_args);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_args);
    }
    if (ne->parsed()) {
      if (ne_delta_opt->count() > 0) ne_args.delta = ne_delta;
      return run_ne_check(ne_args);
    }
    if (validate->parsed()) {
      return run_validate(validate_args);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}
