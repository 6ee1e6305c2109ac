// coopgt: command-line front end for cooperative-game interaction indexes,
// weighted approximations, and identity verification.
//
// Exit codes: 0 success, 2 input parse/validation, 3 profile mismatch,
// 4 I/O failure, 5 verification failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coopgt/analysis.hpp"
#include "coopgt/approximation.hpp"
#include "coopgt/gamedoc.hpp"
#include "coopgt/interaction.hpp"
#include "coopgt/verify.hpp"

namespace {

using namespace coopgt;

constexpr int kExitValidation = 2;
constexpr int kExitProfile = 3;
constexpr int kExitIo = 4;
constexpr int kExitVerifyFailed = 5;

std::string players_json(Coalition s) {
  std::string out = "[";
  bool first = true;
  for (int id : s.players()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(id);
  }
  return out + "]";
}

std::string players_csv(Coalition s) {
  std::string out;
  bool first = true;
  for (int id : s.players()) {
    if (!first) out += " ";
    first = false;
    out += std::to_string(id);
  }
  return out;
}

std::string quote(const std::string& s) {
  // Borrow the JSON string escaper from the parser library.
  return nlohmann::json(s).dump();
}

std::string profile_json(const ProbabilityProfile& p) {
  std::string out = "[";
  for (int i = 0; i < p.n(); ++i) {
    if (i > 0) out += ", ";
    out += format_real(p[i]);
  }
  return out + "]";
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write output file: " + out_path);
}

struct IndexArgs {
  std::string game_file;
  std::string profile_spec;
  std::string family;
  int max_order = -1;  // -1: default to n
  std::string coalition_spec;
  std::string format = "json";
};

Coalition parse_coalition_list(const std::string& spec, int n) {
  std::vector<int> ids;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string item = spec.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const int id = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ids.push_back(id);
    } catch (const std::exception&) {
      throw ValidationError("coalition: cannot parse \"" + item + "\" as a player id");
    }
    pos = comma + 1;
  }
  return Coalition::of_players(ids, n);
}

int run_index(const IndexArgs& args) {
  const GameDocument doc = load_game_document(args.game_file);
  const Game& f = doc.game;
  const int n = f.n();

  std::optional<ProbabilityProfile> profile;
  if (args.family == "weighted-banzhaf") {
    if (args.profile_spec.empty()) {
      throw ProfileError("family weighted-banzhaf requires --p");
    }
    profile = parse_profile_spec(args.profile_spec, n);
  }

  const int max_order = args.max_order < 0 ? n : args.max_order;
  if (max_order > n) {
    throw ValidationError("--max-order exceeds the player count");
  }
  std::optional<Coalition> only;
  if (!args.coalition_spec.empty()) {
    only = parse_coalition_list(args.coalition_spec, n);
  }

  std::vector<double> values;
  if (args.family == "weighted-banzhaf") {
    values = weighted_banzhaf_all(f, *profile).values();
  } else if (args.family == "banzhaf") {
    values = weighted_banzhaf_all(f, ProbabilityProfile::uniform(n, 0.5)).values();
  } else if (args.family == "shapley") {
    const MobiusTransform a = mobius(f);
    values.assign(f.size(), 0.0);
    for (Mask m = 0; m < f.size(); ++m) {
      if (only ? (m == only->mask) : (Coalition{m}.cardinality() <= max_order)) {
        values[m] = shapley_interaction(a, Coalition{m});
      }
    }
  } else {
    values = mobius(f).coeffs();
  }

  const auto selected = [&](Mask m) {
    return only ? m == only->mask : Coalition{m}.cardinality() <= max_order;
  };

  std::string out;
  if (args.format == "csv") {
    out = "players,order,value\n";
    for (Mask m = 0; m < f.size(); ++m) {
      if (!selected(m)) continue;
      const Coalition s{m};
      out += players_csv(s) + "," + std::to_string(s.cardinality()) + "," +
             format_real(values[m]) + "\n";
    }
  } else {
    out = "{\n";
    out += "  \"family\": " + quote(args.family) + ",\n";
    if (doc.name) out += "  \"game\": " + quote(*doc.name) + ",\n";
    out += "  \"n\": " + std::to_string(n) + ",\n";
    if (profile) out += "  \"profile\": " + profile_json(*profile) + ",\n";
    out += "  \"rows\": [\n";
    bool first = true;
    for (Mask m = 0; m < f.size(); ++m) {
      if (!selected(m)) continue;
      if (!first) out += ",\n";
      first = false;
      const Coalition s{m};
      out += "    {\"players\": " + players_json(s) +
             ", \"order\": " + std::to_string(s.cardinality()) +
             ", \"value\": " + format_real(values[m]) + "}";
    }
    out += "\n  ]\n}\n";
  }
  std::cout << out;
  return 0;
}

struct ApproxArgs {
  std::string game_file;
  std::string profile_spec;
  int k = 0;
  std::string out_file;
  std::string format = "json";
};

int run_approx(const ApproxArgs& args) {
  const GameDocument doc = load_game_document(args.game_file);
  const Game& f = doc.game;
  if (args.profile_spec.empty()) {
    throw ProfileError("approx requires --p");
  }
  const ProbabilityProfile p = parse_profile_spec(args.profile_spec, f.n());
  p.require_strict();

  const Approximation approx = best_approximation(f, p, args.k);
  const double resid = residual_norm(f, approx, p);
  const GameStatistics st = statistics(f, p);
  std::optional<double> r2;
  if (st.stddev() > 1e-12 * std::max(1.0, f.max_abs())) {
    r2 = r_squared(f, p, args.k);
  }

  write_output(format_mobius_document(f.n(), approx.coeffs(), args.k, doc.name),
               args.out_file);

  std::string report;
  if (args.format == "csv") {
    report = "residual_norm,r_squared\n" + format_real(resid) + "," +
             (r2 ? format_real(*r2) : "") + "\n";
  } else {
    report = "{\n  \"residual_norm\": " + format_real(resid) +
             ",\n  \"r_squared\": " + (r2 ? format_real(*r2) : "null") + "\n}\n";
  }
  std::cout << report;
  return 0;
}

struct VerifyArgs {
  std::string game_file;
  std::string profile_spec = "0.5";
  std::uint64_t seed = 1;
};

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skipped";
  }
}

int run_verify(const VerifyArgs& args) {
  const GameDocument doc = load_game_document(args.game_file);
  const Game& f = doc.game;
  const ProbabilityProfile p = parse_profile_spec(args.profile_spec, f.n());

  VerifyOptions options;
  options.seed = args.seed;
  const VerifyReport report = run_verification(f, p, options);

  std::string out = "{\n";
  if (doc.name) out += "  \"game\": " + quote(*doc.name) + ",\n";
  out += "  \"n\": " + std::to_string(f.n()) + ",\n";
  out += "  \"profile\": " + profile_json(p) + ",\n";
  out += "  \"seed\": " + std::to_string(args.seed) + ",\n";
  out += "  \"random_games\": " + std::to_string(options.random_games) + ",\n";
  out += "  \"checks\": [\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    out += "    {\"id\": " + quote(c.id) + ", \"status\": \"" +
           status_name(c.status) + "\", \"max_error\": " +
           (c.status == CheckStatus::skipped ? std::string("null")
                                             : format_real(c.max_error)) +
           ", \"tolerance\": " + format_real(c.tolerance) + "}";
    out += (i + 1 < report.checks.size()) ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += std::string("  \"passed\": ") + (report.passed() ? "true" : "false") + "\n";
  out += "}\n";
  std::cout << out;
  return report.passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative-game interaction indexes and weighted approximations"};
  app.require_subcommand(1);

  IndexArgs index_args;
  CLI::App* index_cmd =
      app.add_subcommand("index", "Tabulate an interaction index or the Möbius transform");
  index_cmd->add_option("--game", index_args.game_file, "Game file (JSON)")->required();
  index_cmd->add_option("--p", index_args.profile_spec,
                        "Profile: one probability or n comma-separated values");
  index_cmd
      ->add_option("--family", index_args.family,
                   "weighted-banzhaf, banzhaf, shapley, or mobius")
      ->required()
      ->check(CLI::IsMember({"weighted-banzhaf", "banzhaf", "shapley", "mobius"}));
  index_cmd->add_option("--max-order", index_args.max_order,
                        "Largest coalition size to report (default n)");
  index_cmd->add_option("--coalition", index_args.coalition_spec,
                        "Report a single coalition, e.g. \"2,3\"");
  index_cmd->add_option("--format", index_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  ApproxArgs approx_args;
  CLI::App* approx_cmd =
      app.add_subcommand("approx", "Best degree-k weighted approximation");
  approx_cmd->add_option("--game", approx_args.game_file, "Game file (JSON)")->required();
  approx_cmd->add_option("--p", approx_args.profile_spec, "Strict profile")->required();
  approx_cmd->add_option("--k", approx_args.k, "Degree bound")->required();
  approx_cmd->add_option("--out", approx_args.out_file,
                         "Output game file holding the coefficients")
      ->required();
  approx_cmd->add_option("--format", approx_args.format, "json or csv (report)")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the identity self-checks on a game");
  verify_cmd->add_option("--game", verify_args.game_file, "Game file (JSON)")->required();
  verify_cmd->add_option("--p", verify_args.profile_spec,
                         "Strict profile (default 0.5)");
  verify_cmd->add_option("--seed", verify_args.seed, "Random-game seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (index_cmd->parsed()) return run_index(index_args);
    if (approx_cmd->parsed()) return run_approx(approx_args);
    return run_verify(verify_args);
  } catch (const ProfileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitProfile;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
