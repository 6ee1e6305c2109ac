#include "coopgt/gamedoc.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace coopgt {

namespace {

using nlohmann::json;

int read_player_count(const json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ValidationError("game file: missing integer field \"n\"");
  }
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("game file: \"n\" must be between 1 and " +
                          std::to_string(kMaxPlayers));
  }
  return static_cast<int>(n);
}

double read_real(const json& v, const char* where) {
  if (!v.is_number()) {
    throw ValidationError(std::string("game file: ") + where + " must be a number");
  }
  return v.get<double>();
}

Game read_values(const json& arr, int n) {
  if (!arr.is_array()) {
    throw ValidationError("game file: \"values\" must be an array");
  }
  if (arr.size() != table_size(n)) {
    throw ValidationError("game file: \"values\" must have length 2^n = " +
                          std::to_string(table_size(n)) + ", got " +
                          std::to_string(arr.size()));
  }
  std::vector<double> vals;
  vals.reserve(arr.size());
  for (const auto& v : arr) vals.push_back(read_real(v, "every entry of \"values\""));
  return Game(n, std::move(vals));
}

Game read_mobius(const json& arr, int n) {
  if (!arr.is_array()) {
    throw ValidationError("game file: \"mobius\" must be an array");
  }
  std::vector<double> coeffs(table_size(n), 0.0);
  std::vector<bool> seen(table_size(n), false);
  for (const auto& entry : arr) {
    if (!entry.is_object() || !entry.contains("players") || !entry.contains("coeff")) {
      throw ValidationError(
          "game file: every \"mobius\" entry needs \"players\" and \"coeff\"");
    }
    for (const auto& [key, value] : entry.items()) {
      (void)value;
      if (key != "players" && key != "coeff") {
        throw ValidationError("game file: unknown field \"" + key +
                              "\" in a \"mobius\" entry");
      }
    }
    const auto& players = entry["players"];
    if (!players.is_array()) {
      throw ValidationError("game file: \"players\" must be an array of ids");
    }
    std::vector<int> ids;
    ids.reserve(players.size());
    for (const auto& v : players) {
      if (!v.is_number_integer()) {
        throw ValidationError("game file: player ids must be integers");
      }
      ids.push_back(static_cast<int>(v.get<std::int64_t>()));
    }
    const Coalition s = Coalition::of_players(ids, n);
    if (seen[s.mask]) {
      throw ValidationError("game file: duplicate coalition in \"mobius\" list");
    }
    seen[s.mask] = true;
    coeffs[s.mask] = read_real(entry["coeff"], "\"coeff\"");
  }
  return from_mobius(MobiusTransform(n, std::move(coeffs)));
}

}  // namespace

GameDocument parse_game_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("game file: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("game file: top level must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "n" && key != "name" && key != "values" && key != "mobius") {
      throw ValidationError("game file: unknown field \"" + key + "\"");
    }
  }
  const int n = read_player_count(doc);
  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw ValidationError("game file: \"name\" must be a string");
    }
    name = doc["name"].get<std::string>();
  }
  const bool has_values = doc.contains("values");
  const bool has_mobius = doc.contains("mobius");
  if (has_values == has_mobius) {
    throw ValidationError(
        "game file: exactly one of \"values\" or \"mobius\" must be present");
  }
  if (has_values) {
    return GameDocument{read_values(doc["values"], n), std::move(name), false};
  }
  return GameDocument{read_mobius(doc["mobius"], n), std::move(name), true};
}

GameDocument load_game_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open game file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read game file: " + path.string());
  }
  return parse_game_document(buf.str());
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_mobius_document(int n, const std::vector<double>& coeffs,
                                   int max_order,
                                   const std::optional<std::string>& name) {
  if (coeffs.size() != table_size(n)) {
    throw ValidationError("coefficient table must have length 2^n");
  }
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(n) + ",\n";
  if (name) {
    out += "  \"name\": " + json(*name).dump() + ",\n";
  }
  out += "  \"mobius\": [\n";
  bool first = true;
  for (Mask m = 0; m < coeffs.size(); ++m) {
    if (std::popcount(m) > max_order) continue;
    if (!first) out += ",\n";
    first = false;
    out += "    {\"players\": [";
    bool first_id = true;
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      if (!first_id) out += ",";
      first_id = false;
      out += std::to_string(std::countr_zero(rest) + 1);
    }
    out += "], \"coeff\": " + format_real(coeffs[m]) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

ProbabilityProfile parse_profile_spec(const std::string& spec, int n) {
  std::vector<double> vals;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string item = spec.substr(pos, comma - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ProfileError("profile: cannot parse \"" + item + "\" as a number");
    }
    if (used != item.size()) {
      throw ProfileError("profile: cannot parse \"" + item + "\" as a number");
    }
    vals.push_back(v);
    pos = comma + 1;
  }
  if (vals.size() == 1) {
    return ProbabilityProfile(std::vector<double>(static_cast<std::size_t>(n), vals[0]));
  }
  if (vals.size() != static_cast<std::size_t>(n)) {
    throw ProfileError("profile lists " + std::to_string(vals.size()) +
                       " values but the game has " + std::to_string(n) + " players");
  }
  return ProbabilityProfile(std::move(vals));
}

}  // namespace coopgt
