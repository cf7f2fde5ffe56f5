#include "bg/game_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bg {

using nlohmann::json;

Game parse_game_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("v")) {
    throw ParseError("game document needs \"n\" and \"v\"");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxPlayers) throw ParseError("\"n\" out of range: " + std::to_string(n));
  const json& values = doc["v"];
  if (!values.is_object()) throw ParseError("\"v\" must be an object");

  std::vector<Rational> v(std::size_t{1} << n, Rational(0));
  std::vector<bool> seen(v.size(), false);
  for (const auto& [key, value] : values.items()) {
    Coalition s;
    try {
      s = parse_coalition_key(key, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (seen[s.mask()]) throw ParseError("duplicate coalition " + key);
    seen[s.mask()] = true;
    try {
      if (value.is_string()) {
        v[s.mask()] = parse_rational(value.get<std::string>());
      } else if (value.is_number_integer()) {
        v[s.mask()] = parse_rational(value.dump());
      } else {
        throw ParseError("value for " + key + " must be a rational string");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError("coalition " + key + ": " + e.what());
    }
  }
  for (std::size_t m = 1; m < v.size(); ++m) {
    if (!seen[m]) {
      throw ParseError("missing value for coalition " + Coalition(static_cast<std::uint32_t>(m)).to_key());
    }
  }
  return Game(n, std::move(v));
}

std::string render_game_json(const Game& v) {
  // keys in canonical coalition order; ordered_json keeps insertion order
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (std::size_t m = 1; m < v.values().size(); ++m) {
    values[Coalition(static_cast<std::uint32_t>(m)).to_key()] = to_string(v.values()[m]);
  }
  nlohmann::ordered_json doc;
  doc["n"] = v.players();
  doc["v"] = values;
  return doc.dump();
}

Game load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_game_json(buffer.str());
}

}  // namespace bg
