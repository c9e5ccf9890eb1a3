#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tug/axioms.hpp"
#include "tug/game.hpp"
#include "tug/theorems.hpp"

namespace tug {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Game files
//
// {"version":1, "n":3, "default":0, "worths":{"1":"0.5", "1,2":"3", ...}}
//
// Keys are comma-separated ascending player lists; worths are decimal
// strings, plain numbers, or "p/q" rationals. The empty-set key may appear
// only with worth zero.
// ---------------------------------------------------------------------------

namespace detail {

/// SAX handler for the flat game-file schema: reports byte positions on
/// malformed JSON and catches duplicate worth keys exactly.
struct GameFileSax {
  using basic_json = nlohmann::json;
  using number_integer_t = basic_json::number_integer_t;
  using number_unsigned_t = basic_json::number_unsigned_t;
  using number_float_t = basic_json::number_float_t;
  using string_t = basic_json::string_t;
  using binary_t = basic_json::binary_t;

  int depth = 0;
  bool in_worths = false;
  std::string field;

  bool seen_version = false, seen_n = false, seen_default = false, seen_worths = false;
  long long version = 0, n = 0;
  std::string default_raw;
  std::vector<std::pair<std::string, std::string>> worths;  // key -> raw literal
  std::set<std::string> keys;

  bool scalar(std::string raw) {
    if (depth == 1) {
      if (field == "version") { version = std::stoll(raw); seen_version = true; }
      else if (field == "n") { n = std::stoll(raw); seen_n = true; }
      else if (field == "default") { default_raw = std::move(raw); seen_default = true; }
      else throw Error("unexpected game-file field '" + field + "'");
      return true;
    }
    if (depth == 2 && in_worths) {
      if (!keys.insert(field).second) throw DuplicateKey("duplicate worth key '" + field + "'");
      worths.emplace_back(field, std::move(raw));
      return true;
    }
    throw Error("misplaced value in game file");
  }

  bool null() { throw Error("null is not a valid worth"); }
  bool boolean(bool) { throw Error("booleans are not valid worths"); }
  bool number_integer(number_integer_t v) { return scalar(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) { return scalar(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) { return scalar(raw); }
  bool string(string_t& v) { return scalar(v); }
  bool binary(binary_t&) { throw Error("binary values are not valid worths"); }

  bool start_object(std::size_t) {
    ++depth;
    if (depth == 2) {
      if (field != "worths") throw Error("unexpected object field '" + field + "'");
      in_worths = true;
      seen_worths = true;
    } else if (depth > 2) {
      throw Error("game file nests too deeply");
    }
    return true;
  }
  bool key(string_t& k) {
    field = k;
    return true;
  }
  bool end_object() {
    if (depth == 2) in_worths = false;
    --depth;
    return true;
  }
  bool start_array(std::size_t) { throw Error("arrays are not part of the game-file schema"); }
  bool end_array() { return true; }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    throw ParseError(ex.what(), position);
  }
};

/// "1,3" -> mask; enforces ascending canonical order and the 1..n range.
inline std::uint32_t parse_coalition_key(const std::string& key, int n) {
  std::uint32_t mask = 0;
  int last = 0;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t next = key.find(',', pos);
    if (next == std::string::npos) next = key.size();
    const std::string part = key.substr(pos, next - pos);
    if (part.empty()) throw Error("empty player in coalition key '" + key + "'");
    int player = 0;
    try {
      player = std::stoi(part);
    } catch (const std::exception&) {
      throw Error("bad player '" + part + "' in coalition key '" + key + "'");
    }
    if (player < 1 || player > n)
      throw Error("player " + std::to_string(player) + " out of range in key '" + key + "'");
    if (player <= last)
      throw Error("coalition key '" + key + "' is not an ascending player list");
    last = player;
    mask |= std::uint32_t{1} << (player - 1);
    pos = next + 1;
  }
  return mask;
}

}  // namespace detail

/// Parses the JSON game format. Missing coalitions fall back to the declared
/// default worth; without one they are an error. worth(empty) is pinned to
/// zero and may only appear explicitly as zero.
template <class R>
Game<R> parse_game(const std::string& text) {
  detail::GameFileSax sax;
  nlohmann::json::sax_parse(text, &sax);
  if (!sax.seen_version || sax.version != 1) throw Error("game file needs \"version\": 1");
  if (!sax.seen_n) throw Error("game file needs \"n\"");
  if (!sax.seen_worths) throw Error("game file needs a \"worths\" object");
  const int n = static_cast<int>(sax.n);
  validate_player_count(n);

  std::vector<R> table(subset_count(n), ScalarTraits<R>::zero());
  std::vector<bool> present(subset_count(n), false);
  for (const auto& [key, raw] : sax.worths) {
    const R value = parse_scalar<R>(raw);
    if (key.empty()) {
      if (!(value == ScalarTraits<R>::zero()))
        throw NonZeroEmptySet("the empty coalition must have worth 0");
      continue;
    }
    const std::uint32_t mask = detail::parse_coalition_key(key, n);
    table[mask] = value;
    present[mask] = true;
  }
  if (sax.seen_default) {
    const R fallback = parse_scalar<R>(sax.default_raw);
    for (std::uint32_t m = 1; m < subset_count(n); ++m)
      if (!present[m]) table[m] = fallback;
  } else {
    for (std::uint32_t m = 1; m < subset_count(n); ++m)
      if (!present[m])
        throw MissingCoalition("coalition {" + Coalition(m).to_string() +
                               "} missing and no default declared");
  }
  return Game<R>(n, std::move(table));
}

template <class R>
json game_to_json(const Game<R>& v) {
  json worths = json::object();
  const int n = v.players();
  std::vector<std::uint32_t> order;
  for (std::uint32_t m = 1; m < subset_count(n); ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    const int sa = Coalition(a).size(), sb = Coalition(b).size();
    return sa != sb ? sa < sb : a < b;
  });
  for (const std::uint32_t m : order)
    worths[Coalition(m).to_string()] = ScalarTraits<R>::str(v.worth(m));
  json out;
  out["version"] = 1;
  out["n"] = n;
  out["worths"] = std::move(worths);
  return out;
}

/// Canonical serialization; parse_game(emit_game(v)) reproduces v exactly.
template <class R>
std::string emit_game(const Game<R>& v) {
  return game_to_json(v).dump();
}

// ---------------------------------------------------------------------------
// Weight files: {"version":1, "weights":[...]} (sigma / alpha / m vectors)
// ---------------------------------------------------------------------------

template <class R>
std::vector<R> parse_weights(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(ex.what(), ex.byte);
  }
  if (!doc.is_object() || doc.value("version", 0) != 1 || !doc.contains("weights") ||
      !doc["weights"].is_array())
    throw Error("weights file needs {\"version\":1, \"weights\":[...]}");
  std::vector<R> out;
  for (const auto& item : doc["weights"]) {
    if (item.is_string()) out.push_back(parse_scalar<R>(item.template get<std::string>()));
    else if (item.is_number_integer()) out.push_back(ScalarTraits<R>::from_long(item.template get<long long>()));
    else if (item.is_number()) out.push_back(parse_scalar<R>(item.dump()));
    else throw Error("weights must be numbers or numeric strings");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

template <class R>
json allocation_to_json(const std::vector<R>& values) {
  json out = json::array();
  for (const R& x : values) out.push_back(ScalarTraits<R>::str(x));
  return out;
}

template <class R>
json witness_to_json(const Witness<R>& w) {
  json out;
  out["trial"] = w.trial;
  json params = json::object();
  for (const auto& [k, v] : w.params) params[k] = v;
  out["params"] = std::move(params);
  out["game"] = game_to_json(w.game);
  if (w.second_game) out["second_game"] = game_to_json(*w.second_game);
  out["expected"] = allocation_to_json<R>(w.expected);
  out["actual"] = allocation_to_json<R>(w.actual);
  out["max_deviation"] = ScalarTraits<R>::str(w.deviation);
  return out;
}

template <class R>
json check_report_to_json(const CheckReport<R>& rep) {
  json out;
  out["axiom"] = rep.axiom;
  out["rule"] = rep.rule;
  out["verdict"] = rep.violated ? "violated" : "passed_sample";
  out["trials"] = rep.trials_run;
  out["seed"] = rep.seed;
  out["arithmetic"] = ScalarTraits<R>::mode_name;
  if (rep.witness) out["witness"] = witness_to_json(*rep.witness);
  return out;
}

template <class R>
json suite_result_to_json(const SuiteResult<R>& suite) {
  json clauses = json::array();
  for (const auto& clause : suite.clauses) {
    json c;
    c["claim"] = clause.claim;
    c["ok"] = clause.ok;
    if (!clause.detail.empty()) c["detail"] = clause.detail;
    if (clause.report) c["report"] = check_report_to_json(*clause.report);
    clauses.push_back(std::move(c));
  }
  json out;
  out["suite"] = suite.suite;
  out["overall"] = suite.confirmed() ? "confirmed_sample" : "refuted";
  out["seed"] = suite.seed;
  out["clauses"] = std::move(clauses);
  return out;
}

}  // namespace tug
