#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "prlab/cli.hpp"
#include "prlab/integer.hpp"
#include "prlab/poly.hpp"
#include "prlab/sets.hpp"

namespace prlab::cli {

using json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t max_nodes = 100'000'000;
};

/// What a verb produced; rendered as text or as one JSON envelope.
struct Report {
  std::string verb;
  std::string verdict;
  int exit = kPositive;
  json result = json::object();
  json certificate = nullptr;
  std::string provenance;
  json bounds = json::object();
  std::vector<std::string> lines;

  void line(std::string text) { lines.push_back(std::move(text)); }
};

struct Command {
  CLI::App* app;
  std::string verb;
  std::function<void(Report&)> run;
};

void register_commands(CLI::App& root, const Globals& globals, std::vector<Command>& out);

inline json jint(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return to_string(v);
}

inline json jints(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

inline json jset(const FiniteSet& s) { return s.elements(); }

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace prlab::cli
