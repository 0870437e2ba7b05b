#include <array>
#include <utility>

#include "solvmf/manifest.hpp"

namespace solvmf {

// The presets double as integration fixtures: two semidirect-product
// families over C with abelian C^2 fiber, each with the lattice choices
// that change the filtered complex, plus a plain torus.
namespace {

const std::pair<const char*, const char*> kPresets[] = {
    {"example1A", R"json({
  "schema_version": 1,
  "n": 1,
  "m": 2,
  "alphas": [[["1", "0", "0", "0"]], [["-1", "0", "0", "0"]]],
  "nilpotent": {"brackets": {}},
  "lattice": [["1*a", "0"], ["0", "2*pi"]],
  "symbols": ["a"],
  "assert_nilmanifold_dolbeault": true
})json"},
    {"example1B", R"json({
  "schema_version": 1,
  "n": 1,
  "m": 2,
  "alphas": [[["1", "0", "0", "0"]], [["-1", "0", "0", "0"]]],
  "nilpotent": {"brackets": {}},
  "lattice": [["1*a", "0"], ["0", "1*pi"]],
  "symbols": ["a"],
  "assert_nilmanifold_dolbeault": true
})json"},
    {"example1C", R"json({
  "schema_version": 1,
  "n": 1,
  "m": 2,
  "alphas": [[["1", "0", "0", "0"]], [["-1", "0", "0", "0"]]],
  "nilpotent": {"brackets": {}},
  "lattice": [["1*a", "0"], ["0", "1*b"]],
  "symbols": ["a", "b"],
  "assert_nilmanifold_dolbeault": true
})json"},
    {"example2-pi", R"json({
  "schema_version": 1,
  "n": 1,
  "m": 2,
  "alphas": [[["1", "0", "0", "1"]], [["-1", "0", "0", "-1"]]],
  "nilpotent": {"brackets": {}},
  "lattice": [["1*a", "1*pi"], ["1*c", "-1*pi"]],
  "symbols": ["a", "c"],
  "assert_nilmanifold_dolbeault": true
})json"},
    {"example2-generic", R"json({
  "schema_version": 1,
  "n": 1,
  "m": 2,
  "alphas": [[["1", "0", "0", "1"]], [["-1", "0", "0", "-1"]]],
  "nilpotent": {"brackets": {}},
  "lattice": [["1*a", "1*b"], ["1*c", "1*d"]],
  "symbols": ["a", "b", "c", "d"],
  "assert_nilmanifold_dolbeault": true
})json"},
    {"torus3", R"json({
  "schema_version": 1,
  "n": 1,
  "m": 2,
  "alphas": [[["0", "0", "0", "0"]], [["0", "0", "0", "0"]]],
  "nilpotent": {"brackets": {}},
  "lattice": [["1", "0"], ["0", "1"]],
  "symbols": [],
  "assert_nilmanifold_dolbeault": true
})json"},
};

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : kPresets) names.emplace_back(name);
  return names;
}

const std::string& preset_manifest(const std::string& name) {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const auto& [n, text] : kPresets) t.emplace(n, text);
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& [n, text] : kPresets) known += std::string(known.empty() ? "" : ", ") + n;
    throw Error("unknown preset '" + name + "' (available: " + known + ")");
  }
  return it->second;
}

}  // namespace solvmf
