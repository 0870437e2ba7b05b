// Aggregated results for one model: the Hodge and harmonic tables, the
// comparison flags, Betti numbers, and provenance. JSON emission is
// byte-deterministic for a fixed manifest; parse(emit(r)) == r.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvmf/cohomology.hpp"
#include "solvmf/hodge.hpp"

namespace solvmf {

inline constexpr const char* kToolName = "solvmf";
inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

struct Report {
  int schema_version = 1;
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string manifest_hash;  // fnv1a64 of the manifest text, hex

  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> hodge;              // h^{p,q}
  std::vector<std::vector<int>> harmonic;           // dim H^{p,q}
  std::vector<std::vector<bool>> hodge_symmetry;    // per (p,q)
  bool serre_duality = false;
  bool star_condition = false;
  bool hodge_sum = false;
  std::vector<int> betti;
  // representative cocycles as expression strings, only on request: they
  // are basis-convention-dependent, the dimensions are the contract
  std::optional<std::vector<std::vector<std::vector<std::string>>>> representatives;

  friend bool operator==(const Report&, const Report&) = default;
};

struct ReportOptions {
  bool with_representatives = false;
  int max_star_dim = 12;
};

Report build_report(const ValidatedModel& model, const std::string& manifest_text,
                    const ReportOptions& options = {});

std::string emit_json(const Report& report);
Report parse_report(const std::string& text);  // throws Error on malformed input

std::string render_text(const Report& report);

// Shared text helper: an aligned p-row/q-column grid of integers.
std::string render_grid(const std::string& title, const std::vector<std::vector<int>>& grid);

}  // namespace solvmf
