#include "solvmf/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "solvmf/manifest.hpp"

namespace solvmf {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

Report build_report(const ValidatedModel& model, const std::string& manifest_text,
                    const ReportOptions& options) {
  Report r;
  r.manifest_hash = fnv1a64_hex(manifest_text);
  r.n = model.spec().n;
  r.m = model.spec().m;

  BComplex b = build_bcomplex(model);
  CohomologyTable table = cohomology(b.cx);
  const int N = b.cx.top();

  r.hodge = table.h;
  r.harmonic.assign(N + 1, std::vector<int>(N + 1, 0));
  r.hodge_symmetry.assign(N + 1, std::vector<bool>(N + 1, false));
  for (int p = 0; p <= N; ++p)
    for (int q = 0; q <= N; ++q) {
      r.harmonic[p][q] = harmonic_space(b.cx, p, q).dim();
      r.hodge_symmetry[p][q] = hodge_symmetry_check(b, p, q);
    }
  r.serre_duality = serre_duality_check(b);
  r.star_condition = star_condition_check(model, options.max_star_dim);
  HodgeSumReport sums = hodge_sum_check(model);
  r.hodge_sum = sums.all_equal;
  r.betti = de_rham(model);

  if (options.with_representatives) {
    std::vector<std::vector<std::vector<std::string>>> reps(
        N + 1, std::vector<std::vector<std::string>>(N + 1));
    for (int p = 0; p <= N; ++p)
      for (int q = 0; q <= N; ++q)
        for (const Form& f : table.representatives[p][q]) reps[p][q].push_back(to_expr_string(f));
    r.representatives = std::move(reps);
  }
  return r;
}

std::string emit_json(const Report& r) {
  ordered_json doc;
  doc["schema_version"] = r.schema_version;
  doc["provenance"] = {{"tool", r.tool}, {"version", r.version}, {"manifest_fnv1a64", r.manifest_hash}};
  doc["n"] = r.n;
  doc["m"] = r.m;
  doc["hodge"] = r.hodge;
  doc["harmonic"] = r.harmonic;
  doc["flags"] = {{"hodge_symmetry", r.hodge_symmetry},
                  {"serre_duality", r.serre_duality},
                  {"star_condition", r.star_condition},
                  {"hodge_sum", r.hodge_sum}};
  doc["betti"] = r.betti;
  if (r.representatives) doc["representatives"] = *r.representatives;
  return doc.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
  try {
    Report r;
    r.schema_version = doc.at("schema_version").get<int>();
    r.tool = doc.at("provenance").at("tool").get<std::string>();
    r.version = doc.at("provenance").at("version").get<std::string>();
    r.manifest_hash = doc.at("provenance").at("manifest_fnv1a64").get<std::string>();
    r.n = doc.at("n").get<int>();
    r.m = doc.at("m").get<int>();
    r.hodge = doc.at("hodge").get<std::vector<std::vector<int>>>();
    r.harmonic = doc.at("harmonic").get<std::vector<std::vector<int>>>();
    r.hodge_symmetry = doc.at("flags").at("hodge_symmetry").get<std::vector<std::vector<bool>>>();
    r.serre_duality = doc.at("flags").at("serre_duality").get<bool>();
    r.star_condition = doc.at("flags").at("star_condition").get<bool>();
    r.hodge_sum = doc.at("flags").at("hodge_sum").get<bool>();
    r.betti = doc.at("betti").get<std::vector<int>>();
    if (doc.contains("representatives"))
      r.representatives = doc.at("representatives").get<std::vector<std::vector<std::vector<std::string>>>>();
    return r;
  } catch (const ordered_json::exception& e) {
    throw Error(std::string("report JSON misses expected fields: ") + e.what());
  }
}

std::string render_grid(const std::string& title, const std::vector<std::vector<int>>& grid) {
  std::ostringstream out;
  out << title << "\n";
  const int rows = static_cast<int>(grid.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(grid[0].size());
  std::size_t width = 3;
  for (const auto& row : grid)
    for (int v : row) width = std::max(width, std::to_string(v).size() + 1);
  out << " p\\q |";
  for (int q = 0; q < cols; ++q) {
    std::string head = std::to_string(q);
    out << std::string(width - head.size(), ' ') << head;
  }
  out << "\n-----+" << std::string(width * cols, '-') << "\n";
  for (int p = 0; p < rows; ++p) {
    std::string head = std::to_string(p);
    out << std::string(4 - head.size(), ' ') << head << " |";
    for (int q = 0; q < cols; ++q) {
      std::string cell = std::to_string(grid[p][q]);
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.tool << " " << r.version << "  (manifest " << r.manifest_hash << ")\n";
  out << "n = " << r.n << ", m = " << r.m << "\n\n";
  out << render_grid("Hodge numbers h^{p,q}", r.hodge) << "\n";
  out << render_grid("Harmonic dimensions", r.harmonic) << "\n";
  out << "hodge_symmetry:";
  bool all_sym = true;
  for (const auto& row : r.hodge_symmetry)
    for (bool v : row) all_sym = all_sym && v;
  if (all_sym) {
    out << " yes for all (p,q)\n";
  } else {
    out << " fails at";
    for (std::size_t p = 0; p < r.hodge_symmetry.size(); ++p)
      for (std::size_t q = 0; q < r.hodge_symmetry[p].size(); ++q)
        if (!r.hodge_symmetry[p][q]) out << " (" << p << "," << q << ")";
    out << "\n";
  }
  out << "serre_duality: " << (r.serre_duality ? "yes" : "no") << "\n";
  out << "star_condition: " << (r.star_condition ? "yes" : "no") << "\n";
  out << "hodge_sum: " << (r.hodge_sum ? "yes" : "no") << "\n";
  out << "betti:";
  for (int b : r.betti) out << " " << b;
  out << "\n";
  if (r.representatives) {
    out << "\nrepresentative cocycles:\n";
    for (std::size_t p = 0; p < r.representatives->size(); ++p)
      for (std::size_t q = 0; q < (*r.representatives)[p].size(); ++q)
        for (const std::string& s : (*r.representatives)[p][q])
          out << "  (" << p << "," << q << "): " << s << "\n";
  }
  return out.str();
}

}  // namespace solvmf
