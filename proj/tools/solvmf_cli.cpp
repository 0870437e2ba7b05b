// Command-line frontend: manifest in, tables and flags out.
//
//   solvmf report --preset example1C --format json
//   solvmf cohomology --manifest model.json --bidegree 1,1
//   solvmf validate --manifest model.json
//
// Exit codes: 0 success, 2 manifest/validation failure, 1 internal error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "solvmf/manifest.hpp"
#include "solvmf/report.hpp"

namespace {

using solvmf::ValidatedModel;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

struct CommonOpts {
  std::string manifest_path;
  std::string preset;
  std::string format = "text";

  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  auto* manifest = cmd->add_option("--manifest", opts.manifest_path, "Path to a model manifest");
  auto* preset = cmd->add_option("--preset", opts.preset, "Name of a built-in example manifest");
  manifest->excludes(preset);
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void emit_error(const CommonOpts& opts, const std::string& kind, const std::string& detail) {
  if (opts.json()) {
    ordered_json err;
    err["error"] = {{"kind", kind}, {"detail", detail}};
    std::cerr << err.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << detail << "\n";
  }
}

// Loads, parses and validates; on failure prints diagnostics and returns
// the suggested exit code in `code`.
std::optional<std::pair<ValidatedModel, std::string>> load_model(const CommonOpts& opts, int& code) {
  code = kExitOk;
  if (opts.manifest_path.empty() && opts.preset.empty()) {
    emit_error(opts, "usage", "one of --manifest or --preset is required");
    code = kExitInvalid;
    return std::nullopt;
  }
  std::string text;
  if (!opts.preset.empty()) {
    try {
      text = solvmf::preset_manifest(opts.preset);
    } catch (const solvmf::Error& e) {
      emit_error(opts, "preset", e.what());
      code = kExitInvalid;
      return std::nullopt;
    }
  } else {
    std::FILE* f = std::fopen(opts.manifest_path.c_str(), "rb");
    if (!f) {
      emit_error(opts, "manifest", "cannot open '" + opts.manifest_path + "'");
      code = kExitInvalid;
      return std::nullopt;
    }
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, f)) > 0) text.append(buffer, got);
    std::fclose(f);
  }
  solvmf::ManifestResult parsed = solvmf::parse_manifest(text);
  if (!parsed.ok()) {
    emit_error(opts, "schema", parsed.summary());
    code = kExitInvalid;
    return std::nullopt;
  }
  solvmf::ValidationReport report = solvmf::validate(*parsed.spec);
  if (!report.ok()) {
    emit_error(opts, "validation", report.summary());
    code = kExitInvalid;
    return std::nullopt;
  }
  return std::pair{ValidatedModel::check(std::move(*parsed.spec)), std::move(text)};
}

std::optional<std::pair<int, int>> parse_bidegree(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    int p = std::stoi(text.substr(0, comma));
    int q = std::stoi(text.substr(comma + 1));
    if (p < 0 || q < 0) return std::nullopt;
    return std::pair{p, q};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void print_dims(const CommonOpts& opts, const char* key, const std::string& title,
                const std::vector<std::vector<int>>& grid,
                const std::optional<std::pair<int, int>>& bidegree,
                const ordered_json& extra = ordered_json::object()) {
  if (opts.json()) {
    ordered_json doc;
    if (bidegree) {
      doc["bidegree"] = {bidegree->first, bidegree->second};
      doc[key] = grid.at(bidegree->first).at(bidegree->second);
    } else {
      doc[key] = grid;
    }
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    std::cout << doc.dump(2) << "\n";
  } else {
    if (bidegree) {
      std::cout << title << " at (" << bidegree->first << "," << bidegree->second
                << "): " << grid.at(bidegree->first).at(bidegree->second) << "\n";
    } else {
      std::cout << solvmf::render_grid(title, grid);
    }
    for (auto it = extra.begin(); it != extra.end(); ++it)
      std::cout << it.key() << ": " << it.value().dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dolbeault cohomology of solvmanifolds via finite-dimensional models"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string bidegree_arg;
  std::string algebra = "g";
  int max_star_dim = 12;
  bool with_representatives = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a manifest against the model rules");
  add_common(validate_cmd, opts);

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Hodge numbers of the filtered model");
  add_common(cohomology_cmd, opts);
  cohomology_cmd->add_option("--bidegree", bidegree_arg, "Restrict output to one p,q");
  cohomology_cmd->add_flag("--with-representatives", with_representatives,
                           "Include canonical representative cocycles");

  auto* harmonic_cmd = app.add_subcommand("harmonic", "Harmonic space dimensions");
  add_common(harmonic_cmd, opts);
  harmonic_cmd->add_option("--bidegree", bidegree_arg, "Restrict output to one p,q");

  auto* lie_cmd = app.add_subcommand("dolbeault-lie", "Lie-algebra Dolbeault cohomology");
  add_common(lie_cmd, opts);
  lie_cmd->add_option("--algebra", algebra, "Which algebra: n, a+n, or g")
      ->check(CLI::IsMember({"n", "a+n", "g"}))
      ->capture_default_str();

  auto* derham_cmd = app.add_subcommand("de-rham", "Betti numbers of the solvable algebra");
  add_common(derham_cmd, opts);

  auto* star_cmd = app.add_subcommand("check-star", "Test the lattice-triviality condition");
  add_common(star_cmd, opts);
  star_cmd->add_option("--max-star-dim", max_star_dim, "Enumeration bound on m")
      ->capture_default_str();

  auto* report_cmd = app.add_subcommand("report", "Everything: tables, flags, betti, provenance");
  add_common(report_cmd, opts);
  report_cmd->add_flag("--with-representatives", with_representatives,
                       "Include canonical representative cocycles");
  report_cmd->add_option("--max-star-dim", max_star_dim, "Enumeration bound on m")
      ->capture_default_str();

  auto* presets_cmd = app.add_subcommand("presets", "List the built-in example manifests");
  std::string presets_format = "text";
  presets_cmd->add_option("--format", presets_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (presets_cmd->parsed()) {
      if (presets_format == "json") {
        ordered_json doc;
        doc["presets"] = solvmf::preset_names();
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& name : solvmf::preset_names()) std::cout << name << "\n";
      }
      return kExitOk;
    }

    int code = kExitOk;
    auto loaded = load_model(opts, code);
    if (!loaded) return code;
    const ValidatedModel& model = loaded->first;
    const std::string& manifest_text = loaded->second;

    std::optional<std::pair<int, int>> bidegree;
    if (!bidegree_arg.empty()) {
      bidegree = parse_bidegree(bidegree_arg);
      if (!bidegree) {
        emit_error(opts, "usage", "--bidegree expects 'p,q' with nonnegative integers");
        return kExitInvalid;
      }
    }

    if (validate_cmd->parsed()) {
      if (opts.json()) {
        ordered_json doc;
        doc["valid"] = true;
        doc["manifest_fnv1a64"] = solvmf::fnv1a64_hex(manifest_text);
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "valid\n";
      }
      return kExitOk;
    }

    if (cohomology_cmd->parsed()) {
      solvmf::CohomologyTable table = solvmf::cohomology(solvmf::build_bcomplex(model).cx);
      ordered_json extra = ordered_json::object();
      if (with_representatives) {
        ordered_json reps = ordered_json::array();
        for (const auto& row : table.representatives) {
          ordered_json jrow = ordered_json::array();
          for (const auto& cell : row) {
            ordered_json jcell = ordered_json::array();
            for (const auto& f : cell) jcell.push_back(solvmf::to_expr_string(f));
            jrow.push_back(jcell);
          }
          reps.push_back(jrow);
        }
        extra["representatives"] = reps;
      }
      print_dims(opts, "hodge", "Hodge numbers h^{p,q}", table.h, bidegree, extra);
      return kExitOk;
    }

    if (harmonic_cmd->parsed()) {
      solvmf::BComplex b = solvmf::build_bcomplex(model);
      const int N = b.cx.top();
      std::vector<std::vector<int>> dims(N + 1, std::vector<int>(N + 1));
      for (int p = 0; p <= N; ++p)
        for (int q = 0; q <= N; ++q) dims[p][q] = solvmf::harmonic_space(b.cx, p, q).dim();
      print_dims(opts, "harmonic", "Harmonic dimensions", dims, bidegree);
      return kExitOk;
    }

    if (lie_cmd->parsed()) {
      solvmf::LieVariant which = algebra == "n"   ? solvmf::LieVariant::nilpotent
                                 : algebra == "g" ? solvmf::LieVariant::full
                                                  : solvmf::LieVariant::direct_sum;
      solvmf::CohomologyTable table = solvmf::lie_dolbeault(model, which);
      print_dims(opts, "hodge", "Lie-algebra Dolbeault h^{p,q} (" + algebra + ")", table.h,
                 std::nullopt);
      return kExitOk;
    }

    if (derham_cmd->parsed()) {
      std::vector<int> betti = solvmf::de_rham(model);
      if (opts.json()) {
        ordered_json doc;
        doc["betti"] = betti;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "betti:";
        for (int b : betti) std::cout << " " << b;
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (star_cmd->parsed()) {
      bool holds = solvmf::star_condition_check(model, max_star_dim);
      if (opts.json()) {
        ordered_json doc;
        doc["star_condition"] = holds;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "star_condition: " << (holds ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (report_cmd->parsed()) {
      solvmf::ReportOptions roptions;
      roptions.with_representatives = with_representatives;
      roptions.max_star_dim = max_star_dim;
      solvmf::Report report = solvmf::build_report(model, manifest_text, roptions);
      if (opts.json())
        std::cout << solvmf::emit_json(report);
      else
        std::cout << solvmf::render_text(report);
      return kExitOk;
    }

    emit_error(opts, "usage", "no subcommand handled");
    return kExitInternal;
  } catch (const std::exception& e) {
    emit_error(opts, "internal", e.what());
    return kExitInternal;
  }
}
