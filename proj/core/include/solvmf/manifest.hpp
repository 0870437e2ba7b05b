// Manifest ingestion: a strict JSON schema that deserializes to exactly
// one ModelSpec or a list of located errors. Formal reals use the grammar
//   3/2*pi + 1*b - 1/4
// and dbar images a small wedge-expression grammar
//   -1*w1^wb2 + (1/2+1/2i)*w3^wb1.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvmf/model.hpp"

namespace solvmf {

struct ParseIssue {
  std::string path;  // JSON pointer-style location, "" for whole-document errors
  std::string message;
};

struct ManifestResult {
  std::optional<ModelSpec> spec;
  std::vector<ParseIssue> errors;

  bool ok() const { return spec.has_value() && errors.empty(); }
  std::string summary() const;
};

ManifestResult parse_manifest(const std::string& text);
ManifestResult parse_manifest_file(const std::string& path);

// Grammar pieces, exposed for reuse and direct testing. Both throw
// std::invalid_argument with a description on malformed input.
FormalReal parse_formal_real(std::string_view text);
Form parse_form_expr(std::string_view text);
GaussRat parse_gauss(std::string_view text);

std::string to_expr_string(const Form& f);  // round-trips through parse_form_expr

// Embedded example manifests.
std::vector<std::string> preset_names();
const std::string& preset_manifest(const std::string& name);  // throws Error on unknown name

}  // namespace solvmf
