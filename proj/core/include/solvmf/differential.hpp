// Graded differentials on the exterior algebra, given by generator images
// and extended by the graded Leibniz rule. Two construction paths exist
// for the nilpotent structure: explicit dbar-images of the w/wb
// generators, or complex structure constants (C, D, E) fed through the
// Chevalley-Eilenberg rule  d xi (A, B) = -xi([A, B]).
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "solvmf/exterior.hpp"

namespace solvmf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator id layout: [0,n) x, [n,n+m) w, [n+m,2n+m) xb, [2n+m,2n+2m) wb.
int generator_id(const GeneratorUniverse& u, Generator g);
Generator generator_from_id(const GeneratorUniverse& u, int id);

class DifferentialSpec {
 public:
  // `dolbeault` asks validation to enforce the (0,1) bidegree shift on
  // every generator image; total differentials (de Rham) leave it false.
  DifferentialSpec(GeneratorUniverse u, std::vector<Form> images, bool dolbeault);

  static DifferentialSpec zero(GeneratorUniverse u, bool dolbeault = true);

  const GeneratorUniverse& universe() const { return uni_; }
  const Form& image(Generator g) const { return images_[generator_id(uni_, g)]; }
  const Form& image(int id) const { return images_.at(id); }
  bool is_dolbeault() const { return dolbeault_; }
  bool validated() const { return validated_; }

  // Checks bidegree shifts and d(d(g)) = 0 for every generator; throws
  // Error on failure, marks the spec usable on success.
  void validate();

 private:
  GeneratorUniverse uni_;
  std::vector<Form> images_;
  bool dolbeault_;
  bool validated_ = false;

  friend Form apply_diff_unchecked(const DifferentialSpec&, const Form&);
};

// Linear, graded-Leibniz extension of the generator images. Requires a
// validated spec.
Form apply_diff(const DifferentialSpec& spec, const Form& u);

// ---------------------------------------------------------------------------
// Structure constants of the complexified nilpotent algebra in the frame
// Y_1..Y_m, Yb_1..Yb_m:
//   C: [Y_a, Y_b]  = sum_c C^c_ab Y_c          (a < b)
//   D: [Y_a, Yb_b] = sum_c D^c_ab Y_c + ...
//   E: [Y_a, Yb_b] = ... + sum_c E^c_ab Yb_c
// The Yb-Yb brackets are conjugates of the Y-Y ones; reality forces
// E^c_ab = -conj(D^c_ba), which is validated rather than assumed.

struct BracketTriple {
  int a = 0, b = 0, c = 0;  // 1-based generator indices
  GaussRat coeff;
};

struct NilBrackets {
  int m = 0;
  std::vector<BracketTriple> C, D, E;
};

struct StructureIssue {
  std::string code;  // "bracket_index", "antisymmetry", "reality", "jacobi", "integrability"
  std::string message;
};

// Non-throwing structural validation of the bracket data.
std::vector<StructureIssue> check_brackets(const NilBrackets& nb);

// dbar-images of w/wb inside the given universe (x generators closed).
// Throws Error when check_brackets reports problems or dbar^2 != 0.
DifferentialSpec ce_from_brackets(const NilBrackets& nb, const GeneratorUniverse& u);

// Derive the total differential d = del + dbar from a dbar spec using
// d(conj w) = conj(d w).
DifferentialSpec total_from_dolbeault(const DifferentialSpec& dbar);

}  // namespace solvmf
