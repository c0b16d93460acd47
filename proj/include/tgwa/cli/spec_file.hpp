#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgwa/cli/expr.hpp"
#include "tgwa/modules/weight_module.hpp"
#include "tgwa/twisting/graded_twist.hpp"

namespace tgwa::cli {

struct AutoDecl {
  std::string name;
  RingMap map;  // with inverse images from the name_inv block
};

struct ModuleDecl {
  SimpleKind kind = SimpleKind::U;
  int shift = 0;
  std::optional<Ratfun> lambda;
};

// A parsed spec file:
//   params: [q]
//   vars: [h]
//   autos: {sigma1: {h: h + 1}, sigma1_inv: {h: h - 1}, ...}
//   t: [h, h + 1]
//   mu: [[1, 1], [1, 1]]
// with optional qsystem, twist, cocycle and modules blocks.
struct ProjectSpec {
  std::vector<Symbol> params;
  std::vector<Symbol> vars;
  std::vector<AutoDecl> autos;
  std::vector<Ratfun> t;
  ParameterMatrix mu;
  std::optional<QSystem> qsystem;  // rows index the generators of the other factor
  std::optional<QSystem> twist;
  std::optional<std::vector<std::vector<Ratfun>>> cocycle;
  std::vector<ModuleDecl> modules;

  std::size_t rank() const { return t.size(); }
  Tgwd datum() const;
  Scope scope() const;
};

bool operator==(const ProjectSpec& a, const ProjectSpec& b);
inline bool operator!=(const ProjectSpec& a, const ProjectSpec& b) { return !(a == b); }

ProjectSpec parse_spec(const std::string& text);
std::string render_spec(const ProjectSpec& spec);
std::string read_file(const std::string& path);

// Exchange data for A (x)_tau B in its own file:
//   params: [lambda]
//   qsystem: [[lambda^-1]]          rows: generators of B, columns: generators of A
//   rho: {rho1: {...}, rho1_inv: {...}}      one automorphism of R per generator of B
//   sigma: {sigma1: {...}, sigma1_inv: {...}}  one automorphism of S per generator of A
// An entry is [pp, pm, mp, mm] or a scalar a standing for [a, 1/a, 1/a, a].
struct ExchangeSpec {
  QSystem q;
  TensorExtension ext;
};
ExchangeSpec parse_exchange(const std::string& text, const ProjectSpec& a, const ProjectSpec& b);

// A twisting file holds params and a twist or cocycle block.
TwistingSystemSpec parse_twist_file(const std::string& text, const ProjectSpec& a);
TwistingSystemSpec spec_twist(const ProjectSpec& a);

// "[[1, q], [1/q, 1]]" in the scope of a spec.
ParameterMatrix parse_matrix_arg(const std::string& text, const ProjectSpec& spec);

}  // namespace tgwa::cli
