#pragma once

#include <string>
#include <vector>

#include "vanish/polynomial.hpp"

namespace vanish {

// Which parameterized set a computation targets.
enum class SetKind {
  Projective,           // X̄: some f_i(x) != 0, all g_i(x) != 0
  ProjectiveAlgebraic,  // X:  all f_i(x) g_i(x) != 0, projective
  Affine,               // X̄*: all g_i(x) != 0
  AffineAlgebraic       // X*: all f_i(x) g_i(x) != 0, affine
};

std::string to_string(SetKind kind);

// A parsed input: q, the parameter variables y_1..y_n, and the rational
// functions f_i/g_i defining the parameterized set.
struct ParameterizationSpec {
  PrimeField field;
  std::vector<std::string> variables;
  std::vector<RationalFunction> functions;
  SetKind mode;
  RingPtr ring;  // K[y_1..y_n] under grevlex; numerators/denominators live here

  std::size_t n() const { return variables.size(); }
  std::size_t s() const { return functions.size(); }
};

// Syntax or validation failure, with position info when available.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := natural | identifier | '(' expr ')'
// Implicit multiplication is not allowed: "y1y2" is one identifier.
Polynomial parse_polynomial(const std::string& src, const RingPtr& ring);

// Canonical rendering under the ring's term order; reparses to an equal
// polynomial.
std::string render(const Polynomial& p);
std::string render_monomial(const Monomial& m, const PolyRing& ring);

// Spec file: UTF-8 "key = value" lines, '#' comments, ';' separates
// multiple assignments on one line. Keys: q, vars, mode, f1..fs, g1..gs
// (gi defaults to "1").
ParameterizationSpec parse_spec(const std::string& text);

ParameterizationSpec load_spec_file(const std::string& path);

}  // namespace vanish
