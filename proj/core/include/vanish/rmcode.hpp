#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vanish/points.hpp"

namespace vanish {

// The projective Reed-Muller-type code C_Y(d): rows are the evaluation
// images of the degree-d monomial basis at the normalized
// representatives of Y.
struct EvaluationCode {
  std::uint32_t q = 0;
  std::size_t length = 0;                    // m = |Y|
  int degree = 0;                            // d
  std::vector<Monomial> row_monomials;       // degree-d monomials, lex order
  std::vector<std::vector<std::uint32_t>> generator_rows;
  std::size_t dimension = 0;                 // rank of the generator matrix
};

// Outcome of the minimum-distance search; enumeration refuses (rather
// than truncates) past the class cap.
struct MinDistance {
  std::optional<std::uint32_t> value;
  std::uint64_t classes = 0;  // projective message classes (q^k-1)/(q-1)

  bool computed() const { return value.has_value(); }
};

// All monomials of total degree d in nvars variables, descending lex.
std::vector<Monomial> monomial_basis(std::size_t nvars, int d);

EvaluationCode build_code(const PointSet& y, int d);

// Exhaustive search over projective message classes (scaling preserves
// weight). With `reg` given and d >= reg the answer is 1 immediately.
MinDistance minimum_distance(const EvaluationCode& code,
                             std::uint64_t class_cap = 5'000'000,
                             std::optional<int> reg = std::nullopt);

struct CodeTableRow {
  int d = 0;
  std::size_t length = 0;
  std::size_t dimension = 0;
  MinDistance distance;
};

std::vector<CodeTableRow> parameter_table(const PointSet& y, int dmin, int dmax,
                                          std::uint64_t class_cap = 5'000'000,
                                          std::optional<int> reg = std::nullopt);

// Rank of a matrix over F_q (Gaussian elimination).
std::size_t matrix_rank(std::vector<std::vector<std::uint32_t>> rows,
                        const PrimeField& field);

}  // namespace vanish
