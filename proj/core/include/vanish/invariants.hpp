#pragma once

#include <cstdint>
#include <vector>

#include "vanish/groebner.hpp"

namespace vanish {

// Hilbert data of S/I for a computed vanishing ideal, read off the
// reduced grevlex GB by standard-monomial counting.
struct HilbertProfile {
  std::vector<std::uint64_t> values;  // H(0), H(1), ..., up to stabilization
  int dimension = 0;                  // Krull dimension of S/I (-1 if I = S)
  std::uint64_t degree = 0;
  int regularity = 0;
  bool stabilized = false;
};

// dim_K(S_d / I_d): number of degree-d monomials not divisible by any
// leading monomial of the reduced GB. Requires a graded ideal.
std::uint64_t hilbert_function(const GroebnerBasis& gb, int d);

// Krull dimension of S/I via independent variable sets modulo the
// initial ideal; -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& gb);

// deg(S/I) for dimension 0 (total standard-monomial count) or 1 (the
// stabilized Hilbert value). Dimensions >= 2 are unsupported.
std::uint64_t degree(const GroebnerBasis& gb, int guard = 200);

// Least r >= 0 with H(r) = deg(S/I); graded dimension-1 input.
int regularity(const GroebnerBasis& gb, int guard = 200);

HilbertProfile hilbert_profile(const GroebnerBasis& gb, int guard = 200);

}  // namespace vanish
