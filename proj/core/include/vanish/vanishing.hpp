#pragma once

#include <optional>

#include "vanish/groebner.hpp"
#include "vanish/parser.hpp"

namespace vanish {

enum class IdealStatus {
  Proper,     // the parameterized set is nonempty (projective case)
  EmptySet,   // I ∩ S = S: no well-defined point at all
  OriginOnly  // I ∩ S = (t_1..t_s): the affine set is exactly {0}
};

std::string to_string(IdealStatus status);

// A vanishing ideal in S = K[t_1..t_s], held as its reduced grevlex GB
// together with the degenerate-case classification.
struct VanishingResult {
  GroebnerBasis gb;  // reduced, in S under grevlex
  IdealStatus status;

  Ideal ideal() const { return gb.as_ideal(); }
};

// The output ring S = K[t_1..t_s] under grevlex.
RingPtr output_ring(const PrimeField& field, std::size_t s);

// I(X̄) = ({g_i t_i - f_i z}, {y_i^q - y_i}, y_0 g_1..g_s - 1) ∩ S.
VanishingResult projective_vanishing_ideal(const ParameterizationSpec& spec);

// I(X) via the extra generators {f_i^{q-1} - 1} (default) or the extra
// variable w with w f_1..f_s - 1 (alternate form, for cross-checks).
VanishingResult projective_algebraic_vanishing_ideal(
    const ParameterizationSpec& spec, bool use_w_form = false);

// I(X̄*) = ({g_i t_i - f_i}, {y_i^q - y_i}, y_0 g_1..g_s - 1) ∩ S.
VanishingResult affine_vanishing_ideal(const ParameterizationSpec& spec);

// I(X*) = (I(X̄*) : t_1 ... t_s).
VanishingResult affine_algebraic_vanishing_ideal(
    const ParameterizationSpec& spec);

// (I(X̄) : t_1 ... t_s); equals I(X) when X is nonempty.
VanishingResult colon_to_algebraic(const VanishingResult& projective);

// Smaller generating sets for polynomial parameterizations (all g_i = 1):
// no y_0 variable. Throws if some denominator is nontrivial.
VanishingResult polynomial_shortcut(const ParameterizationSpec& spec,
                                    bool algebraic);

// Dispatch on spec.mode.
VanishingResult compute_vanishing_ideal(const ParameterizationSpec& spec);

}  // namespace vanish
