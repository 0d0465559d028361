// Test-only helpers: independent oracles and random-instance generators.
// Nothing here may call into the code path it is used to check.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vanish/groebner.hpp"
#include "vanish/parser.hpp"

namespace vanish::testing {

// dim_K(S_d / I_d) by dense linear algebra: the degree-d slice of the
// ideal is spanned by {m * g : g generator, m monomial, deg(m g) = d};
// H(d) = #monomials of degree d minus the rank of that span.
std::uint64_t hilbert_by_linear_algebra(const std::vector<Polynomial>& gens,
                                        int d);

// Build a spec from expression strings; denominators default to "1".
ParameterizationSpec make_spec(
    std::uint32_t q, const std::vector<std::string>& vars,
    const std::vector<std::string>& numerators, SetKind mode,
    const std::vector<std::string>& denominators = {});

// Random spec within the oracle-suite envelope: q in {2,3,5}, n <= 2,
// s <= 3, deg f_i, g_i <= 2, denominators kept nonzero.
ParameterizationSpec random_spec(std::mt19937& rng, SetKind mode,
                                 bool unit_denominators = false);

// Random nonzero polynomial of total degree <= max_deg.
Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring,
                             int max_deg, bool nonzero);

}  // namespace vanish::testing
