#pragma once

#include <cstdint>
#include <vector>

#include "vanish/groebner.hpp"
#include "vanish/parser.hpp"

namespace vanish {

// Coordinates are residues mod q. Projective representatives are
// normalized: leftmost nonzero coordinate equals 1.
using PointCoords = std::vector<std::uint32_t>;

struct AffinePoint {
  PointCoords coordinates;
};

struct ProjectivePoint {
  PointCoords coordinates;  // normalized, not all zero
};

// Deduplicated, sorted point list.
struct PointSet {
  SetKind kind;
  PrimeField field;
  std::size_t s = 0;
  std::vector<PointCoords> points;

  bool projective() const {
    return kind == SetKind::Projective || kind == SetKind::ProjectiveAlgebraic;
  }
  std::size_t size() const { return points.size(); }
  bool contains(const PointCoords& p) const;
};

PointCoords normalize_projective(const PrimeField& field, PointCoords coords);

// Brute-force grid enumeration of the parameterized set over K^n.
// Refuses (throws) when q^n exceeds the cap; never truncates silently.
PointSet enumerate_set(const ParameterizationSpec& spec, SetKind kind,
                       std::uint64_t grid_cap = 10'000'000);

// I_[P] = ({t_i - α_i t_k : i != k}) for the normalized representative
// with leftmost nonzero coordinate α_k = 1.
Ideal point_ideal(const ProjectivePoint& p, const RingPtr& s_ring);

// I(Y) = ∩_{[Q] in Y} I_[Q], by iterated ideal intersection.
Ideal oracle_vanishing_ideal(const PointSet& y, const RingPtr& s_ring);

// Y ∪ {[0]} closed under componentwise multiplication with the identity
// [1,...,1] in Y; products equal to the zero vector land on the adjoined
// [0].
bool is_multiplicative_monoid(const PointSet& y);

// The Laurent-monomial parameterization of a {0,1}-monoid subset:
// 2m variables y_1..y_m, z_1..z_m for m = |Y|, with
// F_k = prod_i (y_i^{q-1} if α_{ik}=1 else z_i^{q-1}/y_i^{q-1}).
// Returned as a full projective spec so the result can be re-enumerated.
ParameterizationSpec monoid_to_laurent_parameterization(const PointSet& y);

}  // namespace vanish
