#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vanish/invariants.hpp"
#include "vanish/points.hpp"
#include "vanish/rmcode.hpp"
#include "vanish/vanishing.hpp"

using namespace vanish;
using vanish::testing::make_spec;

namespace {

GroebnerBasis gb_of(const RingPtr& ring, const std::vector<std::string>& exprs) {
  std::vector<Polynomial> gens;
  for (const auto& e : exprs) gens.push_back(parse_polynomial(e, ring));
  return buchberger(Ideal::of(ring, std::move(gens)));
}

}  // namespace

TEST_CASE("Hilbert function of the full ring") {
  auto r = output_ring(PrimeField(5), 2);
  auto gb = buchberger(Ideal{r, {}});
  for (int d = 0; d < 6; ++d)
    CHECK(hilbert_function(gb, d) == static_cast<std::uint64_t>(d) + 1);
  CHECK(krull_dimension(gb) == 2);
}

TEST_CASE("line pair: H = 1, 2, 2, ...") {
  auto r = output_ring(PrimeField(5), 2);
  auto gb = gb_of(r, {"t1*t2"});
  CHECK(hilbert_function(gb, 0) == 1);
  CHECK(hilbert_function(gb, 1) == 2);
  CHECK(hilbert_function(gb, 4) == 2);
  CHECK(krull_dimension(gb) == 1);
  CHECK(degree(gb) == 2);
  CHECK(regularity(gb) == 1);

  auto profile = hilbert_profile(gb);
  CHECK(profile.dimension == 1);
  CHECK(profile.degree == 2);
  CHECK(profile.regularity == 1);
  CHECK(profile.stabilized);
  REQUIRE(profile.values.size() >= 2);
  CHECK(profile.values[0] == 1);
  CHECK(profile.values[1] == 2);
}

TEST_CASE("zero-dimensional degree is the standard-monomial count") {
  auto r = output_ring(PrimeField(5), 2);
  auto gb = gb_of(r, {"t1^2", "t2^3"});
  CHECK(krull_dimension(gb) == 0);
  CHECK(degree(gb) == 6);

  auto irrelevant = gb_of(r, {"t1", "t2"});
  CHECK(krull_dimension(irrelevant) == 0);
  CHECK(degree(irrelevant) == 1);
}

TEST_CASE("unit ideal") {
  auto r = output_ring(PrimeField(5), 2);
  auto gb = gb_of(r, {"1"});
  CHECK(krull_dimension(gb) == -1);
  auto profile = hilbert_profile(gb);
  CHECK(profile.dimension == -1);
  CHECK(profile.degree == 0);
}

TEST_CASE("hilbert function matches the linear-algebra count") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::uint32_t> coeff(1, 4);
  auto r = output_ring(PrimeField(5), 3);
  for (int trial = 0; trial < 12; ++trial) {
    // Random homogeneous generators of degree 2.
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) {
      Polynomial p(r);
      for (const auto& m : monomial_basis(3, 2))
        if (rng() % 3 == 0) p.add_term(m, coeff(rng));
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    auto gb = buchberger(Ideal::of(r, gens));
    for (int d = 0; d <= 5; ++d)
      CHECK(hilbert_function(gb, d) ==
            vanish::testing::hilbert_by_linear_algebra(gens, d));
  }
}

TEST_CASE("projective vanishing ideals have dimension 1 and degree |Y|") {
  auto spec = make_spec(3, {"y1"}, {"1", "y1", "y1^2"}, SetKind::Projective);
  auto res = projective_vanishing_ideal(spec);
  REQUIRE(res.status == IdealStatus::Proper);
  auto pts = enumerate_set(spec, SetKind::Projective);
  auto profile = hilbert_profile(res.gb);
  CHECK(profile.dimension == 1);
  CHECK(profile.degree == pts.size());
  CHECK(profile.regularity >= 0);
  // H is nondecreasing up to the degree and then constant.
  for (std::size_t i = 1; i < profile.values.size(); ++i)
    CHECK(profile.values[i] >= profile.values[i - 1]);
  CHECK(profile.values.back() == profile.degree);
}

TEST_CASE("regularity marks the first degree reaching deg(S/I)") {
  auto spec = make_spec(3, {"y1", "y2"}, {"y1", "y2", "y1+y2"},
                        SetKind::Projective);
  auto res = projective_vanishing_ideal(spec);
  REQUIRE(res.status == IdealStatus::Proper);
  auto profile = hilbert_profile(res.gb);
  const int r = profile.regularity;
  CHECK(hilbert_function(res.gb, r) == profile.degree);
  if (r > 0) CHECK(hilbert_function(res.gb, r - 1) < profile.degree);
}

TEST_CASE("ungraded input is rejected by the hilbert function") {
  auto r = output_ring(PrimeField(5), 2);
  auto gb = gb_of(r, {"t1^2 - t1"});
  CHECK_THROWS_AS(hilbert_function(gb, 2), std::invalid_argument);
}
