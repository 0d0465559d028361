#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "vanish/invariants.hpp"
#include "vanish/rmcode.hpp"
#include "vanish/vanishing.hpp"

using namespace vanish;
using vanish::testing::make_spec;
using vanish::testing::random_spec;

namespace {

// Full q^k codeword sweep; only for tiny k.
std::uint32_t min_distance_brute(const EvaluationCode& code) {
  const PrimeField field(code.q);
  const std::size_t k = code.generator_rows.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= code.q;
  std::uint32_t best = 0;
  bool seen = false;
  std::vector<std::uint32_t> msg(k, 0);
  for (std::uint64_t m = 1; m < total; ++m) {
    std::uint64_t v = m;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = static_cast<std::uint32_t>(v % code.q);
      v /= code.q;
    }
    std::uint32_t weight = 0;
    bool nonzero_word = false;
    for (std::size_t col = 0; col < code.length; ++col) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        acc = field.add(acc, field.mul(msg[i], code.generator_rows[i][col]));
      if (acc != 0) {
        ++weight;
        nonzero_word = true;
      }
    }
    if (!nonzero_word) continue;  // message in the kernel
    if (!seen || weight < best) {
      best = weight;
      seen = true;
    }
  }
  return seen ? best : 0;
}

PointSet projective_line(std::uint32_t q) {
  PointSet y{SetKind::Projective, PrimeField(q), 2, {}};
  y.points.push_back({0, 1});
  for (std::uint32_t a = 0; a < q; ++a) y.points.push_back({1, a});
  std::sort(y.points.begin(), y.points.end());
  return y;
}

}  // namespace

TEST_CASE("monomial basis is complete and descending lex") {
  auto b = monomial_basis(3, 2);
  CHECK(b.size() == 6);  // C(4,2)
  auto lex = MonomialOrder::lex();
  for (std::size_t i = 1; i < b.size(); ++i) {
    CHECK(lex.compare(b[i - 1], b[i]) > 0);
    CHECK(b[i].degree() == 2);
  }
  CHECK(b.front().exps == std::vector<std::uint16_t>{2, 0, 0});
  CHECK(b.back().exps == std::vector<std::uint16_t>{0, 0, 2});
  CHECK(monomial_basis(2, 1).size() == 2);
}

TEST_CASE("codes on the projective line over F_2") {
  auto y = projective_line(2);
  REQUIRE(y.size() == 3);

  auto c1 = build_code(y, 1);
  CHECK(c1.length == 3);
  CHECK(c1.dimension == 2);
  auto d1 = minimum_distance(c1);
  REQUIRE(d1.computed());
  CHECK(*d1.value == 2);

  auto c2 = build_code(y, 2);
  CHECK(c2.dimension == 3);
  auto d2 = minimum_distance(c2);
  REQUIRE(d2.computed());
  CHECK(*d2.value == 1);
}

TEST_CASE("regularity shortcut returns distance 1 without searching") {
  auto y = projective_line(2);
  auto code = build_code(y, 5);
  auto d = minimum_distance(code, 5'000'000, 2);
  REQUIRE(d.computed());
  CHECK(*d.value == 1);
}

TEST_CASE("class cap refuses instead of truncating") {
  auto y = projective_line(5);
  auto code = build_code(y, 2);
  auto d = minimum_distance(code, 2);
  CHECK(!d.computed());
  CHECK(d.classes > 2);
}

TEST_CASE("search agrees with the brute-force sweep") {
  std::mt19937 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 10; ++trial) {
    auto spec = random_spec(rng, SetKind::Projective, true);
    if (spec.field.order() > 3) continue;
    auto pts = enumerate_set(spec, SetKind::Projective);
    if (pts.size() < 2 || pts.size() > 12) continue;
    for (int d = 1; d <= 2; ++d) {
      auto code = build_code(pts, d);
      if (code.dimension == 0 || code.dimension > 7) continue;
      auto fast = minimum_distance(code);
      REQUIRE(fast.computed());
      CHECK(*fast.value == min_distance_brute(code));
      ++checked;
    }
  }
  CHECK(checked >= 6);
}

TEST_CASE("basic coding bounds hold") {
  std::mt19937 rng(78);
  for (int trial = 0; trial < 15; ++trial) {
    auto spec = random_spec(rng, SetKind::Projective, true);
    auto pts = enumerate_set(spec, SetKind::Projective);
    if (pts.size() == 0) continue;
    for (int d = 1; d <= 2; ++d) {
      auto code = build_code(pts, d);
      CHECK(code.length == pts.size());
      CHECK(code.dimension <= std::min(code.length, code.row_monomials.size()));
      auto dist = minimum_distance(code);
      if (!dist.computed() || code.dimension == 0) continue;
      CHECK(*dist.value >= 1);
      // Singleton bound
      CHECK(*dist.value <= code.length - code.dimension + 1);
    }
  }
}

TEST_CASE("parameter table matches pointwise computation") {
  auto y = projective_line(3);
  auto table = parameter_table(y, 1, 3);
  REQUIRE(table.size() == 3);
  for (const auto& row : table) {
    auto code = build_code(y, row.d);
    CHECK(row.length == code.length);
    CHECK(row.dimension == code.dimension);
    auto dist = minimum_distance(code);
    CHECK(row.distance.computed() == dist.computed());
    if (dist.computed()) CHECK(*row.distance.value == *dist.value);
  }
  // dim C(1) = 2, the line has q+1 = 4 points, δ(1) = q = 3.
  CHECK(table[0].dimension == 2);
  REQUIRE(table[0].distance.computed());
  CHECK(*table[0].distance.value == 3);
}

TEST_CASE("matrix rank") {
  PrimeField f5(5);
  CHECK(matrix_rank({{1, 2}, {2, 4}}, f5) == 1);
  CHECK(matrix_rank({{1, 0}, {0, 1}, {1, 1}}, f5) == 2);
  CHECK(matrix_rank({{0, 0}}, f5) == 0);
  CHECK(matrix_rank({}, f5) == 0);
}

TEST_CASE("degenerate inputs are rejected") {
  PointSet empty{SetKind::Projective, PrimeField(3), 2, {}};
  CHECK_THROWS_AS(build_code(empty, 1), std::invalid_argument);
  auto y = projective_line(3);
  CHECK_THROWS_AS(build_code(y, 0), std::invalid_argument);
}
