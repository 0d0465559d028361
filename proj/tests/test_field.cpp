#include <doctest.h>

#include <stdexcept>

#include "vanish/field.hpp"

using namespace vanish;

TEST_CASE("construction accepts primes and rejects composites") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(3));
  CHECK_NOTHROW(PrimeField(65521));
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument);  // above the cap
}

TEST_CASE("arithmetic is the canonical residue") {
  PrimeField f5(5), f3(3);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.add(2, 3) == 0);
  CHECK(f3.sub(1, 2) == 2);
  CHECK((FieldElement(3, f5) * FieldElement(4, f5)).value == 2);
}

TEST_CASE("mixed-field operations are rejected") {
  FieldElement a(1, PrimeField(5)), b(1, PrimeField(3));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("inverses") {
  PrimeField f5(5), f3(3);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.inv(4) == 4);
  CHECK(f3.inv(2) == 2);
  CHECK_THROWS_AS(f5.inv(0), std::domain_error);
  CHECK_THROWS_AS(FieldElement(0, f5).inverse(), std::domain_error);
}

TEST_CASE("enumerate lists ascending residues") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto elems = enumerate(PrimeField(q));
    REQUIRE(elems.size() == q);
    for (std::uint32_t v = 0; v < q; ++v) CHECK(elems[v].value == v);
  }
}

TEST_CASE("field axioms, exhaustively for small q") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    PrimeField f(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.pow(a, q) == a);  // a^q = a
      if (a != 0) CHECK(f.pow(a, q - 1) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}
