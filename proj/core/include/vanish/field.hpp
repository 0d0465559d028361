#pragma once

#include <cstdint>
#include <vector>

namespace vanish {

// Prime field F_q = Z/qZ. q is checked for primality at construction;
// residues are kept fully reduced so equality is structural.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t order() const { return q_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % q_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // Multiplicative inverse; throws on a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField& o) const { return q_ == o.q_; }
  bool operator!=(const PrimeField& o) const { return q_ != o.q_; }

private:
  std::uint32_t q_;
};

// A residue together with its field. Immutable value type.
struct FieldElement {
  std::uint32_t value;
  PrimeField field;

  FieldElement(std::uint32_t v, PrimeField f) : value(v % f.order()), field(f) {}

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const {
    return value == o.value && field == o.field;
  }
};

// All q elements of the field, ascending residues 0..q-1.
std::vector<FieldElement> enumerate(const PrimeField& field);

}  // namespace vanish
