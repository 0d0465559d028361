#include "vanish/field.hpp"

#include <stdexcept>
#include <string>

namespace vanish {

namespace {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

void check_same_field(const PrimeField& a, const PrimeField& b) {
  if (a != b)
    throw std::invalid_argument("field mismatch: F_" +
                                std::to_string(a.order()) + " vs F_" +
                                std::to_string(b.order()));
}

}  // namespace

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q > 65536)
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " exceeds the 2^16 enumeration cap");
  if (!is_prime(q))
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t base = a % q_;
  std::uint32_t result = 1 % q_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= q_;
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  // Fermat: a^(q-2) * a = a^(q-1) = 1.
  return pow(a, q_ - 2);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(field, o.field);
  return {field.add(value, o.value), field};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(field, o.field);
  return {field.sub(value, o.value), field};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(field, o.field);
  return {field.mul(value, o.value), field};
}

FieldElement FieldElement::inverse() const { return {field.inv(value), field}; }

std::vector<FieldElement> enumerate(const PrimeField& field) {
  std::vector<FieldElement> out;
  out.reserve(field.order());
  for (std::uint32_t v = 0; v < field.order(); ++v) out.emplace_back(v, field);
  return out;
}

}  // namespace vanish
