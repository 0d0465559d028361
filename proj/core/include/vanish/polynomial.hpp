#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vanish/field.hpp"
#include "vanish/monomial.hpp"

namespace vanish {

// A polynomial ring F_q[x_1,...,x_n] with an active monomial order.
// Rings are shared immutably; polynomials hold a pointer to theirs.
class PolyRing {
public:
  PolyRing(PrimeField field, std::vector<std::string> vars,
           MonomialOrder order);

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  // Index of a variable name, or -1.
  int var_index(const std::string& name) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(PrimeField field, std::vector<std::string> vars,
                  MonomialOrder order);

// Terms are kept in descending monomial order, so begin() is the
// leading term and iteration is canonical for the ring's order.
struct TermCompare {
  MonomialOrder order = MonomialOrder::grevlex();
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order.compare(a, b) > 0;
  }
};

// Sparse multivariate polynomial over F_q. Zero coefficients are never
// stored; the zero polynomial has an empty term map. Immutable in spirit:
// arithmetic returns new values.
class Polynomial {
public:
  using TermMap = std::map<Monomial, std::uint32_t, TermCompare>;

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(const RingPtr& ring, std::int64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial term(const RingPtr& ring, Monomial m, std::int64_t c);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Leading data under the ring's order; throws on zero.
  const Monomial& leading_monomial() const;
  std::uint32_t leading_coefficient() const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(std::uint32_t c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  // In-place: *this += c * m * g. The workhorse of reduction.
  void add_scaled(std::uint32_t c, const Monomial& m, const Polynomial& g);
  void add_term(const Monomial& m, std::uint32_t c);

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  bool is_homogeneous() const;
  std::vector<Polynomial> homogeneous_components() const;

  bool is_constant_one() const;

private:
  RingPtr ring_;
  TermMap terms_;
};

// Multivariate division: f = sum q_i d_i + r with no monomial of r
// divisible by any leading monomial of the divisors.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors);

// Remainder only, same contract as divide().
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Map a polynomial into another ring. var_map[i] gives the target index
// of source variable i, or -1 if the variable is dropped (its exponent
// must then be zero in every term).
Polynomial change_ring(const Polynomial& p, const RingPtr& target,
                       const std::vector<int>& var_map);

// Rational function f/g with g != 0. No cancellation is performed.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  RationalFunction(Polynomial num, Polynomial den);
};

}  // namespace vanish
