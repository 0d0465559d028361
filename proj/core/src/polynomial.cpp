#include "vanish/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vanish {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (*a.ring() == *b.ring()) return;
  throw std::invalid_argument("polynomial ring mismatch");
}

}  // namespace

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars,
                   MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name: " + v);
  }
  if (order_.kind() == MonomialOrder::Kind::Block &&
      (order_.eliminated() < 0 ||
       static_cast<std::size_t>(order_.eliminated()) > vars_.size()))
    throw std::invalid_argument("block order size out of range");
}

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(PrimeField field, std::vector<std::string> vars,
                  MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(vars), order);
}

Polynomial::Polynomial(RingPtr ring)
    : ring_(std::move(ring)), terms_(TermCompare{ring_->order()}) {}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring->nvars()), ring->field().reduce(c));
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->nvars())
    throw std::invalid_argument("variable index out of range");
  Monomial m(ring->nvars());
  m.exps[index] = 1;
  return term(ring, m, 1);
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, std::int64_t c) {
  Polynomial p(ring);
  p.add_term(std::move(m), ring->field().reduce(c));
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

std::uint32_t Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<int>(m.exps[var]));
  return d;
}

void Polynomial::add_term(const Monomial& m, std::uint32_t c) {
  c %= ring_->field().order();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = ring_->field().add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(std::uint32_t c, const Monomial& m,
                            const Polynomial& g) {
  const auto& field = ring_->field();
  for (const auto& [gm, gc] : g.terms_)
    add_term(m * gm, field.mul(c, gc));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r = *this;
  const auto& field = ring_->field();
  for (const auto& [m, c] : o.terms_) r.add_term(m, field.neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.add_scaled(c, m, o);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  const auto& field = ring_->field();
  for (const auto& [m, c] : terms_) r.add_term(m, field.neg(c));
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(ring_ == o.ring_ || *ring_ == *o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  return std::equal(terms_.begin(), terms_.end(), o.terms_.begin());
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  Polynomial r(ring_);
  const auto& field = ring_->field();
  for (const auto& [m, k] : terms_) r.add_term(m, field.mul(k, c));
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coefficient()));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::uint32_t Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != ring_->nvars())
    throw std::invalid_argument("evaluation point has wrong length");
  const auto& field = ring_->field();
  std::uint32_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t v = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m.exps[i] != 0) v = field.mul(v, field.pow(point[i], m.exps[i]));
    acc = field.add(acc, v);
  }
  return acc;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;  // degree -1 by convention
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

std::vector<Polynomial> Polynomial::homogeneous_components() const {
  std::map<int, Polynomial> by_degree;
  for (const auto& [m, c] : terms_) {
    auto it = by_degree.find(m.degree());
    if (it == by_degree.end())
      it = by_degree.emplace(m.degree(), Polynomial(ring_)).first;
    it->second.add_term(m, c);
  }
  std::vector<Polynomial> out;
  out.reserve(by_degree.size());
  for (auto& [d, p] : by_degree) out.push_back(std::move(p));
  return out;
}

bool Polynomial::is_constant_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == 1;
}

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  for (const auto& d : divisors)
    if (d.is_zero()) throw std::invalid_argument("zero divisor in division");

  DivisionResult res{std::vector<Polynomial>(divisors.size(),
                                             Polynomial(ring)),
                     Polynomial(ring)};
  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    bool reduced_step = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Monomial& dm = divisors[i].leading_monomial();
      if (!dm.divides(lm)) continue;
      const Monomial u = lm / dm;
      const std::uint32_t c =
          field.mul(p.leading_coefficient(),
                    field.inv(divisors[i].leading_coefficient()));
      res.quotients[i].add_term(u, c);
      p.add_scaled(field.neg(c), u, divisors[i]);
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      res.remainder.add_term(lm, p.leading_coefficient());
      p.add_term(lm, field.neg(p.leading_coefficient()));
    }
  }
  return res;
}

Polynomial reduce(const Polynomial& f,
                  const std::vector<Polynomial>& divisors) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  for (const auto& d : divisors)
    if (d.is_zero()) throw std::invalid_argument("zero divisor in division");

  Polynomial r(ring);
  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    bool reduced_step = false;
    for (const auto& d : divisors) {
      const Monomial& dm = d.leading_monomial();
      if (!dm.divides(lm)) continue;
      const Monomial u = lm / dm;
      const std::uint32_t c = field.mul(p.leading_coefficient(),
                                        field.inv(d.leading_coefficient()));
      p.add_scaled(field.neg(c), u, d);
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      r.add_term(lm, p.leading_coefficient());
      p.add_term(lm, field.neg(p.leading_coefficient()));
    }
  }
  return r;
}

Polynomial change_ring(const Polynomial& p, const RingPtr& target,
                       const std::vector<int>& var_map) {
  if (var_map.size() != p.ring()->nvars())
    throw std::invalid_argument("variable map has wrong length");
  if (p.ring()->field() != target->field())
    throw std::invalid_argument("change_ring across different fields");
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial t(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (var_map[i] < 0)
        throw std::invalid_argument(
            "change_ring drops a variable with nonzero exponent");
      t.exps[static_cast<std::size_t>(var_map[i])] = m.exps[i];
    }
    out.add_term(t, c);
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero())
    throw std::invalid_argument("zero denominator in rational function");
}

}  // namespace vanish
