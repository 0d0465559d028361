#pragma once

#include <vector>

#include "vanish/polynomial.hpp"

namespace vanish {

// Generator list; an empty list is the zero ideal.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  static Ideal of(const RingPtr& ring, std::vector<Polynomial> gens);
};

// Elements monic, sorted ascending by leading monomial. When reduced,
// no monomial of an element is divisible by another element's leading
// monomial, and the basis is the unique reduced GB for (ideal, order).
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  bool reduced = false;

  bool is_trivial() const {  // ideal == (1)
    return elements.size() == 1 && elements[0].degree() == 0;
  }
  Ideal as_ideal() const { return Ideal{ring, elements}; }
};

// Buchberger with the normal selection strategy and the coprime/chain
// criteria; the result is autoreduced to the reduced GB under the
// ring's order.
GroebnerBasis buchberger(const Ideal& ideal);

// Remainder of f on division by G; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

bool contains(const GroebnerBasis& g, const Polynomial& f);

// I ∩ K[x_{k+1},...,x_n]: reduced Block(k) GB, keep the elements free of
// the first k variables, return them over the suffix ring under grevlex.
GroebnerBasis eliminate(const Ideal& ideal, int k);

// I ∩ J via the auxiliary variable w: eliminate w from w·I + (1-w)·J.
Ideal intersect(const Ideal& lhs, const Ideal& rhs);

// (I : h) as { g/h : g generator of I ∩ (h) }; the division is exact by
// construction and verified.
Ideal colon(const Ideal& ideal, const Polynomial& h);

// Reduced GBs under the shared ring order are identical element lists.
bool ideal_equal(const Ideal& lhs, const Ideal& rhs);

// Every element has at most two terms.
bool is_binomial_basis(const GroebnerBasis& g);

}  // namespace vanish
