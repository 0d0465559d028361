#include "vanish/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace vanish {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != 0 && b.exps[i] != 0) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Minimalize + autoreduce a Gröbner basis into the reduced GB.
std::vector<Polynomial> autoreduce(std::vector<Polynomial> basis,
                                   const RingPtr& ring) {
  const MonomialOrder order = ring->order();
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial &mi = basis[i].leading_monomial(),
                     &mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail-reduce each element against the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = reduce(minimal[i], others).monic();
      if (r != minimal[i]) {
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          minimal[i] = std::move(r);
        }
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_monomial(), b.leading_monomial());
            });
  return minimal;
}

}  // namespace

Ideal Ideal::of(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> nonzero;
  for (auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  return Ideal{ring, std::move(nonzero)};
}

GroebnerBasis buchberger(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring;
  const MonomialOrder order = ring->order();

  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return GroebnerBasis{ring, {}, true};

  // Pair queue under the normal strategy: smallest lcm first.
  auto pair_after = [&](const Pair& a, const Pair& b) {
    const int da = a.lcm.degree(), db = b.lcm.degree();
    if (da != db) return da > db;
    return order.less(b.lcm, a.lcm);
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(pair_after)> queue(
      pair_after);
  std::set<std::pair<std::size_t, std::size_t>> treated;

  auto push_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      queue.push(
          {i, k, lcm(basis[i].leading_monomial(), basis[k].leading_monomial())});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    treated.insert({p.i, p.j});

    const Monomial &mi = basis[p.i].leading_monomial(),
                   &mj = basis[p.j].leading_monomial();
    if (coprime(mi, mj)) continue;

    // Chain criterion: some k with lm_k | lcm(i,j) and both pairs treated.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (treated.count(key(p.i, k)) && treated.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    // S-polynomial of two monic elements.
    Polynomial s(ring);
    s.add_scaled(1, p.lcm / mi, basis[p.i]);
    s.add_scaled(ring->field().neg(1), p.lcm / mj, basis[p.j]);
    Polynomial r = reduce(s, basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis{ring, autoreduce(std::move(basis), ring), true};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (g.elements.empty()) return f;
  return reduce(f, g.elements);
}

bool contains(const GroebnerBasis& g, const Polynomial& f) {
  return normal_form(f, g).is_zero();
}

GroebnerBasis eliminate(const Ideal& ideal, int k) {
  const RingPtr& ring = ideal.ring;
  if (k < 0 || static_cast<std::size_t>(k) > ring->nvars())
    throw std::invalid_argument("eliminate: variable count out of range");

  const std::size_t ku = static_cast<std::size_t>(k);
  RingPtr block_ring =
      make_ring(ring->field(), ring->vars(), MonomialOrder::block(k));
  std::vector<int> ident(ring->nvars());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);

  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators)
    gens.push_back(change_ring(g, block_ring, ident));
  GroebnerBasis gb = buchberger(Ideal{block_ring, std::move(gens)});

  std::vector<std::string> kept(ring->vars().begin() + static_cast<long>(ku),
                                ring->vars().end());
  RingPtr sub = make_ring(ring->field(), kept, MonomialOrder::grevlex());
  std::vector<int> var_map(ring->nvars(), -1);
  for (std::size_t i = ku; i < ring->nvars(); ++i)
    var_map[i] = static_cast<int>(i - ku);

  std::vector<Polynomial> selected;
  for (const auto& e : gb.elements) {
    bool in_subring = true;
    for (const auto& [m, c] : e.terms()) {
      for (std::size_t i = 0; i < ku && in_subring; ++i)
        if (m.exps[i] != 0) in_subring = false;
      if (!in_subring) break;
    }
    if (in_subring) selected.push_back(change_ring(e, sub, var_map));
  }
  // The selection is a GB of I ∩ sub under grevlex (the block order
  // restricts to grevlex on the kept variables); autoreduction makes it
  // the reduced one.
  return buchberger(Ideal{sub, std::move(selected)});
}

Ideal intersect(const Ideal& lhs, const Ideal& rhs) {
  if (!(*lhs.ring == *rhs.ring))
    throw std::invalid_argument("intersect: ring mismatch");
  const RingPtr& ring = lhs.ring;
  if (lhs.generators.empty() || rhs.generators.empty())
    return Ideal{ring, {}};

  std::vector<std::string> wvars;
  wvars.reserve(ring->nvars() + 1);
  wvars.push_back("@w");
  wvars.insert(wvars.end(), ring->vars().begin(), ring->vars().end());
  RingPtr wring = make_ring(ring->field(), wvars, MonomialOrder::block(1));

  std::vector<int> shift(ring->nvars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = static_cast<int>(i + 1);
  const Polynomial w = Polynomial::variable(wring, 0);
  const Polynomial one_minus_w = Polynomial::constant(wring, 1) - w;

  std::vector<Polynomial> gens;
  for (const auto& g : lhs.generators)
    gens.push_back(w * change_ring(g, wring, shift));
  for (const auto& g : rhs.generators)
    gens.push_back(one_minus_w * change_ring(g, wring, shift));

  GroebnerBasis elim = eliminate(Ideal{wring, std::move(gens)}, 1);
  std::vector<int> back(ring->nvars());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = static_cast<int>(i);
  std::vector<Polynomial> out;
  out.reserve(elim.elements.size());
  for (const auto& e : elim.elements) out.push_back(change_ring(e, ring, back));
  return Ideal{ring, std::move(out)};
}

Ideal colon(const Ideal& ideal, const Polynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  const Ideal meet = intersect(ideal, Ideal{ideal.ring, {h}});
  std::vector<Polynomial> out;
  out.reserve(meet.generators.size());
  for (const auto& g : meet.generators) {
    DivisionResult d = divide(g, {h});
    if (!d.remainder.is_zero())
      throw std::logic_error("colon: inexact division of an I ∩ (h) generator");
    out.push_back(std::move(d.quotients[0]));
  }
  return Ideal{ideal.ring, std::move(out)};
}

bool ideal_equal(const Ideal& lhs, const Ideal& rhs) {
  if (!(*lhs.ring == *rhs.ring))
    throw std::invalid_argument("ideal_equal: ring mismatch");
  const GroebnerBasis a = buchberger(lhs), b = buchberger(rhs);
  return a.elements == b.elements;
}

bool is_binomial_basis(const GroebnerBasis& g) {
  for (const auto& e : g.elements)
    if (e.term_count() > 2) return false;
  return true;
}

}  // namespace vanish
