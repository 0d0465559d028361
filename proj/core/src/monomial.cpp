#include "vanish/monomial.hpp"

namespace vanish {

namespace {

// Grevlex on the exponent slice [lo, hi): higher total degree wins; on a
// tie the monomial with the smaller exponent at the last differing
// position is the larger one.
int grevlex_range(const Monomial& u, const Monomial& v, std::size_t lo,
                  std::size_t hi) {
  int du = 0, dv = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    du += u.exps[i];
    dv += v.exps[i];
  }
  if (du != dv) return du < dv ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (u.exps[i] != v.exps[i]) return u.exps[i] > v.exps[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  const std::size_t n = u.exps.size();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (u.exps[i] != v.exps[i]) return u.exps[i] < v.exps[i] ? -1 : 1;
      return 0;
    case Kind::GrevLex:
      return grevlex_range(u, v, 0, n);
    case Kind::Block: {
      const std::size_t k = static_cast<std::size_t>(block_);
      if (int c = grevlex_range(u, v, 0, k)) return c;
      return grevlex_range(u, v, k, n);
    }
  }
  return 0;
}

}  // namespace vanish
