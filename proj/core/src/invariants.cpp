#include "vanish/invariants.hpp"

#include <functional>
#include <stdexcept>

namespace vanish {

namespace {

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.elements.size());
  for (const auto& e : gb.elements) lms.push_back(e.leading_monomial());
  return lms;
}

bool is_standard(const Monomial& m, const std::vector<Monomial>& lms) {
  for (const auto& lm : lms)
    if (lm.divides(m)) return false;
  return true;
}

void require_graded(const GroebnerBasis& gb) {
  for (const auto& e : gb.elements)
    if (!e.is_homogeneous())
      throw std::invalid_argument("ideal is not graded");
}

// Visit all monomials of total degree d in nvars variables.
void for_each_monomial_of_degree(
    std::size_t nvars, int d, const std::function<void(const Monomial&)>& fn) {
  Monomial m(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == nvars) {
      m.exps[var] = static_cast<std::uint16_t>(left);
      fn(m);
      m.exps[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exps[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, left - e);
    }
    m.exps[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) fn(m);
    return;
  }
  rec(0, d);
}

}  // namespace

std::uint64_t hilbert_function(const GroebnerBasis& gb, int d) {
  require_graded(gb);
  if (d < 0) return 0;
  const auto lms = leading_monomials(gb);
  std::uint64_t count = 0;
  for_each_monomial_of_degree(gb.ring->nvars(), d, [&](const Monomial& m) {
    if (is_standard(m, lms)) ++count;
  });
  return count;
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_trivial()) return -1;
  const auto lms = leading_monomials(gb);
  const std::size_t s = gb.ring->nvars();
  if (s > 20) throw std::invalid_argument("too many variables for dimension");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    // V independent iff no leading monomial is supported inside V.
    bool independent = true;
    for (const auto& lm : lms) {
      bool inside = true;
      for (std::size_t i = 0; i < s && inside; ++i)
        if (lm.exps[i] != 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
  }
  return best;
}

std::uint64_t degree(const GroebnerBasis& gb, int guard) {
  const int k = krull_dimension(gb);
  if (k < 0) throw std::invalid_argument("degree of the unit ideal");
  if (k >= 2)
    throw std::invalid_argument("degree unsupported for dimension >= 2");
  const auto lms = leading_monomials(gb);
  const std::size_t s = gb.ring->nvars();

  if (k == 0) {
    // Standard monomials fit in the box cut out by the pure-power
    // leading monomials (one exists per variable when dim = 0).
    std::vector<int> bound(s, -1);
    for (const auto& lm : lms) {
      int var = -1;
      bool pure = true;
      for (std::size_t i = 0; i < s; ++i) {
        if (lm.exps[i] == 0) continue;
        if (var >= 0) {
          pure = false;
          break;
        }
        var = static_cast<int>(i);
      }
      if (pure && var >= 0) {
        const int e = lm.exps[static_cast<std::size_t>(var)];
        if (bound[static_cast<std::size_t>(var)] < 0 ||
            e < bound[static_cast<std::size_t>(var)])
          bound[static_cast<std::size_t>(var)] = e;
      }
    }
    for (int b : bound)
      if (b < 0) throw std::logic_error("dimension-0 ideal without a pure-power bound");
    std::uint64_t count = 0;
    Monomial m(s);
    std::function<void(std::size_t)> rec = [&](std::size_t var) {
      if (var == s) {
        if (is_standard(m, lms)) ++count;
        return;
      }
      for (int e = 0; e < bound[var]; ++e) {
        m.exps[var] = static_cast<std::uint16_t>(e);
        rec(var + 1);
      }
      m.exps[var] = 0;
    };
    rec(0);
    return count;
  }

  // Dimension 1, graded: the Hilbert function stabilizes at the degree.
  require_graded(gb);
  std::uint64_t prev = hilbert_function(gb, 0);
  for (int d = 1; d <= guard; ++d) {
    const std::uint64_t cur = hilbert_function(gb, d);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw std::runtime_error("Hilbert function did not stabilize within guard");
}

int regularity(const GroebnerBasis& gb, int guard) {
  const std::uint64_t deg = degree(gb, guard);
  for (int r = 0; r <= guard; ++r)
    if (hilbert_function(gb, r) == deg) return r;
  throw std::runtime_error("regularity exceeded guard bound");
}

HilbertProfile hilbert_profile(const GroebnerBasis& gb, int guard) {
  HilbertProfile profile;
  profile.dimension = krull_dimension(gb);
  if (profile.dimension < 0) return profile;
  profile.degree = degree(gb, guard);
  if (profile.dimension == 1) {
    profile.regularity = regularity(gb, guard);
    for (int d = 0; d <= profile.regularity; ++d)
      profile.values.push_back(hilbert_function(gb, d));
    profile.stabilized = true;
  }
  return profile;
}

}  // namespace vanish
