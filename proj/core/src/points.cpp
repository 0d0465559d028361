#include "vanish/points.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vanish {

namespace {

// Flattened terms plus a power lookup table make grid evaluation cheap.
struct FastPoly {
  struct Term {
    std::uint32_t coeff;
    std::vector<std::pair<std::size_t, std::uint16_t>> powers;  // (var, exp)
  };
  std::vector<Term> terms;
};

class GridEvaluator {
public:
  explicit GridEvaluator(const PrimeField& field) : field_(field) {}

  FastPoly compile(const Polynomial& p) {
    FastPoly out;
    for (const auto& [m, c] : p.terms()) {
      FastPoly::Term t{c, {}};
      for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] != 0) {
          t.powers.emplace_back(i, m.exps[i]);
          max_exp_ = std::max<std::uint32_t>(max_exp_, m.exps[i]);
        }
      out.terms.push_back(std::move(t));
    }
    return out;
  }

  void freeze() {
    pow_.assign(field_.order(),
                std::vector<std::uint32_t>(max_exp_ + 1, 1));
    for (std::uint32_t v = 0; v < field_.order(); ++v)
      for (std::uint32_t e = 1; e <= max_exp_; ++e)
        pow_[v][e] = field_.mul(pow_[v][e - 1], v);
  }

  std::uint32_t eval(const FastPoly& p, const PointCoords& x) const {
    std::uint32_t acc = 0;
    for (const auto& t : p.terms) {
      std::uint32_t v = t.coeff;
      for (const auto& [var, exp] : t.powers) v = field_.mul(v, pow_[x[var]][exp]);
      acc = field_.add(acc, v);
    }
    return acc;
  }

private:
  PrimeField field_;
  std::uint32_t max_exp_ = 1;
  std::vector<std::vector<std::uint32_t>> pow_;
};

}  // namespace

bool PointSet::contains(const PointCoords& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

PointCoords normalize_projective(const PrimeField& field, PointCoords coords) {
  for (std::uint32_t c : coords) {
    if (c == 0) continue;
    const std::uint32_t scale = field.inv(c);
    for (auto& v : coords) v = field.mul(v, scale);
    return coords;
  }
  throw std::invalid_argument("cannot normalize the zero vector");
}

PointSet enumerate_set(const ParameterizationSpec& spec, SetKind kind,
                       std::uint64_t grid_cap) {
  const PrimeField& field = spec.field;
  const std::uint32_t q = field.order();
  const std::size_t n = spec.n(), s = spec.s();

  std::uint64_t grid = 1;
  for (std::size_t i = 0; i < n; ++i) {
    grid *= q;
    if (grid > grid_cap)
      throw std::runtime_error("grid size q^n exceeds the enumeration cap of " +
                               std::to_string(grid_cap));
  }

  GridEvaluator ev(field);
  std::vector<FastPoly> nums, dens;
  for (const auto& f : spec.functions) {
    nums.push_back(ev.compile(f.numerator));
    dens.push_back(ev.compile(f.denominator));
  }
  ev.freeze();

  const bool projective =
      kind == SetKind::Projective || kind == SetKind::ProjectiveAlgebraic;
  const bool algebraic =
      kind == SetKind::ProjectiveAlgebraic || kind == SetKind::AffineAlgebraic;

  std::set<PointCoords> seen;
  PointCoords x(n, 0), coords(s);
  for (std::uint64_t step = 0; step < grid; ++step) {
    bool ok = true;
    for (std::size_t i = 0; i < s && ok; ++i) {
      const std::uint32_t g = ev.eval(dens[i], x);
      if (g == 0) {
        ok = false;
        break;
      }
      const std::uint32_t f = ev.eval(nums[i], x);
      if (algebraic && f == 0) {
        ok = false;
        break;
      }
      coords[i] = field.mul(f, field.inv(g));
    }
    if (ok) {
      if (projective) {
        const bool nonzero =
            std::any_of(coords.begin(), coords.end(),
                        [](std::uint32_t c) { return c != 0; });
        if (nonzero) seen.insert(normalize_projective(field, coords));
      } else {
        seen.insert(coords);
      }
    }
    // odometer
    for (std::size_t i = n; i-- > 0;) {
      if (++x[i] < q) break;
      x[i] = 0;
    }
  }

  PointSet out{kind, field, s, {seen.begin(), seen.end()}};
  return out;
}

Ideal point_ideal(const ProjectivePoint& p, const RingPtr& s_ring) {
  const PointCoords& a = p.coordinates;
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0) ++k;
  if (k == a.size() || a[k] != 1)
    throw std::invalid_argument("point_ideal: point is not normalized");
  std::vector<Polynomial> gens;
  const Polynomial tk = Polynomial::variable(s_ring, k);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == k) continue;
    gens.push_back(Polynomial::variable(s_ring, i) -
                   tk.scaled(a[i]));
  }
  return Ideal{s_ring, std::move(gens)};
}

Ideal oracle_vanishing_ideal(const PointSet& y, const RingPtr& s_ring) {
  if (!y.projective())
    throw std::invalid_argument("point-ideal oracle needs a projective set");
  if (y.points.empty())
    throw std::invalid_argument("point-ideal oracle needs a nonempty set");
  Ideal acc = point_ideal(ProjectivePoint{y.points.front()}, s_ring);
  for (std::size_t i = 1; i < y.points.size(); ++i)
    acc = intersect(acc, point_ideal(ProjectivePoint{y.points[i]}, s_ring));
  return acc;
}

bool is_multiplicative_monoid(const PointSet& y) {
  if (!y.projective())
    throw std::invalid_argument("monoid check needs a projective set");
  const PrimeField& field = y.field;
  const PointCoords identity(y.s, 1);
  if (!y.contains(identity)) return false;
  for (const auto& a : y.points) {
    for (const auto& b : y.points) {
      PointCoords prod(y.s);
      bool zero = true;
      for (std::size_t i = 0; i < y.s; ++i) {
        prod[i] = field.mul(a[i], b[i]);
        if (prod[i] != 0) zero = false;
      }
      if (zero) continue;  // absorbed into the adjoined [0]
      if (!y.contains(normalize_projective(field, std::move(prod))))
        return false;
    }
  }
  return true;
}

ParameterizationSpec monoid_to_laurent_parameterization(const PointSet& y) {
  for (const auto& p : y.points)
    for (std::uint32_t c : p)
      if (c > 1)
        throw std::invalid_argument(
            "constructor needs {0,1} representatives only");
  if (!is_multiplicative_monoid(y))
    throw std::invalid_argument("point set is not a multiplicative monoid");

  const std::size_t m = y.points.size(), s = y.s;
  const std::uint32_t q = y.field.order();
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= m; ++i) vars.push_back("y" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) vars.push_back("z" + std::to_string(i));
  RingPtr ring = make_ring(y.field, vars, MonomialOrder::grevlex());

  std::vector<RationalFunction> functions;
  for (std::size_t k = 0; k < s; ++k) {
    Monomial num(2 * m), den(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      if (y.points[i][k] == 1) {
        num.exps[i] = static_cast<std::uint16_t>(num.exps[i] + (q - 1));
      } else {
        num.exps[m + i] = static_cast<std::uint16_t>(num.exps[m + i] + (q - 1));
        den.exps[i] = static_cast<std::uint16_t>(den.exps[i] + (q - 1));
      }
    }
    functions.emplace_back(Polynomial::term(ring, num, 1),
                           Polynomial::term(ring, den, 1));
  }
  return ParameterizationSpec{y.field, std::move(vars), std::move(functions),
                              SetKind::Projective, std::move(ring)};
}

}  // namespace vanish
