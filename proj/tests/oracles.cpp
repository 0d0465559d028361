#include "oracles.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace vanish::testing {

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  Monomial m(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == nvars) {
      m.exps[var] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      m.exps[var] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.exps[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, left - e);
    }
    m.exps[var] = 0;
  };
  rec(0, d);
  return out;
}

}  // namespace

std::uint64_t hilbert_by_linear_algebra(const std::vector<Polynomial>& gens,
                                        int d) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const RingPtr ring = gens.front().ring();
  const PrimeField& field = ring->field();
  const std::size_t s = ring->nvars();

  const auto basis = monomials_of_degree(s, d);
  std::map<std::vector<std::uint16_t>, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i].exps] = i;

  // Rows: m * g for every homogeneous generator g and cofactor monomial m.
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    if (!g.is_homogeneous())
      throw std::invalid_argument("linear-algebra oracle needs graded input");
    const int dg = g.degree();
    if (dg < 0 || dg > d) continue;
    for (const auto& m : monomials_of_degree(s, d - dg)) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& [gm, gc] : g.terms())
        row[column.at((m * gm).exps)] = gc;
      rows.push_back(std::move(row));
    }
  }

  // Rank by Gaussian elimination.
  std::size_t rank = 0;
  const std::size_t ncols = basis.size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint32_t inv = field.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = field.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint32_t c = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[r][j] = field.sub(rows[r][j], field.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return basis.size() - rank;
}

ParameterizationSpec make_spec(std::uint32_t q,
                               const std::vector<std::string>& vars,
                               const std::vector<std::string>& numerators,
                               SetKind mode,
                               const std::vector<std::string>& denominators) {
  std::string text = "q = " + std::to_string(q) + "\nvars = ";
  for (std::size_t i = 0; i < vars.size(); ++i)
    text += (i ? ", " : "") + vars[i];
  text += "\nmode = " + to_string(mode) + "\n";
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    text += "f" + std::to_string(i + 1) + " = " + numerators[i];
    if (i < denominators.size())
      text += " ; g" + std::to_string(i + 1) + " = " + denominators[i];
    text += "\n";
  }
  return parse_spec(text);
}

Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring,
                             int max_deg, bool nonzero) {
  const std::uint32_t q = ring->field().order();
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<std::uint32_t> coeff(1, q - 1);
  for (;;) {
    Polynomial p(ring);
    for (int d = 0; d <= max_deg; ++d)
      for (const auto& m : monomials_of_degree(ring->nvars(), d))
        if (coin(rng) == 0) p.add_term(m, coeff(rng));
    if (!nonzero || !p.is_zero()) return p;
  }
}

ParameterizationSpec random_spec(std::mt19937& rng, SetKind mode,
                                 bool unit_denominators) {
  const std::uint32_t qs[] = {2, 3, 5};
  std::uniform_int_distribution<int> pick_q(0, 2), pick_n(1, 2), pick_s(1, 3);
  const std::uint32_t q = qs[pick_q(rng)];
  const std::size_t n = static_cast<std::size_t>(pick_n(rng));
  const std::size_t s = static_cast<std::size_t>(pick_s(rng));

  PrimeField field(q);
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  RingPtr ring = make_ring(field, vars, MonomialOrder::grevlex());

  std::vector<RationalFunction> functions;
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial num = random_polynomial(rng, ring, 2, false);
    Polynomial den = unit_denominators
                         ? Polynomial::constant(ring, 1)
                         : random_polynomial(rng, ring, 2, true);
    functions.emplace_back(std::move(num), std::move(den));
  }
  return ParameterizationSpec{field, std::move(vars), std::move(functions),
                              mode, std::move(ring)};
}

}  // namespace vanish::testing
