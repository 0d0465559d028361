#include "vanish/rmcode.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace vanish {

namespace {

// Row-reduce in place; returns the nonzero rows (a basis of the row
// space, echelon form).
std::vector<std::vector<std::uint32_t>> row_space_basis(
    std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field) {
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t rank = 0;
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
      for (std::size_t j = 0; j < ncols; ++j)
        rows[r][j] = field.sub(rows[r][j], field.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::uint32_t weight(const std::vector<std::uint32_t>& v) {
  std::uint32_t w = 0;
  for (auto c : v)
    if (c != 0) ++w;
  return w;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<std::uint32_t>> rows,
                        const PrimeField& field) {
  return row_space_basis(std::move(rows), field).size();
}

std::vector<Monomial> monomial_basis(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == nvars) {
      m.exps[var] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      m.exps[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exps[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, left - e);
    }
    m.exps[var] = 0;
  };
  if (nvars > 0) rec(0, d);
  return out;  // descending lex by construction
}

EvaluationCode build_code(const PointSet& y, int d) {
  if (!y.projective())
    throw std::invalid_argument("evaluation codes need a projective point set");
  if (y.points.empty()) throw std::invalid_argument("empty point set");
  if (d < 1) throw std::invalid_argument("code degree must be >= 1");

  const PrimeField& field = y.field;
  EvaluationCode code;
  code.q = field.order();
  code.length = y.points.size();
  code.degree = d;
  code.row_monomials = monomial_basis(y.s, d);

  // With leftmost-nonzero-normalized representatives and f_i = t_j^d at
  // that coordinate, f_i(P_i) = 1, so ev_d is plain evaluation.
  for (const auto& mono : code.row_monomials) {
    std::vector<std::uint32_t> row;
    row.reserve(code.length);
    for (const auto& p : y.points) {
      std::uint32_t v = 1;
      for (std::size_t i = 0; i < y.s; ++i)
        if (mono.exps[i] != 0) v = field.mul(v, field.pow(p[i], mono.exps[i]));
      row.push_back(v);
    }
    code.generator_rows.push_back(std::move(row));
  }
  code.dimension = matrix_rank(code.generator_rows, field);
  return code;
}

MinDistance minimum_distance(const EvaluationCode& code,
                             std::uint64_t class_cap, std::optional<int> reg) {
  if (reg && code.degree >= *reg) return MinDistance{1, 0};

  const PrimeField field(code.q);
  const auto basis = row_space_basis(code.generator_rows, field);
  const std::size_t k = basis.size(), m = code.length;
  if (k == 0) throw std::logic_error("zero code has no minimum distance");

  std::uint64_t classes = 0;
  {
    // (q^k - 1) / (q - 1), watching for overflow.
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (power > (std::uint64_t(1) << 62) / code.q) {
        classes = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      power *= code.q;
    }
    if (classes == 0) classes = (power - 1) / (code.q - 1);
  }
  if (classes > class_cap) return MinDistance{std::nullopt, classes};

  // Depth-first over messages with first nonzero coordinate = 1,
  // accumulating partial codeword sums.
  std::uint32_t best = static_cast<std::uint32_t>(m);
  std::vector<std::uint32_t> sum(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t row) {
    if (row == k) {
      best = std::min(best, weight(sum));
      return;
    }
    rec(row + 1);  // coefficient 0
    std::vector<std::uint32_t> saved = sum;
    for (std::uint32_t c = 1; c < code.q; ++c) {
      for (std::size_t j = 0; j < m; ++j)
        sum[j] = field.add(saved[j], field.mul(c, basis[row][j]));
      rec(row + 1);
    }
    sum = std::move(saved);
  };
  for (std::size_t lead = 0; lead < k; ++lead) {
    // message: zeros before `lead`, 1 at `lead`, free afterwards
    std::fill(sum.begin(), sum.end(), 0);
    for (std::size_t j = 0; j < m; ++j) sum[j] = basis[lead][j];
    rec(lead + 1);
  }
  return MinDistance{best, classes};
}

std::vector<CodeTableRow> parameter_table(const PointSet& y, int dmin, int dmax,
                                          std::uint64_t class_cap,
                                          std::optional<int> reg) {
  if (dmin < 1 || dmin > dmax)
    throw std::invalid_argument("invalid degree range");
  std::vector<CodeTableRow> rows;
  for (int d = dmin; d <= dmax; ++d) {
    EvaluationCode code = build_code(y, d);
    CodeTableRow row{d, code.length, code.dimension,
                     minimum_distance(code, class_cap, reg)};
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vanish
