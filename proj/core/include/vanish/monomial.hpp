#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace vanish {

// Exponent vector, one entry per ring variable.
struct Monomial {
  std::vector<std::uint16_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> e) : exps(std::move(e)) {}

  std::size_t nvars() const { return exps.size(); }

  int degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
  }

  bool is_one() const {
    for (auto e : exps)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > m.exps[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
      r.exps[i] = static_cast<std::uint16_t>(exps[i] + m.exps[i]);
    return r;
  }

  // Exact quotient; caller guarantees m | *this.
  Monomial operator/(const Monomial& m) const {
    Monomial r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
      r.exps[i] = static_cast<std::uint16_t>(exps[i] - m.exps[i]);
    return r;
  }

  bool operator==(const Monomial& m) const { return exps == m.exps; }
  bool operator!=(const Monomial& m) const { return exps != m.exps; }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    r.exps[i] = a.exps[i] > b.exps[i] ? a.exps[i] : b.exps[i];
  return r;
}

// Total multiplicative monomial orders. Block(k) is an elimination order
// for the first k variables: both blocks are compared by grevlex, the
// eliminated block first.
class MonomialOrder {
public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder block(int eliminated) {
    return MonomialOrder(Kind::Block, eliminated);
  }

  Kind kind() const { return kind_; }
  int eliminated() const { return block_; }

  // -1, 0, +1 for u < v, u == v, u > v.
  int compare(const Monomial& u, const Monomial& v) const;

  bool less(const Monomial& u, const Monomial& v) const {
    return compare(u, v) < 0;
  }
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && block_ == o.block_;
  }

private:
  MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}

  Kind kind_;
  int block_;
};

}  // namespace vanish
