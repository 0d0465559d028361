#include "vanish/vanishing.hpp"

#include <algorithm>
#include <stdexcept>

namespace vanish {

namespace {

// Auxiliary ring B = K[<eliminated block>, t_1..t_s] under Block(k).
// Eliminated block layout: [@y0?] [@w?] [y_1..y_n] [@z?].
struct AuxRing {
  RingPtr ring;
  std::size_t n_eliminated;
  std::vector<int> param_map;  // spec ring index -> B index
  int y0 = -1, w = -1, z = -1;
  std::size_t t_base = 0;
};

AuxRing build_aux_ring(const ParameterizationSpec& spec, bool with_y0,
                       bool with_w, bool with_z) {
  AuxRing aux;
  std::vector<std::string> vars;
  if (with_y0) {
    aux.y0 = static_cast<int>(vars.size());
    vars.push_back("@y0");
  }
  if (with_w) {
    aux.w = static_cast<int>(vars.size());
    vars.push_back("@w");
  }
  aux.param_map.resize(spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    aux.param_map[i] = static_cast<int>(vars.size());
    vars.push_back(spec.variables[i]);
  }
  if (with_z) {
    aux.z = static_cast<int>(vars.size());
    vars.push_back("@z");
  }
  aux.n_eliminated = vars.size();
  aux.t_base = vars.size();
  for (std::size_t i = 1; i <= spec.s(); ++i)
    vars.push_back("t" + std::to_string(i));
  aux.ring = make_ring(spec.field, std::move(vars),
                       MonomialOrder::block(static_cast<int>(aux.n_eliminated)));
  return aux;
}

IdealStatus classify(const GroebnerBasis& gb, std::size_t s) {
  if (gb.is_trivial()) return IdealStatus::EmptySet;
  if (gb.elements.size() == s) {
    bool all_vars = true;
    for (std::size_t i = 0; i < s && all_vars; ++i) {
      const Polynomial& e = gb.elements[i];
      all_vars = e.term_count() == 1 && e.leading_coefficient() == 1 &&
                 e.leading_monomial().degree() == 1;
    }
    if (all_vars) {
      std::vector<bool> seen(s, false);
      for (const auto& e : gb.elements)
        for (std::size_t v = 0; v < s; ++v)
          if (e.leading_monomial().exps[v] == 1) seen[v] = true;
      if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        return IdealStatus::OriginOnly;
    }
  }
  return IdealStatus::Proper;
}

VanishingResult finish(GroebnerBasis gb, std::size_t s) {
  IdealStatus status = classify(gb, s);
  return VanishingResult{std::move(gb), status};
}

// The q-th power relations y_i^q - y_i of the parameter variables.
std::vector<Polynomial> field_equations(const AuxRing& aux,
                                        const ParameterizationSpec& spec,
                                        bool with_t_equations) {
  const std::uint32_t q = spec.field.order();
  std::vector<Polynomial> eqs;
  eqs.reserve(spec.n() + spec.s());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const auto idx = static_cast<std::size_t>(aux.param_map[i]);
    Polynomial y = Polynomial::variable(aux.ring, idx);
    eqs.push_back(y.pow(q) - y);
  }
  // t_i^q - t_i vanishes on all of K^s, so it lies in the vanishing
  // ideal of any affine point set (not in the graded projective one);
  // where sound, adding it caps the t-degrees during the computation.
  if (with_t_equations)
    for (std::size_t i = 0; i < spec.s(); ++i) {
      Polynomial t = Polynomial::variable(aux.ring, aux.t_base + i);
      eqs.push_back(t.pow(q) - t);
    }
  return eqs;
}

// Reduce the other generators modulo the field equations first: this
// caps every exponent below q and keeps the elimination tractable,
// without changing the ideal.
Ideal assemble(const AuxRing& aux, const ParameterizationSpec& spec,
               std::vector<Polynomial> gens, bool with_t_equations = false) {
  const std::vector<Polynomial> eqs =
      field_equations(aux, spec, with_t_equations);
  for (auto& g : gens) g = reduce(g, eqs);
  gens.insert(gens.end(), eqs.begin(), eqs.end());
  return Ideal::of(aux.ring, std::move(gens));
}

Polynomial lift(const Polynomial& p, const AuxRing& aux) {
  return change_ring(p, aux.ring, aux.param_map);
}

Polynomial denominator_product(const ParameterizationSpec& spec,
                               const AuxRing& aux) {
  Polynomial prod = Polynomial::constant(aux.ring, 1);
  for (const auto& f : spec.functions) prod = prod * lift(f.denominator, aux);
  return prod;
}

}  // namespace

std::string to_string(IdealStatus status) {
  switch (status) {
    case IdealStatus::Proper: return "proper";
    case IdealStatus::EmptySet: return "empty_set";
    case IdealStatus::OriginOnly: return "origin_only";
  }
  return "?";
}

RingPtr output_ring(const PrimeField& field, std::size_t s) {
  std::vector<std::string> vars;
  vars.reserve(s);
  for (std::size_t i = 1; i <= s; ++i) vars.push_back("t" + std::to_string(i));
  return make_ring(field, std::move(vars), MonomialOrder::grevlex());
}

VanishingResult projective_vanishing_ideal(const ParameterizationSpec& spec) {
  AuxRing aux = build_aux_ring(spec, /*with_y0=*/true, /*with_w=*/false,
                               /*with_z=*/true);
  const Polynomial z =
      Polynomial::variable(aux.ring, static_cast<std::size_t>(aux.z));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < spec.s(); ++i) {
    const Polynomial t = Polynomial::variable(aux.ring, aux.t_base + i);
    gens.push_back(lift(spec.functions[i].denominator, aux) * t -
                   lift(spec.functions[i].numerator, aux) * z);
  }
  const Polynomial y0 =
      Polynomial::variable(aux.ring, static_cast<std::size_t>(aux.y0));
  gens.push_back(y0 * denominator_product(spec, aux) -
                 Polynomial::constant(aux.ring, 1));
  return finish(
      eliminate(assemble(aux, spec, std::move(gens)),
                static_cast<int>(aux.n_eliminated)),
      spec.s());
}

VanishingResult projective_algebraic_vanishing_ideal(
    const ParameterizationSpec& spec, bool use_w_form) {
  AuxRing aux = build_aux_ring(spec, /*with_y0=*/true, /*with_w=*/use_w_form,
                               /*with_z=*/true);
  const Polynomial z =
      Polynomial::variable(aux.ring, static_cast<std::size_t>(aux.z));
  const std::uint32_t q = spec.field.order();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < spec.s(); ++i) {
    const Polynomial t = Polynomial::variable(aux.ring, aux.t_base + i);
    gens.push_back(lift(spec.functions[i].denominator, aux) * t -
                   lift(spec.functions[i].numerator, aux) * z);
  }
  if (use_w_form) {
    Polynomial fprod = Polynomial::constant(aux.ring, 1);
    for (const auto& f : spec.functions) fprod = fprod * lift(f.numerator, aux);
    const Polynomial w =
        Polynomial::variable(aux.ring, static_cast<std::size_t>(aux.w));
    gens.push_back(w * fprod - Polynomial::constant(aux.ring, 1));
  } else {
    for (const auto& f : spec.functions)
      gens.push_back(lift(f.numerator, aux).pow(q - 1) -
                     Polynomial::constant(aux.ring, 1));
  }
  const Polynomial y0 =
      Polynomial::variable(aux.ring, static_cast<std::size_t>(aux.y0));
  gens.push_back(y0 * denominator_product(spec, aux) -
                 Polynomial::constant(aux.ring, 1));
  return finish(
      eliminate(assemble(aux, spec, std::move(gens)),
                static_cast<int>(aux.n_eliminated)),
      spec.s());
}

VanishingResult affine_vanishing_ideal(const ParameterizationSpec& spec) {
  AuxRing aux = build_aux_ring(spec, /*with_y0=*/true, /*with_w=*/false,
                               /*with_z=*/false);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < spec.s(); ++i) {
    const Polynomial t = Polynomial::variable(aux.ring, aux.t_base + i);
    gens.push_back(lift(spec.functions[i].denominator, aux) * t -
                   lift(spec.functions[i].numerator, aux));
  }
  const Polynomial y0 =
      Polynomial::variable(aux.ring, static_cast<std::size_t>(aux.y0));
  gens.push_back(y0 * denominator_product(spec, aux) -
                 Polynomial::constant(aux.ring, 1));
  return finish(
      eliminate(assemble(aux, spec, std::move(gens), /*with_t_equations=*/true),
                static_cast<int>(aux.n_eliminated)),
      spec.s());
}

VanishingResult colon_to_algebraic(const VanishingResult& projective) {
  const RingPtr& ring = projective.gb.ring;
  Monomial all_vars(ring->nvars());
  for (auto& e : all_vars.exps) e = 1;
  const Polynomial t_product = Polynomial::term(ring, all_vars, 1);
  Ideal result = colon(projective.ideal(), t_product);
  return finish(buchberger(result), ring->nvars());
}

VanishingResult affine_algebraic_vanishing_ideal(
    const ParameterizationSpec& spec) {
  return colon_to_algebraic(affine_vanishing_ideal(spec));
}

VanishingResult polynomial_shortcut(const ParameterizationSpec& spec,
                                    bool algebraic) {
  for (const auto& f : spec.functions)
    if (!f.denominator.is_constant_one())
      throw std::invalid_argument(
          "polynomial shortcut requires every denominator to be 1");
  AuxRing aux = build_aux_ring(spec, /*with_y0=*/false, /*with_w=*/false,
                               /*with_z=*/true);
  const Polynomial z =
      Polynomial::variable(aux.ring, static_cast<std::size_t>(aux.z));
  const std::uint32_t q = spec.field.order();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < spec.s(); ++i) {
    const Polynomial t = Polynomial::variable(aux.ring, aux.t_base + i);
    gens.push_back(t - lift(spec.functions[i].numerator, aux) * z);
  }
  if (algebraic)
    for (const auto& f : spec.functions)
      gens.push_back(lift(f.numerator, aux).pow(q - 1) -
                     Polynomial::constant(aux.ring, 1));
  return finish(
      eliminate(assemble(aux, spec, std::move(gens)),
                static_cast<int>(aux.n_eliminated)),
      spec.s());
}

VanishingResult compute_vanishing_ideal(const ParameterizationSpec& spec) {
  switch (spec.mode) {
    case SetKind::Projective: return projective_vanishing_ideal(spec);
    case SetKind::ProjectiveAlgebraic:
      return projective_algebraic_vanishing_ideal(spec);
    case SetKind::Affine: return affine_vanishing_ideal(spec);
    case SetKind::AffineAlgebraic:
      return affine_algebraic_vanishing_ideal(spec);
  }
  throw std::logic_error("unknown set kind");
}

}  // namespace vanish
