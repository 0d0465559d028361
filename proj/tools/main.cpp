// vanish: vanishing ideals of parameterized sets over prime fields, their
// invariants, and the associated Reed-Muller-type code parameters.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "vanish/invariants.hpp"
#include "vanish/points.hpp"
#include "vanish/rmcode.hpp"
#include "vanish/vanishing.hpp"

namespace {

using nlohmann::json;
using namespace vanish;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitEmptySet = 2;
constexpr int kExitOriginOnly = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
  std::string spec_path;
  std::string mode_override;
  std::string format = "text";
  std::uint64_t grid_cap = 10'000'000;
  std::uint64_t class_cap = 5'000'000;
  std::uint64_t oracle_cap = 64;
  int dmin = 1, dmax = 1;
  int jobs = 1;  // accepted for interface stability; computation is serial
};

ParameterizationSpec load(const Options& opt) {
  ParameterizationSpec spec = load_spec_file(opt.spec_path);
  if (!opt.mode_override.empty()) {
    if (opt.mode_override == "projective") spec.mode = SetKind::Projective;
    else if (opt.mode_override == "projective_algebraic")
      spec.mode = SetKind::ProjectiveAlgebraic;
    else if (opt.mode_override == "affine") spec.mode = SetKind::Affine;
    else if (opt.mode_override == "affine_algebraic")
      spec.mode = SetKind::AffineAlgebraic;
    else throw std::runtime_error("unknown mode: " + opt.mode_override);
  }
  return spec;
}

bool json_output(const Options& opt) { return opt.format == "json-lines"; }

int status_exit_code(IdealStatus status) {
  switch (status) {
    case IdealStatus::Proper: return kExitOk;
    case IdealStatus::EmptySet: return kExitEmptySet;
    case IdealStatus::OriginOnly: return kExitOriginOnly;
  }
  return kExitOk;
}

void print_invariants(const VanishingResult& result, const Options& opt) {
  const int dim = krull_dimension(result.gb);
  if (json_output(opt)) {
    json j{{"type", "invariants"}, {"dim", dim}};
    if (dim == 0 || dim == 1) j["degree"] = degree(result.gb);
    if (dim == 1) {
      HilbertProfile profile = hilbert_profile(result.gb);
      j["regularity"] = profile.regularity;
      j["hilbert"] = profile.values;
    }
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "dim " << dim;
  if (dim == 0 || dim == 1) std::cout << ", degree " << degree(result.gb);
  if (dim == 1) {
    HilbertProfile profile = hilbert_profile(result.gb);
    std::cout << ", reg " << profile.regularity << "\n";
    std::cout << "hilbert:";
    for (std::size_t d = 0; d < profile.values.size(); ++d)
      std::cout << " H(" << d << ")=" << profile.values[d];
  }
  std::cout << "\n";
}

int cmd_ideal(const Options& opt) {
  ParameterizationSpec spec = load(opt);
  VanishingResult result = compute_vanishing_ideal(spec);
  if (json_output(opt)) {
    std::cout << json{{"type", "status"},
                      {"status", to_string(result.status)},
                      {"mode", to_string(spec.mode)}}
                     .dump()
              << "\n";
    for (const auto& g : result.gb.elements)
      std::cout << json{{"type", "generator"}, {"expr", render(g)}}.dump()
                << "\n";
  } else {
    std::cout << "mode: " << to_string(spec.mode) << "\n";
    std::cout << "status: " << to_string(result.status) << "\n";
    std::cout << "reduced groebner basis (" << result.gb.elements.size()
              << " elements):\n";
    for (const auto& g : result.gb.elements)
      std::cout << "  " << render(g) << "\n";
  }
  if (result.status == IdealStatus::Proper) print_invariants(result, opt);
  return status_exit_code(result.status);
}

int cmd_invariants(const Options& opt) {
  ParameterizationSpec spec = load(opt);
  VanishingResult result = compute_vanishing_ideal(spec);
  if (!json_output(opt))
    std::cout << "mode: " << to_string(spec.mode)
              << ", status: " << to_string(result.status) << "\n";
  if (result.status == IdealStatus::EmptySet) {
    std::cout << "the parameterized set is empty; no invariants\n";
    return kExitEmptySet;
  }
  print_invariants(result, opt);
  return status_exit_code(result.status);
}

int cmd_points(const Options& opt) {
  ParameterizationSpec spec = load(opt);
  PointSet set = enumerate_set(spec, spec.mode, opt.grid_cap);
  if (json_output(opt)) {
    for (const auto& p : set.points)
      std::cout << json{{"type", "point"}, {"coords", p}}.dump() << "\n";
    std::cout << json{{"type", "summary"}, {"count", set.size()}}.dump()
              << "\n";
  } else {
    for (const auto& p : set.points) {
      std::cout << (set.projective() ? "[" : "(");
      for (std::size_t i = 0; i < p.size(); ++i)
        std::cout << (i ? ":" : "") << p[i];
      std::cout << (set.projective() ? "]" : ")") << "\n";
    }
    std::cout << "count: " << set.size() << "\n";
  }
  return kExitOk;
}

int cmd_code(const Options& opt) {
  ParameterizationSpec spec = load(opt);
  if (spec.mode == SetKind::Affine || spec.mode == SetKind::AffineAlgebraic)
    throw std::runtime_error("codes are defined over projective sets; "
                             "use mode projective or projective_algebraic");
  if (opt.dmin > opt.dmax) throw std::runtime_error("dmin exceeds dmax");
  PointSet set = enumerate_set(spec, spec.mode, opt.grid_cap);
  if (set.points.empty()) {
    std::cout << "the parameterized set is empty; no code\n";
    return kExitEmptySet;
  }
  VanishingResult result = compute_vanishing_ideal(spec);
  const int reg = regularity(result.gb);
  const auto rows =
      parameter_table(set, opt.dmin, opt.dmax, opt.class_cap, reg);
  if (json_output(opt)) {
    for (const auto& row : rows) {
      json j{{"type", "code"},
             {"d", row.d},
             {"length", row.length},
             {"dim", row.dimension}};
      if (row.distance.computed()) j["delta"] = *row.distance.value;
      else j["delta"] = nullptr, j["classes"] = row.distance.classes;
      std::cout << j.dump() << "\n";
    }
  } else {
    std::printf("%4s %8s %6s %8s\n", "d", "length", "dim", "delta");
    for (const auto& row : rows) {
      if (row.distance.computed())
        std::printf("%4d %8zu %6zu %8u\n", row.d, row.length, row.dimension,
                    *row.distance.value);
      else
        std::printf("%4d %8zu %6zu %8s\n", row.d, row.length, row.dimension,
                    "-");
    }
  }
  return kExitOk;
}

class Verifier {
public:
  explicit Verifier(bool as_json) : json_(as_json) {}

  void report(const std::string& name, bool pass) {
    if (json_)
      std::cout << json{{"type", "check"}, {"name", name}, {"result", pass ? "pass" : "fail"}}.dump() << "\n";
    else
      std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
    if (!pass) failed_ = true;
  }
  void skip(const std::string& name, const std::string& why) {
    if (json_)
      std::cout << json{{"type", "check"}, {"name", name}, {"result", "skip"}, {"reason", why}}.dump() << "\n";
    else
      std::cout << "SKIP " << name << " (" << why << ")\n";
  }
  bool failed() const { return failed_; }

private:
  bool json_;
  bool failed_ = false;
};

int cmd_verify(const Options& opt) {
  ParameterizationSpec spec = load(opt);
  Verifier v(json_output(opt));

  VanishingResult result = compute_vanishing_ideal(spec);
  PointSet set = enumerate_set(spec, spec.mode, opt.grid_cap);
  PointSet affine = enumerate_set(spec, SetKind::Affine, opt.grid_cap);

  // Degenerate-case classification against enumeration.
  const bool origin_only =
      affine.size() == 1 &&
      std::all_of(affine.points[0].begin(), affine.points[0].end(),
                  [](std::uint32_t c) { return c == 0; });
  switch (result.status) {
    case IdealStatus::EmptySet:
      v.report("status empty_set matches enumeration", affine.size() == 0);
      break;
    case IdealStatus::OriginOnly:
      v.report("status origin_only matches enumeration", origin_only);
      break;
    case IdealStatus::Proper:
      v.report("status proper matches enumeration",
               affine.size() > 0 && !(set.projective() && set.size() == 0));
      break;
  }

  // Every enumerated point is a zero of every generator.
  bool vanishes = true;
  for (const auto& g : result.gb.elements)
    for (const auto& p : set.points)
      if (g.evaluate(p) != 0) vanishes = false;
  v.report("generators vanish on the enumerated set", vanishes);

  if (set.projective()) {
    bool homogeneous = true;
    for (const auto& g : result.gb.elements)
      if (!g.is_homogeneous()) homogeneous = false;
    v.report("reduced GB is homogeneous", homogeneous);

    if (result.status == IdealStatus::Proper) {
      if (set.size() <= opt.oracle_cap) {
        Ideal oracle = oracle_vanishing_ideal(set, result.gb.ring);
        v.report("ideal equals the point-ideal intersection",
                 ideal_equal(result.ideal(), oracle));
      } else {
        v.skip("ideal equals the point-ideal intersection",
               "more than " + std::to_string(opt.oracle_cap) + " points");
      }
      v.report("degree equals the point count",
               degree(result.gb) == set.size());
    }
  }

  if (spec.mode == SetKind::Projective &&
      result.status == IdealStatus::Proper) {
    PointSet algebraic =
        enumerate_set(spec, SetKind::ProjectiveAlgebraic, opt.grid_cap);
    if (!algebraic.points.empty()) {
      VanishingResult direct = projective_algebraic_vanishing_ideal(spec);
      VanishingResult via_colon = colon_to_algebraic(result);
      v.report("colon identity (I(X̄) : t1..ts) = I(X)",
               ideal_equal(direct.ideal(), via_colon.ideal()));
    } else {
      v.skip("colon identity (I(X̄) : t1..ts) = I(X)", "X is empty");
    }
  }

  bool monomial_param = true;
  for (const auto& f : spec.functions)
    if (f.numerator.term_count() != 1 || f.denominator.term_count() != 1)
      monomial_param = false;
  if (monomial_param && set.projective() &&
      result.status == IdealStatus::Proper) {
    v.report("monomial parameterization: reduced GB is binomial",
             is_binomial_basis(result.gb));
    v.report("monomial parameterization: dimension 1",
             krull_dimension(result.gb) == 1);
  }

  return v.failed() ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vanishing ideals of parameterized sets over prime fields"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", opt.spec_path, "parameterization spec file")
        ->required();
    sub->add_option("--mode", opt.mode_override,
                    "override the spec's mode (projective, "
                    "projective_algebraic, affine, affine_algebraic)");
    sub->add_option("--format", opt.format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--grid-cap", opt.grid_cap, "max grid evaluations");
    sub->add_option("--jobs", opt.jobs, "worker cap (reserved)");
  };

  auto* ideal = app.add_subcommand("ideal", "reduced GB of the vanishing ideal");
  add_common(ideal);
  auto* invariants =
      app.add_subcommand("invariants", "dimension, degree, regularity, Hilbert");
  add_common(invariants);
  auto* points = app.add_subcommand("points", "enumerate the parameterized set");
  add_common(points);
  auto* code = app.add_subcommand("code", "Reed-Muller-type code parameters");
  add_common(code);
  code->add_option("--dmin", opt.dmin, "first degree");
  code->add_option("--dmax", opt.dmax, "last degree");
  code->add_option("--cap", opt.class_cap,
                   "max enumerated codeword classes for the minimum distance");
  auto* verify = app.add_subcommand("verify", "independent-oracle checks");
  add_common(verify);
  verify->add_option("--oracle-cap", opt.oracle_cap,
                     "max points for the point-ideal intersection oracle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ideal->parsed()) return cmd_ideal(opt);
    if (invariants->parsed()) return cmd_invariants(opt);
    if (points->parsed()) return cmd_points(opt);
    if (code->parsed()) return cmd_code(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
