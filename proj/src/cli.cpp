#include "nilform/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/io.hpp"

namespace nilform {

namespace {

using io::Json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

long to_long(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "not an integer: " + s);
}

// "c0,c1,..." or a JSON array of rationals
FieldElement parse_element(const std::string& s, const DatumPtr& d) {
  if (!s.empty() && s.front() == '[') return io::element_from_json(io::parse(s), d);
  Json c = Json::array();
  for (const auto& part : split(s, ',')) c.push_back(part);
  return io::element_from_json(c, d);
}

Json interval_json(const Interval& i) { return {{"lo", io::to_json(i.lo)}, {"hi", io::to_json(i.hi)}}; }

struct Options {
  std::string algebra, map, field, constraints, recipe, lambda, grading, output;
  long k = 0, l = 0, disc = 0;
  int height = 2, powers = 1, cls = 2, lattice = 4;
  bool pisot_cone = false, plain = false;
};

Json cmd_certify(const Options& o) {
  const LieAlgebra a = io::algebra_from_json(io::read_file(o.algebra));
  const RationalMatrix m = io::matrix_from_json(io::read_file(o.map));
  // the datum only contributes the assumptions its verification relied on
  std::vector<std::string> assumptions;
  if (!o.field.empty()) assumptions = resolve_field(o.field)->assumptions();
  return io::to_json(certify(a, m, assumptions));
}

Json cmd_construct(const Options& o, std::ostream& out) {
  RecipeSearch search{o.height, o.powers, o.lattice};
  std::optional<FieldElement> lambda;
  auto field = [&](const char* fallback) { return resolve_field(o.field.empty() ? fallback : o.field); };
  RecipeOutput r;
  if (o.recipe == "z4") {
    r = recipe_z4_example();
  } else if (o.recipe == "count") {
    if (!o.lambda.empty()) lambda = parse_element(o.lambda, biquadratic_datum(o.k, o.l));
    r = recipe_count(o.k, o.l, lambda, search);
  } else if (o.recipe == "laur") {
    const DatumPtr d = field("sqrt:2");
    const LieAlgebra g = o.algebra.empty() ? heisenberg() : io::algebra_from_json(io::read_file(o.algebra));
    Grading gr;
    if (o.grading.empty()) {
      gr.dims = {g.dim()};
    } else {
      for (const auto& p : split(o.grading, ',')) gr.dims.push_back(static_cast<std::size_t>(to_long(p)));
    }
    r = recipe_laur(g, gr, d, o.lambda.empty() ? find_unit_pisot(d, {}, search) : parse_element(o.lambda, d));
  } else if (o.recipe == "csig" || o.recipe == "last") {
    const DatumPtr d = field(o.recipe == "csig" ? "quartic_z4" : "cubic_z3");
    if (!o.lambda.empty()) lambda = parse_element(o.lambda, d);
    r = o.recipe == "csig" ? recipe_csig(d, lambda, o.cls, search) : recipe_last(d, lambda, o.cls, search);
  } else {
    throw Error(ErrorCode::BadParameters, "unknown recipe " + o.recipe);
  }
  Json bundle = io::to_json(r);
  if (o.output.empty()) return bundle;
  io::write_file(o.output, bundle);
  Json summary{{"recipe", r.provenance.recipe},
               {"output", o.output},
               {"signature", bundle["certificate"]["signature"]},
               {"type", r.certificate.algebra_type}};
  if (bundle.contains("classify")) summary["classify"] = bundle["classify"];
  out << summary.dump() << "\n";
  return nullptr;
}

Json cmd_pisot(const Options& o) {
  const DatumPtr d = resolve_field(o.field);
  std::vector<ConeConstraint> cons;
  if (o.pisot_cone) cons = pisot_cone(d);
  if (!o.constraints.empty()) {
    auto extra = io::constraints_from_json(io::read_file(o.constraints));
    for (const auto& c : extra)
      if (c.coeffs.size() != d->group_order())
        throw Error(ErrorCode::DimensionMismatch, "constraint needs one coefficient per group element");
    cons.insert(cons.end(), extra.begin(), extra.end());
  }
  const long budget = default_budget(100'000);
  Json list = Json::array();
  for (const auto& x : search_units(d, o.height, o.powers, cons, {1, budget})) {
    Json moduli = Json::array();
    for (std::size_t s = 0; s < d->group_order(); ++s)
      moduli.push_back(interval_json(conjugate_modulus_interval(x, s, Rational(1, 1'000'000), budget)));
    list.push_back({{"element", io::to_json(x)}, {"minpoly", io::to_json(minimal_polynomial(x))}, {"moduli", moduli}});
  }
  return list;
}

Json cmd_pfaffian(const Options& o) {
  const LieAlgebra a = io::algebra_from_json(io::read_file(o.algebra));
  Json out{{"pfaffian", pfaffian_form(a).str()}};
  const Adapted sp = adapted_split(a);
  if (sp.n1 == 4 && sp.k == 2) out["form"] = io::to_json(pfaffian_form_42(a));
  return out;
}

Json cmd_classify42(const Options& o) {
  const Type42Class c = classify_type42(io::algebra_from_json(io::read_file(o.algebra)));
  return {{"k", c.squarefree.get_si()},
          {"discriminant", io::to_json(c.discriminant)},
          {"form", io::to_json(c.form)},
          {"anosov_compatible", c.anosov_compatible}};
}

Json cmd_verify_field(const Options& o) {
  const DatumPtr d = resolve_field(o.field);
  return {{"verified", true},
          {"degree", d->degree()},
          {"identity", d->identity()},
          {"table", d->table()},
          {"generators", d->generators()},
          {"assumptions", d->assumptions()}};
}

void report(std::ostream& err, std::string_view code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

DatumPtr resolve_field(const std::string& spec) {
  if (spec == "Q") return rational_datum();
  if (spec == "quartic_z4") return fixtures::quartic_z4();
  if (spec == "cubic_z3") return fixtures::cubic_z3();
  if (spec.rfind("sqrt:", 0) == 0) return quadratic_datum(to_long(spec.substr(5)));
  if (spec.rfind("biquadratic:", 0) == 0) {
    const auto p = split(spec.substr(12), ',');
    if (p.size() != 2) throw Error(ErrorCode::ParseError, "biquadratic:k,l");
    return biquadratic_datum(to_long(p[0]), to_long(p[1]));
  }
  return io::datum_from_json(io::read_file(spec));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nilform: rational nilpotent Lie algebras with Anosov automorphisms"};
  app.require_subcommand(1);
  Options o;

  auto* certify_cmd = app.add_subcommand("certify", "certify an automorphism");
  certify_cmd->add_option("--algebra", o.algebra)->required();
  certify_cmd->add_option("--map", o.map)->required();
  certify_cmd->add_option("--field", o.field, "datum whose assumptions are recorded");

  auto* construct = app.add_subcommand("construct", "run a recipe");
  construct->add_option("--recipe", o.recipe)->required()->check(CLI::IsMember({"z4", "count", "laur", "csig", "last"}));
  construct->add_option("--k", o.k);
  construct->add_option("--l", o.l);
  construct->add_option("--field", o.field, "field spec or datum file");
  construct->add_option("--lambda", o.lambda, "power-basis coordinates, c0,c1,...");
  construct->add_option("--class", o.cls);
  construct->add_option("--algebra", o.algebra, "graded algebra for laur");
  construct->add_option("--grading", o.grading, "graded piece dimensions, e.g. 2,1");
  construct->add_option("--height", o.height);
  construct->add_option("--powers", o.powers);
  construct->add_option("--lattice", o.lattice);
  construct->add_option("-o,--output", o.output);

  auto* pisot = app.add_subcommand("pisot", "search for units");
  pisot->add_option("--field", o.field)->required();
  pisot->add_option("--height", o.height)->required();
  pisot->add_option("--powers", o.powers);
  pisot->add_option("--constraints", o.constraints);
  pisot->add_flag("--pisot-cone", o.pisot_cone);

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian form of a two-step algebra");
  pf->add_option("--algebra", o.algebra)->required();
  auto* cl = app.add_subcommand("classify42", "classify a type (4,2) algebra");
  cl->add_option("--algebra", o.algebra)->required();
  auto* du = app.add_subcommand("dualize", "Scheuneman dual");
  du->add_option("--algebra", o.algebra)->required();
  auto* pell = app.add_subcommand("pell", "x^2 - D y^2 = 4");
  pell->add_option("--disc", o.disc)->required();
  pell->add_flag("--plain", o.plain, "print x=<int> y=<int>");
  auto* vf = app.add_subcommand("verify-field", "verify a Galois datum");
  vf->add_option("--field", o.field)->required();

  std::vector<const char*> argv{"nilform"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Json result;
    if (*certify_cmd) result = cmd_certify(o);
    else if (*construct) result = cmd_construct(o, out);
    else if (*pisot) result = cmd_pisot(o);
    else if (*pf) result = cmd_pfaffian(o);
    else if (*cl) result = cmd_classify42(o);
    else if (*du) result = io::to_json(scheuneman_dual(io::algebra_from_json(io::read_file(o.algebra))));
    else if (*pell) {
      const PellSolution s = solve_pell(Integer(o.disc));
      if (o.plain) {
        out << "x=" << s.x.get_str() << " y=" << s.y.get_str() << "\n";
        return 0;
      }
      auto num = [](const Integer& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); };
      result = {{"x", num(s.x)}, {"y", num(s.y)}};
    } else if (*vf) result = cmd_verify_field(o);
    if (!result.is_null()) out << io::dump(result);
    return 0;
  } catch (const Error& e) {
    report(err, name(e.code()), e.what());
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    report(err, "InternalError", e.what());
    return 1;
  }
}

}  // namespace nilform
