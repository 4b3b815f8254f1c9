#include "nilform/io.hpp"

#include <fstream>
#include <sstream>

#include "nilform/errors.hpp"

namespace nilform::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

template <class T>
Json algebra_json(const BasicLieAlgebra<T>& a, Json field) {
  Json br = Json::array();
  for (const auto& e : a.entries()) br.push_back({e.i, e.j, e.k, to_json(e.coeff)});
  Json out{{"field", std::move(field)}, {"dim", a.dim()}, {"brackets", br}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

template <class T, class Coeff>
BasicLieAlgebra<T> algebra_parse(const Json& j, DatumPtr field, Coeff&& coeff) {
  return guarded("algebra", [&] {
    const std::size_t n = j.at("dim").get<std::size_t>();
    BasicLieAlgebra<T> a(n, field);
    for (const auto& b : j.at("brackets")) {
      if (!b.is_array() || b.size() != 4) throw Error(ErrorCode::ParseError, "bracket entries are [i, j, k, c]");
      const auto i = b[0].get<std::size_t>(), jj = b[1].get<std::size_t>(), k = b[2].get<std::size_t>();
      if (i >= jj) throw Error(ErrorCode::ParseError, "bracket entries need i < j");
      if (jj >= n || k >= n) throw Error(ErrorCode::DimensionMismatch, "bracket index out of range");
      a.add_bracket(i, jj, k, coeff(b[3]));
    }
    if (j.contains("labels")) {
      std::vector<std::string> labels;
      for (const auto& l : j.at("labels")) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
      a.set_labels(labels);
    }
    return a;
  });
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }
Json to_json(const Polynomial& p) { return rationals(p.coeffs()); }

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const FieldElement& x) {
  auto c = x.coeffs();
  c.resize(x.degree(), Rational(0));
  return rationals(c);
}

Json to_json(const GaloisDatumSpec& s) {
  Json autos = Json::array();
  for (const auto& p : s.automorphisms) autos.push_back(to_json(p));
  Json roots = Json::array();
  for (const auto& r : s.roots) roots.push_back({{"lo", to_json(r.lo)}, {"hi", to_json(r.hi)}});
  Json out{{"min_poly", to_json(s.min_poly)},
           {"automorphisms", autos},
           {"roots", roots},
           {"assume_irreducible", s.assume_irreducible}};
  if (s.identity) out["identity"] = *s.identity;
  if (s.table) out["table"] = *s.table;
  if (!s.description.empty()) out["description"] = s.description;
  return out;
}

Json to_json(const LieAlgebra& a) { return algebra_json(a, "Q"); }

Json to_json(const LieAlgebraE& a) {
  if (!a.field()) throw Error(ErrorCode::FieldMismatch, "algebra without a field");
  Json br = Json::array();
  for (const auto& e : a.entries()) br.push_back({e.i, e.j, e.k, to_json(e.coeff)});
  Json out{{"field", to_json(a.field()->spec())}, {"dim", a.dim()}, {"brackets", br}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

Json to_json(const AnosovCertificate& c) {
  Json out{{"charpoly", to_json(c.charpoly)},
           {"determinant", to_json(c.determinant)},
           {"integer_like", c.integer_like},
           {"hyperbolic", c.hyperbolic},
           {"signature", nullptr},
           {"algebra_type", c.algebra_type},
           {"nilpotency_class", c.nilpotency_class},
           {"minimal_signature", c.minimal_signature},
           {"assumptions", c.assumptions}};
  if (c.signature) out["signature"] = {c.signature->first, c.signature->second};
  return out;
}

Json to_json(const ConeConstraint& c) {
  return {{"coeffs", c.coeffs}, {"rel", c.rel == ConeConstraint::Relation::LessThanOne ? "<1" : ">1"}};
}

Json to_json(const BinaryQuadraticForm& h) { return {{"a", to_json(h.a)}, {"b", to_json(h.b)}, {"c", to_json(h.c)}}; }

Json to_json(const Representation& rho) {
  Json images = Json::array();
  for (const auto& m : rho.images()) images.push_back(to_json(m));
  return {{"datum", to_json(rho.datum()->spec())}, {"images", images}};
}

Json to_json(const LabeledAlgebra& la) {
  Json out = to_json(la.algebra);
  Json labels = Json::array();
  for (const auto& l : la.labels) labels.push_back(to_json(l));
  out["labels"] = labels;
  out["generators"] = la.generators;
  return out;
}

Json to_json(const RecipeOutput& out) {
  Json labels = Json::array();
  for (const auto& l : out.provenance.labels) labels.push_back(to_json(l));
  Json j{{"recipe", out.provenance.recipe},
         {"datum_description", out.provenance.datum},
         {"datum", to_json(out.provenance.lambda.datum()->spec())},
         {"lambda", to_json(out.provenance.lambda)},
         {"lambda_minpoly", to_json(minimal_polynomial(out.provenance.lambda))},
         {"labels", labels},
         {"algebra", to_json(out.algebra)},
         {"matrix", to_json(out.matrix)},
         {"certificate", to_json(out.certificate)}};
  if (out.certificate.algebra_type == std::vector<int>{4, 2}) j["classify"] = classify_type42(out.algebra).squarefree.get_si();
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "rationals are strings \"p/q\" or integers");
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(rationals_from(j)); }

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(rationals_from(r));
  return RationalMatrix::from_rows(rows);
}

FieldElement element_from_json(const Json& j, const DatumPtr& datum) {
  auto c = rationals_from(j);
  if (c.size() > datum->degree()) throw Error(ErrorCode::DimensionMismatch, "element longer than the field degree");
  c.resize(datum->degree(), Rational(0));
  return FieldElement(datum, c);
}

GaloisDatumSpec datum_spec_from_json(const Json& j) {
  return guarded("datum", [&] {
    GaloisDatumSpec s;
    s.min_poly = polynomial_from_json(j.at("min_poly"));
    for (const auto& a : j.at("automorphisms")) s.automorphisms.push_back(polynomial_from_json(a));
    if (j.contains("identity") && !j["identity"].is_null()) s.identity = j["identity"].get<std::size_t>();
    if (j.contains("table") && !j["table"].is_null()) s.table = j["table"].get<std::vector<std::vector<std::size_t>>>();
    for (const auto& r : j.at("roots")) s.roots.push_back({rational_from_json(r.at("lo")), rational_from_json(r.at("hi"))});
    s.assume_irreducible = j.value("assume_irreducible", false);
    s.description = j.value("description", std::string());
    return s;
  });
}

DatumPtr datum_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return rational_datum();
  return GaloisDatum::verify(datum_spec_from_json(j));
}

LieAlgebra algebra_from_json(const Json& j) {
  const Json field = guarded("algebra", [&] { return j.value("field", Json("Q")); });
  if (!(field.is_string() && field.get<std::string>() == "Q"))
    throw Error(ErrorCode::FieldMismatch, "expected an algebra over Q");
  return algebra_parse<Rational>(j, nullptr, [](const Json& c) { return rational_from_json(c); });
}

LieAlgebraE algebra_e_from_json(const Json& j) {
  const DatumPtr d = guarded("algebra", [&] { return datum_from_json(j.at("field")); });
  return algebra_parse<FieldElement>(j, d, [&](const Json& c) { return element_from_json(c, d); });
}

AnosovCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    AnosovCertificate c;
    c.charpoly = polynomial_from_json(j.at("charpoly"));
    c.determinant = rational_from_json(j.at("determinant"));
    c.integer_like = j.at("integer_like").get<bool>();
    c.hyperbolic = j.at("hyperbolic").get<bool>();
    if (!j.at("signature").is_null()) {
      const auto s = j["signature"].get<std::vector<int>>();
      if (s.size() != 2) throw Error(ErrorCode::ParseError, "signature is a pair");
      c.signature = std::pair{s[0], s[1]};
    }
    c.algebra_type = j.at("algebra_type").get<std::vector<int>>();
    c.nilpotency_class = j.at("nilpotency_class").get<int>();
    c.minimal_signature = j.at("minimal_signature").get<bool>();
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    return c;
  });
}

std::vector<ConeConstraint> constraints_from_json(const Json& j) {
  return guarded("constraints", [&] {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "constraints file is a list");
    std::vector<ConeConstraint> out;
    for (const auto& c : j) {
      const std::string rel = c.at("rel").get<std::string>();
      if (rel != "<1" && rel != ">1") throw Error(ErrorCode::ParseError, "rel is \"<1\" or \">1\"");
      out.push_back({c.at("coeffs").get<std::vector<long>>(),
                     rel == "<1" ? ConeConstraint::Relation::LessThanOne : ConeConstraint::Relation::GreaterThanOne});
    }
    return out;
  });
}

BinaryQuadraticForm form_from_json(const Json& j) {
  return guarded("form", [&] {
    return BinaryQuadraticForm{rational_from_json(j.at("a")), rational_from_json(j.at("b")), rational_from_json(j.at("c"))};
  });
}

Representation representation_from_json(const Json& j, std::optional<LieAlgebra> target) {
  return guarded("representation", [&] {
    const DatumPtr d = datum_from_json(j.at("datum"));
    std::vector<RationalMatrix> images;
    for (const auto& m : j.at("images")) images.push_back(matrix_from_json(m));
    return Representation(d, std::move(images), std::move(target));
  });
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nilform::io
