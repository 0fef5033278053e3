// Copyright 2026 The waring-decomp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "waring/document.hpp"

#include <json.hpp>

#include <algorithm>

namespace waring {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> coefficient_strings(const TPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

std::vector<std::string> form_strings(const std::vector<BigRat>& form) {
  std::vector<std::string> out;
  for (const auto& c : form) out.push_back(to_string(c));
  return out;
}

}  // namespace

DecompositionDocument make_document(const SymbolicDecomposition& dec) {
  DecompositionDocument doc;
  doc.exponents = dec.a.values();
  doc.mode = std::string(to_string(dec.mode));
  doc.parameter = "t";
  doc.D = coefficient_strings(dec.D);
  for (const auto& term : dec.terms) {
    std::vector<std::string> form;
    for (const auto& c : term.form.coefficients()) form.push_back(c.to_string());
    doc.terms.push_back(DocumentTerm{term.A, term.k, term.s, coefficient_strings(term.coeff), form});
  }
  return doc;
}

DecompositionDocument make_document(const RationalDecomposition& rdec, Mode mode, const TPoly& D) {
  DecompositionDocument doc;
  doc.exponents = rdec.a.values();
  doc.mode = std::string(to_string(mode));
  doc.parameter = rdec.q ? to_string(*rdec.q) : "none";
  doc.D = coefficient_strings(D);
  for (const auto& term : rdec.terms)
    doc.terms.push_back(
        DocumentTerm{term.A, term.k, term.s, to_string(term.lambda), form_strings(term.form)});
  return doc;
}

std::string emit_document(const DecompositionDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["exponents"] = doc.exponents;
  j["mode"] = doc.mode;
  j["parameter"] = doc.parameter;
  j["D"] = doc.D;
  json terms = json::array();
  for (const auto& t : doc.terms) {
    json jt;
    jt["A"] = t.A;
    jt["k"] = t.k;
    jt["s"] = t.s;
    std::visit([&](const auto& c) { jt["coefficient"] = c; }, t.coefficient);
    jt["linear_form"] = t.linear_form;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

void check_number_text(const std::string& s, bool rational) {
  if (rational)
    parse_rational(s);
  else
    parse_integer(s);
}

}  // namespace

DecompositionDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  DecompositionDocument doc;
  doc.schema_version = field<int>(j, "schema_version");
  if (doc.schema_version != kSchemaVersion)
    throw ParseError("unsupported schema version " + std::to_string(doc.schema_version));
  doc.exponents = field<std::vector<int>>(j, "exponents");
  doc.mode = field<std::string>(j, "mode");
  parse_mode(doc.mode);
  doc.parameter = field<std::string>(j, "parameter");
  if (doc.parameter != "t" && doc.parameter != "none") parse_rational(doc.parameter);
  doc.D = field<std::vector<std::string>>(j, "D");
  for (const auto& c : doc.D) check_number_text(c, false);
  const json terms = field<json>(j, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  for (const auto& jt : terms) {
    DocumentTerm t;
    t.A = field<std::vector<int>>(jt, "A");
    t.k = field<std::vector<int>>(jt, "k");
    t.s = field<std::vector<int>>(jt, "s");
    const json& c = jt.contains("coefficient") ? jt.at("coefficient") : json();
    if (c.is_array()) {
      auto list = field<std::vector<std::string>>(jt, "coefficient");
      for (const auto& x : list) check_number_text(x, false);
      t.coefficient = std::move(list);
    } else if (c.is_string()) {
      auto value = c.get<std::string>();
      check_number_text(value, true);
      t.coefficient = std::move(value);
    } else {
      throw ParseError("coefficient must be a list of integers or a rational string");
    }
    t.linear_form = field<std::vector<std::string>>(jt, "linear_form");
    if (t.linear_form.size() != doc.exponents.size())
      throw ParseError("linear form length differs from the number of variables");
    doc.terms.push_back(std::move(t));
  }
  return doc;
}

namespace {

TPoly tpoly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> c;
  for (const auto& x : coeffs) c.push_back(parse_integer(x));
  return TPoly(std::move(c));
}

void check_indices(const DocumentTerm& t, const ExponentVector& a) {
  const std::size_t rest = a.size() - std::min(a.size(), t.A.size());
  for (int i : t.A)
    if (i < 0 || static_cast<std::size_t>(i) >= a.size()) throw ParseError("index set entry out of range");
  if (!std::is_sorted(t.A.begin(), t.A.end()) || t.k.size() != rest || t.s.size() != rest)
    throw ParseError("term index data does not fit the exponent vector");
}

}  // namespace

SymbolicDecomposition symbolic_from_document(const DecompositionDocument& doc) {
  if (doc.parameter != "t") throw ParseError("document is not symbolic");
  const ExponentVector a(doc.exponents);
  SymbolicDecomposition dec{a, parse_mode(doc.mode), tpoly_from_strings(doc.D), {}, 0};
  for (const auto& t : doc.terms) {
    check_indices(t, a);
    const auto* coeff = std::get_if<std::vector<std::string>>(&t.coefficient);
    if (coeff == nullptr) throw ParseError("symbolic document with a rational coefficient");
    LinearForm form(a.size(), complement(t.A, a.size()), t.k, t.s);
    std::vector<std::string> recorded;
    for (const auto& c : form.coefficients()) recorded.push_back(c.to_string());
    if (recorded != t.linear_form) throw ParseError("linear form does not match its (A, k, s) data");
    dec.terms.push_back(DecompTerm{t.A, t.k, t.s, std::move(form), tpoly_from_strings(*coeff)});
  }
  return dec;
}

RationalDecomposition rational_from_document(const DecompositionDocument& doc) {
  if (doc.parameter == "t") throw ParseError("document is symbolic");
  const ExponentVector a(doc.exponents);
  RationalDecomposition rdec{a, std::nullopt, {}};
  if (doc.parameter != "none") rdec.q = parse_rational(doc.parameter);
  for (const auto& t : doc.terms) {
    check_indices(t, a);
    const auto* lambda = std::get_if<std::string>(&t.coefficient);
    if (lambda == nullptr) throw ParseError("rational document with a polynomial coefficient");
    std::vector<BigRat> form;
    for (const auto& c : t.linear_form) form.push_back(parse_rational(c));
    rdec.terms.push_back(RationalTerm{parse_rational(*lambda), std::move(form), t.A, t.k, t.s});
  }
  return rdec;
}

std::string monomial_text(const std::vector<int>& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "X" + std::to_string(i);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_text(const SymbolicDecomposition& dec) {
  const int d = dec.a.degree();
  std::string out;
  out += "monomial: " + monomial_text(dec.a.values()) + "\n";
  out += "mode: " + std::string(to_string(dec.mode)) + "\n";
  out += "parameter: t\n";
  out += "D_a: " + dec.D.to_string() + "\n";
  out += "summands: " + std::to_string(dec.terms.size()) + "\n";
  out += "D_a * " + monomial_text(dec.a.values()) + " =\n";
  for (std::size_t i = 0; i < dec.terms.size(); ++i) {
    const auto& term = dec.terms[i];
    out += i == 0 ? "    " : "  + ";
    out += "(" + term.coeff.to_string() + ") * (" + term.form.to_string() + ")^" + std::to_string(d) + "\n";
  }
  return out;
}

std::string render_text(const RationalDecomposition& rdec) {
  const int d = rdec.a.degree();
  std::string out;
  out += "monomial: " + monomial_text(rdec.a.values()) + "\n";
  out += "parameter: " + (rdec.q ? to_string(*rdec.q) : std::string("none")) + "\n";
  out += "summands: " + std::to_string(rdec.terms.size()) + "\n";
  out += monomial_text(rdec.a.values()) + " =\n";
  for (std::size_t i = 0; i < rdec.terms.size(); ++i) {
    const auto& term = rdec.terms[i];
    out += i == 0 ? "    " : "  + ";
    out += "(" + to_string(term.lambda) + ") * (" + format_linear_form(term.form) + ")^" +
           std::to_string(d) + "\n";
  }
  return out;
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

BigRat rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  throw ParseError("expected a rational string, got " + v.dump());
}

}  // namespace

SparsePoly<BigRat> parse_polynomial(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_array()) throw ParseError("polynomial file must hold a JSON array of terms");
  std::optional<SparsePoly<BigRat>> p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exponents"))
      throw ParseError("each term needs 'coeff' and 'exponents'");
    const BigRat c = rational_value(term.at("coeff"));
    if (!term.at("exponents").is_array()) throw ParseError("'exponents' must be an array");
    Exponents e;
    for (const auto& x : term.at("exponents")) {
      BigInt v = x.is_string() ? parse_integer(x.get<std::string>())
                               : (x.is_number_integer() ? parse_integer(x.dump()) : BigInt(-1));
      if (sgn(v) < 0 || v > 100000) throw ParseError("bad exponent " + x.dump());
      e.push_back(static_cast<int>(v.get_si()));
    }
    if (!p) p.emplace(e.size());
    if (e.size() != p->arity()) throw ParseError("exponent lists differ in length");
    p->add_term(e, c);
  }
  if (!p) throw ParseError("polynomial file has no terms; give the number of variables with a zero term");
  return *p;
}

Simplex parse_simplex(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_array()) throw ParseError("simplex file must hold a JSON array of vertices");
  std::vector<Point> vertices;
  for (const auto& v : j) {
    if (!v.is_array()) throw ParseError("each vertex must be an array of rationals");
    Point p;
    for (const auto& x : v) p.push_back(rational_value(x));
    vertices.push_back(std::move(p));
  }
  return Simplex(std::move(vertices));
}

}  // namespace waring
