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

// waring: decompose, verify, count, table, integrate.
//
// Exit codes: 0 ok, 1 malformed input, 2 degenerate parameter or regularity
// failure, 3 verification mismatch, 4 degenerate simplex.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "waring/combinatorics.hpp"
#include "waring/document.hpp"
#include "waring/errors.hpp"
#include "waring/form_decomp.hpp"
#include "waring/monomial_decomp.hpp"
#include "waring/simplex.hpp"
#include "waring/verify.hpp"

namespace {

using namespace waring;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitGeometry = 4;

struct Options {
  std::string monomial;
  std::string mode = "reduced";
  std::string t = "symbolic";
  std::string format = "text";
  std::string sweep;
  std::string document_file;
  int n = -1;
  int D = -1;
  std::string pairs;
  std::string poly_file;
  std::string simplex_file;
  bool parallel = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<BigRat> parameter_value(const std::string& t) {
  if (t == "symbolic") return std::nullopt;
  return parse_rational(t);
}

int cmd_decompose(const Options& o) {
  const ExponentVector a = ExponentVector::parse(o.monomial);
  const Mode mode = parse_mode(o.mode);
  const auto q = parameter_value(o.t);
  const SymbolicDecomposition dec = decompose(a, mode);
  if (!q) {
    std::cout << (o.format == "json" ? emit_document(make_document(dec)) : render_text(dec));
    return kExitOk;
  }
  const RationalDecomposition rdec = specialize(dec, *q);
  std::cout << (o.format == "json" ? emit_document(make_document(rdec, mode, dec.D)) : render_text(rdec));
  return kExitOk;
}

// Returns an empty string on success, otherwise a mismatch description.
std::string verify_one(const ExponentVector& a, Mode mode, const std::optional<BigRat>& q,
                       bool parallel) {
  const SymbolicDecomposition dec = decompose(a, mode);
  if (!q) {
    const auto report = verify_symbolic(dec, parallel);
    if (report.ok) return {};
    const Exponents& e = *report.first_mismatch;
    return "mismatch for (" + a.to_string() + ") at " + monomial_text(e) + ": lhs " +
           report.lhs.coeff(e).to_string() + ", rhs " + report.rhs.coeff(e).to_string();
  }
  const auto report = verify_specialized(specialize(dec, *q), parallel);
  if (report.ok) return {};
  const Exponents& e = *report.first_mismatch;
  return "mismatch for (" + a.to_string() + ") at " + monomial_text(e) + ": lhs " +
         to_string(report.lhs.coeff(e)) + ", rhs " + to_string(report.rhs.coeff(e));
}

// "n=3,amax=4": every exponent vector with n + 1 entries in [0, amax], not all zero.
std::pair<int, int> parse_sweep(const std::string& text) {
  int n = -1, amax = -1;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("bad sweep item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const long value = parse_integer(item.substr(eq + 1)).get_si();
    if (key == "n")
      n = static_cast<int>(value);
    else if (key == "amax")
      amax = static_cast<int>(value);
    else
      throw ParseError("unknown sweep key '" + key + "'");
  }
  if (n < 0 || amax < 1 || n > 8 || amax > 32) throw ParseError("sweep needs 0 <= n <= 8 and 1 <= amax <= 32");
  return {n, amax};
}

int cmd_verify(const Options& o) {
  const Mode mode = parse_mode(o.mode);
  const auto q = parameter_value(o.t);
  if (!o.sweep.empty()) {
    if (q) throw ParseError("--sweep checks symbolic identities; drop --t");
    const auto [n, amax] = parse_sweep(o.sweep);
    std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
    std::size_t checked = 0;
    for (;;) {
      std::size_t i = 0;
      while (i < a.size() && a[i] == amax) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
      const std::string err = verify_one(ExponentVector(a), mode, std::nullopt, o.parallel);
      if (!err.empty()) {
        std::cout << "MISMATCH: " << err << "\n";
        return kExitMismatch;
      }
      ++checked;
    }
    std::cout << "OK: " << checked << " identities checked\n";
    return kExitOk;
  }
  if (!o.document_file.empty()) {
    const DecompositionDocument doc = parse_document(read_file(o.document_file));
    std::string err;
    if (doc.parameter == "t") {
      const auto report = verify_symbolic(symbolic_from_document(doc), o.parallel);
      if (!report.ok)
        err = "document differs at " + monomial_text(*report.first_mismatch) + ": lhs " +
              report.lhs.coeff(*report.first_mismatch).to_string() + ", rhs " +
              report.rhs.coeff(*report.first_mismatch).to_string();
    } else {
      const auto report = verify_specialized(rational_from_document(doc), o.parallel);
      if (!report.ok)
        err = "document differs at " + monomial_text(*report.first_mismatch) + ": lhs " +
              to_string(report.lhs.coeff(*report.first_mismatch)) + ", rhs " +
              to_string(report.rhs.coeff(*report.first_mismatch));
    }
    if (!err.empty()) {
      std::cout << "MISMATCH: " << err << "\n";
      return kExitMismatch;
    }
    std::cout << "OK\n";
    return kExitOk;
  }
  if (o.monomial.empty()) throw ParseError("verify needs --monomial, --sweep or --document");
  const std::string err = verify_one(ExponentVector::parse(o.monomial), mode, q, o.parallel);
  if (!err.empty()) {
    std::cout << "MISMATCH: " << err << "\n";
    return kExitMismatch;
  }
  std::cout << "OK\n";
  return kExitOk;
}

int cmd_count(const Options& o) {
  std::cout << "F=" << F_count(o.n, o.D).get_str() << " K=" << K_count(o.n, o.D).get_str() << "\n";
  return kExitOk;
}

// Rows of the comparison table for two, three and five parameters.
const char* const kDefaultPairs = "2:10,2:50,2:100,3:10,3:50,3:100,5:30,5:50,5:100";

int cmd_table(const Options& o) {
  const std::string pairs = o.pairs.empty() ? kDefaultPairs : o.pairs;
  std::cout << "n,D,F,K\n";
  std::stringstream ss(pairs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("pairs are written n:D, got '" + item + "'");
    const long n = parse_integer(item.substr(0, colon)).get_si();
    const long D = parse_integer(item.substr(colon + 1)).get_si();
    if (n < 0 || D < 1 || n > 1000 || D > 100000) throw ParseError("pair out of range: '" + item + "'");
    std::cout << n << "," << D << "," << F_count(static_cast<int>(n), static_cast<int>(D)).get_str() << ","
              << K_count(static_cast<int>(n), static_cast<int>(D)).get_str() << "\n";
  }
  return kExitOk;
}

int cmd_integrate(const Options& o) {
  const SparsePoly<BigRat> p = parse_polynomial(read_file(o.poly_file));
  const Simplex simplex = parse_simplex(read_file(o.simplex_file));
  if (p.arity() != simplex.dimension())
    throw ParseError("polynomial has " + std::to_string(p.arity()) + " variables but the simplex lives in " +
                     std::to_string(simplex.dimension()) + "-space");
  const IntegrationResult r = integrate_poly(p, simplex);
  const std::string q = r.q ? to_string(*r.q) : std::string("none");
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["value"] = to_string(r.value);
    j["parameter"] = q;
    j["forms"] = std::to_string(r.forms_integrated);
    j["coordinate_change"] = !r.transform.empty();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(r.value) << "\n";
    std::cout << "parameter: " << q << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit Waring decompositions of monomials and forms, with exact verification"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--parallel", o.parallel, "Use worker threads for expansion (output is identical)");

  auto* dec = app.add_subcommand("decompose", "Decompose a monomial into powers of linear forms");
  dec->add_option("--monomial", o.monomial, "Exponents a0,...,an")->required();
  dec->add_option("--mode", o.mode, "reduced or full")->check(CLI::IsMember({"reduced", "full"}));
  dec->add_option("--t", o.t, "symbolic, or an exact rational value for t");
  dec->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* ver = app.add_subcommand("verify", "Expand a decomposition and compare with the monomial");
  ver->add_option("--monomial", o.monomial, "Exponents a0,...,an");
  ver->add_option("--mode", o.mode, "reduced or full")->check(CLI::IsMember({"reduced", "full"}));
  ver->add_option("--t", o.t, "symbolic, or an exact rational value for t");
  ver->add_option("--sweep", o.sweep, "n=N,amax=M: every vector with N+1 entries in [0, M]");
  ver->add_option("--document", o.document_file, "Re-check a JSON document written by decompose");

  auto* cnt = app.add_subcommand("count", "Summand counts for a general form");
  cnt->add_option("--n", o.n, "Number of variables minus one")->required()->check(CLI::Range(0, 1000));
  cnt->add_option("--D", o.D, "Degree")->required()->check(CLI::Range(1, 100000));

  auto* tab = app.add_subcommand("table", "CSV of counts for n:D pairs");
  tab->add_option("--pairs", o.pairs, "Comma-separated n:D pairs");

  auto* integ = app.add_subcommand("integrate", "Integrate a polynomial over a simplex");
  integ->add_option("--poly", o.poly_file, "JSON polynomial file")->required();
  integ->add_option("--simplex", o.simplex_file, "JSON simplex file")->required();
  integ->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*dec) return cmd_decompose(o);
    if (*ver) return cmd_verify(o);
    if (*cnt) return cmd_count(o);
    if (*tab) return cmd_table(o);
    if (*integ) return cmd_integrate(o);
  } catch (const DegenerateParameterError& e) {
    std::cerr << "error: degenerate parameter: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const RegularityError& e) {
    std::cerr << "error: regularity: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const DegenerateSimplexError& e) {
    std::cerr << "error: degenerate simplex: " << e.what() << "\n";
    return kExitGeometry;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
