#include "serialize.hpp"

namespace haarint::serialize {

json diagram_json(const tableaux::YoungDiagram& shape) { return json(shape.rows()); }

json tableau_json(const tableaux::StandardTableau& t) {
  return json{{"shape", t.shape().rows()}, {"rows", t.rows()}};
}

json element_json(const algebra::AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms()) {
    std::vector<int> word(p.images().size());
    for (size_t i = 0; i < word.size(); ++i) word[i] = p(static_cast<int>(i)) + 1;
    terms.push_back(json{{"perm", word}, {"coeff", rational_to_string(c)}});
  }
  return json{{"degree", x.degree()}, {"terms", terms}};
}

json polynomial_json(const poly::PolynomialInN& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(rational_to_string(c));
  return json{{"coeffs", coeffs}};
}

json moment_json(const Rational& value) { return json{{"moment", rational_to_string(value)}}; }

json branches_json(const std::vector<moments::SymbolicBranch>& branches) {
  json arr = json::array();
  for (const auto& b : branches) {
    json num = json::array();
    for (const auto& c : b.value.numerator().coefficients()) num.push_back(rational_to_string(c));
    json den = json::array();
    for (const auto& c : b.value.denominator().coefficients()) den.push_back(rational_to_string(c));
    arr.push_back(json{{"min_n", b.min_n}, {"num", num}, {"den", den}});
  }
  return json{{"branches", arr}};
}

json estimate_json(const mc::MomentEstimate& est) {
  return json{{"mean_re", est.mean_re}, {"mean_im", est.mean_im}, {"stderr", est.std_error}};
}

json rational_matrix_json(const std::vector<std::vector<Rational>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_to_string(v));
    rows.push_back(r);
  }
  return rows;
}

json integer_matrix_json(const std::vector<std::vector<Integer>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return rows;
}

std::string permutation_text(const tableaux::Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "e";
  std::string out;
  for (const auto& cyc : cycles) {
    out += "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(cyc[i]);
    }
    out += ")";
  }
  return out;
}

std::string element_text(const algebra::AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : x.terms()) {
    Rational a = c;
    bool negative = a < 0;
    if (negative) a = -a;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string perm = permutation_text(p);
    if (a == 1)
      out += perm;
    else
      out += rational_to_string(a) + "*" + perm;
  }
  return out;
}

std::string polynomial_text(const poly::PolynomialInN& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational a = p.coefficient(k);
    if (a == 0) continue;
    bool negative = a < 0;
    if (negative) a = -a;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string power = k == 0 ? "" : (k == 1 ? "n" : "n^" + std::to_string(k));
    if (power.empty())
      out += rational_to_string(a);
    else if (a == 1)
      out += power;
    else
      out += rational_to_string(a) + "*" + power;
  }
  return out;
}

std::string rational_function_text(const poly::RationalFunctionInN& f) {
  if (f.denominator() == poly::PolynomialInN::constant(1)) return polynomial_text(f.numerator());
  return "(" + polynomial_text(f.numerator()) + ")/(" + polynomial_text(f.denominator()) + ")";
}

}  // namespace haarint::serialize
