#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "algebra.hpp"
#include "haar.hpp"
#include "monte_carlo.hpp"
#include "polynomial.hpp"
#include "tableaux.hpp"

namespace haarint::serialize {

using nlohmann::json;

json diagram_json(const tableaux::YoungDiagram& shape);
json tableau_json(const tableaux::StandardTableau& t);
json element_json(const algebra::AlgebraElement& x);
json polynomial_json(const poly::PolynomialInN& p);
json moment_json(const Rational& value);
json branches_json(const std::vector<moments::SymbolicBranch>& branches);
json estimate_json(const mc::MomentEstimate& est);
json rational_matrix_json(const std::vector<std::vector<Rational>>& m);
json integer_matrix_json(const std::vector<std::vector<Integer>>& m);

std::string permutation_text(const tableaux::Permutation& p);
std::string element_text(const algebra::AlgebraElement& x);
std::string polynomial_text(const poly::PolynomialInN& p);
std::string rational_function_text(const poly::RationalFunctionInN& f);

}  // namespace haarint::serialize
