#include "algebra.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace haarint::algebra {

AlgebraElement::AlgebraElement(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("algebra degree must be positive");
}

AlgebraElement AlgebraElement::identity(int degree) {
  AlgebraElement x(degree);
  x.add_term(Permutation::identity(degree), 1);
  return x;
}

AlgebraElement AlgebraElement::from_permutation(const Permutation& p) {
  AlgebraElement x(p.degree());
  x.add_term(p, 1);
  return x;
}

Rational AlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.degree() != degree_) throw std::invalid_argument("term degree mismatch");
  Rational reduced = c;
  reduced.canonicalize();
  if (reduced == 0) return;
  auto [it, inserted] = terms_.emplace(p, reduced);
  if (!inserted) {
    it->second += reduced;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(p, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o * Rational(-1);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  AlgebraElement r(degree_);
  for (const auto& [p, a] : terms_)
    for (const auto& [q, b] : o.terms_) r.add_term(p.compose(q), a * b);
  return r;
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
  AlgebraElement r(degree_);
  if (c == 0) return r;
  for (const auto& [p, a] : terms_) r.terms_.emplace(p, a * c);
  return r;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement r(degree_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p.inverse(), c);
  return r;
}

Rational AlgebraElement::trace() const {
  return coefficient(Permutation::identity(degree_));
}

Rational AlgebraElement::trace_inner(const AlgebraElement& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  Rational acc = 0;
  const auto& small = terms_.size() <= o.terms_.size() ? terms_ : o.terms_;
  const auto& big = terms_.size() <= o.terms_.size() ? o.terms_ : terms_;
  for (const auto& [p, c] : small) {
    auto it = big.find(p);
    if (it != big.end()) acc += c * it->second;
  }
  return acc;
}

AlgebraElement AlgebraElement::embedded(int target_degree) const {
  AlgebraElement r(target_degree);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p.extended(target_degree), c);
  return r;
}

AlgebraElement AlgebraElement::restricted_expectation() const {
  if (degree_ < 2) throw std::invalid_argument("cannot restrict below degree 1");
  AlgebraElement r(degree_ - 1);
  int top = degree_ - 1;
  for (const auto& [p, c] : terms_) {
    if (p(top) != top) continue;
    std::vector<int> im(p.images().begin(), p.images().end() - 1);
    r.add_term(Permutation(std::move(im)), c);
  }
  return r;
}

AlgebraElement jucys_murphy(int i, int d) {
  if (i < 1 || i > d) throw std::invalid_argument("jucys-murphy index out of range");
  AlgebraElement x(d);
  for (int j = 1; j < i; ++j) x.add_term(Permutation::transposition(d, j, i), 1);
  return x;
}

namespace {

std::mutex projection_mutex;
std::map<std::vector<int>, AlgebraElement>& projection_cache() {
  static std::map<std::vector<int>, AlgebraElement> cache;
  return cache;
}

AlgebraElement build_projection(const StandardTableau& t) {
  int d = t.size();
  if (d == 1) return AlgebraElement::identity(1);
  StandardTableau below = t.restricted();
  AlgebraElement acc = minimal_projection(below).embedded(d);
  const YoungDiagram& mu = below.shape();
  int target = t.content(d);
  AlgebraElement x_d = jucys_murphy(d, d);
  for (int r : mu.addable_rows()) {
    int col = r < mu.length() ? mu.rows()[r] : 0;
    int gamma = col - r;
    if (gamma == target) continue;
    AlgebraElement factor = AlgebraElement::identity(d) * Rational(gamma) - x_d;
    acc = acc * factor * (Rational(1) / Rational(gamma - target));
  }
  return acc;
}

}  // namespace

const AlgebraElement& minimal_projection(const StandardTableau& t) {
  const std::vector<int>& key = t.content_vector();
  {
    std::lock_guard<std::mutex> lock(projection_mutex);
    auto it = projection_cache().find(key);
    if (it != projection_cache().end()) return it->second;
  }
  AlgebraElement built = build_projection(t);
  std::lock_guard<std::mutex> lock(projection_mutex);
  return projection_cache().emplace(key, std::move(built)).first->second;
}

Rational normalization_c_squared(const StandardTableau& t, const StandardTableau& s) {
  auto path = tableaux::admissible_path(t, s);
  Rational c2 = 1;
  StandardTableau cur = t;
  for (int i : path) {
    Rational r2 = Rational(cur.axial_distance(i)) * cur.axial_distance(i);
    c2 *= r2 / (r2 - 1);
    cur = *tableaux::apply_coxeter(cur, i).result;
  }
  return c2;
}

MatrixUnit matrix_unit(const StandardTableau& t, const StandardTableau& s) {
  if (!(t.shape() == s.shape()))
    throw std::invalid_argument("matrix unit needs equal shapes");
  const AlgebraElement& et = minimal_projection(t);
  const AlgebraElement& es = minimal_projection(s);
  AlgebraElement pi = AlgebraElement::from_permutation(tableaux::sigma_permutation(s, t));
  return MatrixUnit{t, s, et * pi * es, normalization_c_squared(t, s)};
}

namespace {

std::mutex units_mutex;
std::map<std::vector<int>, std::vector<MatrixUnit>>& units_cache() {
  static std::map<std::vector<int>, std::vector<MatrixUnit>> cache;
  return cache;
}

}  // namespace

const std::vector<MatrixUnit>& matrix_units(const YoungDiagram& shape) {
  {
    std::lock_guard<std::mutex> lock(units_mutex);
    auto it = units_cache().find(shape.rows());
    if (it != units_cache().end()) return it->second;
  }
  auto tabs = tableaux::standard_tableaux(shape);
  std::vector<MatrixUnit> units;
  units.reserve(tabs.size() * tabs.size());
  for (const auto& t : tabs)
    for (const auto& s : tabs) units.push_back(matrix_unit(t, s));
  std::lock_guard<std::mutex> lock(units_mutex);
  return units_cache().emplace(shape.rows(), std::move(units)).first->second;
}

std::map<UnitKey, Rational> decompose(const AlgebraElement& x, int degree_cap) {
  int d = x.degree();
  std::map<UnitKey, Rational> out;
  Rational dfact(factorial(d));
  for (const auto& shape : tableaux::partitions(d, degree_cap)) {
    int count = static_cast<int>(tableaux::standard_tableau_count(shape).get_si());
    Rational f(count);
    const auto& units = matrix_units(shape);
    for (int r = 0; r < count; ++r) {
      for (int c = 0; c < count; ++c) {
        const MatrixUnit& u = units[r * count + c];
        Rational overlap = u.element.trace_inner(x);
        if (overlap == 0) continue;
        out[UnitKey{shape.rows(), r, c}] = overlap * dfact * u.c_squared / f;
      }
    }
  }
  return out;
}

namespace {

std::vector<std::vector<double>> matrix_product(const std::vector<std::vector<double>>& a,
                                                const std::vector<std::vector<double>>& b) {
  size_t f = a.size();
  std::vector<std::vector<double>> r(f, std::vector<double>(f, 0.0));
  for (size_t i = 0; i < f; ++i)
    for (size_t k = 0; k < f; ++k) {
      double aik = a[i][k];
      if (aik == 0.0) continue;
      for (size_t j = 0; j < f; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

}  // namespace

std::vector<std::vector<double>> young_orthogonal_matrix(const YoungDiagram& shape, int i) {
  auto tabs = tableaux::standard_tableaux(shape);
  std::map<std::vector<int>, int> index;
  for (size_t t = 0; t < tabs.size(); ++t) index[tabs[t].content_vector()] = static_cast<int>(t);
  size_t f = tabs.size();
  std::vector<std::vector<double>> m(f, std::vector<double>(f, 0.0));
  for (size_t t = 0; t < f; ++t) {
    auto act = tableaux::apply_coxeter(tabs[t], i);
    switch (act.kind) {
      case tableaux::CoxeterAction::Kind::kSameRow:
        m[t][t] = 1.0;
        break;
      case tableaux::CoxeterAction::Kind::kSameColumn:
        m[t][t] = -1.0;
        break;
      case tableaux::CoxeterAction::Kind::kStandard: {
        double r = tabs[t].axial_distance(i);
        int s = index.at(act.result->content_vector());
        m[t][t] = 1.0 / r;
        m[s][t] = std::sqrt(1.0 - 1.0 / (r * r));
        break;
      }
    }
  }
  return m;
}

std::vector<std::vector<double>> young_orthogonal_representation(const YoungDiagram& shape,
                                                                 const Permutation& p) {
  size_t f = tableaux::standard_tableaux(shape).size();
  std::vector<std::vector<double>> result(f, std::vector<double>(f, 0.0));
  for (size_t i = 0; i < f; ++i) result[i][i] = 1.0;
  auto word = p.images();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (size_t j = 0; j + 1 < word.size(); ++j) {
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        result = matrix_product(young_orthogonal_matrix(shape, static_cast<int>(j) + 1), result);
        swapped = true;
      }
    }
  }
  return result;
}

}  // namespace haarint::algebra
