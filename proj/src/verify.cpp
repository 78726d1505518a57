#include "verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "algebra.hpp"
#include "haar.hpp"
#include "schur_weyl.hpp"

namespace haarint::verify {

using algebra::AlgebraElement;
using algebra::MatrixUnit;
using schur_weyl::IndexTuple;
using tableaux::StandardTableau;
using tableaux::YoungDiagram;

namespace {

class Suite {
 public:
  Suite(int d, int degree_cap, int oracle_cap)
      : d_(d), degree_cap_(degree_cap), oracle_cap_(oracle_cap),
        shapes_(tableaux::partitions(d, degree_cap)) {}

  std::vector<CheckResult> results;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, detail});
  }

  void dimensions() {
    Integer total = 0;
    bool counts_ok = true;
    for (const auto& shape : shapes_) {
      Integer f = tableaux::standard_tableau_count(shape);
      total += f * f;
      if (Integer(tableaux::standard_tableaux(shape).size()) != f) counts_ok = false;
    }
    check("tableau counts match hook length formula", counts_ok);
    check("squared dimensions sum to d!", total == factorial(d_));
  }

  void content_vectors() {
    bool injective = true, starts_at_zero = true;
    for (const auto& shape : shapes_) {
      auto tabs = tableaux::standard_tableaux(shape);
      std::map<std::vector<int>, int> seen;
      for (const auto& t : tabs) {
        if (!seen.emplace(t.content_vector(), 1).second) injective = false;
        if (t.content(1) != 0) starts_at_zero = false;
      }
    }
    check("content vectors determine tableaux", injective);
    check("first content entry is zero", starts_at_zero);
  }

  void coxeter_moves() {
    bool involution = true, distances_ok = true;
    for (const auto& shape : shapes_) {
      for (const auto& t : tableaux::standard_tableaux(shape)) {
        for (int i = 1; i < d_; ++i) {
          auto act = tableaux::apply_coxeter(t, i);
          int r = t.axial_distance(i);
          switch (act.kind) {
            case tableaux::CoxeterAction::Kind::kSameRow:
              if (r != 1) distances_ok = false;
              break;
            case tableaux::CoxeterAction::Kind::kSameColumn:
              if (r != -1) distances_ok = false;
              break;
            case tableaux::CoxeterAction::Kind::kStandard:
              if (std::abs(r) < 2) distances_ok = false;
              if (!(*tableaux::apply_coxeter(*act.result, i).result == t)) involution = false;
              break;
          }
        }
      }
    }
    check("coxeter moves are involutions", involution);
    check("axial distances match move classification", distances_ok);
  }

  void projections() {
    bool idempotent = true, orthogonal = true, traces = true, eigen = true;
    AlgebraElement sum(d_);
    std::vector<std::pair<const StandardTableau*, const AlgebraElement*>> all;
    std::vector<std::vector<StandardTableau>> tab_store;
    for (const auto& shape : shapes_) tab_store.push_back(tableaux::standard_tableaux(shape));
    for (const auto& tabs : tab_store)
      for (const auto& t : tabs) all.push_back({&t, &algebra::minimal_projection(t)});
    Rational dfact(factorial(d_));
    for (size_t a = 0; a < all.size(); ++a) {
      const auto& [t, e] = all[a];
      if (!(*e * *e == *e)) idempotent = false;
      sum = sum + *e;
      Rational f(tableaux::standard_tableau_count(t->shape()));
      if (e->trace() != f / dfact) traces = false;
      for (int i = 1; i <= d_; ++i) {
        AlgebraElement lhs = algebra::jucys_murphy(i, d_) * *e;
        if (!(lhs == *e * Rational(t->content(i)))) eigen = false;
      }
      for (size_t b = a + 1; b < all.size(); ++b)
        if (!((*e * *all[b].second).is_zero())) orthogonal = false;
    }
    check("minimal projections are idempotent", idempotent);
    check("distinct projections annihilate each other", orthogonal);
    check("projections resolve the identity", sum == AlgebraElement::identity(d_));
    check("projection traces equal dimension over d!", traces);
    check("jucys-murphy elements act by contents", eigen);
  }

  void units() {
    bool adjoint_ok = true, trace_norm = true, cross_zero = true;
    Rational dfact(factorial(d_));
    for (const auto& shape : shapes_) {
      const auto& units = algebra::matrix_units(shape);
      int f = static_cast<int>(tableaux::standard_tableau_count(shape).get_si());
      Rational fr(f);
      for (int r = 0; r < f; ++r)
        for (int c = 0; c < f; ++c) {
          const MatrixUnit& u = units[r * f + c];
          const MatrixUnit& flipped = units[c * f + r];
          if (!(u.element.adjoint() == flipped.element)) adjoint_ok = false;
          if (u.c_squared * u.element.trace_inner(u.element) != fr / dfact) trace_norm = false;
          for (int r2 = 0; r2 < f; ++r2)
            for (int c2 = 0; c2 < f; ++c2) {
              if (r2 == r && c2 == c) continue;
              if (u.element.trace_inner(units[r2 * f + c2].element) != 0) cross_zero = false;
            }
        }
    }
    check("unit adjoints transpose the index pair", adjoint_ok);
    check("normalization ties unit norms to dimensions", trace_norm);
    check("distinct units are trace orthogonal", cross_zero);
  }

  void young_form() {
    double worst = 0.0;
    for (const auto& shape : shapes_) {
      auto tabs = tableaux::standard_tableaux(shape);
      const auto& units = algebra::matrix_units(shape);
      int f = static_cast<int>(tabs.size());
      for (int r = 0; r < f; ++r)
        for (int c = 0; c < f; ++c) {
          const MatrixUnit& u = units[r * f + c];
          std::vector<std::vector<double>> acc(f, std::vector<double>(f, 0.0));
          for (const auto& [p, coeff] : u.element.terms()) {
            auto rep = algebra::young_orthogonal_representation(shape, p);
            double w = coeff.get_d();
            for (int a = 0; a < f; ++a)
              for (int b = 0; b < f; ++b) acc[a][b] += w * rep[a][b];
          }
          double scale = std::sqrt(u.c_squared.get_d());
          for (int a = 0; a < f; ++a)
            for (int b = 0; b < f; ++b) {
              double want = (a == r && b == c) ? 1.0 / scale : 0.0;
              worst = std::max(worst, std::abs(acc[a][b] - want));
            }
        }
    }
    std::ostringstream os;
    os << "max deviation " << worst;
    check("units match the orthogonal representation numerically", worst < 1e-9, os.str());
  }

  void unit_products() {
    bool ok = true;
    for (const auto& shape : shapes_) {
      const auto& units = algebra::matrix_units(shape);
      int f = static_cast<int>(tableaux::standard_tableau_count(shape).get_si());
      for (int a = 0; a < f * f && ok; ++a)
        for (int b = 0; b < f * f && ok; ++b) {
          const MatrixUnit& u = units[a];
          const MatrixUnit& v = units[b];
          AlgebraElement prod = u.element * v.element;
          if (a % f != b / f) {
            if (!prod.is_zero()) ok = false;
            continue;
          }
          const MatrixUnit& w = units[(a / f) * f + (b % f)];
          Rational rho = 0;
          for (const auto& [p, coeff] : w.element.terms()) {
            rho = prod.coefficient(p) / coeff;
            break;
          }
          if (!(w.element * rho == prod) || rho <= 0 ||
              rho * rho * u.c_squared * v.c_squared != w.c_squared)
            ok = false;
        }
    }
    check("unit products compose like matrix units", ok);
  }

  void path_independence() {
    bool ok = true;
    for (const auto& shape : shapes_) {
      auto tabs = tableaux::standard_tableaux(shape);
      for (const auto& from : tabs)
        for (const auto& to : tabs) {
          if (from == to) continue;
          size_t target = tableaux::admissible_path(from, to).size();
          Rational want = algebra::normalization_c_squared(from, to);
          // Depth-first over all words of the minimal length.
          auto walk = [&](auto&& self, const StandardTableau& cur, size_t depth,
                          Rational acc) -> void {
            if (depth == target) {
              if (cur == to && acc != want) ok = false;
              return;
            }
            for (int i = 1; i < d_; ++i) {
              auto act = tableaux::apply_coxeter(cur, i);
              if (act.kind != tableaux::CoxeterAction::Kind::kStandard) continue;
              Rational r2 = Rational(cur.axial_distance(i)) * cur.axial_distance(i);
              self(self, *act.result, depth + 1, acc * r2 / (r2 - 1));
            }
          };
          walk(walk, from, 0, 1);
        }
    }
    check("normalization is path independent", ok);
  }

  void branching() {
    if (d_ + 1 > std::min(degree_cap_, 5)) {
      check("branching into the next degree", true, "skipped: next degree too large");
      return;
    }
    bool diag_ok = true, offdiag_ok = true, expectation_ok = true, round_trip_ok = true;
    for (const auto& shape : shapes_) {
      auto tabs = tableaux::standard_tableaux(shape);
      const auto& units = algebra::matrix_units(shape);
      int f = static_cast<int>(tabs.size());
      for (int r = 0; r < f; ++r) {
        const AlgebraElement& e = algebra::minimal_projection(tabs[r]);
        AlgebraElement lifted = e.embedded(d_ + 1);
        AlgebraElement expected(d_ + 1);
        for (int row : shape.addable_rows()) {
          YoungDiagram bigger = shape.with_box_added(row);
          for (const auto& s : tableaux::standard_tableaux(bigger))
            if (s.restricted() == tabs[r])
              expected = expected + algebra::minimal_projection(s);
        }
        if (!(lifted == expected)) diag_ok = false;
        for (int c = 0; c < f; ++c) {
          const MatrixUnit& u = units[r * f + c];
          auto coords = algebra::decompose(u.element.embedded(d_ + 1), degree_cap_);
          if (coords.size() != shape.addable_rows().size()) offdiag_ok = false;
          for (const auto& [key, alpha] : coords) {
            YoungDiagram beta{key.shape};
            auto big_tabs = tableaux::standard_tableaux(beta);
            if (!(big_tabs[key.row].restricted() == tabs[r]) ||
                !(big_tabs[key.col].restricted() == tabs[c]) || alpha <= 0)
              offdiag_ok = false;
            const MatrixUnit& target = algebra::matrix_units(beta)[
                key.row * static_cast<int>(big_tabs.size()) + key.col];
            if (alpha * alpha * u.c_squared != target.c_squared) offdiag_ok = false;
          }
          if (!(u.element.embedded(d_ + 1).restricted_expectation() == u.element))
            round_trip_ok = false;
        }
      }
    }
    for (const auto& big_shape : tableaux::partitions(d_ + 1, degree_cap_)) {
      auto tabs = tableaux::standard_tableaux(big_shape);
      const auto& units = algebra::matrix_units(big_shape);
      int f = static_cast<int>(tabs.size());
      Rational f_lambda(tableaux::standard_tableau_count(big_shape));
      for (int r = 0; r < f; ++r)
        for (int c = 0; c < f; ++c) {
          AlgebraElement dropped = units[r * f + c].element.restricted_expectation();
          StandardTableau rt = tabs[r].restricted();
          StandardTableau ct = tabs[c].restricted();
          if (!(rt.shape() == ct.shape())) {
            if (!dropped.is_zero()) expectation_ok = false;
            continue;
          }
          Rational f_beta(tableaux::standard_tableau_count(rt.shape()));
          Rational want = f_lambda / (Rational(d_ + 1) * f_beta);
          auto coords = algebra::decompose(dropped, degree_cap_);
          if (coords.size() != 1) {
            expectation_ok = false;
            continue;
          }
          const auto& [key, rho] = *coords.begin();
          const MatrixUnit& target = algebra::matrix_units(YoungDiagram{key.shape})[
              key.row * static_cast<int>(tableaux::standard_tableau_count(
                            YoungDiagram{key.shape}).get_si()) + key.col];
          if (!(target.row == rt) || !(target.col == ct) || rho <= 0) expectation_ok = false;
          Rational const_sq = rho * rho * units[r * f + c].c_squared / target.c_squared;
          if (const_sq != want * want) expectation_ok = false;
        }
    }
    check("diagonal units branch over added boxes", diag_ok);
    check("lifted units decompose with positive coefficients", offdiag_ok);
    check("expectation after lifting returns the unit", round_trip_ok);
    check("expectation contracts units by the dimension ratio", expectation_ok);
  }

  void norm_kernels() {
    bool ok = true;
    for (const auto& shape : shapes_) {
      const auto& units = algebra::matrix_units(shape);
      for (const auto& u : units) {
        const auto& poly = schur_weyl::unit_norm_poly(u);
        for (int n = 1; n < shape.length(); ++n)
          if (poly.evaluate(n) != 0) ok = false;
        if (poly.evaluate(shape.length()) == 0) ok = false;
      }
    }
    check("unit norms vanish exactly below the shape length", ok);
  }

  void oracle_agreement() {
    if (d_ > oracle_cap_) {
      check("moments agree with the gram-inverse oracle", true, "skipped: degree above oracle cap");
      return;
    }
    std::mt19937_64 rng(2024);
    long n = d_;
    std::uniform_int_distribution<int> pick(1, static_cast<int>(n));
    bool ok = true;
    for (int trial = 0; trial < 12 && ok; ++trial) {
      IndexTuple i(d_), j(d_), k(d_), l(d_);
      for (int a = 0; a < d_; ++a) {
        i[a] = pick(rng);
        j[a] = pick(rng);
        k[a] = pick(rng);
        l[a] = pick(rng);
      }
      if (moments::moment(i, j, k, l, n, degree_cap_) !=
          weingarten::wg_moment(i, j, k, l, n, oracle_cap_))
        ok = false;
    }
    check("moments agree with the gram-inverse oracle", ok);
  }

 private:
  int d_;
  int degree_cap_;
  int oracle_cap_;
  std::vector<YoungDiagram> shapes_;
};

}  // namespace

std::vector<CheckResult> run_suite(int d, bool full, int degree_cap, int oracle_cap) {
  Suite suite(d, degree_cap, oracle_cap);
  suite.dimensions();
  suite.content_vectors();
  suite.coxeter_moves();
  suite.projections();
  suite.units();
  suite.young_form();
  if (full) {
    suite.unit_products();
    suite.path_independence();
    suite.branching();
    suite.norm_kernels();
    suite.oracle_agreement();
  }
  return suite.results;
}

}  // namespace haarint::verify
