#include "weingarten.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace haarint::weingarten {

namespace {

std::mutex order_mutex;
std::map<int, std::vector<Permutation>>& order_cache() {
  static std::map<int, std::vector<Permutation>> cache;
  return cache;
}

}  // namespace

const std::vector<Permutation>& permutation_order(int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  std::lock_guard<std::mutex> lock(order_mutex);
  auto it = order_cache().find(d);
  if (it != order_cache().end()) return it->second;
  std::vector<Permutation> perms;
  std::vector<int> im(d);
  std::iota(im.begin(), im.end(), 0);
  do {
    perms.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return order_cache().emplace(d, std::move(perms)).first->second;
}

std::vector<std::vector<Integer>> gram_matrix(int d, long n) {
  const auto& perms = permutation_order(d);
  size_t m = perms.size();
  std::vector<Permutation> inverses;
  inverses.reserve(m);
  for (const auto& p : perms) inverses.push_back(p.inverse());
  std::vector<std::vector<Integer>> g(m, std::vector<Integer>(m));
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < m; ++c) {
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(inverses[r].compose(perms[c]).cycle_count()));
      g[r][c] = std::move(e);
    }
  return g;
}

namespace {

// Fraction-free Gauss-Jordan on [G | I]; pivots stay exact integers and the
// final left block is det * I, so the inverse is adjugate over determinant.
std::vector<std::vector<Rational>> invert_gram(std::vector<std::vector<Integer>> g) {
  size_t m = g.size();
  std::vector<std::vector<Integer>> aug(m, std::vector<Integer>(2 * m, Integer(0)));
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < m; ++c) aug[r][c] = std::move(g[r][c]);
    aug[r][m + r] = 1;
  }
  Integer prev = 1;
  for (size_t p = 0; p < m; ++p) {
    const Integer piv = aug[p][p];
    if (piv == 0) throw std::domain_error("gram matrix is singular");
    for (size_t r = 0; r < m; ++r) {
      if (r == p) continue;
      const Integer lead = aug[r][p];
      for (size_t c = 0; c < 2 * m; ++c) {
        Integer next = piv * aug[r][c] - lead * aug[p][c];
        mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), prev.get_mpz_t());
        aug[r][c] = std::move(next);
      }
    }
    prev = piv;
  }
  const Integer& det = aug[m - 1][m - 1];
  std::vector<std::vector<Rational>> w(m, std::vector<Rational>(m));
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < m; ++c) {
      Rational q(aug[r][m + c], det);
      q.canonicalize();
      w[r][c] = std::move(q);
    }
  return w;
}

std::mutex wg_mutex;
std::map<std::pair<int, long>, std::vector<std::vector<Rational>>>& wg_cache() {
  static std::map<std::pair<int, long>, std::vector<std::vector<Rational>>> cache;
  return cache;
}

}  // namespace

const std::vector<std::vector<Rational>>& weingarten_matrix(int d, long n, int oracle_cap) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d > oracle_cap)
    throw capacity_error("degree " + std::to_string(d) + " exceeds oracle cap " +
                         std::to_string(oracle_cap));
  if (n < d)
    throw std::domain_error("gram matrix needs n >= d to be invertible");
  std::pair<int, long> key{d, n};
  {
    std::lock_guard<std::mutex> lock(wg_mutex);
    auto it = wg_cache().find(key);
    if (it != wg_cache().end()) return it->second;
  }
  auto w = invert_gram(gram_matrix(d, n));
  std::lock_guard<std::mutex> lock(wg_mutex);
  return wg_cache().emplace(key, std::move(w)).first->second;
}

Rational wg_moment(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                   const IndexTuple& l, long n, int oracle_cap) {
  int d = static_cast<int>(i.size());
  if (d < 1) throw std::invalid_argument("degree must be positive");
  schur_weyl::validate_index_tuple(i, d, n);
  schur_weyl::validate_index_tuple(j, d, n);
  schur_weyl::validate_index_tuple(k, d, n);
  schur_weyl::validate_index_tuple(l, d, n);
  const auto& w = weingarten_matrix(d, n, oracle_cap);
  const auto& perms = permutation_order(d);
  std::vector<size_t> row_match, col_match;
  for (size_t a = 0; a < perms.size(); ++a) {
    bool rows_ok = true, cols_ok = true;
    for (int b = 0; b < d; ++b) {
      if (i[b] != k[perms[a](b)]) rows_ok = false;
      if (j[b] != l[perms[a](b)]) cols_ok = false;
      if (!rows_ok && !cols_ok) break;
    }
    if (rows_ok) row_match.push_back(a);
    if (cols_ok) col_match.push_back(a);
  }
  Rational acc = 0;
  for (size_t r : row_match)
    for (size_t c : col_match) acc += w[r][c];
  return acc;
}

}  // namespace haarint::weingarten
