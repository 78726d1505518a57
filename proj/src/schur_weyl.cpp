#include "schur_weyl.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace haarint::schur_weyl {

void validate_index_tuple(const IndexTuple& idx, int d, long n) {
  if (static_cast<int>(idx.size()) != d)
    throw std::invalid_argument("index tuple length differs from degree");
  for (int v : idx)
    if (v < 1 || (n > 0 && v > n))
      throw std::invalid_argument("index entry " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
}

IndexTuple act_on_index(const Permutation& sigma, const IndexTuple& idx) {
  if (sigma.degree() != static_cast<int>(idx.size()))
    throw std::invalid_argument("index tuple length differs from permutation degree");
  IndexTuple out(idx.size());
  for (size_t a = 0; a < idx.size(); ++a) out[sigma(static_cast<int>(a))] = idx[a];
  return out;
}

Rational pair_with_elementary(const AlgebraElement& x, const IndexTuple& j,
                              const IndexTuple& l) {
  if (j.size() != l.size()) throw std::invalid_argument("index tuple lengths differ");
  Rational acc = 0;
  for (const auto& [sigma, c] : x.terms())
    if (act_on_index(sigma, l) == j) acc += c;
  return acc;
}

PolynomialInN gram_pairing_poly(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch");
  int d = x.degree();
  std::vector<Rational> by_cycles(d + 1, Rational(0));
  for (const auto& [sigma, cx] : x.terms()) {
    Permutation sigma_inv = sigma.inverse();
    for (const auto& [tau, cy] : y.terms())
      by_cycles[sigma_inv.compose(tau).cycle_count()] += cx * cy;
  }
  return PolynomialInN(std::move(by_cycles));
}

namespace {

using NormKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::mutex norm_mutex;
std::map<NormKey, PolynomialInN>& norm_cache() {
  static std::map<NormKey, PolynomialInN> cache;
  return cache;
}

}  // namespace

const PolynomialInN& unit_norm_poly(const algebra::MatrixUnit& unit) {
  NormKey key{unit.row.shape().rows(), unit.row.content_vector(), unit.col.content_vector()};
  {
    std::lock_guard<std::mutex> lock(norm_mutex);
    auto it = norm_cache().find(key);
    if (it != norm_cache().end()) return it->second;
  }
  PolynomialInN built = gram_pairing_poly(unit.element, unit.element);
  std::lock_guard<std::mutex> lock(norm_mutex);
  return norm_cache().emplace(std::move(key), std::move(built)).first->second;
}

}  // namespace haarint::schur_weyl
