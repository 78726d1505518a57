#include "tableaux.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace haarint::tableaux {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("empty partition");
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw std::invalid_argument("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("partition rows must be weakly decreasing");
    size_ += rows_[i];
  }
}

std::vector<int> YoungDiagram::addable_rows() const {
  std::vector<int> out;
  for (int r = 0; r < length(); ++r)
    if (r == 0 || rows_[r] < rows_[r - 1]) out.push_back(r);
  out.push_back(length());
  return out;
}

std::vector<int> YoungDiagram::removable_rows() const {
  std::vector<int> out;
  for (int r = 0; r < length(); ++r)
    if (r + 1 == length() || rows_[r] > rows_[r + 1]) out.push_back(r);
  return out;
}

YoungDiagram YoungDiagram::with_box_added(int row) const {
  auto v = rows_;
  if (row == length())
    v.push_back(1);
  else
    ++v[row];
  return YoungDiagram(v);
}

YoungDiagram YoungDiagram::with_box_removed(int row) const {
  auto v = rows_;
  if (--v[row] == 0) v.pop_back();
  return YoungDiagram(v);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    throw std::invalid_argument("bad transposition");
  auto p = identity(degree);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::adjacent(int degree, int i) {
  return transposition(degree, i, i + 1);
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < im.size(); ++i) im[i] = images_[rhs.images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

Permutation Permutation::extended(int target_degree) const {
  if (target_degree < degree()) throw std::invalid_argument("cannot shrink a permutation");
  auto im = images_;
  for (int i = degree(); i < target_degree; ++i) im.push_back(i);
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    for (size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

StandardTableau::StandardTableau(const YoungDiagram& shape, std::vector<std::vector<int>> rows)
    : shape_(shape), rows_(std::move(rows)) {
  int d = shape_.size();
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("tableau row count differs from shape");
  positions_.assign(d, {-1, -1});
  for (int r = 0; r < shape_.length(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.rows()[r])
      throw std::invalid_argument("tableau row length differs from shape");
    for (int c = 0; c < shape_.rows()[r]; ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > d || positions_[v - 1].first >= 0)
        throw std::invalid_argument("tableau entries must be 1..d once each");
      positions_[v - 1] = {r, c};
      if (c > 0 && rows_[r][c - 1] > v)
        throw std::invalid_argument("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] > v)
        throw std::invalid_argument("tableau columns must increase");
    }
  }
  contents_.resize(d);
  for (int i = 0; i < d; ++i) contents_[i] = positions_[i].second - positions_[i].first;
}

std::pair<int, int> StandardTableau::position_of(int value) const {
  if (value < 1 || value > size()) throw std::invalid_argument("tableau value out of range");
  return positions_[value - 1];
}

int StandardTableau::axial_distance(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("axial distance index out of range");
  return contents_[i] - contents_[i - 1];
}

StandardTableau StandardTableau::restricted() const {
  if (size() == 1) throw std::invalid_argument("cannot restrict a single-box tableau");
  auto [r, c] = positions_[size() - 1];
  auto rows = rows_;
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  return StandardTableau(shape_.with_box_removed(r), std::move(rows));
}

std::vector<YoungDiagram> partitions(int d, int degree_cap) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d > degree_cap)
    throw capacity_error("degree " + std::to_string(d) + " exceeds cap " +
                         std::to_string(degree_cap));
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

namespace {

// Grows fillings box by box; trying addable rows top-down at each step
// yields descending content-vector order since content decreases with row.
void grow(const std::vector<int>& target, std::vector<int>& cur,
          std::vector<std::vector<int>>& rows, int next,
          int d, std::vector<StandardTableau>& out) {
  if (next > d) {
    std::vector<std::vector<int>> filled(cur.size());
    for (size_t r = 0; r < cur.size(); ++r)
      filled[r] = std::vector<int>(rows[r].begin(), rows[r].begin() + cur[r]);
    YoungDiagram shape(cur);
    out.emplace_back(shape, std::move(filled));
    return;
  }
  size_t nrows = cur.size();
  for (size_t r = 0; r <= nrows; ++r) {
    int len = r < nrows ? cur[r] : 0;
    if (r < target.size() && len < target[r] && (r == 0 || cur[r - 1] > len)) {
      if (r == nrows) {
        cur.push_back(0);
        rows.emplace_back();
      }
      rows[r].resize(std::max<size_t>(rows[r].size(), len + 1));
      rows[r][len] = next;
      ++cur[r];
      grow(target, cur, rows, next + 1, d, out);
      --cur[r];
      if (r + 1 == cur.size() && cur[r] == 0) {
        cur.pop_back();
        rows.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const YoungDiagram& shape) {
  std::vector<StandardTableau> out;
  std::vector<int> cur;
  std::vector<std::vector<int>> rows;
  grow(shape.rows(), cur, rows, 1, shape.size(), out);
  return out;
}

Integer standard_tableau_count(const YoungDiagram& shape) {
  const auto& rows = shape.rows();
  std::vector<int> col_heights(rows[0], 0);
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < rows[r]; ++c) ++col_heights[c];
  Integer hooks = 1;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < rows[r]; ++c)
      hooks *= (rows[r] - c) + (col_heights[c] - r) - 1;
  Integer f = factorial(shape.size());
  return f / hooks;
}

CoxeterAction apply_coxeter(const StandardTableau& t, int i) {
  if (i < 1 || i >= t.size()) throw std::invalid_argument("coxeter index out of range");
  auto [r1, c1] = t.position_of(i);
  auto [r2, c2] = t.position_of(i + 1);
  if (r1 == r2) return {CoxeterAction::Kind::kSameRow, std::nullopt};
  if (c1 == c2) return {CoxeterAction::Kind::kSameColumn, std::nullopt};
  auto rows = t.rows();
  std::swap(rows[r1][c1], rows[r2][c2]);
  return {CoxeterAction::Kind::kStandard, StandardTableau(t.shape(), std::move(rows))};
}

std::vector<int> admissible_path(const StandardTableau& from, const StandardTableau& to) {
  if (!(from.shape() == to.shape()))
    throw std::invalid_argument("admissible path needs equal shapes");
  if (from == to) return {};
  int d = from.size();
  std::map<StandardTableau, std::pair<StandardTableau, int>> parent;
  std::deque<StandardTableau> queue{from};
  parent.emplace(from, std::make_pair(from, 0));
  while (!queue.empty()) {
    StandardTableau cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < d; ++i) {
      auto act = apply_coxeter(cur, i);
      if (act.kind != CoxeterAction::Kind::kStandard) continue;
      const StandardTableau& next = *act.result;
      if (parent.contains(next)) continue;
      parent.emplace(next, std::make_pair(cur, i));
      if (next == to) {
        std::vector<int> path;
        StandardTableau walk = next;
        while (!(walk == from)) {
          auto& [prev, gen] = parent.at(walk);
          path.push_back(gen);
          walk = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(next);
    }
  }
  throw std::domain_error("tableaux not connected by coxeter moves");
}

Permutation sigma_permutation(const StandardTableau& s, const StandardTableau& t) {
  if (!(s.shape() == t.shape()))
    throw std::invalid_argument("sigma permutation needs equal shapes");
  int d = s.size();
  std::vector<int> im(d);
  for (int r = 0; r < s.shape().length(); ++r)
    for (int c = 0; c < s.shape().rows()[r]; ++c)
      im[s.rows()[r][c] - 1] = t.rows()[r][c] - 1;
  return Permutation(std::move(im));
}

}  // namespace haarint::tableaux
