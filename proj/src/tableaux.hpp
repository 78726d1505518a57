#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace haarint::tableaux {

inline constexpr int kDefaultDegreeCap = 6;

// Partition of d with weakly decreasing positive rows.
class YoungDiagram {
 public:
  explicit YoungDiagram(std::vector<int> rows);

  int size() const { return size_; }
  int length() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& rows() const { return rows_; }

  // Row indices (0-based) where a box can be added keeping the diagram a
  // partition; includes length() for a new bottom row.
  std::vector<int> addable_rows() const;
  // Row indices whose last box can be removed keeping a partition.
  std::vector<int> removable_rows() const;

  YoungDiagram with_box_added(int row) const;
  YoungDiagram with_box_removed(int row) const;

  bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
  auto operator<=>(const YoungDiagram& o) const { return rows_ <=> o.rows_; }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

// Permutation of {1..d}, stored as 0-based images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  // Transposition (a b) with 1-based a != b.
  static Permutation transposition(int degree, int a, int b);
  // Adjacent transposition s_i = (i, i+1), 1 <= i < degree.
  static Permutation adjacent(int degree, int i);

  int degree() const { return static_cast<int>(images_.size()); }
  // Image of 0-based point.
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  // (this o rhs): rhs acts first.
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  // Number of cycles including fixed points.
  int cycle_count() const;
  // Same mapping inside S_target, new points fixed.
  Permutation extended(int target_degree) const;
  // Cycles as 1-based point lists, each starting at its minimum,
  // sorted by minimum; fixed points omitted.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  auto operator<=>(const Permutation& o) const { return images_ <=> o.images_; }

 private:
  std::vector<int> images_;
};

class StandardTableau {
 public:
  StandardTableau(const YoungDiagram& shape, std::vector<std::vector<int>> rows);

  const YoungDiagram& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // (row, col), 0-based, of the box holding value (1-based).
  std::pair<int, int> position_of(int value) const;
  // Content a_i = col - row of the box holding i; a_1 = 0 always.
  int content(int i) const { return contents_[i - 1]; }
  const std::vector<int>& content_vector() const { return contents_; }
  // Axial distance r = a_{i+1} - a_i for 1 <= i < d.
  int axial_distance(int i) const;
  // Tableau with the box holding d removed.
  StandardTableau restricted() const;

  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
  auto operator<=>(const StandardTableau& o) const { return rows_ <=> o.rows_; }

 private:
  YoungDiagram shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> contents_;
  std::vector<std::pair<int, int>> positions_;
};

struct CoxeterAction {
  enum class Kind { kSameRow, kSameColumn, kStandard };
  Kind kind;
  // Set only for kStandard: the tableau with i and i+1 swapped.
  std::optional<StandardTableau> result;
};

// Partitions of d in decreasing lexicographic order.  Throws capacity_error
// when d exceeds the cap, std::invalid_argument when d < 1.
std::vector<YoungDiagram> partitions(int d, int degree_cap = kDefaultDegreeCap);

// Standard fillings ordered by descending content vector (lexicographic).
std::vector<StandardTableau> standard_tableaux(const YoungDiagram& shape);

// Hook length formula; counts standard fillings without enumeration.
Integer standard_tableau_count(const YoungDiagram& shape);

// Action of s_i = (i, i+1) on the filling of t, classified.
CoxeterAction apply_coxeter(const StandardTableau& t, int i);

// Indices i_1,...,i_k with s_{i_k} ... s_{i_1} applied to `from` (in that
// order) giving `to`; shortest such word, ties broken by smallest index
// first.  Both tableaux must share a shape.
std::vector<int> admissible_path(const StandardTableau& from, const StandardTableau& to);

// The permutation pi with pi s = t, i.e. pi maps the value s places in a box
// to the value t places there.
Permutation sigma_permutation(const StandardTableau& s, const StandardTableau& t);

}  // namespace haarint::tableaux
