#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fakedeg/qpoly.hpp"
#include "fakedeg/shapes.hpp"

namespace fakedeg {

/// Standard Young tableau stored as label -> cell.
class StandardYoungTableau {
 public:
  /// positions[i] is the cell of label i+1. Throws std::invalid_argument
  /// unless the cells are exactly those of `shape` and labels increase along
  /// rows and down columns.
  StandardYoungTableau(Partition shape, std::vector<Cell> positions);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  Cell position(int label) const { return positions_[static_cast<std::size_t>(label - 1)]; }
  const std::vector<Cell>& positions() const { return positions_; }
  std::vector<std::vector<int>> rows() const;

  friend auto operator<=>(const StandardYoungTableau&, const StandardYoungTableau&) = default;
  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;

 private:
  Partition shape_;
  std::vector<Cell> positions_;
};

/// Where a label sits in a tuple tableau; component is 0-based.
struct Placement {
  int component = 0;
  Cell cell;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

/// d-tuple of fillings using the labels 1..n once overall, each filling
/// increasing along rows and down columns.
class StandardTupleTableau {
 public:
  StandardTupleTableau(Multipartition shape, std::vector<Placement> positions);

  /// Builds from explicit fillings, e.g. {{{4},{6}}, {{1,3},{2,5}}}.
  static StandardTupleTableau from_fillings(const std::vector<std::vector<std::vector<int>>>& fillings);

  const Multipartition& shape() const { return shape_; }
  int size() const { return shape_.total_size(); }
  int d() const { return shape_.d(); }
  const Placement& position(int label) const { return positions_[static_cast<std::size_t>(label - 1)]; }
  const std::vector<Placement>& positions() const { return positions_; }
  /// fillings()[k][r] is row r+1 of component k.
  std::vector<std::vector<std::vector<int>>> fillings() const;

  friend auto operator<=>(const StandardTupleTableau&, const StandardTupleTableau&) = default;
  friend bool operator==(const StandardTupleTableau&, const StandardTupleTableau&) = default;

 private:
  Multipartition shape_;
  std::vector<Placement> positions_;
};

/// Every SYT of shape alpha, lexicographic in the label positions.
std::vector<StandardYoungTableau> enumerate_syt(const Partition& alpha);
/// Sum of labels i with i+1 in a strictly lower row.
int maj_syt(const StandardYoungTableau& t);
QPolynomial syt_maj_gf(const Partition& alpha);

/// Calls visit(positions) once per standard tuple tableau of shape lambda,
/// without materialising them. Built by removing the largest label from a
/// corner of some component.
void for_each_tuple_tableau(const Multipartition& lambda,
                            const std::function<void(std::span<const Placement>)>& visit);

/// Every standard tuple tableau of shape lambda, lexicographic in the label positions.
std::vector<StandardTupleTableau> enumerate_tuple_tableaux(const Multipartition& lambda);

/// Sum of labels i such that i+1 lies in a strictly lower row of the same
/// filling, or i lies in an earlier filling than i+1.
int maj_tuple(std::span<const Placement> positions);
int maj_tuple(const StandardTupleTableau& t);

QPolynomial tuple_maj_gf(const Multipartition& lambda);
/// Same sum restricted to tableaux whose largest label lies in the first
/// filling. Requires d() == 2.
QPolynomial tuple_maj_gf_restricted(const Multipartition& lambda);

/// "[[1,3],[2]]"
std::string to_string(const StandardYoungTableau& t);
/// "[[1,3],[2]] ; [[4]]"; an empty filling prints as "[]".
std::string to_string(const StandardTupleTableau& t);

}  // namespace fakedeg
