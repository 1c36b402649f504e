#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fakedeg {

/// A cell of a Young diagram. Rows and columns are 1-based, row 1 on top.
struct Cell {
  int row = 0;
  int col = 0;

  /// col - row
  int content() const { return col - row; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive parts; the empty partition is ().
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped. Throws std::invalid_argument on negative
  /// or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Length of row `row` (1-based); 0 past the last row.
  int row_length(int row) const;
  bool contains(Cell c) const;
  Partition conjugate() const;
  /// Cells in row-major order.
  std::vector<Cell> cells() const;
  /// Cells whose removal leaves a partition.
  std::vector<Cell> corners() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordered d-tuple of partitions.
class Multipartition {
 public:
  Multipartition() = default;
  /// Throws std::invalid_argument when `components` is empty.
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<Partition> components)
      : Multipartition(std::vector<Partition>(components)) {}

  const std::vector<Partition>& components() const { return components_; }
  const Partition& operator[](std::size_t i) const { return components_[i]; }
  int d() const { return static_cast<int>(components_.size()); }
  int total_size() const { return total_size_; }
  std::vector<int> sizes() const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
  friend bool operator==(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
  int total_size_ = 0;
};

/// Hook lengths (arm + leg + 1), one per cell, row-major order.
std::vector<int> hooks(const Partition& alpha);

/// sum_i (i-1) alpha_i
long b_statistic(const Partition& alpha);
/// sum_i (i-1) |lambda^(i)|
long b_multi(const Multipartition& lambda);

/// Partition of 2n built from a pair by the staircase-pad, double and merge
/// construction (lambda^(1) on the even entries). Requires d() == 2.
Partition lusztig_rho1(const Multipartition& pair);
/// Partition of 2n+1, same construction with lambda^(1) on the odd entries.
Partition lusztig_rho2(const Multipartition& pair);

/// True iff alpha admits a standard domino tableau (with a zero square at
/// (1,1) when |alpha| is odd). Decided by search over rim-domino removals.
bool supports_domino(const Partition& alpha);

/// 2-core of alpha, by repeated rim-domino removal on the beta-number abacus.
Partition two_core(const Partition& alpha);

/// All partitions of n, reverse lexicographic order (n) first.
std::vector<Partition> partitions_of(int n);
/// All d-tuples of total size n. Ordered by the size vector (first component
/// largest first), then componentwise in partitions_of order.
std::vector<Multipartition> multipartitions_of(int n, int d);

/// "2,2,1"; the empty partition is "".
std::string format_partition(const Partition& alpha);
/// "(2,2,1)"; the empty partition is "()".
std::string format_partition_paren(const Partition& alpha);
/// Components joined by "|".
std::string format_multipartition(const Multipartition& lambda);

/// Parses "2,2,1" (surrounding spaces allowed, "" for the empty partition).
/// Throws std::invalid_argument on malformed or non-decreasing input.
Partition parse_partition(std::string_view text);
/// Parses "p1|p2|...|pd".
Multipartition parse_multipartition(std::string_view text);
/// As parse_multipartition but requires exactly two components.
Multipartition parse_pair(std::string_view text);

}  // namespace fakedeg
