#pragma once

#include <string>
#include <vector>

#include "fakedeg/qpoly.hpp"
#include "fakedeg/shapes.hpp"

namespace fakedeg {

/// Two edge-adjacent cells; `first` is the top (vertical) or left (horizontal) one.
struct Domino {
  Cell first;
  Cell second;

  bool horizontal() const { return first.row == second.row; }
  int top_row() const { return first.row; }
  int bottom_row() const { return second.row; }
  int right_col() const { return second.col; }

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// Standard domino tableau. Odd-size shapes carry a zero square at (1,1).
/// Domino i (1-based) is dominoes()[i-1]; covering the zero square and
/// dominoes 1..k gives a Young diagram for every k.
class DominoTableau {
 public:
  /// Throws std::invalid_argument unless the dominoes tile the shape (minus
  /// (1,1) for odd size) and every prefix is a Young diagram.
  DominoTableau(Partition shape, std::vector<Domino> dominoes);

  const Partition& shape() const { return shape_; }
  int n() const { return static_cast<int>(dominoes_.size()); }
  bool has_zero_square() const { return shape_.size() % 2 == 1; }
  const Domino& domino(int label) const { return dominoes_[static_cast<std::size_t>(label - 1)]; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }
  /// Label grid, row by row; the zero square reads 0.
  std::vector<std::vector<int>> grid() const;
  /// Shape covered by the zero square and dominoes 1..k.
  Partition prefix_shape(int k) const;

  friend auto operator<=>(const DominoTableau&, const DominoTableau&) = default;
  friend bool operator==(const DominoTableau&, const DominoTableau&) = default;

 private:
  Partition shape_;
  std::vector<Domino> dominoes_;
};

/// Every standard domino tableau of shape alpha, grown one domino at a time
/// from the empty shape (or the zero square). Empty when alpha has no SDT.
std::vector<DominoTableau> enumerate_sdt(const Partition& alpha);

/// Sum of labels i whose domino lies in rows strictly above both rows of domino i+1.
int maj_domino(const DominoTableau& t);

QPolynomial sdt_maj_gf(const Partition& alpha);

/// Grid rendering, one line per row, labels separated by spaces.
std::string to_string(const DominoTableau& t);

}  // namespace fakedeg
