#include "fakedeg/dominoes.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace fakedeg {

namespace {

bool adjacent(const Domino& d) {
  return (d.first.row == d.second.row && d.second.col == d.first.col + 1) ||
         (d.first.col == d.second.col && d.second.row == d.first.row + 1);
}

// Dominoes that can be added to `rows` (row lengths, may contain trailing
// zeros) without leaving `target`, keeping the result a Young diagram.
std::vector<Domino> addable_dominoes(const std::vector<int>& rows, const Partition& target) {
  auto len = [&](int r) { return r >= 1 && r <= static_cast<int>(rows.size()) ? rows[static_cast<std::size_t>(r - 1)] : 0; };
  std::vector<Domino> out;
  for (int r = 1; r <= target.length(); ++r) {
    const int c = len(r) + 1;
    const int above = r == 1 ? target.row_length(1) : len(r - 1);
    if (c + 1 <= target.row_length(r) && (r == 1 || above >= c + 1)) out.push_back({{r, c}, {r, c + 1}});
    if (len(r + 1) == c - 1 && c <= target.row_length(r + 1) && (r == 1 || above >= c))
      out.push_back({{r, c}, {r + 1, c}});
  }
  return out;
}

}  // namespace

DominoTableau::DominoTableau(Partition shape, std::vector<Domino> dominoes)
    : shape_(std::move(shape)), dominoes_(std::move(dominoes)) {
  const int zero = has_zero_square() ? 1 : 0;
  if (2 * n() + zero != shape_.size()) throw std::invalid_argument("domino tableau: domino count does not match shape");
  std::vector<int> rows(static_cast<std::size_t>(shape_.length()), 0);
  if (zero) rows[0] = 1;
  for (const Domino& d : dominoes_) {
    if (!adjacent(d)) throw std::invalid_argument("domino tableau: cells of a domino are not adjacent");
    bool found = false;
    for (const Domino& cand : addable_dominoes(rows, shape_))
      if (cand == d) found = true;
    if (!found) throw std::invalid_argument("domino tableau: labels do not grow a Young diagram inside the shape");
    ++rows[static_cast<std::size_t>(d.first.row - 1)];
    ++rows[static_cast<std::size_t>(d.second.row - 1)];
  }
}

std::vector<std::vector<int>> DominoTableau::grid() const {
  std::vector<std::vector<int>> g;
  for (int p : shape_.parts()) g.emplace_back(static_cast<std::size_t>(p), 0);
  for (int i = 1; i <= n(); ++i)
    for (Cell c : {domino(i).first, domino(i).second})
      g[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = i;
  return g;
}

Partition DominoTableau::prefix_shape(int k) const {
  std::vector<int> rows(static_cast<std::size_t>(shape_.length()), 0);
  if (has_zero_square()) rows[0] = 1;
  for (int i = 1; i <= k; ++i) {
    ++rows[static_cast<std::size_t>(domino(i).first.row - 1)];
    ++rows[static_cast<std::size_t>(domino(i).second.row - 1)];
  }
  return Partition(std::move(rows));
}

std::vector<DominoTableau> enumerate_sdt(const Partition& alpha) {
  std::vector<DominoTableau> out;
  if (alpha.empty()) {
    out.emplace_back(alpha, std::vector<Domino>{});
    return out;
  }
  if (!supports_domino(alpha)) return out;

  std::vector<int> rows(static_cast<std::size_t>(alpha.length()), 0);
  const bool odd = alpha.size() % 2 == 1;
  if (odd) rows[0] = 1;
  const int n = alpha.size() / 2;
  std::vector<Domino> placed;
  // Shapes from which the target cannot be completed are pruned.
  std::map<std::vector<int>, bool> dead;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(placed.size()) == n) {
      out.emplace_back(alpha, placed);
      return true;
    }
    if (dead.contains(rows)) return false;
    bool any = false;
    for (const Domino& d : addable_dominoes(rows, alpha)) {
      placed.push_back(d);
      ++rows[static_cast<std::size_t>(d.first.row - 1)];
      ++rows[static_cast<std::size_t>(d.second.row - 1)];
      any = rec() || any;
      --rows[static_cast<std::size_t>(d.first.row - 1)];
      --rows[static_cast<std::size_t>(d.second.row - 1)];
      placed.pop_back();
    }
    if (!any) dead.emplace(rows, true);
    return any;
  };
  rec();
  return out;
}

int maj_domino(const DominoTableau& t) {
  int maj = 0;
  for (int i = 1; i < t.n(); ++i)
    if (t.domino(i).bottom_row() < t.domino(i + 1).top_row()) maj += i;
  return maj;
}

QPolynomial sdt_maj_gf(const Partition& alpha) {
  std::map<int, Integer> hist;
  for (const auto& t : enumerate_sdt(alpha)) ++hist[maj_domino(t)];
  if (hist.empty()) return {};
  std::vector<Integer> coeffs(static_cast<std::size_t>(hist.rbegin()->first + 1));
  for (const auto& [k, c] : hist) coeffs[static_cast<std::size_t>(k)] = c;
  return QPolynomial(std::move(coeffs));
}

std::string to_string(const DominoTableau& t) {
  std::string out;
  for (const auto& row : t.grid()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace fakedeg
