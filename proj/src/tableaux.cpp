#include "fakedeg/tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fakedeg {

namespace {

// Label grid for one component; 0 marks an unfilled cell.
using Grid = std::vector<std::vector<int>>;

Grid empty_grid(const Partition& shape) {
  Grid g;
  for (int p : shape.parts()) g.emplace_back(static_cast<std::size_t>(p), 0);
  return g;
}

void check_standard(const Grid& g, const char* what) {
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (g[r][c] == 0) throw std::invalid_argument(std::string(what) + ": cell left unfilled");
      if (c > 0 && g[r][c - 1] >= g[r][c]) throw std::invalid_argument(std::string(what) + ": row not increasing");
      if (r > 0 && g[r - 1][c] >= g[r][c]) throw std::invalid_argument(std::string(what) + ": column not increasing");
    }
}

std::string grid_to_string(const Grid& g) {
  std::string out = "[";
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(g[r][c]);
    }
    out += ']';
  }
  return out + "]";
}

QPolynomial maj_histogram_to_poly(const std::map<int, Integer>& hist) {
  if (hist.empty()) return {};
  std::vector<Integer> coeffs(static_cast<std::size_t>(hist.rbegin()->first + 1));
  for (const auto& [k, c] : hist) coeffs[static_cast<std::size_t>(k)] = c;
  return QPolynomial(std::move(coeffs));
}

}  // namespace

StandardYoungTableau::StandardYoungTableau(Partition shape, std::vector<Cell> positions)
    : shape_(std::move(shape)), positions_(std::move(positions)) {
  if (static_cast<int>(positions_.size()) != shape_.size())
    throw std::invalid_argument("tableau: label count does not match shape size");
  Grid g = empty_grid(shape_);
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const Cell c = positions_[i];
    if (!shape_.contains(c)) throw std::invalid_argument("tableau: cell outside shape");
    int& slot = g[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    if (slot != 0) throw std::invalid_argument("tableau: cell used twice");
    slot = static_cast<int>(i) + 1;
  }
  check_standard(g, "tableau");
}

std::vector<std::vector<int>> StandardYoungTableau::rows() const {
  Grid g = empty_grid(shape_);
  for (std::size_t i = 0; i < positions_.size(); ++i)
    g[static_cast<std::size_t>(positions_[i].row - 1)][static_cast<std::size_t>(positions_[i].col - 1)] =
        static_cast<int>(i) + 1;
  return g;
}

StandardTupleTableau::StandardTupleTableau(Multipartition shape, std::vector<Placement> positions)
    : shape_(std::move(shape)), positions_(std::move(positions)) {
  if (static_cast<int>(positions_.size()) != shape_.total_size())
    throw std::invalid_argument("tuple tableau: label count does not match shape size");
  std::vector<Grid> grids;
  for (const auto& p : shape_.components()) grids.push_back(empty_grid(p));
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const auto& [k, c] = positions_[i];
    if (k < 0 || k >= shape_.d() || !shape_[static_cast<std::size_t>(k)].contains(c))
      throw std::invalid_argument("tuple tableau: cell outside shape");
    int& slot = grids[static_cast<std::size_t>(k)][static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    if (slot != 0) throw std::invalid_argument("tuple tableau: cell used twice");
    slot = static_cast<int>(i) + 1;
  }
  for (const auto& g : grids) check_standard(g, "tuple tableau");
}

StandardTupleTableau StandardTupleTableau::from_fillings(const std::vector<std::vector<std::vector<int>>>& fillings) {
  std::vector<Partition> comps;
  std::map<int, Placement> where;
  for (std::size_t k = 0; k < fillings.size(); ++k) {
    std::vector<int> parts;
    for (std::size_t r = 0; r < fillings[k].size(); ++r) {
      parts.push_back(static_cast<int>(fillings[k][r].size()));
      for (std::size_t c = 0; c < fillings[k][r].size(); ++c) {
        const int label = fillings[k][r][c];
        if (!where.emplace(label, Placement{static_cast<int>(k), {static_cast<int>(r) + 1, static_cast<int>(c) + 1}}).second)
          throw std::invalid_argument("tuple tableau: repeated label");
      }
    }
    comps.emplace_back(std::move(parts));
  }
  std::vector<Placement> positions;
  int expected = 1;
  for (const auto& [label, place] : where) {
    if (label != expected++) throw std::invalid_argument("tuple tableau: labels must be 1..n");
    positions.push_back(place);
  }
  return StandardTupleTableau(Multipartition(std::move(comps)), std::move(positions));
}

std::vector<std::vector<std::vector<int>>> StandardTupleTableau::fillings() const {
  std::vector<Grid> grids;
  for (const auto& p : shape_.components()) grids.push_back(empty_grid(p));
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const auto& [k, c] = positions_[i];
    grids[static_cast<std::size_t>(k)][static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] =
        static_cast<int>(i) + 1;
  }
  return grids;
}

void for_each_tuple_tableau(const Multipartition& lambda,
                            const std::function<void(std::span<const Placement>)>& visit) {
  std::vector<std::vector<int>> rows;
  for (const auto& p : lambda.components()) rows.push_back(p.parts());
  std::vector<Placement> positions(static_cast<std::size_t>(lambda.total_size()));

  std::function<void(int)> rec = [&](int label) {
    if (label == 0) {
      visit(positions);
      return;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      auto& shape = rows[k];
      for (std::size_t r = 0; r < shape.size(); ++r) {
        const int len = shape[r];
        if (len == 0) continue;
        if (r + 1 < shape.size() && shape[r + 1] == len) continue;
        positions[static_cast<std::size_t>(label - 1)] = {static_cast<int>(k), {static_cast<int>(r) + 1, len}};
        --shape[r];
        rec(label - 1);
        ++shape[r];
      }
    }
  };
  rec(lambda.total_size());
}

std::vector<StandardTupleTableau> enumerate_tuple_tableaux(const Multipartition& lambda) {
  std::vector<std::vector<Placement>> all;
  for_each_tuple_tableau(lambda, [&](std::span<const Placement> p) { all.emplace_back(p.begin(), p.end()); });
  std::sort(all.begin(), all.end());
  std::vector<StandardTupleTableau> out;
  out.reserve(all.size());
  for (auto& p : all) out.emplace_back(lambda, std::move(p));
  return out;
}

std::vector<StandardYoungTableau> enumerate_syt(const Partition& alpha) {
  std::vector<StandardYoungTableau> out;
  for (const auto& t : enumerate_tuple_tableaux(Multipartition{alpha})) {
    std::vector<Cell> cells;
    for (const auto& p : t.positions()) cells.push_back(p.cell);
    out.emplace_back(alpha, std::move(cells));
  }
  return out;
}

int maj_syt(const StandardYoungTableau& t) {
  int maj = 0;
  for (int i = 1; i < t.size(); ++i)
    if (t.position(i + 1).row > t.position(i).row) maj += i;
  return maj;
}

QPolynomial syt_maj_gf(const Partition& alpha) { return tuple_maj_gf(Multipartition{alpha}); }

int maj_tuple(std::span<const Placement> positions) {
  int maj = 0;
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    const Placement& a = positions[i];
    const Placement& b = positions[i + 1];
    if ((a.component == b.component && a.cell.row < b.cell.row) || a.component < b.component)
      maj += static_cast<int>(i) + 1;
  }
  return maj;
}

int maj_tuple(const StandardTupleTableau& t) { return maj_tuple(t.positions()); }

QPolynomial tuple_maj_gf(const Multipartition& lambda) {
  std::map<int, Integer> hist;
  for_each_tuple_tableau(lambda, [&](std::span<const Placement> p) { ++hist[maj_tuple(p)]; });
  return maj_histogram_to_poly(hist);
}

QPolynomial tuple_maj_gf_restricted(const Multipartition& lambda) {
  if (lambda.d() != 2) throw std::invalid_argument("restricted generating function needs a partition pair");
  std::map<int, Integer> hist;
  for_each_tuple_tableau(lambda, [&](std::span<const Placement> p) {
    if (!p.empty() && p.back().component == 0) ++hist[maj_tuple(p)];
  });
  return maj_histogram_to_poly(hist);
}

std::string to_string(const StandardYoungTableau& t) { return grid_to_string(t.rows()); }

std::string to_string(const StandardTupleTableau& t) {
  std::string out;
  const auto grids = t.fillings();
  for (std::size_t k = 0; k < grids.size(); ++k) {
    if (k) out += " ; ";
    out += grid_to_string(grids[k]);
  }
  return out;
}

}  // namespace fakedeg
