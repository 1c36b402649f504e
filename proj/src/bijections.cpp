#include "fakedeg/bijections.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>

namespace fakedeg {

namespace {

struct LiteralCase {
  std::string rule;
  int component;
  int index;
};

// The eight-case table per type, read literally.
LiteralCase literal_case(const Domino& d, DominoType type) {
  const bool c_type = type == DominoType::C;
  const std::string prefix = c_type ? "piC-" : "piB-";
  if (d.horizontal()) {
    const int r = d.top_row();
    const bool even_col = d.right_col() % 2 == 0;
    if (r % 2 == 0) {
      const int m = r / 2;
      if (c_type) return even_col ? LiteralCase{prefix + "H1", 1, m} : LiteralCase{prefix + "H2", 0, m};
      return even_col ? LiteralCase{prefix + "H1", 0, m + 1} : LiteralCase{prefix + "H2", 1, m};
    }
    const int m = (r - 1) / 2;
    if (c_type) return even_col ? LiteralCase{prefix + "H3", 0, m + 1} : LiteralCase{prefix + "H4", 1, m > 0 ? m : 1};
    return even_col ? LiteralCase{prefix + "H3", 1, m > 0 ? m : 1} : LiteralCase{prefix + "H4", 0, m + 1};
  }
  const int col = d.first.col;
  const bool even_row = d.bottom_row() % 2 == 0;
  if (col % 2 == 0) {
    const int m = col / 2;
    if (c_type) return even_row ? LiteralCase{prefix + "V1", 0, m} : LiteralCase{prefix + "V2", 1, m};
    return even_row ? LiteralCase{prefix + "V1", 0, m} : LiteralCase{prefix + "V2", 1, m + 1};
  }
  const int m = (col - 1) / 2;
  if (c_type) return even_row ? LiteralCase{prefix + "V3", 1, m + 1} : LiteralCase{prefix + "V4", 0, m + 1};
  return even_row ? LiteralCase{prefix + "V3", 0, m > 0 ? m : 1} : LiteralCase{prefix + "V4", 1, m + 1};
}

// 2-quotient of a shape given by row lengths. Beta numbers use an odd number
// of beads, so runner parity is stable as rows are added. Type C reads Y1
// off the even runner, type B off the odd one.
std::array<std::vector<int>, 2> two_quotient(const std::vector<int>& rows, DominoType type) {
  int len = static_cast<int>(rows.size());
  while (len > 0 && rows[static_cast<std::size_t>(len - 1)] == 0) --len;
  const int r = len + (len % 2 == 0 ? 1 : 0) + 2;
  const int first_runner = type == DominoType::C ? 0 : 1;
  std::array<std::vector<int>, 2> out;
  for (int t = 0; t < 2; ++t) {
    const int parity = t == 0 ? first_runner : 1 - first_runner;
    std::vector<int> pos;
    for (int i = 0; i < r; ++i) {
      const int part = i < len ? rows[static_cast<std::size_t>(i)] : 0;
      const int beta = part + r - 1 - i;
      if (beta % 2 == parity) pos.push_back((beta - parity) / 2);
    }
    const int k = static_cast<int>(pos.size());
    for (int i = 0; i < k; ++i) {
      const int part = pos[static_cast<std::size_t>(i)] - (k - 1 - i);
      if (part > 0) out[static_cast<std::size_t>(t)].push_back(part);
    }
  }
  return out;
}

}  // namespace

InsertionResult insert_dominoes(const DominoTableau& t, DominoType type) {
  const bool odd = t.shape().size() % 2 == 1;
  if (odd != (type == DominoType::B))
    throw std::invalid_argument(type == DominoType::C ? "pi_C needs a domino tableau of even size"
                                                      : "pi_B needs a domino tableau of odd size");
  std::vector<int> rows(static_cast<std::size_t>(t.shape().length()), 0);
  if (odd) rows[0] = 1;
  auto quotient = two_quotient(rows, type);
  if (!quotient[0].empty() || !quotient[1].empty()) throw InternalError("starting shape has a nonempty 2-quotient");

  InsertionResult result{TableauPair(Multipartition{Partition(), Partition()}, {}), {}};
  std::vector<Placement> positions;
  for (int i = 1; i <= t.n(); ++i) {
    const Domino& d = t.domino(i);
    ++rows[static_cast<std::size_t>(d.first.row - 1)];
    ++rows[static_cast<std::size_t>(d.second.row - 1)];
    auto next = two_quotient(rows, type);

    std::optional<Placement> placed;
    for (int k = 0; k < 2; ++k) {
      const auto& before = quotient[static_cast<std::size_t>(k)];
      const auto& after = next[static_cast<std::size_t>(k)];
      if (before == after) continue;
      if (placed) throw InternalError("domino " + std::to_string(i) + " changed both quotient components");
      int grown = -1;
      for (std::size_t r = 0; r < after.size(); ++r) {
        const int old_len = r < before.size() ? before[r] : 0;
        if (after[r] == old_len) continue;
        if (after[r] != old_len + 1 || grown != -1)
          throw InternalError("domino " + std::to_string(i) + " did not add a single cell");
        grown = static_cast<int>(r);
      }
      if (grown == -1 || after.size() < before.size())
        throw InternalError("domino " + std::to_string(i) + " removed a cell");
      placed = Placement{k, {grown + 1, after[static_cast<std::size_t>(grown)]}};
    }
    if (!placed) throw InternalError("domino " + std::to_string(i) + " left the quotient unchanged");

    const LiteralCase lit = literal_case(d, type);
    const int actual_index = d.horizontal() ? placed->cell.row : placed->cell.col;
    result.steps.push_back({i, d, lit.rule, *placed, lit.component, lit.index,
                            lit.component == placed->component && lit.index == actual_index});
    positions.push_back(*placed);
    quotient = std::move(next);
  }

  Multipartition shape{Partition(quotient[0]), Partition(quotient[1])};
  try {
    result.pair = TableauPair(std::move(shape), std::move(positions));
  } catch (const std::invalid_argument& e) {
    throw InternalError(std::string("insertion produced a non-standard pair: ") + e.what());
  }
  return result;
}

TableauPair pi_C(const DominoTableau& t) { return insert_dominoes(t, DominoType::C).pair; }
TableauPair pi_B(const DominoTableau& t) { return insert_dominoes(t, DominoType::B).pair; }

int content_key(const Placement& p, DominoType type) {
  const int x = p.cell.content();
  if (type == DominoType::C) return p.component == 0 ? 2 * x + 1 : 2 * x;
  return p.component == 0 ? 2 * x + 2 : 2 * x - 1;
}

int pair_maj(const TableauPair& p, DominoType type) {
  if (p.d() != 2) throw std::invalid_argument("pair_maj needs a tableau pair");
  int maj = 0;
  for (int i = 1; i < p.size(); ++i)
    if (content_key(p.position(i + 1), type) < content_key(p.position(i), type)) maj += i;
  return maj;
}

int pair_maj_C(const TableauPair& p) { return pair_maj(p, DominoType::C); }
int pair_maj_B(const TableauPair& p) { return pair_maj(p, DominoType::B); }

namespace {

TableauPair rebuild(const TableauPair& p, std::vector<Placement> positions) {
  try {
    return TableauPair(p.shape(), std::move(positions));
  } catch (const std::invalid_argument& e) {
    throw InternalError(std::string("flip broke tableau validity: ") + e.what());
  }
}

}  // namespace

FlipResult flip(const TableauPair& p, DominoType type) {
  if (p.d() != 2) throw std::invalid_argument("flip needs a tableau pair");
  const int n = p.size();

  // Letter = (component, rank among that component's labels). Letters are
  // ordered by (key, rank).
  struct Letter {
    int component;
    int rank;
    std::pair<int, int> value;
    Placement cell;
  };
  std::vector<Letter> letters;
  std::vector<int> label_of;
  int ranks[2] = {0, 0};
  for (int i = 1; i <= n; ++i) {
    const Placement& pl = p.position(i);
    const int rank = ranks[pl.component]++;
    letters.push_back({pl.component, rank, {content_key(pl, type), rank}, pl});
    label_of.push_back(i);
  }

  std::vector<int> order(letters.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return letters[static_cast<std::size_t>(a)].value < letters[static_cast<std::size_t>(b)].value;
  });

  std::vector<int> firsts;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (letters[static_cast<std::size_t>(*it)].component == 0) firsts.push_back(*it);

  FlipResult result{p, {}};
  for (int a : firsts) {
    auto j = static_cast<std::size_t>(std::find(order.begin(), order.end(), a) - order.begin());
    while (j + 1 < order.size() && letters[static_cast<std::size_t>(order[j + 1])].component == 1) {
      const int b = order[j + 1];
      int& la = label_of[static_cast<std::size_t>(a)];
      int& lb = label_of[static_cast<std::size_t>(b)];
      if (std::abs(la - lb) == 1) {
        result.swaps.push_back(std::min(la, lb));
        std::swap(la, lb);
      }
      std::swap(order[j], order[j + 1]);
      ++j;
    }
  }

  std::vector<Placement> positions(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < letters.size(); ++k)
    positions[static_cast<std::size_t>(label_of[k] - 1)] = letters[k].cell;
  result.pair = rebuild(p, std::move(positions));
  return result;
}

TableauPair flip_C(const TableauPair& p) { return flip(p, DominoType::C).pair; }
TableauPair flip_B(const TableauPair& p) { return flip(p, DominoType::B).pair; }

FlipResult flip_sweeps_literal(const TableauPair& p, DominoType type) {
  if (p.d() != 2) throw std::invalid_argument("flip needs a tableau pair");
  const int n = p.size();
  std::vector<Placement> pos = p.positions();
  FlipResult result{p, {}};
  std::set<int> journal;
  const int max_sweeps = type == DominoType::C ? n + 1 : 1;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    for (int i = 1; i < n; ++i) {
      if (journal.contains(i)) continue;
      Placement& a = pos[static_cast<std::size_t>(i - 1)];
      Placement& b = pos[static_cast<std::size_t>(i)];
      if (a.component == b.component) continue;
      const bool contributes = content_key(b, type) < content_key(a, type);
      if ((contributes && a.component == 1) || (!contributes && a.component == 0)) {
        std::swap(a, b);
        journal.insert(i);
        result.swaps.push_back(i);
        changed = true;
      }
    }
    if (!changed) break;
  }
  result.pair = rebuild(p, std::move(pos));
  return result;
}

TableauPair pi_C_prime(const DominoTableau& t) { return flip_C(pi_C(t)); }
TableauPair pi_B_prime(const DominoTableau& t) { return flip_B(pi_B(t)); }

}  // namespace fakedeg
