#include "fakedeg/fakedeg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "fakedeg/bijections.hpp"
#include "fakedeg/dominoes.hpp"
#include "fakedeg/tableaux.hpp"

namespace fakedeg {

QPolynomial fake_degree_wreath(const Multipartition& lambda, int d, WreathRoute route) {
  if (d < 1 || lambda.d() != d)
    throw std::invalid_argument("expected " + std::to_string(d) + " components, got " + std::to_string(lambda.d()));
  QPolynomial g;
  if (route == WreathRoute::enumeration) {
    g = tuple_maj_gf(lambda);
  } else {
    const auto sizes = lambda.sizes();
    g = q_multinomial(lambda.total_size(), sizes);
    for (const auto& p : lambda.components()) g *= syt_maj_gf(p);
  }
  return shift_by_power(substitute_power(g, d), b_multi(lambda));
}

QPolynomial fake_degree_BC(const Multipartition& pair, BCRoute route) {
  if (pair.d() != 2) throw std::invalid_argument("type B/C labels are partition pairs");
  switch (route) {
    case BCRoute::tuple:
      return fake_degree_wreath(pair, 2, WreathRoute::enumeration);
    case BCRoute::domino_even:
      return shift_by_power(substitute_power(sdt_maj_gf(lusztig_rho1(pair)), 2), b_multi(pair));
    case BCRoute::domino_odd:
      return shift_by_power(substitute_power(sdt_maj_gf(lusztig_rho2(pair)), 2), b_multi(pair));
  }
  throw std::invalid_argument("unknown route");
}

TypeDRep::TypeDRep(Partition a, Partition b, int c) : c_(c) {
  if (a < b) std::swap(a, b);
  pair_ = Multipartition{std::move(a), std::move(b)};
  if (c != 1 && c != 2) throw std::invalid_argument("type D marker must be 1 or 2");
  if (c == 2 && !degenerate()) throw std::invalid_argument("marker c=2 only applies to equal partitions");
}

namespace {

const Partition& pair_component(const Multipartition& pair, std::size_t k) {
  if (pair.d() != 2) throw std::invalid_argument("type D labels are partition pairs");
  return pair[k];
}

}  // namespace

TypeDRep::TypeDRep(const Multipartition& pair, int c)
    : TypeDRep(pair_component(pair, 0), pair_component(pair, 1), c) {}

std::string TypeDRep::label() const {
  std::string out = format_multipartition(pair_);
  if (degenerate()) out += " c=" + std::to_string(c_);
  return out;
}

std::vector<TypeDRep> typeD_representations(int n) {
  std::vector<TypeDRep> out;
  for (const auto& m : multipartitions_of(n, 2)) {
    if (m[0] < m[1]) continue;
    out.emplace_back(m, 1);
    if (m[0] == m[1]) out.emplace_back(m, 2);
  }
  return out;
}

namespace {

QPolynomial restricted_tuple_term(const Multipartition& ordered) {
  return shift_by_power(substitute_power(tuple_maj_gf_restricted(ordered), 2), b_multi(ordered));
}

QPolynomial restricted_domino_term(const Multipartition& ordered) {
  const int n = ordered.total_size();
  std::map<long, Integer> hist;
  for (const auto& t : enumerate_sdt(lusztig_rho1(ordered)))
    if (pi_C_prime(t).position(n).component == 0) ++hist[b_multi(ordered) + 2L * maj_domino(t)];
  QPolynomial out;
  for (const auto& [e, c] : hist) out += QPolynomial::monomial(static_cast<std::size_t>(e), c);
  return out;
}

QPolynomial shifted_term(const Multipartition& ordered) {
  const long n = ordered.total_size();
  const long b = b_multi(ordered);
  std::map<long, Integer> hist;
  for_each_tuple_tableau(ordered, [&](std::span<const Placement> p) {
    const long e = b + 2L * maj_tuple(p);
    ++hist[p.back().component == 0 ? e : e - n];
  });
  QPolynomial out;
  for (const auto& [e, c] : hist) {
    if (e < 0) throw InternalError("shifted formula produced a negative exponent");
    out += QPolynomial::monomial(static_cast<std::size_t>(e), c);
  }
  return out;
}

}  // namespace

QPolynomial fake_degree_D(const TypeDRep& rep, DRoute route) {
  if (rep.n() < 2) throw std::invalid_argument("type D needs rank n >= 2");
  const Multipartition& first = rep.pair();
  const Multipartition swapped{first[1], first[0]};
  switch (route) {
    case DRoute::tuple:
      return rep.degenerate() ? restricted_tuple_term(first) : restricted_tuple_term(first) + restricted_tuple_term(swapped);
    case DRoute::domino:
      return rep.degenerate() ? restricted_domino_term(first)
                              : restricted_domino_term(first) + restricted_domino_term(swapped);
    case DRoute::shifted: {
      QPolynomial f = shifted_term(first);
      if (!rep.degenerate()) return f;
      std::vector<Integer> half;
      for (const auto& c : f.coeffs()) {
        if (c % 2 != 0) throw InternalError("shifted formula gave an odd coefficient for an equal pair");
        half.push_back(c / 2);
      }
      return QPolynomial(std::move(half));
    }
  }
  throw std::invalid_argument("unknown route");
}

std::string to_string(const Group& g) {
  switch (g.kind) {
    case Group::Kind::wreath:
      return "wreath(" + std::to_string(g.d) + "," + std::to_string(g.n) + ")";
    case Group::Kind::typeBC:
      return "typeBC(" + std::to_string(g.n) + ")";
    case Group::Kind::typeD:
      return "typeD(" + std::to_string(g.n) + ")";
  }
  return "?";
}

QPolynomial poincare_polynomial(const Group& g) {
  if (g.n < 0 || g.d < 1) throw std::invalid_argument("group needs n >= 0 and d >= 1");
  QPolynomial p = QPolynomial::one();
  if (g.kind == Group::Kind::typeD) {
    if (g.n < 2) throw std::invalid_argument("type D needs rank n >= 2");
    p = q_int(g.n);
    for (int i = 1; i < g.n; ++i) p *= q_int(2 * i);
    return p;
  }
  for (int i = 1; i <= g.n; ++i) p *= q_int(g.d * i);
  return p;
}

QPolynomial regular_representation_sum(const Group& g) {
  QPolynomial sum;
  auto accumulate = [&sum](const QPolynomial& f) {
    sum += f * QPolynomial::monomial(0, evaluate_at_one(f));
  };
  if (g.kind == Group::Kind::typeD) {
    for (const auto& rep : typeD_representations(g.n)) accumulate(fake_degree_D(rep, DRoute::tuple));
  } else {
    for (const auto& m : multipartitions_of(g.n, g.d)) accumulate(fake_degree_wreath(m, g.d, WreathRoute::formula));
  }
  return sum;
}

namespace {

void check_row(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] < 0 || (i > 0 && row[i] <= row[i - 1]))
      throw std::invalid_argument("symbol rows must be strictly increasing and nonnegative");
}

// Ascending entries part_i + len - 1 - i over the padded partition.
std::vector<int> staircase_row(const Partition& p, int len) {
  std::vector<int> row;
  for (int i = 1; i <= len; ++i) row.push_back(p.row_length(i) + len - i);
  std::reverse(row.begin(), row.end());
  return row;
}

Partition partition_from_row(const std::vector<int>& row) {
  check_row(row);
  const int len = static_cast<int>(row.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) parts.push_back(row[static_cast<std::size_t>(len - 1 - i)] - (len - 1 - i));
  return Partition(std::move(parts));
}

Symbol deal_sorted(const Symbol& s) {
  std::vector<int> all = s.top;
  all.insert(all.end(), s.bottom.begin(), s.bottom.end());
  std::sort(all.begin(), all.end());
  Symbol out;
  for (std::size_t i = 0; i < all.size(); ++i) (i % 2 == 0 ? out.top : out.bottom).push_back(all[i]);
  return out;
}

}  // namespace

Symbol symbol_BC(const Multipartition& pair) {
  if (pair.d() != 2) throw std::invalid_argument("symbols are built from partition pairs");
  const int m = std::max(pair[0].length() - 1, pair[1].length());
  return {staircase_row(pair[0], m + 1), staircase_row(pair[1], m)};
}

Multipartition pair_from_symbol_BC(const Symbol& s) {
  if (s.top.size() != s.bottom.size() + 1) throw std::invalid_argument("defect-1 symbol needs one more top entry");
  return Multipartition{partition_from_row(s.top), partition_from_row(s.bottom)};
}

Symbol symbol_D(const Multipartition& pair) {
  if (pair.d() != 2) throw std::invalid_argument("symbols are built from partition pairs");
  const int m = std::max(pair[0].length(), pair[1].length());
  return {staircase_row(pair[0], m), staircase_row(pair[1], m)};
}

Multipartition pair_from_symbol_D(const Symbol& s) {
  if (s.top.size() != s.bottom.size()) throw std::invalid_argument("defect-0 symbol needs rows of equal length");
  return Multipartition{partition_from_row(s.top), partition_from_row(s.bottom)};
}

Multipartition special_partner_BC(const Multipartition& pair) {
  return pair_from_symbol_BC(deal_sorted(symbol_BC(pair)));
}

Multipartition special_partner_D(const Multipartition& pair) {
  return TypeDRep(pair_from_symbol_D(deal_sorted(symbol_D(pair)))).pair();
}

namespace {

std::map<long, long> counts(const std::vector<long>& xs) {
  std::map<long, long> c;
  for (long x : xs) ++c[x];
  return c;
}

long count_at(const std::map<long, long>& c, long k) {
  const auto it = c.find(k);
  return it == c.end() ? 0 : it->second;
}

}  // namespace

std::optional<long> shifted_submultiset_shift(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.empty()) return 0;
  if (b.empty()) return std::nullopt;
  const auto ca = counts(a);
  const auto cb = counts(b);
  const long lo = cb.begin()->first - ca.rbegin()->first;
  const long hi = cb.rbegin()->first - ca.begin()->first;
  std::vector<long> shifts;
  for (long s = lo; s <= hi; ++s) shifts.push_back(s);
  std::stable_sort(shifts.begin(), shifts.end(), [](long x, long y) { return std::labs(x) < std::labs(y); });
  for (long s : shifts) {
    bool ok = true;
    for (const auto& [e, c] : ca)
      if (c > count_at(cb, e + s)) {
        ok = false;
        break;
      }
    if (ok) return s;
  }
  return std::nullopt;
}

bool is_shifted_submultiset(const std::vector<long>& a, const std::vector<long>& b) {
  return shifted_submultiset_shift(a, b).has_value();
}

namespace {

// Each a = e is matched to e + s1 or e + s2. Elements sharing a residue mod
// s2 - s1 form a chain, and filling the lower target first along ascending e
// is optimal on a chain.
bool splits_into(const std::map<long, long>& ca, std::map<long, long> cb, long s1, long s2) {
  for (const auto& [e, c] : ca) {
    long need = c;
    for (long s : {s1, s2}) {
      auto it = cb.find(e + s);
      if (it == cb.end()) continue;
      const long take = std::min(need, it->second);
      it->second -= take;
      need -= take;
      if (s1 == s2) break;
    }
    if (need > 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<long, long>> two_part_shift(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.empty()) return std::pair<long, long>{0, 0};
  if (b.empty()) return std::nullopt;
  const auto ca = counts(a);
  const auto cb = counts(b);
  const long lo = cb.begin()->first - ca.rbegin()->first;
  const long hi = cb.rbegin()->first - ca.begin()->first;
  std::optional<std::pair<long, long>> best;
  const auto cost = [](const std::pair<long, long>& s) { return std::labs(s.first) + std::labs(s.second); };
  for (long s1 = lo; s1 <= hi; ++s1)
    for (long s2 = s1; s2 <= hi; ++s2) {
      const std::pair<long, long> s{s1, s2};
      if (best && cost(s) >= cost(*best)) continue;
      if (splits_into(ca, cb, s1, s2)) best = s;
    }
  return best;
}

std::vector<Corollary1Entry> check_corollary1_BC(int n) {
  std::vector<Corollary1Entry> out;
  for (const auto& pair : multipartitions_of(n, 2)) {
    const Multipartition partner = special_partner_BC(pair);
    Corollary1Entry e;
    e.label = format_multipartition(pair);
    e.partner = format_multipartition(partner);
    e.exponents = exponent_multiset(fake_degree_BC(pair, BCRoute::tuple));
    e.partner_exponents = exponent_multiset(fake_degree_BC(partner, BCRoute::tuple));
    if (auto s = shifted_submultiset_shift(e.exponents, e.partner_exponents)) {
      e.shifts = {*s};
      e.ok = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Corollary1Entry> check_corollary1_D(int n) {
  if (n < 2) throw std::invalid_argument("type D needs rank n >= 2");
  std::vector<Corollary1Entry> out;
  for (const auto& rep : typeD_representations(n)) {
    const Multipartition partner_pair = special_partner_D(rep.pair());
    const TypeDRep partner(partner_pair, partner_pair[0] == partner_pair[1] ? rep.c() : 1);
    Corollary1Entry e;
    e.label = rep.label();
    e.partner = partner.label();
    e.exponents = exponent_multiset(fake_degree_D(rep, DRoute::tuple));
    e.partner_exponents = exponent_multiset(fake_degree_D(partner, DRoute::tuple));
    if (auto s = two_part_shift(e.exponents, e.partner_exponents)) {
      e.shifts = {s->first, s->second};
      e.ok = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace fakedeg
