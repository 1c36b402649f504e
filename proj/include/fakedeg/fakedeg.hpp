#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fakedeg/qpoly.hpp"
#include "fakedeg/shapes.hpp"

namespace fakedeg {

enum class WreathRoute { formula, enumeration };
enum class BCRoute { domino_even, domino_odd, tuple };
enum class DRoute { tuple, domino, shifted };

/// Fake degree of the irreducible of G(d,1,n) labelled by lambda.
/// std::invalid_argument unless lambda has exactly d components.
QPolynomial fake_degree_wreath(const Multipartition& lambda, int d, WreathRoute route);

/// Fake degree of the type B/C irreducible labelled by a partition pair.
QPolynomial fake_degree_BC(const Multipartition& pair, BCRoute route);

/// Irreducible of the type D Weyl group: an unordered pair stored with the
/// lexicographically larger partition first, plus c in {1,2} that only
/// varies when both partitions coincide.
class TypeDRep {
 public:
  /// Reorders the pair canonically. std::invalid_argument for c outside
  /// {1,2}, or c = 2 with distinct partitions.
  TypeDRep(Partition a, Partition b, int c = 1);
  explicit TypeDRep(const Multipartition& pair, int c = 1);

  const Multipartition& pair() const { return pair_; }
  int c() const { return c_; }
  int n() const { return pair_.total_size(); }
  bool degenerate() const { return pair_[0] == pair_[1]; }
  /// "2,1|1" or "1|1 c=2".
  std::string label() const;

  friend auto operator<=>(const TypeDRep&, const TypeDRep&) = default;
  friend bool operator==(const TypeDRep&, const TypeDRep&) = default;

 private:
  Multipartition pair_;
  int c_ = 1;
};

/// Every type D irreducible of rank n, canonical pairs in multipartitions_of
/// order, c = 1 before c = 2.
std::vector<TypeDRep> typeD_representations(int n);

/// std::invalid_argument when n < 2.
QPolynomial fake_degree_D(const TypeDRep& rep, DRoute route);

struct Group {
  enum class Kind { wreath, typeBC, typeD };
  Kind kind = Kind::wreath;
  int d = 1;
  int n = 0;

  static Group wreath(int d, int n) { return {Kind::wreath, d, n}; }
  static Group typeBC(int n) { return {Kind::typeBC, 2, n}; }
  static Group typeD(int n) { return {Kind::typeD, 2, n}; }
};

/// "wreath(3,2)", "typeBC(4)", "typeD(3)".
std::string to_string(const Group& g);

/// prod [d i]_q for G(d,1,n); [n]_q prod_{i<n} [2i]_q for type D.
QPolynomial poincare_polynomial(const Group& g);

/// sum over irreducibles of dim * fake degree; should equal poincare_polynomial.
QPolynomial regular_representation_sum(const Group& g);

/// Two rows of strictly increasing entries.
struct Symbol {
  std::vector<int> top;
  std::vector<int> bottom;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Defect-1 symbol: top has m+1 entries alpha_i + m + 1 - i, bottom has m
/// entries beta_j + m - j, where m = max(len(alpha) - 1, len(beta)).
Symbol symbol_BC(const Multipartition& pair);
Multipartition pair_from_symbol_BC(const Symbol& s);
/// Defect-0 symbol: both rows padded to m = max lengths, entries part + m - i.
Symbol symbol_D(const Multipartition& pair);
Multipartition pair_from_symbol_D(const Symbol& s);

/// Sorts all symbol entries and deals them alternately to the rows.
Multipartition special_partner_BC(const Multipartition& pair);
/// Same on the defect-0 symbol; result in canonical type D order.
Multipartition special_partner_D(const Multipartition& pair);

/// Some s with {a + s} contained in B as multisets, preferring the smallest |s|.
std::optional<long> shifted_submultiset_shift(const std::vector<long>& a, const std::vector<long>& b);
bool is_shifted_submultiset(const std::vector<long>& a, const std::vector<long>& b);
/// Shifts s1 <= s2 such that A splits into two parts with part k shifted by
/// s_k contained in B, preferring the smallest |s1| + |s2|, then the smallest s1.
std::optional<std::pair<long, long>> two_part_shift(const std::vector<long>& a, const std::vector<long>& b);

struct Corollary1Entry {
  std::string label;
  std::string partner;
  std::vector<long> exponents;
  std::vector<long> partner_exponents;
  /// One shift (B/C) or two (D); empty on failure.
  std::vector<long> shifts;
  bool ok = false;
};

std::vector<Corollary1Entry> check_corollary1_BC(int n);
/// Requires n >= 2.
std::vector<Corollary1Entry> check_corollary1_D(int n);

}  // namespace fakedeg
