#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fakedeg {

class Partition;

using Integer = boost::multiprecision::cpp_int;

/// Raised when an invariant that the mathematics guarantees is violated
/// (inexact division, a tableau rule producing a non-corner cell, ...).
/// Always indicates a bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// coeffs()[k] is the coefficient of q^k; the zero polynomial has no
/// coefficients and every other value has a nonzero leading coefficient.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Integer> coeffs);
  QPolynomial(std::initializer_list<long long> coeffs);

  static QPolynomial one();
  static QPolynomial monomial(std::size_t exponent, Integer coefficient = 1);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::optional<std::size_t> lowest_degree() const;
  Integer coeff(std::size_t k) const;
  bool has_nonnegative_coeffs() const;
  bool is_palindromic() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

QPolynomial add(const QPolynomial& p, const QPolynomial& r);
QPolynomial mul(const QPolynomial& p, const QPolynomial& r);

/// Multiplies by q^s. Negative s is allowed as long as no term drops below
/// degree 0; otherwise std::invalid_argument.
QPolynomial shift_by_power(const QPolynomial& p, long s);

Integer evaluate_at_one(const QPolynomial& p);

/// q -> q^d.
QPolynomial substitute_power(const QPolynomial& p, int d);

/// Long division that must be exact. Throws InternalError on a nonzero
/// remainder or a non-integral quotient coefficient.
QPolynomial divide_exact(const QPolynomial& numerator, const QPolynomial& denominator);

/// [n]_q = 1 + q + ... + q^{n-1}, with [0]_q = 1.
QPolynomial q_int(int n);
QPolynomial q_factorial(int n);
/// [n]_q! / prod [parts_i]_q!. std::invalid_argument unless the parts sum to n.
QPolynomial q_multinomial(int n, std::span<const int> parts);

/// q^{b(alpha)} [r]_q! / prod_c [h_c]_q for a partition alpha of r; the
/// hook-length form of the major-index generating function over SYT(alpha).
QPolynomial hook_syt_gf(const Partition& alpha);

/// "q^3 + q^5 + q^7", "1 + 2q + q^2", "0".
std::string to_string(const QPolynomial& p);

/// Lists exponent k with multiplicity coeff(k). Requires nonnegative coefficients.
std::vector<long> exponent_multiset(const QPolynomial& p);

}  // namespace fakedeg
