#include "fakedeg/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fakedeg/shapes.hpp"

namespace fakedeg {

QPolynomial::QPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPolynomial QPolynomial::one() { return QPolynomial{1}; }

QPolynomial QPolynomial::monomial(std::size_t exponent, Integer coefficient) {
  std::vector<Integer> c(exponent + 1);
  c[exponent] = std::move(coefficient);
  return QPolynomial(std::move(c));
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPolynomial::lowest_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return k;
  return std::nullopt;
}

Integer QPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

bool QPolynomial::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

bool QPolynomial::is_palindromic() const {
  if (is_zero()) return true;
  const std::size_t lo = *lowest_degree();
  const std::size_t hi = coeffs_.size() - 1;
  for (std::size_t k = lo; k <= hi; ++k)
    if (coeffs_[k] != coeffs_[hi - (k - lo)]) return false;
  return true;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

QPolynomial add(const QPolynomial& p, const QPolynomial& r) { return p + r; }
QPolynomial mul(const QPolynomial& p, const QPolynomial& r) { return p * r; }

QPolynomial shift_by_power(const QPolynomial& p, long s) {
  if (p.is_zero() || s == 0) return p;
  const auto lo = static_cast<long>(*p.lowest_degree());
  if (s < -lo) throw std::invalid_argument("shift_by_power: shift " + std::to_string(s) + " drops below degree 0");
  std::vector<Integer> out(static_cast<std::size_t>(p.degree() + 1 + s));
  for (long k = lo; k <= p.degree(); ++k) out[static_cast<std::size_t>(k + s)] = p.coeffs()[k];
  return QPolynomial(std::move(out));
}

Integer evaluate_at_one(const QPolynomial& p) {
  return std::accumulate(p.coeffs().begin(), p.coeffs().end(), Integer(0));
}

QPolynomial substitute_power(const QPolynomial& p, int d) {
  if (d < 1) throw std::invalid_argument("substitute_power: d must be positive");
  if (p.is_zero() || d == 1) return p;
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) * d + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k * d] = p.coeffs()[k];
  return QPolynomial(std::move(out));
}

QPolynomial divide_exact(const QPolynomial& numerator, const QPolynomial& denominator) {
  if (denominator.is_zero()) throw InternalError("divide_exact: division by zero polynomial");
  if (numerator.is_zero()) return {};
  if (numerator.degree() < denominator.degree())
    throw InternalError("divide_exact: numerator degree below denominator degree");

  std::vector<Integer> rem = numerator.coeffs();
  const auto& den = denominator.coeffs();
  const Integer& lead = den.back();
  const std::size_t dd = den.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) throw InternalError("divide_exact: non-integral quotient coefficient");
    Integer c = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
    quot[k] = std::move(c);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; }))
    throw InternalError("divide_exact: nonzero remainder");
  return QPolynomial(std::move(quot));
}

QPolynomial q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  if (n == 0) return QPolynomial::one();
  return QPolynomial(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

QPolynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  QPolynomial out = QPolynomial::one();
  for (int k = 2; k <= n; ++k) out *= q_int(k);
  return out;
}

QPolynomial q_multinomial(int n, std::span<const int> parts) {
  long total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
    total += p;
  }
  if (n < 0 || total != n) throw std::invalid_argument("q_multinomial: parts must sum to n");
  QPolynomial den = QPolynomial::one();
  for (int p : parts) den *= q_factorial(p);
  return divide_exact(q_factorial(n), den);
}

QPolynomial hook_syt_gf(const Partition& alpha) {
  QPolynomial den = QPolynomial::one();
  for (int h : hooks(alpha)) den *= q_int(h);
  return shift_by_power(divide_exact(q_factorial(alpha.size()), den), b_statistic(alpha));
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Integer c = p.coeffs()[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "q";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::vector<long> exponent_multiset(const QPolynomial& p) {
  if (!p.has_nonnegative_coeffs()) throw std::invalid_argument("exponent_multiset: negative coefficient");
  std::vector<long> out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    for (Integer c = p.coeffs()[k]; c > 0; --c) out.push_back(static_cast<long>(k));
  return out;
}

}  // namespace fakedeg
