#include <doctest.h>

#include <vector>

#include "fakedeg/qpoly.hpp"
#include "fakedeg/shapes.hpp"
#include "fakedeg/tableaux.hpp"

using namespace fakedeg;

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(QPolynomial{1, 2, 0, 0} == QPolynomial{1, 2});
  CHECK(QPolynomial{0, 0}.is_zero());
  CHECK(QPolynomial{}.degree() == -1);
  CHECK(QPolynomial{0, 0, 3}.lowest_degree() == 2u);
  CHECK_FALSE(QPolynomial{}.lowest_degree().has_value());
}

TEST_CASE("ring operations") {
  const QPolynomial a{1, 1};
  CHECK(a * a == QPolynomial{1, 2, 1});
  CHECK(a - a == QPolynomial{});
  CHECK(add(a, QPolynomial{0, -1}) == QPolynomial::one());
  CHECK(mul(a, QPolynomial{}) == QPolynomial{});
  CHECK(QPolynomial::monomial(3, 2) == QPolynomial{0, 0, 0, 2});
}

TEST_CASE("shift, substitution and evaluation") {
  CHECK(shift_by_power(QPolynomial{1, 1}, 2) == QPolynomial{0, 0, 1, 1});
  CHECK(shift_by_power(QPolynomial{0, 0, 1}, -2) == QPolynomial::one());
  CHECK_THROWS_AS(shift_by_power(QPolynomial{1, 1}, -1), std::invalid_argument);
  CHECK(substitute_power(QPolynomial{1, 1, 2}, 2) == QPolynomial{1, 0, 1, 0, 2});
  CHECK(substitute_power(QPolynomial{}, 3) == QPolynomial{});
  CHECK(evaluate_at_one(QPolynomial{1, 2, 1}) == 4);
}

TEST_CASE("exact division") {
  CHECK(divide_exact(QPolynomial{1, 2, 1}, QPolynomial{1, 1}) == QPolynomial{1, 1});
  CHECK(divide_exact(q_factorial(4), q_factorial(2)) == q_int(3) * q_int(4));
  CHECK_THROWS_AS(divide_exact(QPolynomial{1, 1}, QPolynomial{1, 0, 1}), InternalError);
  CHECK_THROWS_AS(divide_exact(QPolynomial{1, 0, 1}, QPolynomial{1, 1}), InternalError);
  CHECK_THROWS_AS(divide_exact(QPolynomial{1}, QPolynomial{2}), InternalError);
}

TEST_CASE("q-integers, factorials, multinomials") {
  CHECK(q_int(0) == QPolynomial::one());
  CHECK(q_int(3) == QPolynomial{1, 1, 1});
  CHECK(q_factorial(3) == QPolynomial{1, 2, 2, 1});
  const std::vector<int> two_two{2, 2};
  CHECK(q_multinomial(4, two_two) == QPolynomial{1, 1, 2, 1, 1});
  const std::vector<int> bad{2, 1};
  CHECK_THROWS_AS(q_multinomial(4, bad), std::invalid_argument);
  CHECK(q_multinomial(0, std::vector<int>{}) == QPolynomial::one());
}

TEST_CASE("coefficients beyond 64 bits") {
  CHECK(evaluate_at_one(q_factorial(30)).str() == "265252859812191058636308480000000");
  const std::vector<int> parts{20, 20};
  // C(40,20)
  CHECK(evaluate_at_one(q_multinomial(40, parts)).str() == "137846528820");
}

TEST_CASE("hook formula examples") {
  CHECK(hook_syt_gf(Partition{4}) == QPolynomial::one());
  CHECK(hook_syt_gf(Partition{2, 1}) == QPolynomial{0, 1, 1});
  CHECK(hook_syt_gf(Partition{1, 1, 1}) == QPolynomial{0, 0, 0, 1});
  CHECK(hook_syt_gf(Partition{}) == QPolynomial::one());
}

TEST_CASE("hook formula equals major-index enumeration up to size 12") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& alpha : partitions_of(n)) CHECK(hook_syt_gf(alpha) == syt_maj_gf(alpha));
}

TEST_CASE("rendering") {
  CHECK(to_string(QPolynomial{0, 0, 0, 1, 0, 1}) == "q^3 + q^5");
  CHECK(to_string(QPolynomial{1, 2, 1}) == "1 + 2q + q^2");
  CHECK(to_string(QPolynomial{0, 0, 2}) == "2q^2");
  CHECK(to_string(QPolynomial{}) == "0");
  CHECK(to_string(QPolynomial{1, -1}) == "1 - q");
}

TEST_CASE("exponent multiset and palindromicity") {
  CHECK(exponent_multiset(QPolynomial{0, 0, 0, 1, 0, 1, 0, 1}) == std::vector<long>{3, 5, 7});
  CHECK(exponent_multiset(QPolynomial{0, 2}) == std::vector<long>{1, 1});
  CHECK_THROWS_AS(exponent_multiset(QPolynomial{1, -1}), std::invalid_argument);
  CHECK(QPolynomial{0, 1, 2, 1}.is_palindromic());
  CHECK_FALSE(QPolynomial{1, 2}.is_palindromic());
}
