#include <doctest.h>

#include <random>
#include <vector>

#include "cogrowth/polynomial.hpp"

using namespace cogrowth;

namespace {

IntPolynomial poly(std::vector<BigInt> ascending) { return IntPolynomial(std::move(ascending)); }

IntPolynomial random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> cdist(-max_abs, max_abs);
  std::vector<BigInt> cs(std::uniform_int_distribution<int>(0, max_deg)(rng) + 1);
  for (auto& c : cs) c = cdist(rng);
  return IntPolynomial(std::move(cs));
}

PolyMatrix random_matrix(std::mt19937& rng, int n, int max_deg, int max_abs) {
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, max_deg, max_abs);
  }
  return m;
}

}  // namespace

TEST_CASE("polynomial basics") {
  IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(poly({1, 0, 0}).degree() == 0);  // trailing zeros trimmed
  CHECK(poly({0, 0}) == zero);
  CHECK(IntPolynomial::monomial(3, 2) == poly({0, 0, 3}));
  CHECK(IntPolynomial::monomial(0, 5) == zero);
  CHECK(poly({1, 2}).coeff(0) == 1);
  CHECK(poly({1, 2}).coeff(7) == 0);
  CHECK(poly({1, 2, 5}).leading() == 5);
  CHECK(poly({1, -3, 0, 4}).evaluate(2) == 1 - 6 + 32);
}

TEST_CASE("polynomial arithmetic") {
  IntPolynomial p = poly({1, -3, 0, 4});   // 1 - 3z + 4z^3
  IntPolynomial q = poly({0, 1, 1});       // z + z^2
  CHECK(p + q == poly({1, -2, 1, 4}));
  CHECK(p - p == IntPolynomial());
  CHECK(-p == poly({-1, 3, 0, -4}));
  CHECK(p * IntPolynomial() == IntPolynomial());
  CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
  CHECK(poly({1, 1}) * poly({1, -4, 5}) == poly({1, -3, 1, 5}));
  // golden denominator: (1-5z)(1-2z+5z^2) = 1-7z+15z^2-25z^3
  CHECK(poly({1, -5}) * poly({1, -2, 5}) == poly({1, -7, 15, -25}));

  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial a = random_poly(rng, 5, 9), b = random_poly(rng, 5, 9),
                  c = random_poly(rng, 5, 9);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    BigInt z = 3;
    CHECK((a * b).evaluate(z) == a.evaluate(z) * b.evaluate(z));
  }
}

TEST_CASE("divmod, exact_div, content, gcd") {
  // z^3 = (1 - z)(-1 - z - z^2) + 1
  auto [q1, r1] = divmod(poly({0, 0, 0, 1}), poly({1, -1}));
  CHECK(q1 == poly({-1, -1, -1}));
  CHECK(r1 == poly({1}));

  auto [q2, r2] = divmod(poly({1, 0, -1}), poly({1, 1}));
  CHECK(q2 == poly({1, -1}));
  CHECK(r2.is_zero());

  CHECK(exact_div(poly({1, -7, 15, -25}), poly({1, -5})) == poly({1, -2, 5}));
  CHECK_THROWS_AS(exact_div(poly({0, 0, 0, 1}), poly({1, -1})), DomainError);
  CHECK_THROWS_AS(divmod(poly({1}), IntPolynomial()), DomainError);

  CHECK(content(poly({4, -6, 2})) == 2);
  CHECK(content(IntPolynomial()) == 0);
  CHECK(primitive_part(poly({4, -6, 2})) == poly({2, -3, 1}));
  CHECK(primitive_part(poly({0, -2, -4})) == poly({0, 1, 2}));  // leading made positive

  CHECK(gcd(poly({1, 0, -1}), poly({1, 1})) == poly({1, 1}));
  CHECK(gcd(poly({1, -5}), poly({1, -2, 5})) == poly({1}));
  CHECK(gcd(IntPolynomial(), poly({0, -3})) == poly({0, 1}));

  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial a = random_poly(rng, 4, 6), b = random_poly(rng, 4, 6);
    if (a.is_zero() || b.is_zero()) continue;
    IntPolynomial g = gcd(a * b, b);  // b divides ab
    CHECK(g == primitive_part(b));
    CHECK(exact_div(b, g) * g == b);
    auto [q, r] = divmod(a * b, b);
    CHECK(q == a);
    CHECK(r.is_zero());
  }
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(IntPolynomial()) == "0");
  CHECK(to_string(poly({1})) == "1");
  CHECK(to_string(poly({-1})) == "-1");
  CHECK(to_string(poly({1, -3, 0, 4})) == "1 - 3z + 4z^3");
  CHECK(to_string(poly({0, 1})) == "z");
  CHECK(to_string(poly({0, -1, 1})) == "-z + z^2");
  CHECK(to_string(poly({2, 1}), "t") == "2 + t");
}

TEST_CASE("rational function canonicalization") {
  RationalFunction f(poly({0, 2, 2}), poly({2, 0, -2}));  // 2z(1+z) / 2(1-z)(1+z)
  CHECK(f.num() == poly({0, 1}));
  CHECK(f.den() == poly({1, -1}));

  // den(0) sign pinned positive
  RationalFunction g(poly({1}), poly({-1, 1}));
  CHECK(g.den() == poly({1, -1}));
  CHECK(g.num() == poly({-1}));

  CHECK(RationalFunction() == RationalFunction(IntPolynomial(), poly({5})));
  CHECK(RationalFunction(poly({1}), poly({1})) == RationalFunction(poly({3}), poly({3})));
  CHECK_THROWS_AS(RationalFunction(poly({1}), IntPolynomial()), DomainError);

  RationalFunction a(poly({1}), poly({1, -1}));      // 1/(1-z)
  RationalFunction b(poly({0, 1}), poly({1, -1}));   // z/(1-z)
  CHECK(a - b == RationalFunction(poly({1, -1}), poly({1, -1})));
  CHECK(a - b == RationalFunction(poly({1}), poly({1})));
  CHECK(a + b == RationalFunction(poly({1, 1}), poly({1, -1})));
  CHECK(a * b == RationalFunction(poly({0, 1}), poly({1, -2, 1})));
  CHECK(a / a == RationalFunction(poly({1}), poly({1})));
  CHECK_THROWS_AS(a / RationalFunction(), DomainError);
  CHECK(to_string(b) == "(z) / (1 - z)");
  CHECK(to_string(a / a) == "1");

  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial n1 = random_poly(rng, 4, 5), d1 = random_poly(rng, 4, 5);
    IntPolynomial n2 = random_poly(rng, 4, 5), d2 = random_poly(rng, 4, 5);
    if (d1.is_zero() || d2.is_zero()) continue;
    RationalFunction x(n1, d1), y(n2, d2);
    // cross-multiplied identities
    CHECK((x + y) - y == x);
    if (!n2.is_zero()) CHECK((x / y) * y == x);
    CHECK(gcd(x.num(), x.den()).degree() == 0);  // canonical: coprime
  }
}

TEST_CASE("determinants") {
  PolyMatrix m0(0);
  CHECK(det(m0) == poly({1}));

  PolyMatrix m1(1);
  m1.at(0, 0) = poly({1, -3});
  CHECK(det(m1) == poly({1, -3}));

  // I - zM for M = [[0,1],[1,0]]: det = 1 - z^2
  PolyMatrix m2(2);
  m2.at(0, 0) = poly({1});
  m2.at(0, 1) = poly({0, -1});
  m2.at(1, 0) = poly({0, -1});
  m2.at(1, 1) = poly({1});
  CHECK(det(m2) == poly({1, 0, -1}));

  // Singular matrix
  PolyMatrix m3(2);
  m3.at(0, 0) = poly({0, 1});
  m3.at(0, 1) = poly({0, 2});
  m3.at(1, 0) = poly({0, 2});
  m3.at(1, 1) = poly({0, 4});
  CHECK(det(m3).is_zero());

  // Row swap flips sign: permutation matrix [[0,1],[1,0]] has det -1
  PolyMatrix m4(2);
  m4.at(0, 1) = poly({1});
  m4.at(1, 0) = poly({1});
  CHECK(det(m4) == poly({-1}));

  PolyMatrix m5(3);
  const int vals[3][3] = {{2, 0, 1}, {1, 1, 0}, {0, 3, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m5.at(i, j) = poly({vals[i][j]});
  CHECK(det(m5) == poly({2 * (1 - 0) - 0 + 1 * (3 - 0)}));  // 5

  std::mt19937 rng(37);
  for (int i = 0; i < 25; ++i) {
    PolyMatrix a = random_matrix(rng, 4, 2, 3), b = random_matrix(rng, 4, 2, 3);
    PolyMatrix ab(4);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        IntPolynomial s;
        for (int k = 0; k < 4; ++k) s += a.at(r, k) * b.at(k, c);
        ab.at(r, c) = s;
      }
    }
    CHECK(det(ab) == det(a) * det(b));
    // Laplace expansion along row 0 agrees with Bareiss
    IntPolynomial lap;
    for (int j = 0; j < 4; ++j) {
      IntPolynomial term = a.at(0, j) * det(a.minor_matrix(0, j));
      lap += (j % 2 == 0) ? term : -term;
    }
    CHECK(lap == det(a));
  }
}

TEST_CASE("minor_matrix removes the right row and column") {
  PolyMatrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = poly({3 * i + j});
  PolyMatrix s = m.minor_matrix(1, 0);
  CHECK(s.size() == 2);
  CHECK(s.at(0, 0) == poly({1}));
  CHECK(s.at(0, 1) == poly({2}));
  CHECK(s.at(1, 0) == poly({7}));
  CHECK(s.at(1, 1) == poly({8}));
}

TEST_CASE("linear solve") {
  // [[1, z],[0, 1-z]] y = [1, z]  =>  y1 = z/(1-z), y0 = 1 - z^2/(1-z) = (1-z-z^2)/(1-z)
  PolyMatrix a(2);
  a.at(0, 0) = poly({1});
  a.at(0, 1) = poly({0, 1});
  a.at(1, 0) = IntPolynomial();
  a.at(1, 1) = poly({1, -1});
  auto y = solve_linear_system(a, {poly({1}), poly({0, 1})});
  CHECK(y[1] == RationalFunction(poly({0, 1}), poly({1, -1})));
  CHECK(y[0] == RationalFunction(poly({1, -1, -1}), poly({1, -1})));

  PolyMatrix sing(2);
  sing.at(0, 0) = poly({1});
  sing.at(0, 1) = poly({1});
  sing.at(1, 0) = poly({2});
  sing.at(1, 1) = poly({2});
  CHECK_THROWS_AS(solve_linear_system(sing, {poly({1}), poly({1})}), DomainError);

  std::mt19937 rng(41);
  int solved = 0;
  for (int i = 0; i < 40 && solved < 25; ++i) {
    PolyMatrix m = random_matrix(rng, 4, 2, 3);
    if (det(m).is_zero()) continue;
    std::vector<IntPolynomial> rhs;
    for (int r = 0; r < 4; ++r) rhs.push_back(random_poly(rng, 2, 3));
    auto x = solve_linear_system(m, rhs);
    ++solved;
    // substitute back: sum_j m[i][j] * x[j] == rhs[i] as rational functions
    for (int r = 0; r < 4; ++r) {
      RationalFunction acc;
      for (int c = 0; c < 4; ++c) {
        acc = acc + RationalFunction(m.at(r, c), poly({1})) * x[static_cast<std::size_t>(c)];
      }
      CHECK(acc == RationalFunction(rhs[static_cast<std::size_t>(r)], poly({1})));
    }
  }
  CHECK(solved >= 20);
}
