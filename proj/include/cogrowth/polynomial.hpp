#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "cogrowth/errors.hpp"

namespace cogrowth {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial in z with arbitrary-precision integer coefficients,
// stored ascending with no trailing zero (canonical; empty = zero).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(int constant);  // NOLINT: implicit for readable arithmetic
  IntPolynomial(BigInt constant);
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial monomial(BigInt c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const;

  BigInt evaluate(const BigInt& z) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Long division; requires every leading-coefficient division to be exact over
// the integers (throws DomainError otherwise).
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a,
                                               const IntPolynomial& b);

// Quotient a/b when b divides a exactly; throws DomainError otherwise.
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

// gcd of all coefficients (0 for the zero polynomial).
BigInt content(const IntPolynomial& p);

// p divided by its content, sign fixed so the leading coefficient is positive.
IntPolynomial primitive_part(const IntPolynomial& p);

// Primitive gcd with positive leading coefficient (primitive-PRS pseudo-remainders).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Rendering like "1 - 3z + 4z^3" (used by CLI output).
std::string to_string(const IntPolynomial& p, const std::string& var = "z");

// num/den, canonical: gcd(num, den) = 1, shared integer content removed,
// den(0) > 0 whenever den(0) != 0 (all series in scope are analytic at 0;
// otherwise the leading coefficient of den is made positive).
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;

  // Cross-multiplication equality (independent of normalization).
  bool operator==(const RationalFunction& o) const;

 private:
  IntPolynomial num_, den_;
};

std::string to_string(const RationalFunction& f, const std::string& var = "z");

// Square matrix of polynomials.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  IntPolynomial& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const IntPolynomial& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  // Copy with row i and column j removed.
  PolyMatrix minor_matrix(int i, int j) const;

 private:
  int n_;
  std::vector<IntPolynomial> a_;
};

// Exact determinant, fraction-free Bareiss elimination with row pivoting.
IntPolynomial det(const PolyMatrix& m);

// Solves A y = rhs over the rational-function field: fraction-free forward
// elimination, then exact back substitution. Throws DomainError if A is
// singular.
std::vector<RationalFunction> solve_linear_system(const PolyMatrix& a,
                                                  const std::vector<IntPolynomial>& rhs);

}  // namespace cogrowth
