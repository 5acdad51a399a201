#include "cogrowth/polynomial.hpp"

#include <algorithm>

namespace cogrowth {

namespace mp = boost::multiprecision;

IntPolynomial::IntPolynomial(int constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt c, int degree) {
  if (c == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (BigInt& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a,
                                               const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  IntPolynomial q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    BigInt lead = r.leading();
    if (lead % b.leading() != 0) {
      throw DomainError("polynomial division is not exact over the integers");
    }
    IntPolynomial t = IntPolynomial::monomial(lead / b.leading(), r.degree() - b.degree());
    q += t;
    r -= t * b;
  }
  return {std::move(q), std::move(r)};
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division left a remainder");
  return q;
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coeffs()) g = mp::gcd(g, c);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const BigInt& x : p.coeffs()) out.push_back(x / c);
  return IntPolynomial(std::move(out));
}

namespace {

// Remainder of lc(b)^(deg a - deg b + 1) * a divided by b; exact by construction.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
  BigInt factor = mp::pow(b.leading(), static_cast<unsigned>(a.degree() - b.degree() + 1));
  return divmod(IntPolynomial(factor) * a, b).second;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = primitive_part(a), v = primitive_part(b);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_rem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    BigInt c = p.coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    BigInt mag = mp::abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial(1);
    return;
  }
  IntPolynomial g = gcd(num_, den_);
  if (g.degree() > 0 || g.coeff(0) != 1) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  BigInt shared = mp::gcd(content(num_), content(den_));
  BigInt sign_fix = den_.coeff(0) != 0 ? den_.coeff(0) : den_.leading();
  if (sign_fix < 0) shared = -shared;
  if (shared != 1) {
    num_ = exact_div(num_, IntPolynomial(shared));
    den_ = exact_div(den_, IntPolynomial(shared));
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string to_string(const RationalFunction& f, const std::string& var) {
  if (f.den() == IntPolynomial(1)) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ") / (" + to_string(f.den(), var) + ")";
}

PolyMatrix PolyMatrix::minor_matrix(int i, int j) const {
  PolyMatrix m(n_ - 1);
  for (int r = 0, mr = 0; r < n_; ++r) {
    if (r == i) continue;
    for (int c = 0, mc = 0; c < n_; ++c) {
      if (c == j) continue;
      m.at(mr, mc) = at(r, c);
      ++mc;
    }
    ++mr;
  }
  return m;
}

namespace {

// Fraction-free forward elimination in place over columns 0..n-1 of `a`,
// mirroring row operations onto `rhs` when provided. Returns the sign from
// row swaps, or 0 if the matrix is singular. On success a is upper
// triangular with a.at(k,k) = (sign-adjusted) leading principal minors.
int bareiss_forward(PolyMatrix& a, std::vector<IntPolynomial>* rhs) {
  const int n = a.size();
  int sign = 1;
  IntPolynomial prev(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (a.at(r, k).is_zero()) continue;
      if (pivot < 0 || a.at(r, k).degree() < a.at(pivot, k).degree()) pivot = r;
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int c = k; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
      if (rhs) std::swap((*rhs)[k], (*rhs)[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      }
      if (rhs) {
        (*rhs)[i] = exact_div(a.at(k, k) * (*rhs)[i] - a.at(i, k) * (*rhs)[k], prev);
      }
      a.at(i, k) = IntPolynomial();
    }
    prev = a.at(k, k);
  }
  return sign;
}

}  // namespace

IntPolynomial det(const PolyMatrix& m) {
  if (m.size() == 0) return IntPolynomial(1);
  PolyMatrix a = m;
  int sign = bareiss_forward(a, nullptr);
  if (sign == 0) return {};
  IntPolynomial d = a.at(m.size() - 1, m.size() - 1);
  return sign < 0 ? -d : d;
}

std::vector<RationalFunction> solve_linear_system(const PolyMatrix& a,
                                                  const std::vector<IntPolynomial>& rhs) {
  const int n = a.size();
  if (static_cast<int>(rhs.size()) != n) throw DomainError("rhs size mismatch");
  PolyMatrix u = a;
  std::vector<IntPolynomial> b = rhs;
  if (bareiss_forward(u, &b) == 0) throw DomainError("singular linear system");
  std::vector<RationalFunction> y(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    RationalFunction acc(b[i], IntPolynomial(1));
    for (int j = i + 1; j < n; ++j) {
      acc = acc - RationalFunction(u.at(i, j), IntPolynomial(1)) * y[j];
    }
    y[i] = acc / RationalFunction(u.at(i, i), IntPolynomial(1));
  }
  return y;
}

}  // namespace cogrowth
