#include "activity/polycount.hpp"

#include <algorithm>
#include <sstream>

#include "activity/errors.hpp"

namespace activity {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t exponent) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c, 1}); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& q) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::divide_by_x_power(std::size_t k) const {
  for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i) {
    if (coeffs_[i] != 0) throw DomainError("polynomial is not divisible by x^" + std::to_string(k));
  }
  if (k >= coeffs_.size()) return {};
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << variable;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

ActivityVector::ActivityVector(std::initializer_list<long long> e) {
  for (long long v : e) entries.emplace_back(v);
}

BigInt ActivityVector::sum() const {
  BigInt s = 0;
  for (const auto& v : entries) s += v;
  return s;
}

bool ActivityVector::all_nonnegative() const {
  return std::all_of(entries.begin(), entries.end(), [](const BigInt& v) { return v >= 0; });
}

std::string ActivityVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  os << ')';
  return os.str();
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt stirling_first_unsigned(unsigned n, unsigned k) {
  // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  std::vector<BigInt> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    for (unsigned j = 1; j <= m; ++j) {
      next[j] = row[j - 1];
      if (j < row.size()) next[j] += BigInt(m - 1) * row[j];
    }
    row = std::move(next);
  }
  return k < row.size() ? row[k] : BigInt(0);
}

IntPolynomial rising_factorial_shifted(int n) {
  if (n < 1) throw DomainError("rising_factorial_shifted requires n >= 1");
  IntPolynomial p = IntPolynomial::constant(1);
  for (int i = 0; i <= n - 2; ++i) p *= IntPolynomial::linear(i);
  return p;
}

BigInt athanasiadis_bounded(int n) {
  if (n < 1) throw DomainError("athanasiadis_bounded requires n >= 1");
  Rational sum = 0;
  for (int j = 0; j <= n; ++j) {
    // 0^0 = 1 at n = 1
    sum += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
                    boost::multiprecision::pow(BigInt(j - 1), static_cast<unsigned>(n - 1)));
  }
  Rational value = sum / Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)));
  if (denominator(value) != 1) {
    throw InternalError("bounded-region formula gave a non-integer at n=" + std::to_string(n));
  }
  return numerator(value);
}

IntPolynomial activity_poly_from_vector(const ActivityVector& a) {
  if (!a.all_nonnegative()) throw DomainError("activity vector has a negative entry: " + a.to_string());
  return IntPolynomial(a.entries);
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

std::ostream& operator<<(std::ostream& os, const ActivityVector& v) { return os << v.to_string(); }

}  // namespace activity
