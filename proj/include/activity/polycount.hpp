#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace activity {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first and kept canonical: the
/// highest stored coefficient is never zero, so the zero polynomial has an
/// empty coefficient vector and structural equality is polynomial equality.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t exponent);
  // x + c
  static IntPolynomial linear(const BigInt& c);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;

  BigInt evaluate(const BigInt& x) const;
  // p(q(x))
  IntPolynomial compose(const IntPolynomial& q) const;
  // Exact division by x^k; throws DomainError if a low coefficient is nonzero.
  IntPolynomial divide_by_x_power(std::size_t k) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& rhs) { return lhs *= rhs; }
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned exponent) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Human readable form, highest degree first, e.g. "x^3 + 3x^2 + 6x + 4".
  std::string to_string(char variable = 'x') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Entries (a_0, ..., a_r). Used both for activity vectors A and for
/// cardinality vectors C; entries may be negative when computed from an
/// infeasible cardinality vector.
struct ActivityVector {
  std::vector<BigInt> entries;

  ActivityVector() = default;
  explicit ActivityVector(std::vector<BigInt> e) : entries(std::move(e)) {}
  ActivityVector(std::initializer_list<long long> e);

  std::size_t size() const { return entries.size(); }
  const BigInt& operator[](std::size_t i) const { return entries[i]; }
  BigInt sum() const;
  bool all_nonnegative() const;
  std::string to_string() const;  // "(1,0,2,1,0)"

  friend bool operator==(const ActivityVector&, const ActivityVector&) = default;
};

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
// Unsigned Stirling numbers of the first kind c(n, k).
BigInt stirling_first_unsigned(unsigned n, unsigned k);

/// x (x+1) (x+2) ... (x+n-2); the constant 1 for n = 1.
IntPolynomial rising_factorial_shifted(int n);

/// (1/2^n) * sum_{j=0}^{n} C(n,j) (j-1)^{n-1}, evaluated over the rationals.
/// Throws InternalError if the value is not an integer.
BigInt athanasiadis_bounded(int n);

/// sum a_i x^i. Throws DomainError on a negative entry.
IntPolynomial activity_poly_from_vector(const ActivityVector& a);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const ActivityVector& v);

}  // namespace activity
