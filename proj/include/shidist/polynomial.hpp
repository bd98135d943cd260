#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shidist {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with nonnegative integer coefficients; trailing
// zero coefficients are kept trimmed.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  BigInt coeff(int exponent) const;

  void add_term(int exponent, const BigInt& c);
  BigInt evaluate(const BigInt& x) const;

  bool operator==(const UnivariatePolynomial&) const = default;

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace shidist
