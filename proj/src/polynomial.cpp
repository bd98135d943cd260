#include "shidist/polynomial.hpp"

#include <stdexcept>

namespace shidist {

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (const BigInt& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("UnivariatePolynomial: negative coefficient");
  }
  trim();
}

BigInt UnivariatePolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[exponent];
}

void UnivariatePolynomial::add_term(int exponent, const BigInt& c) {
  if (exponent < 0) throw std::invalid_argument("UnivariatePolynomial: negative exponent");
  if (exponent >= static_cast<int>(coeffs_.size())) coeffs_.resize(exponent + 1, 0);
  coeffs_[exponent] += c;
  if (coeffs_[exponent] < 0) throw std::invalid_argument("UnivariatePolynomial: negative coefficient");
  trim();
}

BigInt UnivariatePolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string UnivariatePolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int e = 0; e <= degree(); ++e) {
    if (coeffs_[e] == 0) continue;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += coeffs_[e].str();
    } else {
      if (coeffs_[e] != 1) out += coeffs_[e].str();
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace shidist
