#include "fracdpg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracdpg {

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(double value) { return Polynomial({value}); }

Polynomial Polynomial::shifted_legendre(int degree) {
  if (degree < 0) throw std::invalid_argument("shifted_legendre: negative degree");
  // P_n(2x-1) = sum_k (-1)^(n+k) C(n,k) C(n+k,k) x^k; all coefficients are
  // integers and exact in double for the degrees used here.
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  double binom_nk = 1.0;   // C(n,k)
  double binom_nkk = 1.0;  // C(n+k,k)
  for (int k = 0; k <= degree; ++k) {
    const double sign = ((degree + k) % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(k)] = sign * binom_nk * binom_nkk;
    binom_nk = binom_nk * (degree - k) / (k + 1);
    binom_nkk = binom_nkk * (degree + k + 1) / (k + 1);
  }
  return Polynomial(std::move(c));
}

int Polynomial::degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

double Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> a(coeffs_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
  return Polynomial(std::move(a));
}

double Polynomial::integral01() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] / static_cast<double>(i + 1);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double scale) {
  for (double& c : coeffs_) c *= scale;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return Polynomial{};
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

}  // namespace fracdpg
