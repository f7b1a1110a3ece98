#include "orthorel/poly.hpp"

#include <algorithm>

#include "orthorel/errors.hpp"

namespace orthorel {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial({Scalar(-root), Scalar(1)}); }

Polynomial Polynomial::monomial(std::size_t degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Scalar Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Scalar> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

Scalar eval(const Polynomial& p, const Scalar& x0) {
  Scalar acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

bool is_simple_set(const PolySeq& seq) {
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (seq[n].degree() != static_cast<int>(n) || !seq[n].is_monic()) return false;
  }
  return true;
}

}  // namespace orthorel
