#ifndef ORTHOREL_POLY_HPP
#define ORTHOREL_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "orthorel/scalar.hpp"

namespace orthorel {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. The stored vector never ends in a zero, so the zero polynomial is
/// the empty vector and `degree()` is unambiguous.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  Polynomial(std::initializer_list<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  /// x - root
  static Polynomial linear(const Scalar& root);
  static Polynomial monomial(std::size_t degree, const Scalar& c = 1);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  [[nodiscard]] Scalar coeff(std::size_t k) const;
  [[nodiscard]] const Scalar& leading() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& rhs);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Scalar& c);
Polynomial operator*(const Scalar& c, Polynomial a);

/// Horner evaluation.
Scalar eval(const Polynomial& p, const Scalar& x0);

/// Polynomials P_0, P_1, ... with P_n expected monic of degree n.
using PolySeq = std::vector<Polynomial>;

/// True when seq[n] is monic of degree n for every n.
bool is_simple_set(const PolySeq& seq);

}  // namespace orthorel

#endif  // ORTHOREL_POLY_HPP
