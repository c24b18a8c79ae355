#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bimodulus/scalar.hpp"

namespace bimodulus {

/// Dense univariate polynomial, coefficients from low to high degree, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Scalar(0); }
  Scalar lead() const { return c_.back(); }

  Scalar operator()(const Scalar& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Scalar& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b);

 private:
  std::vector<Scalar> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Yun's square-free decomposition: a = lead * prod f_i^i, f_i monic square-free.
/// Valid in characteristic 0 or larger than the degree.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);
/// Distinct roots lying in the coefficient field. Degree <= 2 via square
/// roots; higher degree by exhaustive search over a finite field.
std::vector<Scalar> roots(const UPoly& a);

/// Binary form sum_i c_i x0^(d-i) x1^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Scalar> coeffs);
  static BinaryForm zero(int degree);
  /// The form of the given degree whose dehomogenization (x0 = 1, t = x1) is p.
  static BinaryForm homogenize(const UPoly& p, int degree);
  /// Linear form vanishing at [a0:a1].
  static BinaryForm vanishing_at(const Scalar& a0, const Scalar& a1);

  int degree() const { return degree_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  UPoly dehomogenize() const;
  /// Multiplicity of the root [0:1] (x0 = 0).
  int multiplicity_at_infinity() const;
  Scalar operator()(const Scalar& x0, const Scalar& x1) const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Scalar& s, const BinaryForm& a);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

 private:
  int degree_ = 0;
  std::vector<Scalar> c_;
};

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);
/// a / b when b divides a exactly, else empty.
std::optional<BinaryForm> form_divide(const BinaryForm& a, const BinaryForm& b);

struct FormFactorization {
  Scalar unit;
  std::vector<std::pair<BinaryForm, int>> factors;  // square-free, pairwise coprime
};
FormFactorization form_squarefree(const BinaryForm& f);

/// Root multiplicities over the algebraic closure, sorted descending.
std::vector<int> root_multiplicities(const BinaryForm& f);

/// Distinct projective roots [x0:x1] with coordinates in the form's field,
/// normalized with first nonzero coordinate 1.
std::vector<std::array<Scalar, 2>> form_roots(const BinaryForm& f);

/// f(g . x) where g acts on the column (x0, x1).
BinaryForm form_substitute(const BinaryForm& f, const std::array<std::array<Scalar, 2>, 2>& g);

}  // namespace bimodulus
