#pragma once

#include <array>
#include <vector>

#include "bimodulus/linalg.hpp"
#include "bimodulus/upoly.hpp"

namespace bimodulus {

using Mat2 = std::array<std::array<Scalar, 2>, 2>;

/// Multihomogeneous form in blocks of two variables (x_{b,0}, x_{b,1}).
///
/// Stored densely over the monomial basis of its multidegree. A monomial is
/// indexed by the tuple (k_0, k_1, ...) where k_b is the exponent of the
/// second variable of block b; tuples are ordered lexicographically, block 0
/// most significant. A negative block degree gives the zero space.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly zero(std::vector<int> degree);
  static MultiPoly monomial(std::vector<int> degree, const std::vector<int>& k, const Scalar& c = Scalar(1));
  static MultiPoly from_binary_form(const BinaryForm& f);

  int blocks() const { return static_cast<int>(degree_.size()); }
  const std::vector<int>& degree() const { return degree_; }
  Eigen::Index size() const { return coeffs_.size(); }
  const Vector& coeffs() const { return coeffs_; }
  Vector& coeffs() { return coeffs_; }

  Eigen::Index index_of(const std::vector<int>& k) const;
  std::vector<int> tuple_of(Eigen::Index idx) const;
  /// Full exponent vector (2 entries per block) of a basis index.
  std::vector<int> exponent_of(Eigen::Index idx) const;
  Scalar coeff(const std::vector<int>& k) const { return coeffs_(index_of(k)); }
  void set_coeff(const std::vector<int>& k, const Scalar& c) { coeffs_(index_of(k)) = c; }

  bool is_zero() const;
  std::size_t term_count() const;
  std::optional<Field> field() const;

  /// Evaluate at a point given as 2 homogeneous coordinates per block.
  Scalar operator()(const std::vector<Scalar>& point) const;

  MultiPoly partial(int block, int var) const;
  /// Partials in variable order (x_{0,0}, x_{0,1}, x_{1,0}, ...).
  std::vector<MultiPoly> partials() const;
  /// f(..., g x_b, ...): the variables of block b replaced by g applied to them.
  MultiPoly substitute(int block, const Mat2& g) const;
  /// Coefficient form of x_{b,0}^(d-k) x_{b,1}^k; block b is removed.
  MultiPoly slice(int block, int k) const;
  BinaryForm as_binary_form() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<int> degree_;
  Vector coeffs_;
};

Eigen::Index component_dim(const std::vector<int>& degree);
/// Monomials of the multidegree as full exponent vectors, in basis order.
std::vector<std::vector<int>> component_basis(const std::vector<int>& degree);

/// A1 B2 - A2 B1 where f_i = A_i z0 + B_i z1 in the eliminated block.
MultiPoly linear_resultant(const MultiPoly& f1, const MultiPoly& f2, int block);
/// B^2 - 4AC for f = A z0^2 + B z0 z1 + C z1^2 in the given block of a 2-block form.
BinaryForm quadratic_discriminant(const MultiPoly& f, int block);

/// Multiplication by f as a matrix from the component of degree d to that of d + deg f.
Matrix multiplication_matrix(const MultiPoly& f, const std::vector<int>& degree);

}  // namespace bimodulus
