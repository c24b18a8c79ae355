#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "bimodulus/scalar.hpp"

namespace Eigen {
template <>
struct NumTraits<bimodulus::Scalar> : GenericNumTraits<bimodulus::Scalar> {
  using Real = bimodulus::Scalar;
  using NonInteger = bimodulus::Scalar;
  using Nested = bimodulus::Scalar;
  using Literal = bimodulus::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
};
}  // namespace Eigen

namespace bimodulus {

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Derived>
struct RowEchelon {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
  std::vector<Eigen::Index> pivots;
};

/// Reduced row echelon form by Gauss-Jordan, pivoting on the first nonzero
/// entry of each column. Deterministic, so kernels are reproducible.
template <typename Derived>
RowEchelon<Derived> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowEchelon<Derived> out{m.eval(), {}};
  auto& a = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r)
      if (!(a(r, col) == S(0))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    S inv = S(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) = a(row, c) * inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == S(0)) continue;
      S factor = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) = a(r, c) - factor * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Basis of the right null space, one vector per column of the result.
/// The free columns of the echelon form are taken in increasing order.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  auto e = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> k(n, n - static_cast<Eigen::Index>(e.pivots.size()));
  k.setZero();
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    k(free, out) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k(e.pivots[r], out) = -e.reduced(static_cast<Eigen::Index>(r), free);
    ++out;
  }
  return k;
}

/// True iff the column spans agree.
template <typename DA, typename DB>
bool subspace_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows()) throw DomainError("subspace_equal: ambient dimensions differ");
  using S = typename DA::Scalar;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> both(a.rows(), a.cols() + b.cols());
  both << a, b;
  auto r = rank(both);
  return r == rank(a) && r == rank(b);
}

/// True iff v lies in the column span of a.
template <typename DA, typename DV>
bool in_span(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DV>& v) {
  using S = typename DA::Scalar;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> both(a.rows(), a.cols() + v.cols());
  both << a, v;
  return rank(both) == rank(a);
}

/// Some x with a x = b, or empty if the system is inconsistent.
template <typename DA, typename DB>
std::optional<Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, 1>> solve(const Eigen::MatrixBase<DA>& a,
                                                                             const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto e = rref(aug);
  Eigen::Matrix<S, Eigen::Dynamic, 1> x = Eigen::Matrix<S, Eigen::Dynamic, 1>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

/// Columns of a that are pivots of its echelon form: a basis of its span.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> column_basis(
    const Eigen::MatrixBase<Derived>& a) {
  auto e = rref(a);
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(),
                                                                              static_cast<Eigen::Index>(e.pivots.size()));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = a.col(e.pivots[i]);
  return out;
}

/// Reduced row echelon basis of the span (as rows), so equal spans compare equal entrywise.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> canonical_rows(
    const Eigen::MatrixBase<Derived>& rows) {
  auto e = rref(rows);
  return e.reduced.topRows(static_cast<Eigen::Index>(e.pivots.size()));
}

inline Matrix zeros(Eigen::Index r, Eigen::Index c) { return Matrix::Zero(r, c); }

/// Coerce every entry into the given field (literal zeros become typed).
inline Matrix in_field(const Matrix& m, const Field& f) {
  return m.unaryExpr([&](const Scalar& s) { return s.in(f); });
}

}  // namespace bimodulus
