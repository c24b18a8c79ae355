#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bimodulus/curves.hpp"

namespace bimodulus {

/// O(m,n)|_W(-sum minus + sum plus). Points are distinct smooth points of W
/// defined over the field of W. On non-reduced W only the point-free case is
/// representable.
class LineBundle {
 public:
  const CurveW& curve() const { return w_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<ProjPoint>& minus() const { return minus_; }
  const std::vector<ProjPoint>& plus() const { return plus_; }
  int degree() const {
    return 2 * m_ + 2 * n_ - static_cast<int>(minus_.size()) + static_cast<int>(plus_.size());
  }
  bool effective() const { return plus_.empty(); }

 private:
  friend LineBundle lb_make(const CurveW&, int, int, std::vector<ProjPoint>, std::vector<ProjPoint>);
  CurveW w_;
  int m_ = 0, n_ = 0;
  std::vector<ProjPoint> minus_, plus_;
};

LineBundle lb_make(const CurveW& w, int m, int n, std::vector<ProjPoint> minus = {},
                   std::vector<ProjPoint> plus = {});

/// Same class with one more fiber: (m,n) bumped on the axis, the two points of
/// a split fiber appended to the minus points. Also returns the fiber form,
/// which carries sections of L to sections of the raised representative.
std::pair<LineBundle, MultiPoly> lb_raise_with_multiplier(const LineBundle& L, Axis axis);
LineBundle lb_raise(const LineBundle& L, Axis axis);

/// Ambient restriction H^0(O(m,n)) -> H^0(O(m,n)|_W) is onto iff H^1(O(m-2,n-2)) = 0.
bool lb_in_normal_range(int m, int n);
/// Effective representative in the normal range, with the multiplier that
/// carries old representatives to new ones (1 if nothing was raised; only
/// meaningful when L was already effective).
std::pair<LineBundle, MultiPoly> lb_normalize(const LineBundle& L);

LineBundle lb_tensor(const LineBundle& a, const LineBundle& b);
LineBundle lb_inverse(const LineBundle& L);
/// Pullback twist: L tensor O(a,b)|_W.
LineBundle lb_twist(const LineBundle& L, int a, int b);

/// Sections of a normalized representative: coset representatives in the
/// ambient component of bidegree (m,n), modulo f times the (m-2,n-2) component.
struct SectionSpace {
  LineBundle rep;
  Matrix relations;  // columns spanning f * V_{m-2,n-2}
  Matrix basis;      // columns: representatives
  Eigen::Index dim() const { return basis.cols(); }
  MultiPoly section(Eigen::Index i) const;
  /// Coordinates of a form vanishing on the minus points, or empty if it does not lie in the space.
  std::optional<Vector> coordinates(const MultiPoly& g) const;
};

SectionSpace lb_sections(const LineBundle& L);
int lb_h0(const LineBundle& L);
int lb_h1(const LineBundle& L);

/// h^0 of O(m,n)|_W for any (2,2) form f, through the Kunneth description of
/// H^0 and H^1 of the ambient twists.
int ambient_restriction_h0(const MultiPoly& f, int m, int n);

/// H^0(L_1) x ... x H^0(L_k) -> H^0(L_1 ... L_k), columns in Kronecker order
/// (first factor slowest). Each factor is normalized first; the product
/// representative is raised further if needed.
Matrix lb_mult_map(const std::vector<LineBundle>& factors);
Matrix lb_mult_map(const LineBundle& a, const LineBundle& b);

/// Degrees on the two components of a reducible W (empty for integral W).
std::optional<std::pair<int, int>> component_degrees(const LineBundle& L);
bool lb_isomorphic(const LineBundle& a, const LineBundle& b);

/// Ext^i(iota_* U, iota_* U) for U = O(m,n)|_W on reduced W.
std::array<int, 3> extpair_dims(const CurveW& w, int m, int n);

}  // namespace bimodulus
