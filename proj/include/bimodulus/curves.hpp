#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bimodulus/multipoly.hpp"
#include "bimodulus/quartic.hpp"

namespace bimodulus {

enum class KodairaType { I0, I1, I2, II, III, NonReduced };
std::string to_string(KodairaType t);
KodairaType kodaira_from_string(const std::string& s);
inline bool is_integral(KodairaType t) {
  return t == KodairaType::I0 || t == KodairaType::I1 || t == KodairaType::II;
}
inline bool is_reducible(KodairaType t) { return t == KodairaType::I2 || t == KodairaType::III; }

/// The two rulings: the u-fiber over [c0:c1] is {x = c}, the v-fiber is {y = c}.
enum class Axis { U, V };

/// Point of (P^1)^n as 2 homogeneous coordinates per block, each block
/// scaled so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(std::vector<Scalar> coords);
  const std::vector<Scalar>& coords() const { return c_; }
  int blocks() const { return static_cast<int>(c_.size() / 2); }
  std::array<Scalar, 2> block(int b) const { return {c_[2 * b], c_[2 * b + 1]}; }
  std::string to_string() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  std::vector<Scalar> c_;
};

/// Points of P^1 over a finite field: [1:t] for t in enumeration order, then [0:1].
std::vector<std::array<Scalar, 2>> projective_line(const Field& f);

/// Bidegree (2,2) curve with no fiber component.
class CurveW {
 public:
  const MultiPoly& form() const { return f_; }
  const Field& field() const { return field_; }
  KodairaType type() const { return type_; }
  bool contains(const ProjPoint& p) const { return f_(p.coords()).is_zero(); }

 private:
  friend CurveW validate_support(const MultiPoly& f);
  MultiPoly f_;
  Field field_ = Field::rational();
  KodairaType type_ = KodairaType::I0;
};

inline bool same_curve(const CurveW& a, const CurveW& b) { return a.form() == b.form(); }

/// Accepts f iff it is a nonzero (2,2) form with no (1,0) or (0,1) factor.
CurveW validate_support(const MultiPoly& f);
KodairaType classify_kodaira(const CurveW& w);

struct SingularLocus {
  bool non_reduced = false;  // singular along the whole support
  std::vector<ProjPoint> points;
};
SingularLocus singular_points(const CurveW& w);
bool is_singular_point(const CurveW& w, const ProjPoint& p);

/// g of bidegree (1,1) with f = c g^2, if one exists.
std::optional<MultiPoly> is_square(const MultiPoly& f);
/// (g, h) of bidegree (1,1) with f = g h, over the base field or its
/// quadratic extension (rational factorizations only over Q).
std::optional<std::pair<MultiPoly, MultiPoly>> factor_11(const MultiPoly& f);
/// f / g for g of bidegree (1,1), or empty if g does not divide f.
std::optional<MultiPoly> divide_by(const MultiPoly& f, const MultiPoly& g);

/// f restricted to a fiber, as a binary quadratic in the other ruling.
BinaryForm fiber_restriction(const MultiPoly& f, Axis axis, const std::array<Scalar, 2>& c);

struct FiberPoint {
  ProjPoint point;
  int multiplicity;
};
/// Intersection with the fiber over c: points over the field or its quadratic
/// extension with multiplicities summing to 2 (fewer entries if the roots lie
/// further out).
std::vector<FiberPoint> fiber_points(const CurveW& w, Axis axis, const std::array<Scalar, 2>& c);

/// j of a smooth W from the u-projection branch quartic, checked against the v-projection.
Scalar j_invariant_curve(const CurveW& w);
/// Branch quartic of the projection to the given ruling.
BinaryQuartic branch_quartic(const CurveW& w, Axis axis);

/// All points over F_q, q = p^k (k = 1 or 2), found fiber by fiber.
std::vector<ProjPoint> enumerate_points(const CurveW& w, int ext_degree);
/// Same set by testing every one of the (q+1)^2 candidates.
std::vector<ProjPoint> enumerate_points_bruteforce(const CurveW& w, int ext_degree);

/// (PGL_2)^2 action: f(g x, h y).
MultiPoly transform_form(const MultiPoly& f, const Mat2& g, const Mat2& h);
/// Image of a point under (g^-1, h^-1), so that transform_form(f, g, h) vanishes on it iff f vanishes on p.
ProjPoint transform_point(const ProjPoint& p, const Mat2& g, const Mat2& h);
Mat2 inverse(const Mat2& g);

// ---- complete intersections of two (1,1,1) divisors in (P^1)^3 ----

class CIcurve {
 public:
  const MultiPoly& f1() const { return f1_; }
  const MultiPoly& f2() const { return f2_; }
  const Field& field() const { return field_; }

 private:
  friend CIcurve make_ci(const MultiPoly& f1, const MultiPoly& f2);
  MultiPoly f1_, f2_;
  Field field_ = Field::rational();
};

CIcurve make_ci(const MultiPoly& f1, const MultiPoly& f2);
/// Projection forgetting one block: the resultant as a validated (2,2) curve.
CurveW ci_eliminate(const CIcurve& c, int block);

struct CISmoothness {
  bool smooth = false;
  std::optional<Scalar> j;
  std::string reason;
};
CISmoothness ci_smooth_j(const CIcurve& c);
std::vector<ProjPoint> enumerate_points(const CIcurve& c, int ext_degree);

}  // namespace bimodulus
