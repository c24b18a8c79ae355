#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimodulus/bimodules.hpp"
#include "bimodulus/quivers.hpp"

namespace bimodulus {

/// (W, L0, L1, L2) on a smooth W; component 0 has degrees (2,2,2), component 1 has (2,1,2).
struct Quadruple {
  CurveW w;
  LineBundle L0, L1, L2;
  int component = 0;
};

/// Empty if admissible (smooth W, expected degrees, L_i pairwise non-isomorphic).
std::optional<std::string> admissibility_problem(const Quadruple& q);
Quadruple make_quadruple(const LineBundle& L0, const LineBundle& L1, const LineBundle& L2);

/// L0 = O(0,1), L2 = O(1,0), L1 = O(-1,1) (x) U. Throws on singular W or an inadmissible image.
Quadruple phi(const LineBundle& U);
/// U = L0^-1 (x) L1 (x) L2.
LineBundle phi_inverse(const Quadruple& q);

/// Subspace of e4 kQ e1, rows in the path_basis order, row reduced.
struct RelationsIdeal {
  std::string quiver;  // "Q0" or "Q1"
  Matrix rows;
  Eigen::Index dim() const { return rows.rows(); }
};
bool same_ideal(const RelationsIdeal& a, const RelationsIdeal& b);

/// Section spaces of the quadruple on representatives whose tensor products need no raising.
struct QuadrupleSections {
  SectionSpace s0, s1, s2, target;
};
QuadrupleSections quadruple_sections(const Quadruple& q);

struct PsiResult {
  RelationsIdeal ideal;
  Matrix evaluation;  // 8 columns in path order
  int target_dim = 0;
};
PsiResult psi0(const Quadruple& q);
PsiResult psi1(const Quadruple& q);

/// Relation c_{j0 j1 j2} as the (1,1,1) form sum c X0_{j0} X1_{j1} X2_{j2}.
CIcurve relations_to_ci(const RelationsIdeal& I);

struct ClassifyingSample {
  ProjPoint source;
  ProjPoint image;
};
/// Points of W away from the minus points of the chosen representatives.
std::vector<ClassifyingSample> classifying_points(const Quadruple& q, const std::vector<ProjPoint>& points);
/// Arrow scalars of Q0 at a sample: (a1, b1, a2, b2, a3, b3) = section values.
Rep1111 induced_representation(const ClassifyingSample& s);

RelationsIdeal recover_relations_from_ci(const CIcurve& c);

struct RoundTripReport {
  std::optional<BimodDescriptor> descriptor;
  std::optional<RelationsIdeal> relations;
  bool ci_smooth = false;
  std::optional<Scalar> j_w, j_n;
  bool j_equal = false;
  bool ideals_equal = false;
  bool on_ci = false;          // every classifying image satisfies both relations
  bool injective = false;      // distinct points of W have distinct images
  bool counts_equal = false;   // #W = #N_I over F_p and F_p^2
  int theta_stable = 0;
  int theta_samples = 0;
  std::string failed_stage;    // empty on success
  std::string message;
  bool pass() const;
};
RoundTripReport roundtrip0(const LineBundle& U);

}  // namespace bimodulus
