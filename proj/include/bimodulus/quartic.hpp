#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bimodulus/upoly.hpp"

namespace bimodulus {

/// Degree-4 binary form a0 x0^4 + a1 x0^3 x1 + ... + a4 x1^4.
using BinaryQuartic = BinaryForm;

struct QuarticInvariants {
  Scalar I;  // 12 a0 a4 - 3 a1 a3 + a2^2
  Scalar J;  // 72 a0 a2 a4 + 9 a1 a2 a3 - 27 a0 a3^2 - 27 a4 a1^2 - 2 a2^3
};

QuarticInvariants quartic_invariants(const BinaryQuartic& q);
/// 4 I^3 - J^2 (27 times the discriminant).
Scalar quartic_discriminant(const BinaryQuartic& q);
/// j = 6912 I^3 / (4 I^3 - J^2). Throws DomainError on a repeated root.
Scalar j_from_quartic(const BinaryQuartic& q);

/// Cross-ratio (r1,r2;r3,r4) of four distinct projective points.
Scalar cross_ratio(const std::array<std::array<Scalar, 2>, 4>& r);
/// 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
Scalar j_from_lambda(const Scalar& lambda);
/// j computed from the four roots of q, found in q's field or its quadratic
/// extension; empty if q does not split there.
std::optional<Scalar> j_by_cross_ratio(const BinaryQuartic& q);

/// The constant c with j = c I^3 / (4 I^3 - J^2), recovered from the
/// harmonic configuration and the cross-ratio formula over the given field.
Scalar calibrate_j_constant(const Field& f);

}  // namespace bimodulus
