#pragma once

#include <random>
#include <string>
#include <vector>

#include "bimodulus/bimodules.hpp"
#include "bimodulus/moduli.hpp"

namespace bimodulus {

/// Retry budget for rejection sampling.
inline constexpr int kMaxDraws = 500;

Mat2 random_pgl2(const Field& f, std::mt19937_64& rng);
MultiPoly random_11_form(const Field& f, std::mt19937_64& rng);
/// A (2,2) form of the requested Kodaira type, moved by a random (PGL2)^2 element.
MultiPoly random_form(KodairaType t, const Field& f, std::mt19937_64& rng);
CurveW random_curve(KodairaType t, const Field& f, std::mt19937_64& rng);

/// Distinct smooth F_p points of W in random order.
std::vector<ProjPoint> random_smooth_points(const CurveW& w, std::size_t count, std::mt19937_64& rng);
/// O(m,n)(-minus + plus) of the given degree with (m,n) drawn from [-1,2].
LineBundle random_bundle(const CurveW& w, int degree, std::mt19937_64& rng);

NRSheaf random_nr_sheaf(const Field& f, std::mt19937_64& rng);

/// U of degree 2 (component 0) or 1 (component 1) on a random smooth W with an admissible phi-image.
LineBundle random_admissible_u(int component, const Field& f, std::mt19937_64& rng);
Quadruple random_quadruple(int component, const Field& f, std::mt19937_64& rng);

/// Invertible U on W of the given type: random degree in [-2,4], sometimes an explicit pullback.
LineBundle random_invertible(KodairaType t, const Field& f, std::mt19937_64& rng);

/// Split quartic with four distinct roots, as binary-form roots [r_i : 1].
std::array<Scalar, 4> random_distinct_roots(const Field& f, std::mt19937_64& rng);

}  // namespace bimodulus
