#include "bimodulus/quartic.hpp"

namespace bimodulus {

namespace {

// Untyped literal coefficients adopt the field of the others.
BinaryQuartic typed(const BinaryQuartic& q) {
  auto f = common_field(q.coeffs());
  if (!f) return q;
  std::vector<Scalar> c;
  for (const auto& s : q.coeffs()) c.push_back(s.in(*f));
  return BinaryForm(q.degree(), c);
}

}  // namespace

QuarticInvariants quartic_invariants(const BinaryQuartic& qin) {
  if (qin.degree() != 4) throw DomainError("not a binary quartic");
  const BinaryQuartic q = typed(qin);
  const Scalar a0 = q.coeff(0), a1 = q.coeff(1), a2 = q.coeff(2), a3 = q.coeff(3), a4 = q.coeff(4);
  Scalar I = Scalar(12) * a0 * a4 - Scalar(3) * a1 * a3 + a2 * a2;
  Scalar J = Scalar(72) * a0 * a2 * a4 + Scalar(9) * a1 * a2 * a3 - Scalar(27) * a0 * a3 * a3 -
             Scalar(27) * a4 * a1 * a1 - Scalar(2) * a2 * a2 * a2;
  return {I, J};
}

Scalar quartic_discriminant(const BinaryQuartic& q) {
  auto [I, J] = quartic_invariants(q);
  return Scalar(4) * I * I * I - J * J;
}

Scalar j_from_quartic(const BinaryQuartic& q) {
  auto [I, J] = quartic_invariants(q);
  Scalar disc = Scalar(4) * I * I * I - J * J;
  if (disc.is_zero()) throw DomainError("singular, j undefined");
  return Scalar(6912) * I * I * I / disc;
}

Scalar cross_ratio(const std::array<std::array<Scalar, 2>, 4>& r) {
  auto br = [&](int i, int j) { return r[i][0] * r[j][1] - r[i][1] * r[j][0]; };
  Scalar den = br(0, 3) * br(1, 2);
  if (den.is_zero()) throw DomainError("cross-ratio of coincident points");
  return br(0, 2) * br(1, 3) / den;
}

Scalar j_from_lambda(const Scalar& l) {
  Scalar num = l * l - l + Scalar(1);
  Scalar den = l * l * (l - Scalar(1)) * (l - Scalar(1));
  if (den.is_zero()) throw DomainError("degenerate cross-ratio");
  return Scalar(256) * num * num * num / den;
}

std::optional<Scalar> j_by_cross_ratio(const BinaryQuartic& qin) {
  const BinaryQuartic q = typed(qin);
  if (!root_multiplicities(q).empty() && root_multiplicities(q) != std::vector<int>{1, 1, 1, 1})
    throw DomainError("singular, j undefined");
  auto roots = form_roots(q);
  if (roots.size() != 4) {
    auto f = common_field(q.coeffs());
    if (!f || f->kind() != Field::Kind::Prime) return std::nullopt;
    Field ext = f->extension();
    std::vector<Scalar> c;
    for (const auto& s : q.coeffs()) c.push_back(s.in(ext));
    roots = form_roots(BinaryForm(4, c));
    if (roots.size() != 4) return std::nullopt;
  }
  Scalar j = j_from_lambda(cross_ratio({roots[0], roots[1], roots[2], roots[3]}));
  return j;
}

Scalar calibrate_j_constant(const Field& f) {
  // x0 x1 (x1 - x0)(x1 + x0) = -x0^3 x1 + x0 x1^3: roots 0, infinity, 1, -1.
  BinaryQuartic h(4, {f.zero(), f.from_int(-1), f.zero(), f.one(), f.zero()});
  auto [I, J] = quartic_invariants(h);
  Scalar oracle = j_from_lambda(cross_ratio({{{f.one(), f.zero()}, {f.zero(), f.one()},
                                               {f.one(), f.one()}, {f.one(), f.from_int(-1)}}}));
  return oracle * (Scalar(4) * I * I * I - J * J) / (I * I * I);
}

}  // namespace bimodulus
