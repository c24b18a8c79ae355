#pragma once

#include <map>
#include <utility>

#include "bimodulus/multipoly.hpp"

namespace bimodulus {

// Model of W = 2*Delta: charts k[z,u]/(u^2) and k[w,v]/(v^2) glued along
// w = 1/z, u = z^2 v. On the first chart y = z and x = z - u, so v*O(1) has
// transition z and u*O(1) has transition z - u. A section is a pair (f, g)
// with f = T g on the overlap.

/// u*O(k_u) (x) v*O(k_v) (x) L_a, where L_a is glued by 1 + a z v.
struct NRLineBundle {
  int k_u = 0;
  int k_v = 0;
  Scalar a = Scalar(0);
  int degree() const { return 2 * (k_u + k_v); }
};

/// Kernel of L -> O_D with D = n0*[z=0] + n_inf*[w=0] on W_red; locally (t^n, eps).
struct NRSheaf {
  NRLineBundle L;
  int n0 = 0;
  int n_inf = 0;
  int degree_D() const { return n0 + n_inf; }
  int chi() const { return L.degree() - degree_D(); }
};

/// Transition z^k (1 + h(z) u) with h a Laurent polynomial.
struct NRCocycle {
  int k = 0;
  std::map<int, Scalar> h;
};
NRCocycle operator*(const NRCocycle& a, const NRCocycle& b);
NRCocycle nr_cocycle(const NRLineBundle& L);
/// (degree on W_red, class in H^1(O(-2)) ~ k): the coefficient of z^-1 in h
/// survives; the rest is a coboundary.
std::pair<int, Scalar> nr_pic_coord(const NRCocycle& c);
std::pair<int, Scalar> nr_pic_coord(const NRLineBundle& L);
/// v-pullback iff the gluing coordinate vanishes.
bool nr_is_v_pullback(const NRLineBundle& L);

/// (h0, h1) from the graded two-chart Cech complex.
std::pair<int, int> nr_cech(const NRSheaf& s);
std::pair<int, int> nr_cech(const NRLineBundle& L);
/// Splitting (a, b), a <= b, of v_* from h0 of v-twists.
std::pair<int, int> nr_pushforward_split(const NRSheaf& s);
std::pair<int, int> nr_pushforward_split(const NRLineBundle& L);

/// (x0 y1 - x1 y0)^2 over the given field.
MultiPoly double_diagonal(const Field& f);

}  // namespace bimodulus
