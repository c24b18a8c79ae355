#include "bimodulus/nonreduced.hpp"

#include <cstdlib>

namespace bimodulus {

NRCocycle operator*(const NRCocycle& a, const NRCocycle& b) {
  // u^2 = 0, so the u-parts add.
  NRCocycle out{a.k + b.k, a.h};
  for (const auto& [e, c] : b.h) out.h[e] = out.h.count(e) ? out.h[e] + c : c;
  return out;
}

NRCocycle nr_cocycle(const NRLineBundle& L) {
  // v*O(1): z.  u*O(1): z - u = z (1 - z^-1 u).  L_a: 1 + a z v = 1 + a z^-1 u.
  NRCocycle v1{1, {}};
  NRCocycle u1{1, {{-1, Scalar(-1)}}};
  NRCocycle u1inv{-1, {{-1, Scalar(1)}}};
  NRCocycle v1inv{-1, {}};
  NRCocycle out{0, {{-1, L.a}}};
  for (int i = 0; i < std::abs(L.k_u); ++i) out = out * (L.k_u > 0 ? u1 : u1inv);
  for (int i = 0; i < std::abs(L.k_v); ++i) out = out * (L.k_v > 0 ? v1 : v1inv);
  return out;
}

std::pair<int, Scalar> nr_pic_coord(const NRCocycle& c) {
  auto it = c.h.find(-1);
  return {c.k, it == c.h.end() ? Scalar(0) : it->second};
}

std::pair<int, Scalar> nr_pic_coord(const NRLineBundle& L) { return nr_pic_coord(nr_cocycle(L)); }

bool nr_is_v_pullback(const NRLineBundle& L) { return nr_pic_coord(L).second.is_zero(); }

namespace {

// Degree-e piece: sources f0 z^e, f1 z^(e-1) u, g0 w^(k-e), g1 w^(k-e-1) v;
// targets z^e and z^(e-1) u of the overlap.
std::pair<int, int> graded_piece(int e, int k, const Scalar& astar, int n0, int ninf) {
  std::vector<std::array<Scalar, 2>> cols;
  if (e >= n0) cols.push_back({Scalar(1), Scalar(0)});
  if (e >= 1) cols.push_back({Scalar(0), Scalar(1)});
  if (k - e >= ninf) cols.push_back({Scalar(-1), -astar});
  if (k - e - 1 >= 0) cols.push_back({Scalar(0), Scalar(-1)});
  Matrix m(2, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    m(0, static_cast<Eigen::Index>(j)) = cols[j][0];
    m(1, static_cast<Eigen::Index>(j)) = cols[j][1];
  }
  const int r = cols.empty() ? 0 : static_cast<int>(rank(m));
  return {static_cast<int>(cols.size()) - r, 2 - r};
}

}  // namespace

std::pair<int, int> nr_cech(const NRSheaf& s) {
  if (s.n0 < 0 || s.n_inf < 0) throw DomainError("divisor multiplicities must be nonnegative");
  auto [k, astar] = nr_pic_coord(s.L);
  const int bound = 2 * (std::abs(s.L.k_u) + std::abs(s.L.k_v)) + 8 + s.n0 + s.n_inf;
  int h0 = 0, h1 = 0;
  for (int e = -bound; e <= bound; ++e) {
    auto [ker, cok] = graded_piece(e, k, astar, s.n0, s.n_inf);
    h0 += ker;
    h1 += cok;
  }
  for (int t = 1; t <= 4; ++t)
    for (int e : {bound + t, -bound - t}) {
      auto [ker, cok] = graded_piece(e, k, astar, s.n0, s.n_inf);
      if (ker || cok) throw InternalError("Cech truncation failed to stabilize");
    }
  check_internal(h0 - h1 == s.chi(), "Cech Euler characteristic disagrees with deg L - deg D");
  return {h0, h1};
}

std::pair<int, int> nr_cech(const NRLineBundle& L) { return nr_cech(NRSheaf{L, 0, 0}); }

std::pair<int, int> nr_pushforward_split(const NRSheaf& s) {
  const int J = std::abs(s.L.k_u) + std::abs(s.L.k_v) + s.degree_D() + 6;
  std::map<int, int> h;
  for (int j = -J; j <= J; ++j) {
    NRSheaf t = s;
    t.L.k_v += j;
    h[j] = nr_cech(t).first;
  }
  auto first_positive = [&](auto fn) {
    for (int j = -J; j <= J; ++j)
      if (fn(j) > 0) return j;
    throw InternalError("pushforward twist range too small");
  };
  const int b = -first_positive([&](int j) { return h[j]; });
  const int a = -first_positive([&](int j) { return h[j] - std::max(b + j + 1, 0); });
  for (int j = -J; j <= J; ++j)
    check_internal(h[j] == std::max(a + j + 1, 0) + std::max(b + j + 1, 0), "h0 of twists is not of rank-2 shape");
  check_internal(a + b + 2 == s.chi(), "splitting violates a + b + 2 = chi");
  return {a, b};
}

std::pair<int, int> nr_pushforward_split(const NRLineBundle& L) { return nr_pushforward_split(NRSheaf{L, 0, 0}); }

MultiPoly double_diagonal(const Field& f) {
  MultiPoly d = MultiPoly::zero({1, 1});
  d.set_coeff({0, 1}, f.one());
  d.set_coeff({1, 0}, -f.one());
  return d * d;
}

}  // namespace bimodulus
