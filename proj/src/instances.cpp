#include "bimodulus/instances.hpp"

#include <algorithm>

namespace bimodulus {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

[[noreturn]] void exhausted(const std::string& what) {
  throw DomainError("retry budget exhausted while drawing " + what);
}

// Affine chart s = x01/x00, t = x11/x10: coefficient of s^i t^j.
MultiPoly affine_form(const std::array<std::array<Scalar, 3>, 3>& c) {
  MultiPoly f = MultiPoly::zero({2, 2});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f.set_coeff({i, j}, c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return f;
}

// Singular at s = t = 0 with the given quadratic part; the cubic and quartic terms are random.
MultiPoly singular_at_origin(const Field& f, std::mt19937_64& rng, const Scalar& c20, const Scalar& c11,
                             const Scalar& c02) {
  std::array<std::array<Scalar, 3>, 3> c;
  for (auto& row : c)
    for (auto& x : row) x = f.random(rng);
  c[0][0] = f.zero();
  c[1][0] = f.zero();
  c[0][1] = f.zero();
  c[2][0] = c20;
  c[1][1] = c11;
  c[0][2] = c02;
  return affine_form(c);
}

std::optional<KodairaType> type_of(const MultiPoly& f) {
  try {
    return validate_support(f).type();
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// Fiber form vanishing at [c0:c1] in the given block of a (1,1) form's variables.
MultiPoly fiber_form(int block, const std::array<Scalar, 2>& c) {
  std::vector<int> deg{block == 0 ? 1 : 0, block == 0 ? 0 : 1};
  MultiPoly l = MultiPoly::zero(deg);
  std::vector<int> k0{0, 0}, k1{0, 0};
  k1[static_cast<std::size_t>(block)] = 1;
  l.set_coeff(k0, c[1]);
  l.set_coeff(k1, -c[0]);
  return l;
}

MultiPoly candidate(KodairaType t, const Field& f, std::mt19937_64& rng) {
  switch (t) {
    case KodairaType::I0: {
      MultiPoly g = MultiPoly::zero({2, 2});
      for (Eigen::Index i = 0; i < g.size(); ++i) g.coeffs()(i) = f.random(rng);
      return g;
    }
    case KodairaType::I1:
      return singular_at_origin(f, rng, f.random(rng), f.random(rng), f.random(rng));
    case KodairaType::II: {
      Scalar a = f.random(rng), b = f.random(rng);
      return singular_at_origin(f, rng, a * a, Scalar(2) * a * b, b * b);
    }
    case KodairaType::I2:
      return random_11_form(f, rng) * random_11_form(f, rng);
    case KodairaType::III: {
      MultiPoly g = random_11_form(f, rng);
      std::array<Scalar, 2> x{f.one(), f.random(rng)};
      // g(x, y) = alpha y0 + beta y1.
      Scalar alpha = g.slice(0, 0).coeff({0}) + x[1] * g.slice(0, 1).coeff({0});
      Scalar beta = g.slice(0, 0).coeff({1}) + x[1] * g.slice(0, 1).coeff({1});
      std::array<Scalar, 2> y{beta, -alpha};
      MultiPoly h = g + f.random_nonzero(rng) * (fiber_form(0, x) * fiber_form(1, y));
      return g * h;
    }
    case KodairaType::NonReduced: {
      MultiPoly g = random_11_form(f, rng);
      return g * g;
    }
  }
  throw InternalError("unknown Kodaira type");
}

}  // namespace

Mat2 random_pgl2(const Field& f, std::mt19937_64& rng) {
  for (int i = 0; i < kMaxDraws; ++i) {
    Mat2 g{{{f.random(rng), f.random(rng)}, {f.random(rng), f.random(rng)}}};
    if (!(g[0][0] * g[1][1] - g[0][1] * g[1][0]).is_zero()) return g;
  }
  exhausted("an invertible 2x2 matrix");
}

MultiPoly random_11_form(const Field& f, std::mt19937_64& rng) {
  MultiPoly g = MultiPoly::zero({1, 1});
  for (Eigen::Index i = 0; i < g.size(); ++i) g.coeffs()(i) = f.random(rng);
  return g;
}

MultiPoly random_form(KodairaType t, const Field& f, std::mt19937_64& rng) {
  for (int i = 0; i < kMaxDraws; ++i) {
    MultiPoly c = candidate(t, f, rng);
    if (type_of(c) != t) continue;
    MultiPoly moved = transform_form(c, random_pgl2(f, rng), random_pgl2(f, rng));
    if (type_of(moved) == t) return moved;
  }
  exhausted("a form of type " + to_string(t));
}

CurveW random_curve(KodairaType t, const Field& f, std::mt19937_64& rng) {
  return validate_support(random_form(t, f, rng));
}

std::vector<ProjPoint> random_smooth_points(const CurveW& w, std::size_t count, std::mt19937_64& rng) {
  if (!w.field().is_finite()) throw DomainError("random points need a finite field");
  std::vector<ProjPoint> pts;
  for (const auto& p : enumerate_points(w, 1))
    if (!is_singular_point(w, p)) pts.push_back(p);
  if (pts.size() < count) throw DomainError("not enough smooth points on W");
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(count);
  return pts;
}

LineBundle random_bundle(const CurveW& w, int degree, std::mt19937_64& rng) {
  const int m = uniform(rng, -1, 2), n = uniform(rng, -1, 2);
  const int diff = 2 * m + 2 * n - degree;
  auto pts = random_smooth_points(w, static_cast<std::size_t>(std::abs(diff)), rng);
  return diff >= 0 ? lb_make(w, m, n, pts, {}) : lb_make(w, m, n, {}, pts);
}

NRSheaf random_nr_sheaf(const Field& f, std::mt19937_64& rng) {
  NRSheaf s;
  s.L.k_u = uniform(rng, -2, 2);
  s.L.k_v = uniform(rng, -2, 2);
  s.L.a = uniform(rng, 0, 2) == 0 ? f.zero() : f.random(rng);
  s.n0 = uniform(rng, 0, 2);
  s.n_inf = uniform(rng, 0, 2);
  return s;
}

LineBundle random_admissible_u(int component, const Field& f, std::mt19937_64& rng) {
  if (component != 0 && component != 1) throw DomainError("component must be 0 or 1");
  for (int i = 0; i < kMaxDraws; ++i) {
    CurveW w = random_curve(KodairaType::I0, f, rng);
    LineBundle U = random_bundle(w, component == 0 ? 2 : 1, rng);
    try {
      phi(U);
      return U;
    } catch (const DomainError&) {
    }
  }
  exhausted("an admissible quadruple");
}

Quadruple random_quadruple(int component, const Field& f, std::mt19937_64& rng) {
  return phi(random_admissible_u(component, f, rng));
}

LineBundle random_invertible(KodairaType t, const Field& f, std::mt19937_64& rng) {
  if (t == KodairaType::NonReduced) throw DomainError("use random_nr_sheaf on the non-reduced support");
  CurveW w = random_curve(t, f, rng);
  switch (uniform(rng, 0, 5)) {
    case 0:
      return lb_make(w, 0, uniform(rng, -1, 2));
    case 1:
      return lb_make(w, 1, uniform(rng, -2, 1));
    default:
      return random_bundle(w, uniform(rng, -2, 4), rng);
  }
}

std::array<Scalar, 4> random_distinct_roots(const Field& f, std::mt19937_64& rng) {
  if (!f.is_finite() || f.size() < 4) throw DomainError("need a finite field with at least 4 elements");
  for (int i = 0; i < kMaxDraws; ++i) {
    std::array<Scalar, 4> r{f.random(rng), f.random(rng), f.random(rng), f.random(rng)};
    bool distinct = true;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (r[static_cast<std::size_t>(a)] == r[static_cast<std::size_t>(b)]) distinct = false;
    if (distinct) return r;
  }
  exhausted("distinct roots");
}

}  // namespace bimodulus
