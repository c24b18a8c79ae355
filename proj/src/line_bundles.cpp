#include "bimodulus/line_bundles.hpp"

#include <algorithm>
#include <map>

namespace bimodulus {

namespace {


bool contains_point(const std::vector<ProjPoint>& v, const ProjPoint& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

ProjPoint in_field(const ProjPoint& p, const Field& f) {
  std::vector<Scalar> c;
  for (const auto& s : p.coords()) c.push_back(s.in(f));
  return ProjPoint(c);
}

MultiPoly constant_one(const Field& f) { return MultiPoly::monomial({0, 0}, {0, 0}, f.one()); }

// c1 x0 - c0 x1 in the block of the axis: vanishes exactly on the fiber over c.
MultiPoly fiber_form(Axis axis, const std::array<Scalar, 2>& c) {
  if (axis == Axis::U) {
    MultiPoly l = MultiPoly::zero({1, 0});
    l.set_coeff({0, 0}, c[1]);
    l.set_coeff({1, 0}, -c[0]);
    return l;
  }
  MultiPoly l = MultiPoly::zero({0, 1});
  l.set_coeff({0, 0}, c[1]);
  l.set_coeff({0, 1}, -c[0]);
  return l;
}

std::vector<std::array<Scalar, 2>> fiber_candidates(const Field& f) {
  if (f.is_finite()) return projective_line(f);
  std::vector<std::array<Scalar, 2>> out;
  out.push_back({f.one(), f.zero()});
  for (int t = 1; t <= 60; ++t) {
    out.push_back({f.one(), f.from_int(t)});
    out.push_back({f.one(), f.from_int(-t)});
  }
  out.push_back({f.zero(), f.one()});
  return out;
}

// The two points of a fiber, if it splits into distinct smooth rational points.
std::optional<std::array<ProjPoint, 2>> split_fiber(const CurveW& w, Axis axis, const std::array<Scalar, 2>& c) {
  BinaryForm q = fiber_restriction(w.form(), axis, c);
  if (q.is_zero()) return std::nullopt;
  auto roots = form_roots(q);
  if (roots.size() != 2) return std::nullopt;
  std::array<ProjPoint, 2> pts;
  for (int i = 0; i < 2; ++i) {
    const auto& r = roots[static_cast<std::size_t>(i)];
    pts[static_cast<std::size_t>(i)] =
        axis == Axis::U ? ProjPoint({c[0], c[1], r[0], r[1]}) : ProjPoint({r[0], r[1], c[0], c[1]});
    if (is_singular_point(w, pts[static_cast<std::size_t>(i)])) return std::nullopt;
  }
  return pts;
}

// Basis of H^1(P^1 x P^1, O(a,b)) as Laurent exponent vectors (x0, x1, y0, y1).
std::vector<std::array<int, 4>> h1_basis(int a, int b) {
  std::vector<std::array<int, 4>> out;
  if (a >= 0 && b <= -2)
    for (int i = 0; i <= a; ++i)
      for (int r = 1; r <= -b - 1; ++r) out.push_back({a - i, i, -r, b + r});
  if (a <= -2 && b >= 0)
    for (int r = 1; r <= -a - 1; ++r)
      for (int j = 0; j <= b; ++j) out.push_back({-r, a + r, b - j, j});
  return out;
}

}  // namespace

LineBundle lb_make(const CurveW& w, int m, int n, std::vector<ProjPoint> minus, std::vector<ProjPoint> plus) {
  if (w.type() == KodairaType::NonReduced && (!minus.empty() || !plus.empty()))
    throw DomainError("point conditions need a reduced W");
  LineBundle L;
  L.w_ = w;
  L.m_ = m;
  L.n_ = n;
  auto check = [&](std::vector<ProjPoint>& pts) {
    for (auto& p : pts) {
      if (p.blocks() != 2) throw DomainError("point of P1 x P1 expected");
      p = in_field(p, w.field());
      if (!w.contains(p)) throw DomainError("point not on W: " + p.to_string());
      if (is_singular_point(w, p)) throw DomainError("point on singular locus: " + p.to_string());
    }
  };
  check(minus);
  check(plus);
  for (auto it = plus.begin(); it != plus.end();) {
    auto hit = std::find(minus.begin(), minus.end(), *it);
    if (hit != minus.end()) {
      minus.erase(hit);
      it = plus.erase(it);
    } else {
      ++it;
    }
  }
  for (const auto* v : {&minus, &plus})
    for (std::size_t i = 0; i < v->size(); ++i)
      for (std::size_t j = i + 1; j < v->size(); ++j)
        if ((*v)[i] == (*v)[j]) throw DomainError("repeated points are unsupported: " + (*v)[i].to_string());
  L.minus_ = std::move(minus);
  L.plus_ = std::move(plus);
  return L;
}

bool lb_in_normal_range(int m, int n) { return !((m <= 0 && n >= 2) || (m >= 2 && n <= 0)); }

namespace {

// `avoid`: points of other bundles the new fiber must miss.
std::pair<LineBundle, MultiPoly> raise_avoiding(const LineBundle& L, Axis axis, const std::vector<ProjPoint>& avoid) {
  const CurveW& w = L.curve();
  if (w.type() == KodairaType::NonReduced) throw DomainError("cannot raise on non-reduced W");
  for (const auto& c : fiber_candidates(w.field())) {
    auto pts = split_fiber(w, axis, c);
    if (!pts) continue;
    if (contains_point(L.minus(), (*pts)[0]) || contains_point(L.minus(), (*pts)[1]) ||
        contains_point(L.plus(), (*pts)[0]) || contains_point(L.plus(), (*pts)[1]) ||
        contains_point(avoid, (*pts)[0]) || contains_point(avoid, (*pts)[1]))
      continue;
    auto minus = L.minus();
    minus.push_back((*pts)[0]);
    minus.push_back((*pts)[1]);
    int m = L.m() + (axis == Axis::U ? 1 : 0);
    int n = L.n() + (axis == Axis::V ? 1 : 0);
    return {lb_make(w, m, n, minus, L.plus()), fiber_form(axis, c)};
  }
  throw DomainError("no split fiber with fresh smooth points over " + w.field().describe() + "; extend field");
}

std::pair<LineBundle, MultiPoly> normalize_avoiding(const LineBundle& L0, const std::vector<ProjPoint>& avoid) {
  const CurveW& w = L0.curve();
  LineBundle L = L0;
  // O(+P) = O(1,0)(-P') with P + P' the fiber through P.
  while (!L.plus().empty()) {
    const ProjPoint P = L.plus().front();
    bool done = false;
    for (Axis axis : {Axis::U, Axis::V}) {
      auto c = P.block(axis == Axis::U ? 0 : 1);
      auto pts = split_fiber(w, axis, c);
      if (!pts) continue;
      const ProjPoint& other = (*pts)[0] == P ? (*pts)[1] : (*pts)[0];
      if (contains_point(L.minus(), other) || contains_point(avoid, other)) continue;
      auto minus = L.minus();
      minus.push_back(other);
      auto plus = std::vector<ProjPoint>(L.plus().begin() + 1, L.plus().end());
      L = lb_make(w, L.m() + (axis == Axis::U), L.n() + (axis == Axis::V), minus, plus);
      done = true;
      break;
    }
    if (!done) throw DomainError("representation not normalizable: cannot clear the pole at " + P.to_string());
  }
  MultiPoly mult = constant_one(w.field());
  while (!lb_in_normal_range(L.m(), L.n())) {
    if (w.type() == KodairaType::NonReduced) throw DomainError("representation not normalizable on non-reduced W");
    Axis axis = (L.m() <= 0 && L.n() >= 2) ? Axis::U : Axis::V;
    auto [R, l] = raise_avoiding(L, axis, avoid);
    L = R;
    mult = mult * l;
  }
  return {L, mult};
}

}  // namespace

std::pair<LineBundle, MultiPoly> lb_raise_with_multiplier(const LineBundle& L, Axis axis) {
  return raise_avoiding(L, axis, {});
}

LineBundle lb_raise(const LineBundle& L, Axis axis) { return lb_raise_with_multiplier(L, axis).first; }

std::pair<LineBundle, MultiPoly> lb_normalize(const LineBundle& L) { return normalize_avoiding(L, {}); }

LineBundle lb_tensor(const LineBundle& a, const LineBundle& b) {
  if (!same_curve(a.curve(), b.curve())) throw DomainError("bundles live on different curves");
  auto minus = a.minus();
  minus.insert(minus.end(), b.minus().begin(), b.minus().end());
  auto plus = a.plus();
  plus.insert(plus.end(), b.plus().begin(), b.plus().end());
  return lb_make(a.curve(), a.m() + b.m(), a.n() + b.n(), minus, plus);
}

LineBundle lb_inverse(const LineBundle& L) { return lb_make(L.curve(), -L.m(), -L.n(), L.plus(), L.minus()); }

LineBundle lb_twist(const LineBundle& L, int a, int b) {
  return lb_make(L.curve(), L.m() + a, L.n() + b, L.minus(), L.plus());
}

MultiPoly SectionSpace::section(Eigen::Index i) const {
  MultiPoly g = MultiPoly::zero({rep.m(), rep.n()});
  g.coeffs() = basis.col(i);
  return g;
}

std::optional<Vector> SectionSpace::coordinates(const MultiPoly& g) const {
  if (g.degree() != std::vector<int>{rep.m(), rep.n()}) throw DomainError("section of the wrong bidegree");
  Matrix all(relations.rows(), relations.cols() + basis.cols());
  all << relations, basis;
  auto x = solve(all, g.coeffs());
  if (!x) return std::nullopt;
  return Vector(x->tail(basis.cols()));
}

SectionSpace lb_sections(const LineBundle& L) {
  auto [rep, mult] = lb_normalize(L);
  (void)mult;
  const Field& fld = rep.curve().field();
  const std::vector<int> deg{rep.m(), rep.n()};
  const Eigen::Index N = component_dim(deg);
  SectionSpace S{rep, Matrix(N, 0), Matrix(N, 0)};
  if (N == 0) return S;

  Matrix K;
  if (rep.minus().empty()) {
    K = Matrix::Identity(N, N);
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = 0; j < N; ++j) K(i, j) = K(i, j).in(fld);
  } else {
    Matrix E(static_cast<Eigen::Index>(rep.minus().size()), N);
    MultiPoly probe = MultiPoly::zero(deg);
    for (Eigen::Index j = 0; j < N; ++j) {
      MultiPoly mono = MultiPoly::monomial(deg, probe.tuple_of(j), fld.one());
      for (std::size_t i = 0; i < rep.minus().size(); ++i)
        E(static_cast<Eigen::Index>(i), j) = mono(rep.minus()[i].coords());
    }
    K = kernel_basis(E);
  }
  Matrix R = component_dim({rep.m() - 2, rep.n() - 2}) > 0
                 ? multiplication_matrix(rep.curve().form(), {rep.m() - 2, rep.n() - 2})
                 : Matrix(N, 0);
  Matrix all(N, R.cols() + K.cols());
  all << R, K;
  auto ech = rref(all);
  std::vector<Eigen::Index> keep;
  for (auto p : ech.pivots)
    if (p >= R.cols()) keep.push_back(p - R.cols());
  check_internal(static_cast<Eigen::Index>(ech.pivots.size()) - static_cast<Eigen::Index>(keep.size()) == R.cols(),
                 "multiplication by f is not injective");
  S.relations = R;
  S.basis = Matrix(N, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) S.basis.col(static_cast<Eigen::Index>(i)) = K.col(keep[i]);

  const int h0 = static_cast<int>(S.dim());
  const int deg_L = rep.degree();
  check_internal(h0 >= std::max(deg_L, 0), "section count below the Riemann-Roch bound");
  if (is_integral(rep.curve().type())) {
    if (deg_L >= 1) check_internal(h0 == deg_L, "special position: h0 exceeds the degree on integral W");
    if (deg_L < 0) check_internal(h0 == 0, "special position: sections of negative degree");
    if (deg_L == 0) check_internal(h0 <= 1, "special position: degree-0 bundle with h0 > 1");
  }
  return S;
}

int ambient_restriction_h0(const MultiPoly& f, int m, int n) {
  if (f.degree() != std::vector<int>{2, 2}) throw DomainError("W must be a form of bidegree (2,2)");
  int h0 = static_cast<int>(component_dim({m, n}) - component_dim({m - 2, n - 2}));
  auto src = h1_basis(m - 2, n - 2);
  if (src.empty()) return h0;
  auto tgt = h1_basis(m, n);
  std::map<std::array<int, 4>, Eigen::Index> index;
  for (std::size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = static_cast<Eigen::Index>(i);
  Matrix M = Matrix::Zero(static_cast<Eigen::Index>(tgt.size()), static_cast<Eigen::Index>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j)
    for (Eigen::Index t = 0; t < f.size(); ++t) {
      if (f.coeffs()(t).is_zero()) continue;
      auto e = f.exponent_of(t);
      std::array<int, 4> s = src[j];
      for (int k = 0; k < 4; ++k) s[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k)];
      auto it = index.find(s);
      if (it != index.end()) M(it->second, static_cast<Eigen::Index>(j)) += f.coeffs()(t);
    }
  return h0 + static_cast<int>(src.size() - static_cast<std::size_t>(rank(M)));
}

int lb_h0(const LineBundle& L) {
  if (L.minus().empty() && L.plus().empty()) return ambient_restriction_h0(L.curve().form(), L.m(), L.n());
  return static_cast<int>(lb_sections(L).dim());
}

int lb_h1(const LineBundle& L) {
  int h1 = lb_h0(L) - L.degree();
  check_internal(h1 >= 0, "h0 below the degree");
  // Serre duality with trivial dualizing sheaf.
  std::optional<int> dual;
  try {
    dual = lb_h0(lb_inverse(L));
  } catch (const DomainError&) {
  }
  if (dual) check_internal(*dual == h1, "h1 disagrees with h0 of the inverse bundle");
  return h1;
}

Matrix lb_mult_map(const std::vector<LineBundle>& factors) {
  if (factors.empty()) throw DomainError("empty product");
  // Each factor's representative must miss the points of the others.
  std::vector<ProjPoint> taken;
  for (const auto& L : factors) {
    taken.insert(taken.end(), L.minus().begin(), L.minus().end());
    taken.insert(taken.end(), L.plus().begin(), L.plus().end());
  }
  std::vector<SectionSpace> spaces;
  for (const auto& L : factors) {
    LineBundle rep = normalize_avoiding(L, taken).first;
    for (const auto& p : rep.minus())
      if (!contains_point(L.minus(), p)) taken.push_back(p);
    spaces.push_back(lb_sections(rep));
    check_internal(spaces.back().rep.minus().size() == rep.minus().size(), "factor renormalized");
  }
  LineBundle prod = spaces[0].rep;
  for (std::size_t i = 1; i < spaces.size(); ++i) prod = lb_tensor(prod, spaces[i].rep);
  auto [target_rep, mult] = lb_normalize(prod);
  SectionSpace target = lb_sections(target_rep);
  check_internal(target.rep.m() == target_rep.m() && target.rep.n() == target_rep.n(), "target renormalized");

  Eigen::Index cols = 1;
  for (const auto& s : spaces) cols *= s.dim();
  Matrix out(target.dim(), cols);
  std::vector<Eigen::Index> idx(spaces.size(), 0);
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Index r = c;
    for (std::size_t k = spaces.size(); k-- > 0;) {
      idx[k] = r % spaces[k].dim();
      r /= spaces[k].dim();
    }
    MultiPoly g = mult;
    for (std::size_t k = 0; k < spaces.size(); ++k) g = g * spaces[k].section(idx[k]);
    auto coords = target.coordinates(g);
    check_internal(coords.has_value(), "product of sections outside the target section space");
    out.col(c) = *coords;
  }
  return out;
}

Matrix lb_mult_map(const LineBundle& a, const LineBundle& b) { return lb_mult_map(std::vector<LineBundle>{a, b}); }

std::optional<std::pair<int, int>> component_degrees(const LineBundle& L) {
  if (!is_reducible(L.curve().type())) return std::nullopt;
  auto gh = factor_11(L.curve().form());
  check_internal(gh.has_value(), "reducible W without a (1,1) factorization");
  int d0 = L.m() + L.n(), d1 = L.m() + L.n();
  for (const auto& p : L.minus()) (gh->first(p.coords()).is_zero() ? d0 : d1) -= 1;
  for (const auto& p : L.plus()) (gh->first(p.coords()).is_zero() ? d0 : d1) += 1;
  return std::make_pair(d0, d1);
}

bool lb_isomorphic(const LineBundle& a, const LineBundle& b) {
  if (!same_curve(a.curve(), b.curve())) throw DomainError("bundles live on different curves");
  if (a.degree() != b.degree()) return false;
  if (component_degrees(a) != component_degrees(b)) return false;
  return lb_h0(lb_tensor(a, lb_inverse(b))) == 1;
}

std::array<int, 3> extpair_dims(const CurveW& w, int m, int n) {
  if (w.type() == KodairaType::NonReduced) throw DomainError("W must be reduced");
  (void)m;
  (void)n;
  // End(U) = O_W for a line bundle, and the normal bundle is O(2,2)|_W.
  const int h0_O = ambient_restriction_h0(w.form(), 0, 0);
  const int h1_O = h0_O;
  const int h0_N = ambient_restriction_h0(w.form(), 2, 2);
  const int h1_N = h0_N - 8;
  return {h0_O, h1_O + h0_N, h1_N};
}

}  // namespace bimodulus
