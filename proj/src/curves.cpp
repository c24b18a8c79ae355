#include "bimodulus/curves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bimodulus {

std::string to_string(KodairaType t) {
  switch (t) {
    case KodairaType::I0: return "I0";
    case KodairaType::I1: return "I1";
    case KodairaType::I2: return "I2";
    case KodairaType::II: return "II";
    case KodairaType::III: return "III";
    default: return "NonReduced";
  }
}

KodairaType kodaira_from_string(const std::string& s) {
  for (auto t : {KodairaType::I0, KodairaType::I1, KodairaType::I2, KodairaType::II, KodairaType::III,
                 KodairaType::NonReduced})
    if (to_string(t) == s) return t;
  throw DomainError("unknown Kodaira type '" + s + "'");
}

// ---- points ----

ProjPoint::ProjPoint(std::vector<Scalar> coords) : c_(std::move(coords)) {
  if (c_.size() % 2 != 0 || c_.empty()) throw DomainError("point needs two coordinates per block");
  for (std::size_t b = 0; b < c_.size(); b += 2) {
    Scalar lead = !c_[b].is_zero() ? c_[b] : c_[b + 1];
    if (lead.is_zero()) throw DomainError("point has a block with all coordinates zero");
    Scalar inv = lead.inv();
    c_[b] = c_[b] * inv;
    c_[b + 1] = c_[b + 1] * inv;
  }
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  for (int b = 0; b < blocks(); ++b)
    os << (b ? "x" : "") << "[" << c_[2 * b].to_string() << ":" << c_[2 * b + 1].to_string() << "]";
  return os.str();
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end(), canonical_less);
}

std::vector<std::array<Scalar, 2>> projective_line(const Field& f) {
  std::vector<std::array<Scalar, 2>> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) out.push_back({f.one(), f.element(i)});
  out.push_back({f.zero(), f.one()});
  return out;
}

namespace {

MultiPoly coerce(const MultiPoly& f, const Field& fld) {
  MultiPoly g = f;
  for (Eigen::Index i = 0; i < g.size(); ++i) g.coeffs()(i) = g.coeffs()(i).in(fld);
  return g;
}

BinaryForm coerce(const BinaryForm& f, const Field& fld) {
  std::vector<Scalar> c;
  for (const auto& s : f.coeffs()) c.push_back(s.in(fld));
  return BinaryForm(f.degree(), c);
}

BinaryForm slice_form(const MultiPoly& f, int block, int k) { return f.slice(block, k).as_binary_form(); }

// True iff the coefficient forms along `block` have a common root, i.e. a
// fiber of the other ruling lies in W.
bool has_fiber_component(const MultiPoly& f, int block) {
  BinaryForm g = slice_form(f, block, 0);
  for (int k = 1; k <= 2; ++k) g = form_gcd(g, slice_form(f, block, k));
  return g.degree() > 0;
}

std::optional<Field> extension_of(const Field& f) {
  if (f.kind() == Field::Kind::Prime) return f.extension();
  return std::nullopt;
}

// Try g = l0(x) y0 + l1(x) y1 from the discriminant-square decomposition.
std::optional<std::pair<MultiPoly, MultiPoly>> factor_by_discriminant(const MultiPoly& f) {
  auto fld = f.field();
  if (!fld) return std::nullopt;
  BinaryForm delta = quadratic_discriminant(f, 1);
  if (delta.is_zero()) return std::nullopt;
  auto sq = form_squarefree(delta);
  BinaryForm s(0, {fld->one()});
  for (const auto& [g, m] : sq.factors) {
    if (m % 2) return std::nullopt;
    for (int i = 0; i < m / 2; ++i) s = s * g;
  }
  auto quotient = form_divide(delta, s * s);
  check_internal(quotient && quotient->degree() == 0, "discriminant square decomposition");
  Scalar e = quotient->coeff(0);
  Field work = *fld;
  auto root = sqrt_in_field(e);
  if (!root) {
    auto ext = extension_of(*fld);
    if (!ext) return std::nullopt;
    work = *ext;
    root = sqrt_in_field(e.in(work));
    if (!root) return std::nullopt;
  }
  MultiPoly fw = coerce(f, work);
  BinaryForm S = coerce(*root * s, work);
  BinaryForm A = slice_form(fw, 1, 0), B = slice_form(fw, 1, 1);
  for (int sign : {1, -1}) {
    BinaryForm P = Scalar(2) * A;
    BinaryForm Q = B - Scalar(sign) * S;
    if (P.is_zero() || Q.is_zero()) continue;
    BinaryForm G = form_gcd(P, Q);
    auto l0 = form_divide(P, G), l1 = form_divide(Q, G);
    if (!l0 || !l1 || l0->degree() != 1) continue;
    MultiPoly g = MultiPoly::zero({1, 1});
    for (int k0 = 0; k0 <= 1; ++k0) {
      g.set_coeff({k0, 0}, l0->coeff(k0));
      g.set_coeff({k0, 1}, l1->coeff(k0));
    }
    if (auto h = divide_by(fw, g)) return std::make_pair(g, *h);
  }
  return std::nullopt;
}

// Exhaustive search over normalized (1,1) forms; only for small finite fields.
std::optional<std::pair<MultiPoly, MultiPoly>> factor_by_search(const MultiPoly& f, const Field& fld) {
  MultiPoly fw = coerce(f, fld);
  for (int lead = 0; lead < 4; ++lead) {
    const int free = 3 - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= fld.size();
    for (std::uint64_t n = 0; n < total; ++n) {
      MultiPoly g = MultiPoly::zero({1, 1});
      g.coeffs()(lead) = fld.one();
      std::uint64_t r = n;
      for (int i = lead + 1; i < 4; ++i) {
        g.coeffs()(i) = fld.element(r % fld.size());
        r /= fld.size();
      }
      for (int i = 0; i < lead; ++i) g.coeffs()(i) = fld.zero();
      if (auto h = divide_by(fw, g)) return std::make_pair(g, *h);
    }
  }
  return std::nullopt;
}

}  // namespace

// ---- validation and classification ----

CurveW validate_support(const MultiPoly& f0) {
  if (f0.blocks() != 2 || f0.degree() != std::vector<int>{2, 2})
    throw DomainError("W must be a form of bidegree (2,2)");
  if (f0.is_zero()) throw DomainError("W must be nonzero");
  Field fld = f0.field().value_or(Field::rational());
  if (fld.is_finite() && fld.characteristic() <= 3) throw DomainError("characteristic 2 and 3 are unsupported");
  MultiPoly f = coerce(f0, fld);
  if (has_fiber_component(f, 1) || has_fiber_component(f, 0))
    throw DomainError("fiber component: f has a factor of bidegree (1,0) or (0,1)");
  CurveW w;
  w.f_ = f;
  w.field_ = fld;
  w.type_ = KodairaType::I0;

  if (is_square(f)) {
    w.type_ = KodairaType::NonReduced;
    return w;
  }
  BinaryForm delta = quadratic_discriminant(f, 1);
  check_internal(!delta.is_zero(), "reduced curve with vanishing branch form");
  auto profile = root_multiplicities(delta);
  KodairaType t;
  if (profile == std::vector<int>{1, 1, 1, 1}) t = KodairaType::I0;
  else if (profile == std::vector<int>{2, 1, 1}) t = KodairaType::I1;
  else if (profile == std::vector<int>{3, 1}) t = KodairaType::II;
  else if (profile == std::vector<int>{2, 2}) t = KodairaType::I2;
  else if (profile == std::vector<int>{4}) t = KodairaType::III;
  else throw InternalError("unclassifiable over supported extensions: branch profile of unexpected shape");
  bool factors = factor_11(f).has_value();
  if (is_reducible(t) != factors && (fld.is_finite() || factors))
    throw InternalError("unclassifiable over supported extensions: branch profile and factorization disagree");
  w.type_ = t;
  return w;
}

KodairaType classify_kodaira(const CurveW& w) { return w.type(); }

std::optional<MultiPoly> is_square(const MultiPoly& f) {
  if (f.degree() != std::vector<int>{2, 2}) throw DomainError("is_square expects bidegree (2,2)");
  if (f.is_zero()) return std::nullopt;
  auto F = [&](int a, int b) { return f.coeff({a, b}); };
  // g = g00 x0y0 + g01 x0y1 + g10 x1y0 + g11 x1y1; the leading nonzero one is set to 1.
  for (int lead = 0; lead < 4; ++lead) {
    Scalar g[4] = {Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    g[lead] = Scalar(1);
    Scalar c;
    switch (lead) {
      case 0:
        c = F(0, 0);
        if (c.is_zero()) continue;
        g[1] = F(0, 1) / (Scalar(2) * c);
        g[2] = F(1, 0) / (Scalar(2) * c);
        g[3] = (F(1, 1) / c - Scalar(2) * g[1] * g[2]) / Scalar(2);
        break;
      case 1:
        c = F(0, 2);
        if (c.is_zero()) continue;
        g[2] = F(1, 1) / (Scalar(2) * c);
        g[3] = F(1, 2) / (Scalar(2) * c);
        break;
      case 2:
        c = F(2, 0);
        if (c.is_zero()) continue;
        g[3] = F(2, 1) / (Scalar(2) * c);
        break;
      default:
        c = F(2, 2);
        if (c.is_zero()) continue;
    }
    MultiPoly gp = MultiPoly::zero({1, 1});
    for (int i = 0; i < 4; ++i) gp.coeffs()(i) = g[i];
    if (c * (gp * gp) == f) return gp;
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<MultiPoly> divide_by(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  std::vector<int> hdeg(f.degree().size());
  for (std::size_t i = 0; i < hdeg.size(); ++i) hdeg[i] = f.degree()[i] - g.degree()[i];
  for (int d : hdeg)
    if (d < 0) return std::nullopt;
  Matrix m = multiplication_matrix(g, hdeg);
  auto x = solve(m, f.coeffs());
  if (!x) return std::nullopt;
  MultiPoly h = MultiPoly::zero(hdeg);
  h.coeffs() = *x;
  return h;
}

std::optional<std::pair<MultiPoly, MultiPoly>> factor_11(const MultiPoly& f) {
  if (f.degree() != std::vector<int>{2, 2}) throw DomainError("factor_11 expects bidegree (2,2)");
  if (auto g = is_square(f)) {
    auto h = divide_by(f, *g);
    return std::make_pair(*g, *h);
  }
  if (auto r = factor_by_discriminant(f)) return r;
  // Forms with fiber components defeat the discriminant route; search small fields.
  auto fld = f.field();
  if (fld && fld->is_finite() && (has_fiber_component(f, 0) || has_fiber_component(f, 1))) {
    if (fld->size() <= 31) {
      if (auto r = factor_by_search(f, *fld)) return r;
      if (auto ext = extension_of(*fld); ext && ext->size() <= 31 * 31) return factor_by_search(f, *ext);
    }
  }
  return std::nullopt;
}

// ---- singular points ----

bool is_singular_point(const CurveW& w, const ProjPoint& p) {
  if (!w.form()(p.coords()).is_zero()) return false;
  for (const auto& d : w.form().partials())
    if (!d(p.coords()).is_zero()) return false;
  return true;
}

SingularLocus singular_points(const CurveW& w) {
  SingularLocus out;
  if (w.type() == KodairaType::NonReduced) {
    out.non_reduced = true;
    return out;
  }
  if (w.type() == KodairaType::I0) return out;
  BinaryForm delta = quadratic_discriminant(w.form(), 1);
  std::vector<std::array<Scalar, 2>> xs;
  auto add_roots = [&](const BinaryForm& form) {
    for (const auto& r : form_roots(form))
      if (std::find_if(xs.begin(), xs.end(), [&](const auto& s) { return s[0] == r[0] && s[1] == r[1]; }) == xs.end())
        xs.push_back(r);
  };
  Field fld = w.field();
  BinaryForm multiple = BinaryForm(0, {fld.one()});
  for (const auto& [fac, m] : form_squarefree(delta).factors)
    if (m >= 2) multiple = multiple * fac;
  add_roots(multiple);
  if (static_cast<int>(xs.size()) < multiple.degree()) {
    if (auto ext = extension_of(fld)) {
      xs.clear();
      add_roots(coerce(multiple, *ext));
    }
  }
  MultiPoly f = w.form();
  for (const auto& c : xs) {
    Field pf = *common_field({c[0], c[1], f.coeffs()(0)});
    MultiPoly fc = coerce(f, pf);
    BinaryForm q = fiber_restriction(fc, Axis::U, c);
    Scalar A = q.coeff(0), B = q.coeff(1);
    ProjPoint p = A.is_zero() ? ProjPoint({c[0], c[1], pf.one(), pf.zero()}) : ProjPoint({c[0], c[1], -B, Scalar(2) * A});
    check_internal(is_singular_point(w, p), "double root of the branch form is not a singular point");
    out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// ---- fibers ----

BinaryForm fiber_restriction(const MultiPoly& f, Axis axis, const std::array<Scalar, 2>& c) {
  const int fixed = axis == Axis::U ? 0 : 1;
  const int other = 1 - fixed;
  const int d = f.degree()[static_cast<std::size_t>(other)];
  std::vector<Scalar> out(static_cast<std::size_t>(d + 1), Scalar(0));
  for (int k = 0; k <= d; ++k) {
    BinaryForm coef = f.slice(other, k).as_binary_form();
    out[static_cast<std::size_t>(k)] = coef(c[0], c[1]);
  }
  return BinaryForm(d, out);
}

std::vector<FiberPoint> fiber_points(const CurveW& w, Axis axis, const std::array<Scalar, 2>& c) {
  if (w.type() == KodairaType::NonReduced) throw DomainError("fiber_points needs a reduced W");
  BinaryForm q = fiber_restriction(w.form(), axis, c);
  if (q.is_zero()) throw DomainError("fiber lies inside W");
  Field fld = *common_field({c[0], c[1], w.form().coeffs()(0)});
  q = coerce(q, fld);
  auto make = [&](const std::array<Scalar, 2>& r) {
    return axis == Axis::U ? ProjPoint({c[0], c[1], r[0], r[1]}) : ProjPoint({r[0], r[1], c[0], c[1]});
  };
  std::vector<FiberPoint> out;
  if (root_multiplicities(q) == std::vector<int>{2}) {
    auto r = form_roots(q);
    out.push_back({make(r.front()), 2});
    return out;
  }
  auto roots = form_roots(q);
  if (roots.size() < 2) {
    if (auto ext = extension_of(fld)) roots = form_roots(coerce(q, *ext));
  }
  for (const auto& r : roots) out.push_back({make(r), 1});
  return out;
}

BinaryQuartic branch_quartic(const CurveW& w, Axis axis) {
  return quadratic_discriminant(w.form(), axis == Axis::U ? 1 : 0);
}

Scalar j_invariant_curve(const CurveW& w) {
  if (w.type() != KodairaType::I0) throw DomainError("j-invariant needs a smooth W, got type " + to_string(w.type()));
  Scalar ju = j_from_quartic(branch_quartic(w, Axis::U));
  Scalar jv = j_from_quartic(branch_quartic(w, Axis::V));
  check_internal(ju == jv, "j from the u- and v-projections disagree");
  return ju;
}

// ---- enumeration ----

namespace {

Field enumeration_field(const Field& base, int k) {
  if (!base.is_finite()) throw DomainError("point enumeration needs a finite field");
  if (k == 1) return base;
  if (k == 2) {
    if (base.kind() != Field::Kind::Prime) throw DomainError("extension of an extension is unsupported");
    return base.extension();
  }
  throw DomainError("extension degree must be 1 or 2");
}

}  // namespace

std::vector<ProjPoint> enumerate_points(const CurveW& w, int ext_degree) {
  Field fld = enumeration_field(w.field(), ext_degree);
  MultiPoly f = coerce(w.form(), fld);
  std::vector<ProjPoint> out;
  for (const auto& c : projective_line(fld)) {
    BinaryForm q = fiber_restriction(f, Axis::U, c);
    if (q.is_zero()) throw DomainError("fiber lies inside W");
    for (const auto& r : form_roots(q)) out.emplace_back(std::vector<Scalar>{c[0], c[1], r[0], r[1]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> enumerate_points_bruteforce(const CurveW& w, int ext_degree) {
  Field fld = enumeration_field(w.field(), ext_degree);
  MultiPoly f = coerce(w.form(), fld);
  auto line = projective_line(fld);
  std::vector<ProjPoint> out;
  for (const auto& x : line)
    for (const auto& y : line) {
      std::vector<Scalar> p{x[0], x[1], y[0], y[1]};
      if (f(p).is_zero()) out.emplace_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- group action ----

Mat2 inverse(const Mat2& g) {
  Scalar det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (det.is_zero()) throw DomainError("singular 2x2 matrix");
  Scalar i = det.inv();
  return {{{g[1][1] * i, -g[0][1] * i}, {-g[1][0] * i, g[0][0] * i}}};
}

MultiPoly transform_form(const MultiPoly& f, const Mat2& g, const Mat2& h) {
  return f.substitute(0, g).substitute(1, h);
}

ProjPoint transform_point(const ProjPoint& p, const Mat2& g, const Mat2& h) {
  Mat2 gi = inverse(g), hi = inverse(h);
  auto apply = [](const Mat2& m, const std::array<Scalar, 2>& v) {
    return std::array<Scalar, 2>{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
  };
  auto x = apply(gi, p.block(0));
  auto y = apply(hi, p.block(1));
  return ProjPoint({x[0], x[1], y[0], y[1]});
}

// ---- complete intersections ----

CIcurve make_ci(const MultiPoly& f1, const MultiPoly& f2) {
  if (f1.blocks() != 3 || f2.blocks() != 3) throw DomainError("complete intersection forms need 3 blocks");
  for (const auto* f : {&f1, &f2})
    for (int d : f->degree())
      if (d != 0 && d != 1) throw DomainError("complete intersection forms must have degree at most 1 per block");
  if (f1.is_zero() || f2.is_zero()) throw DomainError("linearly dependent");
  if (f1.degree() == f2.degree()) {
    Matrix m(f1.size(), 2);
    m << f1.coeffs(), f2.coeffs();
    if (rank(m) < 2) throw DomainError("linearly dependent");
  }
  CIcurve c;
  c.field_ = common_field({f1.coeffs()(0), f2.coeffs()(0), f1.coeffs()(f1.size() - 1)})
                 .value_or(f1.field().value_or(f2.field().value_or(Field::rational())));
  if (auto g = f1.field()) c.field_ = *g;
  if (auto g = f2.field()) c.field_ = *g;
  c.f1_ = coerce(f1, c.field_);
  c.f2_ = coerce(f2, c.field_);
  return c;
}

CurveW ci_eliminate(const CIcurve& c, int block) {
  if (c.f1().degree()[static_cast<std::size_t>(block)] != 1 || c.f2().degree()[static_cast<std::size_t>(block)] != 1)
    throw DomainError("projection degenerate: forms not linear in the eliminated block");
  MultiPoly r = linear_resultant(c.f1(), c.f2(), block);
  if (r.is_zero()) throw DomainError("projection degenerate: resultant vanishes identically");
  if (r.degree() != std::vector<int>{2, 2}) {
    std::ostringstream os;
    os << "projection degenerate: eliminated curve has bidegree (" << r.degree()[0] << "," << r.degree()[1] << ")";
    throw DomainError(os.str());
  }
  return validate_support(r);
}

std::vector<ProjPoint> enumerate_points(const CIcurve& c, int ext_degree) {
  Field fld = enumeration_field(c.field(), ext_degree);
  if (c.f1().degree()[2] != 1 || c.f2().degree()[2] != 1) throw DomainError("CI forms must be linear in the last block");
  MultiPoly a1 = coerce(c.f1().slice(2, 0), fld), b1 = coerce(c.f1().slice(2, 1), fld);
  MultiPoly a2 = coerce(c.f2().slice(2, 0), fld), b2 = coerce(c.f2().slice(2, 1), fld);
  std::vector<ProjPoint> out;
  auto lift = [&](const std::array<Scalar, 2>& x, const std::array<Scalar, 2>& y) {
    std::vector<Scalar> p{x[0], x[1], y[0], y[1]};
    Scalar A1 = a1(p), B1 = b1(p), A2 = a2(p), B2 = b2(p);
    bool r1 = !(A1.is_zero() && B1.is_zero()), r2 = !(A2.is_zero() && B2.is_zero());
    if (!r1 && !r2) throw DomainError("complete intersection contains a whole fiber");
    if (!(A1 * B2 - A2 * B1).is_zero()) return;
    std::array<Scalar, 2> z = r1 ? std::array<Scalar, 2>{B1, -A1} : std::array<Scalar, 2>{B2, -A2};
    out.emplace_back(std::vector<Scalar>{x[0], x[1], y[0], y[1], z[0], z[1]});
  };
  std::optional<CurveW> image;
  try {
    image = ci_eliminate(c, 2);
  } catch (const DomainError&) {
  }
  if (image) {
    // Fiber-wise on the projection forgetting the last block.
    for (const auto& q : enumerate_points(*image, ext_degree)) lift(q.block(0), q.block(1));
  } else {
    auto line = projective_line(fld);
    for (const auto& x : line)
      for (const auto& y : line) lift(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CISmoothness ci_smooth_j(const CIcurve& c) {
  CISmoothness out;
  std::optional<Scalar> j;
  std::vector<CurveW> images;
  for (int b = 0; b < 3; ++b) {
    try {
      CurveW w = ci_eliminate(c, b);
      if (w.type() != KodairaType::I0) {
        out.reason = "projection forgetting block " + std::to_string(b) + " has type " + to_string(w.type());
        return out;
      }
      Scalar jb = j_invariant_curve(w);
      if (j && !(*j == jb)) throw InternalError("j differs between projections of a complete intersection");
      j = jb;
      images.push_back(w);
    } catch (const DomainError& e) {
      out.reason = e.what();
      return out;
    }
  }
  if (c.field().is_finite()) {
    auto pts = enumerate_points(c, 1);
    for (int b = 0; b < 3; ++b) {
      std::set<ProjPoint> proj;
      for (const auto& p : pts) {
        std::vector<Scalar> q;
        for (int k = 0; k < 3; ++k)
          if (k != b) {
            q.push_back(p.coords()[2 * k]);
            q.push_back(p.coords()[2 * k + 1]);
          }
        proj.insert(ProjPoint(q));
      }
      auto image_pts = enumerate_points(images[static_cast<std::size_t>(b)], 1);
      if (proj.size() != pts.size() || image_pts.size() != pts.size()) {
        out.reason = "projection forgetting block " + std::to_string(b) + " is not injective on rational points";
        return out;
      }
    }
  }
  out.smooth = true;
  out.j = j;
  return out;
}

}  // namespace bimodulus
