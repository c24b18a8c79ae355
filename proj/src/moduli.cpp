#include "bimodulus/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bimodulus/linalg.hpp"

namespace bimodulus {

namespace {

std::string degree_triple(const Quadruple& q) {
  return "(" + std::to_string(q.L0.degree()) + "," + std::to_string(q.L1.degree()) + "," +
         std::to_string(q.L2.degree()) + ")";
}

RelationsIdeal make_ideal(const std::string& quiver, const Matrix& kernel_cols) {
  RelationsIdeal I{quiver, Matrix(0, kernel_cols.rows())};
  if (kernel_cols.cols() > 0) I.rows = canonical_rows(Matrix(kernel_cols.transpose()));
  return I;
}

Vector coords_in(const SectionSpace& s, const MultiPoly& g) {
  auto c = s.coordinates(g);
  check_internal(c.has_value(), "product of sections outside the target section space");
  return *c;
}

// Section space of an effective representative already in the normal range.
SectionSpace fixed_sections(const LineBundle& R) {
  SectionSpace s = lb_sections(R);
  check_internal(s.rep.m() == R.m() && s.rep.n() == R.n() && s.rep.minus().size() == R.minus().size(),
                 "representative was re-normalized");
  return s;
}

// First coordinate vector outside the column span of `image`.
Eigen::Index first_outside(const Matrix& image, Eigen::Index dim, const Field& f) {
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    for (Eigen::Index k = 0; k < dim; ++k) e(k) = (k == i ? f.one() : f.zero());
    if (!in_span(image, e)) return i;
  }
  throw DomainError("degenerate quadruple: composition image fills the Hom space");
}

}  // namespace

std::optional<std::string> admissibility_problem(const Quadruple& q) {
  if (q.w.type() != KodairaType::I0) return "W is singular (" + to_string(q.w.type()) + ")";
  const int d1 = q.component == 0 ? 2 : 1;
  if (q.L0.degree() != 2 || q.L1.degree() != d1 || q.L2.degree() != 2)
    return "degrees " + degree_triple(q) + " do not match component " + std::to_string(q.component);
  if (lb_isomorphic(q.L0, q.L2)) return "L0 ~ L2";
  if (lb_isomorphic(q.L0, q.L1)) return "L0 ~ L1";
  if (lb_isomorphic(q.L1, q.L2)) return "L1 ~ L2";
  return std::nullopt;
}

Quadruple make_quadruple(const LineBundle& L0, const LineBundle& L1, const LineBundle& L2) {
  if (!same_curve(L0.curve(), L1.curve()) || !same_curve(L0.curve(), L2.curve()))
    throw DomainError("quadruple bundles live on different curves");
  Quadruple q{L0.curve(), L0, L1, L2, 0};
  if (L1.degree() == 2)
    q.component = 0;
  else if (L1.degree() == 1)
    q.component = 1;
  else
    throw DomainError("deg L1 must be 2 or 1, got " + std::to_string(L1.degree()));
  if (auto why = admissibility_problem(q)) throw DomainError("inadmissible quadruple: " + *why);
  return q;
}

Quadruple phi(const LineBundle& U) {
  const CurveW& w = U.curve();
  if (w.type() != KodairaType::I0) throw DomainError("phi needs a smooth W, got " + to_string(w.type()));
  return make_quadruple(lb_make(w, 0, 1), lb_tensor(lb_make(w, -1, 1), U), lb_make(w, 1, 0));
}

LineBundle phi_inverse(const Quadruple& q) {
  if (lb_isomorphic(q.L0, q.L2)) throw DomainError("L0 ~ L2: (L2, L0) does not embed W");
  return lb_tensor(lb_tensor(lb_inverse(q.L0), q.L1), q.L2);
}

bool same_ideal(const RelationsIdeal& a, const RelationsIdeal& b) {
  return a.quiver == b.quiver && a.rows.cols() == b.rows.cols() &&
         subspace_equal(Matrix(a.rows.transpose()), Matrix(b.rows.transpose()));
}

QuadrupleSections quadruple_sections(const Quadruple& q) {
  SectionSpace s0 = lb_sections(q.L0), s2 = lb_sections(q.L2);
  LineBundle R1 = lb_sections(q.L1).rep;
  // Keep every partial product out of the raising range.
  while (R1.m() < 1) R1 = lb_raise(R1, Axis::U);
  while (R1.n() < 1) R1 = lb_raise(R1, Axis::V);
  check_internal(s0.rep.minus().empty() && s2.rep.minus().empty(), "L0 or L2 representative carries points");
  SectionSpace s1 = fixed_sections(R1);
  SectionSpace t = fixed_sections(lb_tensor(lb_tensor(s0.rep, s1.rep), s2.rep));
  return {s0, s1, s2, t};
}

PsiResult psi0(const Quadruple& q) {
  if (q.component != 0) throw DomainError("psi0 needs a component-0 quadruple");
  auto S = quadruple_sections(q);
  check_internal(S.s0.dim() == 2 && S.s1.dim() == 2 && S.s2.dim() == 2, "section spaces are not 2-dimensional");
  // Path index 4 j0 + 2 j1 + j2 (first arrow from H^0(L0)).
  Matrix M(S.target.dim(), 8);
  for (int j0 = 0; j0 < 2; ++j0)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int j2 = 0; j2 < 2; ++j2)
        M.col(4 * j0 + 2 * j1 + j2) = coords_in(S.target, S.s0.section(j0) * S.s1.section(j1) * S.s2.section(j2));
  Matrix K = kernel_basis(M);
  if (K.cols() != 2) throw DomainError("degenerate quadruple: relation space has dimension " + std::to_string(K.cols()));
  return {make_ideal("Q0", K), M, static_cast<int>(S.target.dim())};
}

PsiResult psi1(const Quadruple& q) {
  if (q.component != 1) throw DomainError("psi1 needs a component-1 quadruple");
  auto S = quadruple_sections(q);
  check_internal(S.s0.dim() == 2 && S.s1.dim() == 1 && S.s2.dim() == 2, "section spaces have the wrong dimensions");
  const Field& f = q.w.field();
  SectionSpace s01 = fixed_sections(lb_tensor(S.s0.rep, S.s1.rep));
  SectionSpace s12 = fixed_sections(lb_tensor(S.s1.rep, S.s2.rep));
  Matrix img01(s01.dim(), 2), img12(s12.dim(), 2);
  for (int j = 0; j < 2; ++j) {
    img01.col(j) = coords_in(s01, S.s0.section(j) * S.s1.section(0));
    img12.col(j) = coords_in(s12, S.s1.section(0) * S.s2.section(j));
  }
  if (rank(img01) != 2 || rank(img12) != 2) throw DomainError("degenerate quadruple: composition image is not 2-dimensional");
  const MultiPoly lift3 = s01.section(first_outside(img01, s01.dim(), f));
  const MultiPoly lift6 = s12.section(first_outside(img12, s12.dim(), f));

  const Quiver Q = quiver_q1();
  std::map<std::string, MultiPoly> arrow_section{{"a1", S.s0.section(0)}, {"a2", S.s0.section(1)},
                                                 {"a7", S.s1.section(0)}, {"a4", S.s2.section(0)},
                                                 {"a5", S.s2.section(1)}, {"a3", lift3},
                                                 {"a6", lift6}};
  auto paths = path_basis(Q, 1, 4);
  Matrix M(S.target.dim(), static_cast<Eigen::Index>(paths.size()));
  for (std::size_t c = 0; c < paths.size(); ++c) {
    MultiPoly g = arrow_section.at(Q.arrows[static_cast<std::size_t>(paths[c][0])].label);
    for (std::size_t k = 1; k < paths[c].size(); ++k) g = g * arrow_section.at(Q.arrows[static_cast<std::size_t>(paths[c][k])].label);
    M.col(static_cast<Eigen::Index>(c)) = coords_in(S.target, g);
  }
  Matrix K = kernel_basis(M);
  if (K.cols() != 3) throw DomainError("degenerate quadruple: relation space has dimension " + std::to_string(K.cols()));
  return {make_ideal("Q1", K), M, static_cast<int>(S.target.dim())};
}

CIcurve relations_to_ci(const RelationsIdeal& I) {
  if (I.quiver != "Q0" || I.dim() != 2 || I.rows.cols() != 8)
    throw DomainError("relations_to_ci needs a 2-dimensional Q0 ideal");
  std::array<MultiPoly, 2> forms{MultiPoly::zero({1, 1, 1}), MultiPoly::zero({1, 1, 1})};
  for (int r = 0; r < 2; ++r)
    for (int j0 = 0; j0 < 2; ++j0)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) forms[r].set_coeff({j0, j1, j2}, I.rows(r, 4 * j0 + 2 * j1 + j2));
  return make_ci(forms[0], forms[1]);
}

std::vector<ClassifyingSample> classifying_points(const Quadruple& q, const std::vector<ProjPoint>& points) {
  auto S = quadruple_sections(q);
  std::vector<ClassifyingSample> out;
  for (const auto& p : points) {
    if (!q.w.contains(p)) throw DomainError("sample point " + p.to_string() + " is not on W");
    std::vector<Scalar> c;
    bool base = false;
    for (const SectionSpace* s : {&S.s0, &S.s1, &S.s2}) {
      Scalar v0 = s->section(0)(p.coords()), v1 = s->section(1)(p.coords());
      if (v0.is_zero() && v1.is_zero()) base = true;
      c.push_back(v0);
      c.push_back(v1);
    }
    if (!base) out.push_back({p, ProjPoint(c)});
  }
  return out;
}

Rep1111 induced_representation(const ClassifyingSample& s) { return {s.image.coords()}; }

RelationsIdeal recover_relations_from_ci(const CIcurve& c) {
  for (int ext = 1; ext <= 2; ++ext) {
    auto pts = enumerate_points(c, ext);
    Matrix E(static_cast<Eigen::Index>(pts.size()), 8);
    std::array<Matrix, 3> blocks;
    for (auto& b : blocks) b = Matrix(static_cast<Eigen::Index>(pts.size()), 2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      for (int b = 0; b < 3; ++b) {
        blocks[static_cast<std::size_t>(b)](r, 0) = pts[i].block(b)[0];
        blocks[static_cast<std::size_t>(b)](r, 1) = pts[i].block(b)[1];
      }
      for (int j0 = 0; j0 < 2; ++j0)
        for (int j1 = 0; j1 < 2; ++j1)
          for (int j2 = 0; j2 < 2; ++j2)
            E(r, 4 * j0 + 2 * j1 + j2) = pts[i].block(0)[j0] * pts[i].block(1)[j1] * pts[i].block(2)[j2];
    }
    bool injective = std::all_of(blocks.begin(), blocks.end(), [](const Matrix& m) { return m.rows() > 0 && rank(m) == 2; });
    if (!injective || rank(E) < 6) continue;
    Matrix K = kernel_basis(E);
    check_internal(K.cols() == 2, "trilinear forms through N_I are not 2-dimensional");
    return make_ideal("Q0", K);
  }
  throw DomainError("degenerate: restriction of the ambient coordinates to N_I is not injective");
}

bool RoundTripReport::pass() const {
  return failed_stage.empty() && ci_smooth && j_equal && ideals_equal && on_ci && injective && counts_equal &&
         theta_stable == theta_samples && theta_samples > 0;
}

RoundTripReport roundtrip0(const LineBundle& U) {
  RoundTripReport rep;
  std::string stage = "classify";
  try {
    rep.descriptor = classify_bimodule(BimodConcrete{U});
    if (chi(*rep.descriptor) != 2) throw DomainError("round trip 0 needs chi = 2");
    if (!U.curve().field().is_finite()) throw DomainError("round trip needs a finite field");
    stage = "phi";
    Quadruple q = phi(U);
    stage = "psi0";
    rep.relations = psi0(q).ideal;
    stage = "ci";
    CIcurve ci = relations_to_ci(*rep.relations);
    auto sm = ci_smooth_j(ci);
    rep.ci_smooth = sm.smooth;
    rep.j_n = sm.j;
    rep.j_w = j_invariant_curve(q.w);
    rep.j_equal = rep.j_n.has_value() && *rep.j_n == *rep.j_w;
    if (!sm.smooth) throw DomainError("N_I is singular: " + sm.reason);

    stage = "classifying";
    auto pts = enumerate_points(q.w, 1);
    auto samples = classifying_points(q, pts);
    rep.on_ci = !samples.empty();
    std::set<ProjPoint> images;
    const Quiver Q0 = quiver_q0();
    for (const auto& s : samples) {
      if (!ci.f1()(s.image.coords()).is_zero() || !ci.f2()(s.image.coords()).is_zero()) rep.on_ci = false;
      images.insert(s.image);
      ++rep.theta_samples;
      if (theta_stable(Q0, induced_representation(s))) ++rep.theta_stable;
    }
    rep.injective = images.size() == samples.size();

    stage = "counts";
    rep.counts_equal = enumerate_points(q.w, 1).size() == enumerate_points(ci, 1).size() &&
                       enumerate_points(q.w, 2).size() == enumerate_points(ci, 2).size();

    stage = "recover";
    rep.ideals_equal = same_ideal(recover_relations_from_ci(ci), *rep.relations);
  } catch (const std::exception& e) {
    rep.failed_stage = stage;
    rep.message = e.what();
  }
  return rep;
}

}  // namespace bimodulus
