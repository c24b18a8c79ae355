#include "bimodulus/quivers.hpp"

#include <algorithm>

#include "bimodulus/linalg.hpp"

namespace bimodulus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Matrix to_rational(const Eigen::MatrixXi& m) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Scalar::rational(m(i, j));
  return out;
}

int rank_int(const Eigen::MatrixXi& m) { return static_cast<int>(rank(to_rational(m))); }

}  // namespace

int Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  throw DomainError("quiver " + name + " has no arrow '" + label + "'");
}

Quiver quiver_q0() {
  return {"Q0", 4, {{1, 2, "a1"}, {1, 2, "b1"}, {2, 3, "a2"}, {2, 3, "b2"}, {3, 4, "a3"}, {3, 4, "b3"}}};
}

Quiver quiver_q1() {
  return {"Q1",
          4,
          {{1, 2, "a1"}, {1, 2, "a2"}, {1, 3, "a3"}, {3, 4, "a4"}, {3, 4, "a5"}, {2, 4, "a6"}, {2, 3, "a7"}}};
}

Quiver quiver_sigma2() {
  return {"Sigma2",
          4,
          {{1, 2, "a1"},
           {1, 2, "b1"},
           {2, 3, "a2"},
           {2, 3, "b2"},
           {3, 4, "a3"},
           {3, 4, "b3"},
           {1, 3, "c1"},
           {2, 4, "c2"}}};
}

std::string path_label(const Quiver& q, const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ".";
    s += q.arrows.at(static_cast<std::size_t>(p[i])).label;
  }
  return s.empty() ? "e" : s;
}

std::vector<Path> path_basis(const Quiver& q, int i, int j) {
  if (i > j) throw DomainError("path_basis needs i <= j");
  std::vector<Path> out;
  if (i == j) {
    out.push_back({});
    return out;
  }
  // Depth-first; the quiver is acyclic with increasing arrows.
  std::vector<std::pair<int, Path>> stack{{i, {}}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    if (v == j) {
      out.push_back(p);
      continue;
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const Arrow& ar = q.arrows[a];
      if (ar.source != v || ar.target > j) continue;
      if (ar.target <= ar.source) throw InternalError("quiver is not topologically ordered");
      Path np = p;
      np.push_back(static_cast<int>(a));
      stack.emplace_back(ar.target, std::move(np));
    }
  }
  auto labels = [&](const Path& p) {
    std::vector<std::string> l;
    for (int a : p) l.push_back(q.arrows[static_cast<std::size_t>(a)].label);
    return l;
  };
  std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) { return labels(x) < labels(y); });
  return out;
}

int hom_p1(int s, int t) { return std::max(t - s + 1, 0); }
int ext1_p1(int s, int t) { return std::max(s - t - 1, 0); }

HomExt hom_ext_matrix(const SplitType& s, int m) {
  const std::array<std::vector<int>, 4> F{std::vector<int>{-m - 1}, std::vector<int>{-m}, std::vector<int>{s.a1, s.b1},
                                          std::vector<int>{s.a, s.b}};
  HomExt out;
  for (int i = 0; i < 4; ++i) {
    out.hom[i][i] = 1;
    for (int j = i + 1; j < 4; ++j) {
      if (i == 2 && j == 3) {
        out.hom[i][j] = 2;
        continue;
      }
      for (int x : F[static_cast<std::size_t>(i)])
        for (int y : F[static_cast<std::size_t>(j)]) {
          out.hom[i][j] += hom_p1(x, y);
          out.ext1[i][j] += ext1_p1(x, y);
        }
    }
  }
  return out;
}

bool is_strong(const SplitType& s, int m) { return s.a1 >= -m - 1; }

bool strong_m1_table(const BimodDescriptor& d) {
  validate_descriptor(d);
  const int c = chi(d);
  if (c != 1 && c != 2) throw DomainError("the m = 1 strongness list is stated for chi in {1, 2}, got " + std::to_string(c));
  return std::visit(overloaded{[](const Type11Desc& t) { return t.a >= -1; },
                               [c](const NonReducedDesc& t) {
                                 if (c == 2) return t.deg_D == 0 || t.deg_D == 2 || t.deg_D == 4;
                                 return t.deg_D == 1 || t.deg_D == 3;
                               },
                               [](const IntegralInvertibleDesc&) { return true; },
                               [](const IntegralNonInvertibleDesc&) { return true; },
                               [](const ReducibleInvertibleDesc& t) { return t.p >= -1; },
                               [](const ReducibleNonInvertibleDesc& t) { return t.p >= -1; }},
                    d);
}

std::vector<unsigned> subrepresentations(const Quiver& q, const Rep1111& r) {
  if (r.arrows.size() != q.arrows.size()) throw DomainError("representation needs one scalar per arrow");
  std::vector<unsigned> out;
  for (unsigned s = 0; s < 16; ++s) {
    bool closed = true;
    for (std::size_t a = 0; a < q.arrows.size() && closed; ++a) {
      const Arrow& ar = q.arrows[a];
      if (r.arrows[a].is_zero()) continue;
      if ((s >> (ar.source - 1) & 1u) && !(s >> (ar.target - 1) & 1u)) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

bool theta_stable(const Quiver& q, const Rep1111& r, const Theta& theta) {
  for (unsigned s : subrepresentations(q, r)) {
    if (s == 0 || s == 15) continue;
    int t = 0;
    for (int i = 0; i < 4; ++i)
      if (s >> i & 1u) t += theta[static_cast<std::size_t>(i)];
    if (t <= 0) return false;
  }
  return true;
}

MrelDims mrel_dim_check() {
  // Relation tensors in V1 (x) V2 (x) V3 (x) V4 modulo GL(V1) x ... x GL(V4),
  // whose generic stabilizer is the kernel of (l1, l2, l3, l4) -> l1 l2 l3 l4.
  MrelDims d{};
  d.ambient = 2 * 2 * 2 * 2;
  d.group = 4 * (2 * 2);
  Eigen::MatrixXi character(1, 4);
  character << 1, 1, 1, 1;
  d.kernel = 4 - rank_int(character);
  d.result = d.ambient - d.group + d.kernel;
  return d;
}

ToricReport toric_matrices_check() {
  ToricReport r;
  r.weights.resize(3, 7);
  r.weights << 1, 1, 1, 0, 0, -1, -1,  //
      0, 0, 1, -1, -1, 0, 1,           //
      0, 0, 0, 1, 1, 1, 0;
  r.kernel.resize(7, 4);
  r.kernel << -1, -1, 0, 0,  //
      1, 0, 0, 0,            //
      0, 1, 0, 0,            //
      0, 0, 1, 0,            //
      0, 0, -1, -1,          //
      0, 0, 0, 1,            //
      0, -1, 0, -1;
  r.product = r.weights * r.kernel;
  r.product_zero = r.product.isZero();
  r.rank_weights = rank_int(r.weights);
  r.rank_kernel = rank_int(r.kernel);

  // Incidence of Q1 at vertices 2, 3, 4: +1 on arrows ending there, -1 on arrows leaving.
  const Quiver q = quiver_q1();
  Eigen::MatrixXi incidence = Eigen::MatrixXi::Zero(3, 7);
  for (int a = 0; a < 7; ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    if (ar.target >= 2) incidence(ar.target - 2, a) += 1;
    if (ar.source >= 2) incidence(ar.source - 2, a) -= 1;
  }
  r.corrected_weights = r.weights;
  r.corrected_weights(0, 2) = 0;
  check_internal(r.corrected_weights == incidence, "corrected weight matrix differs from the Q1 incidence matrix");
  r.corrected_product_zero = (r.corrected_weights * r.kernel).isZero();
  r.corrected_rank = rank_int(r.corrected_weights);
  return r;
}

}  // namespace bimodulus
