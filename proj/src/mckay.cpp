#include "bimodulus/mckay.hpp"

#include <map>

#include "bimodulus/linalg.hpp"

namespace bimodulus {

long s_graded_dim(int d, int n) {
  if (d < 1) throw DomainError("weight d must be positive");
  if (n < 0) return 0;
  long count = 0;
  for (int k = 0; d * k <= n; ++k) count += n - d * k + 1;  // i + j = n - d k
  return count;
}

namespace {

// One rewrite yx -> xy, zx -> lambda xz, zy -> yz at position i; returns the factor.
Scalar rewrite_at(Word& w, std::size_t i, const Scalar& lambda) {
  const char a = w[i], b = w[i + 1];
  std::swap(w[i], w[i + 1]);
  return (a == 'z' && b == 'x') ? lambda : Scalar(1);
}

bool descent(const Word& w, std::size_t i) { return w[i] > w[i + 1]; }

// Reduce to x^i y^j z^k, choosing the leftmost or the rightmost descent each time.
std::pair<Scalar, Word> reduce(Word w, const Scalar& lambda, bool leftmost) {
  Scalar c(1);
  for (;;) {
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (descent(w, i)) {
        pos = i;
        if (leftmost) break;
      }
    if (!pos) return {c, w};
    c = c * rewrite_at(w, *pos, lambda);
  }
}

std::array<int, 3> exponents(const Word& w) {
  std::array<int, 3> e{0, 0, 0};
  for (char ch : w) {
    if (ch < 'x' || ch > 'z') throw DomainError(std::string("unknown generator '") + ch + "'");
    ++e[static_cast<std::size_t>(ch - 'x')];
  }
  return e;
}

// Binary forms as coefficient lists of x^(d-k) y^k; an empty list is the zero map of negative degree.
using Form = std::vector<Scalar>;
using FormMatrix = std::vector<std::vector<Form>>;

Form form_mul(const Form& a, const Form& b) {
  if (a.empty() || b.empty()) return {};
  Form c(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

Form form_add(const Form& a, const Form& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  check_internal(a.size() == b.size(), "adding forms of different degrees");
  Form c = a;
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = c[i] + b[i];
  return c;
}

Form zero_form(int deg) { return deg < 0 ? Form{} : Form(static_cast<std::size_t>(deg + 1), Scalar(0)); }

FormMatrix compose(const FormMatrix& A, const FormMatrix& B) {
  // A after B.
  FormMatrix C(A.size(), std::vector<Form>(B.front().size()));
  for (std::size_t r = 0; r < A.size(); ++r)
    for (std::size_t c = 0; c < B.front().size(); ++c)
      for (std::size_t k = 0; k < B.size(); ++k) C[r][c] = form_add(C[r][c], form_mul(A[r][k], B[k][c]));
  return C;
}

}  // namespace

PBWPoly qweyl_normal_form(const Word& w, const Scalar& lambda) {
  if (lambda.is_zero()) throw DomainError("lambda must be nonzero");
  exponents(w);
  auto [c, nf] = reduce(w, lambda, true);
  return {{exponents(nf), c}};
}

bool qweyl_confluent(const Scalar& lambda) {
  if (lambda.is_zero()) throw DomainError("lambda must be nonzero");
  auto l = reduce("zyx", lambda, true);
  auto r = reduce("zyx", lambda, false);
  return l.second == r.second && l.first == r.first;
}

std::array<std::array<long, 4>, 4> collection_hom_dims(int d) {
  if (d < 2) throw DomainError("collection_hom_dims needs d >= 2");
  const int e = d == 2 ? 2 : d;
  const std::array<int, 4> twist{0, 1, e, e + 1};
  std::array<std::array<long, 4>, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          s_graded_dim(d, twist[static_cast<std::size_t>(j)] - twist[static_cast<std::size_t>(i)]);
  return out;
}

PathRelation make_relation(const Quiver& q, const std::vector<std::pair<Scalar, std::vector<std::string>>>& terms) {
  PathRelation r{0, 0, {}};
  for (const auto& [c, labels] : terms) {
    Path p;
    for (const auto& l : labels) p.push_back(q.arrow_index(l));
    if (p.empty()) throw DomainError("empty path in relation");
    for (std::size_t k = 1; k < p.size(); ++k)
      if (q.arrows[static_cast<std::size_t>(p[k - 1])].target != q.arrows[static_cast<std::size_t>(p[k])].source)
        throw DomainError("relation term is not a composable path");
    const int s = q.arrows[static_cast<std::size_t>(p.front())].source;
    const int t = q.arrows[static_cast<std::size_t>(p.back())].target;
    if (r.terms.empty()) {
      r.source = s;
      r.target = t;
    } else if (s != r.source || t != r.target) {
      throw DomainError("relation terms have different endpoints");
    }
    r.terms.emplace_back(c, p);
  }
  return r;
}

std::vector<PathRelation> stephenson_relations(const Scalar& lambda) {
  if (lambda.is_zero()) throw DomainError("lambda must be nonzero");
  const Quiver q = quiver_sigma2();
  const Scalar one(1), minus(-1);
  // Traversal order: "b2 a1" is a1 then b2.
  return {make_relation(q, {{one, {"a1", "b2"}}, {minus, {"b1", "a2"}}}),
          make_relation(q, {{one, {"a2", "b3"}}, {minus, {"b2", "a3"}}}),
          make_relation(q, {{one, {"a1", "c2"}}, {-lambda, {"c1", "a3"}}}),
          make_relation(q, {{one, {"b1", "c2"}}, {minus, {"c1", "b3"}}})};
}

Matrix relation_closure(const Quiver& q, const std::vector<PathRelation>& rels, int i, int j) {
  auto basis = path_basis(q, i, j);
  std::map<Path, Eigen::Index> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<Eigen::Index>(k);
  std::vector<Vector> rows;
  for (const auto& r : rels) {
    if (r.source < i || r.target > j) continue;
    for (const auto& pre : path_basis(q, i, r.source))
      for (const auto& post : path_basis(q, r.target, j)) {
        Vector v = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
        for (const auto& [c, p] : r.terms) {
          Path full = pre;
          full.insert(full.end(), p.begin(), p.end());
          full.insert(full.end(), post.begin(), post.end());
          v(index.at(full)) = v(index.at(full)) + c;
        }
        rows.push_back(v);
      }
  }
  Matrix M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) M.row(static_cast<Eigen::Index>(k)) = rows[k].transpose();
  if (M.rows() == 0) return M;
  return canonical_rows(M);
}

Matrix bimodule_path_evaluation(const Scalar& lambda) {
  if (lambda.is_zero()) throw DomainError("lambda must be nonzero");
  const Scalar one(1), zero(0);
  const Form x{one, zero}, y{zero, one}, c1{one};
  const Form lx{lambda.inv(), zero};
  // Components: 1: O(-1); 2: O; 3: O(1) + O(-1); 4: O(2) + O.
  std::map<std::string, FormMatrix> arrow{
      {"a1", {{x}}},
      {"b1", {{y}}},
      {"a2", {{x}, {zero_form(-1)}}},
      {"b2", {{y}, {zero_form(-1)}}},
      {"a3", {{x, zero_form(3)}, {zero_form(-1), lx}}},
      {"b3", {{y, zero_form(3)}, {zero_form(-1), y}}},
      {"c1", {{zero_form(2)}, {c1}}},
      {"c2", {{zero_form(2)}, {c1}}},
  };
  const Quiver q = quiver_sigma2();
  auto paths = path_basis(q, 1, 4);
  Matrix M(6, static_cast<Eigen::Index>(paths.size()));
  for (std::size_t c = 0; c < paths.size(); ++c) {
    FormMatrix acc{{Form{one}}};
    for (int a : paths[c]) acc = compose(arrow.at(q.arrows[static_cast<std::size_t>(a)].label), acc);
    // Hom(O(-1), O(2)) has 4 coordinates, Hom(O(-1), O) has 2.
    Form top = acc[0][0].empty() ? zero_form(3) : acc[0][0];
    Form bottom = acc[1][0].empty() ? zero_form(1) : acc[1][0];
    check_internal(top.size() == 4 && bottom.size() == 2, "path evaluation has the wrong degrees");
    for (int k = 0; k < 4; ++k) M(k, static_cast<Eigen::Index>(c)) = top[static_cast<std::size_t>(k)];
    for (int k = 0; k < 2; ++k) M(4 + k, static_cast<Eigen::Index>(c)) = bottom[static_cast<std::size_t>(k)];
  }
  return M;
}

Matrix bimodule_relations(const Scalar& lambda) {
  Matrix K = kernel_basis(bimodule_path_evaluation(lambda));
  if (K.cols() == 0) return Matrix(0, K.rows());
  return canonical_rows(Matrix(K.transpose()));
}

bool McKayReport::pass() const {
  return closure_dim == 6 && kernel_dim == 6 && surviving == expected && subspaces_equal && confluent && hom_dims_match;
}

McKayReport mckay_verify(const Scalar& lambda) {
  McKayReport r;
  r.lambda = lambda;
  const Quiver q = quiver_sigma2();
  auto rels = stephenson_relations(lambda);
  Matrix closure = relation_closure(q, rels, 1, 4);
  Matrix kernel = bimodule_relations(lambda);
  r.closure_dim = static_cast<int>(closure.rows());
  r.kernel_dim = static_cast<int>(kernel.rows());
  r.surviving = static_cast<int>(path_basis(q, 1, 4).size()) - r.closure_dim;
  r.expected = s_graded_dim(2, 3);
  r.subspaces_equal = r.closure_dim == r.kernel_dim &&
                      subspace_equal(Matrix(closure.transpose()), Matrix(kernel.transpose()));
  r.confluent = qweyl_confluent(lambda);
  auto hom = collection_hom_dims(2);
  r.hom_dims_match = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      const long paths = static_cast<long>(path_basis(q, i, j).size());
      const long rel = relation_closure(q, rels, i, j).rows();
      if (paths - rel != hom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) r.hom_dims_match = false;
    }
  return r;
}

}  // namespace bimodulus
