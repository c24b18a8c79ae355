#include "bimodulus/multipoly.hpp"

#include <algorithm>

namespace bimodulus {

Eigen::Index component_dim(const std::vector<int>& degree) {
  Eigen::Index n = 1;
  for (int d : degree) {
    if (d < 0) return 0;
    n *= d + 1;
  }
  return n;
}

std::vector<std::vector<int>> component_basis(const std::vector<int>& degree) {
  MultiPoly z = MultiPoly::zero(degree);
  std::vector<std::vector<int>> out;
  for (Eigen::Index i = 0; i < z.size(); ++i) out.push_back(z.exponent_of(i));
  return out;
}

MultiPoly MultiPoly::zero(std::vector<int> degree) {
  MultiPoly p;
  p.coeffs_ = Vector::Zero(component_dim(degree));
  p.degree_ = std::move(degree);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<int> degree, const std::vector<int>& k, const Scalar& c) {
  MultiPoly p = zero(std::move(degree));
  p.set_coeff(k, c);
  return p;
}

MultiPoly MultiPoly::from_binary_form(const BinaryForm& f) {
  MultiPoly p = zero({f.degree()});
  for (int i = 0; i <= f.degree(); ++i) p.coeffs_(i) = f.coeff(i);
  return p;
}

Eigen::Index MultiPoly::index_of(const std::vector<int>& k) const {
  if (k.size() != degree_.size()) throw DomainError("monomial tuple has wrong block count");
  Eigen::Index idx = 0;
  for (std::size_t b = 0; b < k.size(); ++b) {
    if (k[b] < 0 || k[b] > degree_[b]) throw DomainError("monomial outside the multidegree");
    idx = idx * (degree_[b] + 1) + k[b];
  }
  return idx;
}

std::vector<int> MultiPoly::tuple_of(Eigen::Index idx) const {
  std::vector<int> k(degree_.size());
  for (std::size_t b = degree_.size(); b-- > 0;) {
    k[b] = static_cast<int>(idx % (degree_[b] + 1));
    idx /= degree_[b] + 1;
  }
  return k;
}

std::vector<int> MultiPoly::exponent_of(Eigen::Index idx) const {
  auto k = tuple_of(idx);
  std::vector<int> e;
  for (std::size_t b = 0; b < k.size(); ++b) {
    e.push_back(degree_[b] - k[b]);
    e.push_back(k[b]);
  }
  return e;
}

bool MultiPoly::is_zero() const {
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_(i).is_zero()) return false;
  return true;
}

std::size_t MultiPoly::term_count() const {
  std::size_t n = 0;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) n += !coeffs_(i).is_zero();
  return n;
}

std::optional<Field> MultiPoly::field() const {
  return common_field(std::vector<Scalar>(coeffs_.data(), coeffs_.data() + coeffs_.size()));
}

Scalar MultiPoly::operator()(const std::vector<Scalar>& point) const {
  if (point.size() != 2 * degree_.size()) throw DomainError("point has wrong number of coordinates");
  // powers[b][v][e] = x_{b,v}^e
  std::vector<std::array<std::vector<Scalar>, 2>> powers(degree_.size());
  for (std::size_t b = 0; b < degree_.size(); ++b) {
    if (point[2 * b].is_zero() && point[2 * b + 1].is_zero())
      throw DomainError("point has a block with all coordinates zero");
    for (int v = 0; v < 2; ++v) {
      auto& pw = powers[b][static_cast<std::size_t>(v)];
      pw.push_back(Scalar(1));
      for (int e = 1; e <= std::max(degree_[b], 0); ++e) pw.push_back(pw.back() * point[2 * b + static_cast<std::size_t>(v)]);
    }
  }
  Scalar acc(0);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i).is_zero()) continue;
    auto k = tuple_of(i);
    Scalar t = coeffs_(i);
    for (std::size_t b = 0; b < k.size(); ++b)
      t *= powers[b][0][static_cast<std::size_t>(degree_[b] - k[b])] * powers[b][1][static_cast<std::size_t>(k[b])];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::partial(int block, int var) const {
  auto deg = degree_;
  deg[static_cast<std::size_t>(block)] -= 1;
  MultiPoly out = zero(deg);
  if (out.size() == 0) return out;
  const int d = degree_[static_cast<std::size_t>(block)];
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i).is_zero()) continue;
    auto k = tuple_of(i);
    int kb = k[static_cast<std::size_t>(block)];
    int e = var == 0 ? d - kb : kb;
    if (e == 0) continue;
    if (var == 1) k[static_cast<std::size_t>(block)] -= 1;
    out.coeffs_(out.index_of(k)) += Scalar(e) * coeffs_(i);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::partials() const {
  std::vector<MultiPoly> out;
  for (int b = 0; b < blocks(); ++b)
    for (int v = 0; v < 2; ++v) out.push_back(partial(b, v));
  return out;
}

MultiPoly MultiPoly::substitute(int block, const Mat2& g) const {
  const auto bb = static_cast<std::size_t>(block);
  const int d = degree_[bb];
  if (d < 0) return *this;
  std::vector<BinaryForm> expand;
  BinaryForm l0(1, {g[0][0], g[0][1]});
  BinaryForm l1(1, {g[1][0], g[1][1]});
  for (int k = 0; k <= d; ++k) {
    BinaryForm t(0, {Scalar(1)});
    for (int i = 0; i < d - k; ++i) t = t * l0;
    for (int i = 0; i < k; ++i) t = t * l1;
    expand.push_back(t);
  }
  MultiPoly out = zero(degree_);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i).is_zero()) continue;
    auto k = tuple_of(i);
    const auto& e = expand[static_cast<std::size_t>(k[bb])];
    for (int j = 0; j <= d; ++j) {
      if (e.coeff(j).is_zero()) continue;
      auto kk = k;
      kk[bb] = j;
      out.coeffs_(out.index_of(kk)) += coeffs_(i) * e.coeff(j);
    }
  }
  return out;
}

MultiPoly MultiPoly::slice(int block, int k) const {
  const auto bb = static_cast<std::size_t>(block);
  auto deg = degree_;
  deg.erase(deg.begin() + block);
  MultiPoly out = zero(deg);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    auto t = tuple_of(i);
    if (t[bb] != k) continue;
    t.erase(t.begin() + block);
    out.coeffs_(out.index_of(t)) = coeffs_(i);
  }
  return out;
}

BinaryForm MultiPoly::as_binary_form() const {
  if (blocks() != 1) throw DomainError("not a binary form");
  return BinaryForm(degree_[0], std::vector<Scalar>(coeffs_.data(), coeffs_.data() + coeffs_.size()));
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.degree_ != b.degree_) throw DomainError("adding forms of different multidegree");
  MultiPoly out = a;
  out.coeffs_ = a.coeffs_ + b.coeffs_;
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + Scalar(-1) * b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.blocks() != b.blocks()) throw DomainError("multiplying forms from different rings");
  std::vector<int> deg(a.degree_.size());
  for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = a.degree_[i] + b.degree_[i];
  MultiPoly out = MultiPoly::zero(deg);
  if (out.size() == 0) return out;
  for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_(i).is_zero()) continue;
    auto ka = a.tuple_of(i);
    for (Eigen::Index j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_(j).is_zero()) continue;
      auto kb = b.tuple_of(j);
      for (std::size_t t = 0; t < ka.size(); ++t) kb[t] += ka[t];
      out.coeffs_(out.index_of(kb)) += a.coeffs_(i) * b.coeffs_(j);
    }
  }
  return out;
}

MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
  MultiPoly out = a;
  for (Eigen::Index i = 0; i < out.coeffs_.size(); ++i) out.coeffs_(i) = s * out.coeffs_(i);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.degree_ == b.degree_ && (a - b).is_zero(); }

MultiPoly linear_resultant(const MultiPoly& f1, const MultiPoly& f2, int block) {
  const auto bb = static_cast<std::size_t>(block);
  if (f1.degree()[bb] != 1 || f2.degree()[bb] != 1) throw DomainError("linear_resultant: not linear in the block");
  return f1.slice(block, 0) * f2.slice(block, 1) - f2.slice(block, 0) * f1.slice(block, 1);
}

BinaryForm quadratic_discriminant(const MultiPoly& f, int block) {
  if (f.blocks() != 2 || f.degree()[static_cast<std::size_t>(block)] != 2)
    throw DomainError("quadratic_discriminant: need a 2-block form of degree 2 in the block");
  if (auto fld = f.field(); fld && fld->characteristic() == 2) throw DomainError("characteristic 2");
  MultiPoly A = f.slice(block, 0), B = f.slice(block, 1), C = f.slice(block, 2);
  return (B * B - Scalar(4) * (A * C)).as_binary_form();
}

Matrix multiplication_matrix(const MultiPoly& f, const std::vector<int>& degree) {
  std::vector<int> target(degree.size());
  for (std::size_t i = 0; i < degree.size(); ++i) target[i] = degree[i] + f.degree()[i];
  Eigen::Index n = component_dim(degree);
  Matrix m = Matrix::Zero(component_dim(target), n);
  MultiPoly src = MultiPoly::zero(degree);
  for (Eigen::Index j = 0; j < n; ++j) {
    MultiPoly prod = f * MultiPoly::monomial(degree, src.tuple_of(j));
    m.col(j) = prod.coeffs();
  }
  return m;
}

}  // namespace bimodulus
