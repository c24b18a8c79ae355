#include "bimodulus/upoly.hpp"

#include <algorithm>

namespace bimodulus {

namespace {

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Scalar UPoly::operator()(const Scalar& t) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Scalar(static_cast<long long>(i)) * c_[i]);
  return UPoly(d);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return lead().inv() * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(c);
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Scalar(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(c);
}

UPoly operator*(const Scalar& s, const UPoly& a) {
  std::vector<Scalar> c = a.c_;
  for (auto& x : c) x *= s;
  return UPoly(c);
}

bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  std::vector<Scalar> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)), Scalar(0));
  Scalar inv = b.lead().inv();
  for (int i = a.degree(); i >= db; --i) {
    Scalar coef = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= coef * b.coeff(j);
  }
  return {UPoly(q), UPoly(r)};
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0;
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a) {
  std::vector<std::pair<UPoly, int>> out;
  if (a.degree() <= 0) return out;
  UPoly f = a.monic();
  UPoly fp = f.derivative();
  UPoly g = gcd(f, fp);
  UPoly b = divmod(f, g).first;
  UPoly c = divmod(fp, g).first;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai, i);
    ++i;
  }
  return out;
}

std::vector<Scalar> roots(const UPoly& a) {
  std::vector<Scalar> out;
  if (a.degree() <= 0) return out;
  if (a.degree() == 1) {
    out.push_back(-a.coeff(0) / a.coeff(1));
    return out;
  }
  if (a.degree() == 2) {
    Scalar A = a.coeff(2), B = a.coeff(1), C = a.coeff(0);
    Scalar disc = B * B - Scalar(4) * A * C;
    auto s = sqrt_in_field(disc);
    if (!s) return out;
    Scalar r1 = (-B + *s) / (Scalar(2) * A);
    Scalar r2 = (-B - *s) / (Scalar(2) * A);
    out.push_back(r1);
    if (!(r1 == r2)) out.push_back(r2);
    return out;
  }
  auto f = common_field(a.coeffs());
  if (!f || !f->is_finite()) throw DomainError("root extraction over Q is limited to degree 2");
  for (std::uint64_t i = 0; i < f->size(); ++i) {
    Scalar t = f->element(i);
    if (a(t).is_zero()) out.push_back(t);
  }
  return out;
}

// ---- BinaryForm ----

BinaryForm::BinaryForm(int degree, std::vector<Scalar> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree + 1))
    throw DomainError("binary form coefficient count does not match degree");
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(degree, std::vector<Scalar>(static_cast<std::size_t>(degree + 1), Scalar(0)));
}

BinaryForm BinaryForm::homogenize(const UPoly& p, int degree) {
  if (p.degree() > degree) throw DomainError("homogenize: degree too small");
  std::vector<Scalar> c(static_cast<std::size_t>(degree + 1), Scalar(0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
  return BinaryForm(degree, c);
}

BinaryForm BinaryForm::vanishing_at(const Scalar& a0, const Scalar& a1) {
  // a1 x0 - a0 x1
  return BinaryForm(1, {a1, -a0});
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

UPoly BinaryForm::dehomogenize() const { return UPoly(c_); }

int BinaryForm::multiplicity_at_infinity() const {
  if (is_zero()) throw DomainError("zero form has no root multiplicities");
  return degree_ - dehomogenize().degree();
}

Scalar BinaryForm::operator()(const Scalar& x0, const Scalar& x1) const {
  Scalar acc(0);
  for (int i = 0; i <= degree_; ++i) acc += c_[static_cast<std::size_t>(i)] * x0.pow(degree_ - i) * x1.pow(i);
  return acc;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) throw DomainError("adding binary forms of different degrees");
  std::vector<Scalar> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return BinaryForm(a.degree_, c);
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + Scalar(-1) * b; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Scalar> c(static_cast<std::size_t>(a.degree_ + b.degree_ + 1), Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return BinaryForm(a.degree_ + b.degree_, c);
}

BinaryForm operator*(const Scalar& s, const BinaryForm& a) {
  std::vector<Scalar> c = a.c_;
  for (auto& x : c) x *= s;
  return BinaryForm(a.degree_, c);
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.degree_ == b.degree_ && (a - b).is_zero();
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  int k = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
  return BinaryForm::homogenize(g, g.degree() + k);
}

std::optional<BinaryForm> form_divide(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return BinaryForm::zero(std::max(a.degree() - b.degree(), 0));
  int d = a.degree() - b.degree();
  if (d < 0) return std::nullopt;
  if (a.multiplicity_at_infinity() < b.multiplicity_at_infinity()) return std::nullopt;
  auto [q, r] = divmod(a.dehomogenize(), b.dehomogenize());
  if (!r.is_zero()) return std::nullopt;
  return BinaryForm::homogenize(q, d);
}

FormFactorization form_squarefree(const BinaryForm& f) {
  if (f.is_zero()) throw DomainError("square-free decomposition of the zero form");
  FormFactorization out{f.dehomogenize().lead(), {}};
  int k = f.multiplicity_at_infinity();
  if (k > 0) out.factors.emplace_back(BinaryForm(1, {Scalar(1), Scalar(0)}), k);
  for (auto& [p, m] : squarefree_decomposition(f.dehomogenize()))
    out.factors.emplace_back(BinaryForm::homogenize(p, p.degree()), m);
  return out;
}

std::vector<int> root_multiplicities(const BinaryForm& f) {
  std::vector<int> out;
  for (const auto& [g, m] : form_squarefree(f).factors)
    for (int i = 0; i < g.degree(); ++i) out.push_back(m);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::array<Scalar, 2>> form_roots(const BinaryForm& f) {
  std::vector<std::array<Scalar, 2>> out;
  if (f.is_zero()) throw DomainError("zero form vanishes everywhere");
  UPoly p = f.dehomogenize();
  auto fld = common_field(f.coeffs());
  Scalar one = fld ? fld->one() : Scalar(1);
  Scalar zero = fld ? fld->zero() : Scalar(0);
  // Work with the square-free part so that roots are distinct.
  UPoly sq = p.degree() > 0 ? divmod(p, gcd(p, p.derivative())).first : p;
  for (const auto& r : roots(sq)) out.push_back({one, r});
  if (f.multiplicity_at_infinity() > 0) out.push_back({zero, one});
  return out;
}

BinaryForm form_substitute(const BinaryForm& f, const std::array<std::array<Scalar, 2>, 2>& g) {
  // x0 -> g00 x0 + g01 x1, x1 -> g10 x0 + g11 x1
  BinaryForm l0(1, {g[0][0], g[0][1]});
  BinaryForm l1(1, {g[1][0], g[1][1]});
  BinaryForm acc = BinaryForm::zero(f.degree());
  for (int i = 0; i <= f.degree(); ++i) {
    BinaryForm term(0, {f.coeff(i)});
    for (int k = 0; k < f.degree() - i; ++k) term = term * l0;
    for (int k = 0; k < i; ++k) term = term * l1;
    acc = acc + term;
  }
  return acc;
}

}  // namespace bimodulus
