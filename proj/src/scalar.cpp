#include "bimodulus/scalar.hpp"

#include <algorithm>
#include <limits>
#include <regex>
#include <sstream>

namespace bimodulus {

namespace {

using u64 = std::uint64_t;

u64 reduce(long long v, u64 p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<u64>(r);
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw DivisionByZero();
  return powmod(a, p - 2, p);
}

bool is_residue(u64 a, u64 p) { return a % p == 0 || powmod(a, (p - 1) / 2, p) == 1; }

// Tonelli-Shanks; a must be a residue.
u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = smallest_nonresidue(p);
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

[[noreturn]] void mismatch(const Scalar& x, const Scalar& y) {
  throw FieldMismatch("mixed-field operands: " + x.to_string() + " and " + y.to_string());
}

// Bring both operands to the same representation.
std::pair<Scalar, Scalar> unify(const Scalar& x, const Scalar& y) {
  if (x.rep().index() == y.rep().index()) {
    if (x.is_mod() && std::get<Scalar::Mod>(x.rep()).p != std::get<Scalar::Mod>(y.rep()).p) mismatch(x, y);
    if (x.is_quad()) {
      const auto& a = std::get<Scalar::Quad>(x.rep());
      const auto& b = std::get<Scalar::Quad>(y.rep());
      if (a.p != b.p || a.d != b.d) mismatch(x, y);
    }
    return {x, y};
  }
  if (x.is_literal()) return {x.in(*y.field()), y};
  if (y.is_literal()) return {x, y.in(*x.field())};
  if (x.is_mod() && y.is_quad()) return {x.in(*y.field()), y};
  if (x.is_quad() && y.is_mod()) return {x, y.in(*x.field())};
  mismatch(x, y);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  for (u64 d = 2; d < p; ++d)
    if (!is_residue(d, p)) return d;
  throw DomainError("no non-residue mod " + std::to_string(p));
}

// ---- Field ----

Field Field::rational() { return Field(Kind::Rational, 0, 0); }

Field Field::prime(std::uint64_t p) {
  if (p < 5 || p >= (1ull << 31) || !is_prime(p))
    throw DomainError("prime must be an odd prime other than 3 and below 2^31, got " + std::to_string(p));
  return Field(Kind::Prime, p, 0);
}

Field Field::quadratic(std::uint64_t p) {
  Field base = prime(p);
  return Field(Kind::Quadratic, base.p_, smallest_nonresidue(p));
}

std::uint64_t Field::size() const {
  switch (kind_) {
    case Kind::Prime: return p_;
    case Kind::Quadratic: return p_ * p_;
    default: throw DomainError("Q is infinite");
  }
}

Field Field::base() const { return kind_ == Kind::Quadratic ? Field(Kind::Prime, p_, 0) : *this; }

Field Field::extension() const {
  if (kind_ != Kind::Prime) throw DomainError("quadratic extension only of prime fields");
  return quadratic(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  switch (kind_) {
    case Kind::Rational: return Scalar::rational(v);
    case Kind::Prime: return Scalar::mod(v, p_);
    default: return Scalar::quad(v, 0, p_, d_);
  }
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::Rational) return Scalar::rational(q);
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
  return from_int(num.get_si()) / from_int(den.get_si());
}

Scalar Field::element(std::uint64_t i) const {
  switch (kind_) {
    case Kind::Prime: return Scalar::mod(static_cast<long long>(i % p_), p_);
    case Kind::Quadratic:
      return Scalar::quad(static_cast<long long>(i % p_), static_cast<long long>((i / p_) % p_), p_, d_);
    default: return Scalar::rational(static_cast<long long>(i));
  }
}

Scalar Field::root_of_nonresidue() const {
  if (kind_ != Kind::Quadratic) throw DomainError("sqrt(d) lives in the quadratic extension");
  return Scalar::quad(0, 1, p_, d_);
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (kind_ == Kind::Rational) {
    long long n = static_cast<long long>(rng() % 41) - 20;
    long long d = static_cast<long long>(rng() % 5) + 1;
    return Scalar::rational(n, d);
  }
  return element(rng() % size());
}

Scalar Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::Prime: return "F_" + std::to_string(p_);
    default: return "F_" + std::to_string(p_) + "(sqrt " + std::to_string(d_) + ")";
  }
}

// ---- Scalar ----

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(Rat{c});
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  return rational(q);
}

Scalar Scalar::mod(long long v, std::uint64_t p) { return Scalar(Mod{reduce(v, p), p}); }

Scalar Scalar::quad(long long a, long long b, std::uint64_t p, std::uint64_t d) {
  return Scalar(Quad{reduce(a, p), reduce(b, p), p, d});
}

std::optional<Field> Scalar::field() const {
  return std::visit(
      [](const auto& r) -> std::optional<Field> {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Literal>) return std::nullopt;
        else if constexpr (std::is_same_v<T, Rat>) return Field::rational();
        else if constexpr (std::is_same_v<T, Mod>) return Field(Field::Kind::Prime, r.p, 0);
        else return Field(Field::Kind::Quadratic, r.p, r.d);
      },
      rep_);
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Literal>) return r.v == 0;
        else if constexpr (std::is_same_v<T, Rat>) return sgn(r.q) == 0;
        else if constexpr (std::is_same_v<T, Mod>) return r.v == 0;
        else return r.a == 0 && r.b == 0;
      },
      rep_);
}

bool Scalar::is_one() const { return (*this - Scalar(1)).is_zero(); }

Scalar Scalar::in(const Field& f) const {
  if (is_literal()) {
    long long v = std::get<Literal>(rep_).v;
    return f.from_int(v);
  }
  auto mine = *field();
  if (mine == f) return *this;
  if (is_mod() && f.kind() == Field::Kind::Quadratic && f.characteristic() == mine.characteristic())
    return Scalar(Quad{std::get<Mod>(rep_).v, 0, f.characteristic(), f.nonresidue()});
  throw FieldMismatch("cannot coerce " + to_string() + " into " + f.describe());
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& r) -> Scalar {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Literal>) {
          if (r.v == std::numeric_limits<long long>::min()) return Scalar::rational(-mpq_class(mpz_class(static_cast<long>(r.v))));
          return Scalar(Literal{-r.v});
        } else if constexpr (std::is_same_v<T, Rat>) {
          return Scalar(Rat{mpq_class(-r.q)});
        } else if constexpr (std::is_same_v<T, Mod>) {
          return Scalar(Mod{(r.p - r.v) % r.p, r.p});
        } else {
          return Scalar(Quad{(r.p - r.a) % r.p, (r.p - r.b) % r.p, r.p, r.d});
        }
      },
      rep_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  return std::visit(
      [](const auto& r) -> Scalar {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Literal>) {
          if (r.v == 1 || r.v == -1) return Scalar(Literal{r.v});
          return Scalar::rational(1, r.v);
        } else if constexpr (std::is_same_v<T, Rat>) {
          return Scalar::rational(mpq_class(1) / r.q);
        } else if constexpr (std::is_same_v<T, Mod>) {
          return Scalar(Mod{invmod(r.v, r.p), r.p});
        } else {
          u64 norm = (mulmod(r.a, r.a, r.p) + r.p - mulmod(mulmod(r.b, r.b, r.p), r.d, r.p)) % r.p;
          u64 ni = invmod(norm, r.p);
          return Scalar(Quad{mulmod(r.a, ni, r.p), mulmod((r.p - r.b) % r.p, ni, r.p), r.p, r.d});
        }
      },
      rep_);
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Scalar r(1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Scalar operator+(const Scalar& x0, const Scalar& y0) {
  auto [x, y] = unify(x0, y0);
  if (x.is_literal()) {
    long long r;
    if (!__builtin_add_overflow(std::get<Scalar::Literal>(x.rep_).v, std::get<Scalar::Literal>(y.rep_).v, &r))
      return Scalar(Scalar::Literal{r});
    return Scalar::rational(mpq_class(mpz_class(static_cast<long>(std::get<Scalar::Literal>(x.rep_).v))) +
                            mpq_class(mpz_class(static_cast<long>(std::get<Scalar::Literal>(y.rep_).v))));
  }
  if (x.is_rational()) return Scalar(Scalar::Rat{mpq_class(x.rational_value() + y.rational_value())});
  if (x.is_mod()) {
    const auto& a = std::get<Scalar::Mod>(x.rep_);
    const auto& b = std::get<Scalar::Mod>(y.rep_);
    return Scalar(Scalar::Mod{(a.v + b.v) % a.p, a.p});
  }
  const auto& a = std::get<Scalar::Quad>(x.rep_);
  const auto& b = std::get<Scalar::Quad>(y.rep_);
  return Scalar(Scalar::Quad{(a.a + b.a) % a.p, (a.b + b.b) % a.p, a.p, a.d});
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x0, const Scalar& y0) {
  auto [x, y] = unify(x0, y0);
  if (x.is_literal()) {
    long long r;
    if (!__builtin_mul_overflow(std::get<Scalar::Literal>(x.rep_).v, std::get<Scalar::Literal>(y.rep_).v, &r))
      return Scalar(Scalar::Literal{r});
    return Scalar::rational(mpq_class(mpz_class(static_cast<long>(std::get<Scalar::Literal>(x.rep_).v))) *
                            mpq_class(mpz_class(static_cast<long>(std::get<Scalar::Literal>(y.rep_).v))));
  }
  if (x.is_rational()) return Scalar(Scalar::Rat{mpq_class(x.rational_value() * y.rational_value())});
  if (x.is_mod()) {
    const auto& a = std::get<Scalar::Mod>(x.rep_);
    const auto& b = std::get<Scalar::Mod>(y.rep_);
    return Scalar(Scalar::Mod{mulmod(a.v, b.v, a.p), a.p});
  }
  const auto& a = std::get<Scalar::Quad>(x.rep_);
  const auto& b = std::get<Scalar::Quad>(y.rep_);
  u64 p = a.p;
  u64 re = (mulmod(a.a, b.a, p) + mulmod(mulmod(a.b, b.b, p), a.d, p)) % p;
  u64 im = (mulmod(a.a, b.b, p) + mulmod(a.b, b.a, p)) % p;
  return Scalar(Scalar::Quad{re, im, p, a.d});
}

Scalar operator/(const Scalar& x0, const Scalar& y0) {
  auto [x, y] = unify(x0, y0);
  return x * y.inv();
}

bool operator==(const Scalar& x0, const Scalar& y0) {
  auto [x, y] = unify(x0, y0);
  if (x.is_literal()) return std::get<Scalar::Literal>(x.rep_).v == std::get<Scalar::Literal>(y.rep_).v;
  if (x.is_rational()) return x.rational_value() == y.rational_value();
  if (x.is_mod()) return std::get<Scalar::Mod>(x.rep_).v == std::get<Scalar::Mod>(y.rep_).v;
  const auto& a = std::get<Scalar::Quad>(x.rep_);
  const auto& b = std::get<Scalar::Quad>(y.rep_);
  return a.a == b.a && a.b == b.b;
}

bool canonical_less(const Scalar& x, const Scalar& y) {
  if (x.rep_.index() != y.rep_.index()) {
    // Compare within the common field when possible so that equal values tie.
    auto [a, b] = unify(x, y);
    return canonical_less(a, b);
  }
  if (x.is_literal()) return std::get<Scalar::Literal>(x.rep_).v < std::get<Scalar::Literal>(y.rep_).v;
  if (x.is_rational()) return x.rational_value() < y.rational_value();
  if (x.is_mod()) return std::get<Scalar::Mod>(x.rep_).v < std::get<Scalar::Mod>(y.rep_).v;
  const auto& a = std::get<Scalar::Quad>(x.rep_);
  const auto& b = std::get<Scalar::Quad>(y.rep_);
  return std::tie(a.b, a.a) < std::tie(b.b, b.a);
}

std::uint64_t Scalar::quad_a() const {
  if (is_mod()) return std::get<Mod>(rep_).v;
  if (is_quad()) return std::get<Quad>(rep_).a;
  throw DomainError("not a finite-field element");
}

std::uint64_t Scalar::quad_b() const {
  if (is_mod()) return 0;
  if (is_quad()) return std::get<Quad>(rep_).b;
  throw DomainError("not a finite-field element");
}

const mpq_class& Scalar::rational_value() const {
  if (!is_rational()) throw DomainError("not a rational: " + to_string());
  return std::get<Rat>(rep_).q;
}

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return std::to_string(r.v) + "/1";
        } else if constexpr (std::is_same_v<T, Rat>) {
          return r.q.get_num().get_str() + "/" + r.q.get_den().get_str();
        } else if constexpr (std::is_same_v<T, Mod>) {
          return std::to_string(r.v) + " mod " + std::to_string(r.p);
        } else {
          return "[" + std::to_string(r.a) + "," + std::to_string(r.b) + "] mod " + std::to_string(r.p) +
                 " adjoin sqrt(" + std::to_string(r.d) + ")";
        }
      },
      rep_);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  static const std::regex quad_re(R"(^\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*mod\s+(\d+)\s+adjoin\s+sqrt\(\s*(\d+)\s*\)\s*$)");
  static const std::regex mod_re(R"(^\s*(-?\d+)\s+mod\s+(\d+)\s*$)");
  static const std::regex rat_re(R"(^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, quad_re)) {
    u64 p = std::stoull(m[3]);
    u64 d = std::stoull(m[4]);
    Field f = Field::quadratic(p);
    if (f.nonresidue() != d)
      throw DomainError("extension must adjoin sqrt of the smallest non-residue " + std::to_string(f.nonresidue()));
    return quad(std::stoll(m[1]), std::stoll(m[2]), p, d);
  }
  if (std::regex_match(s, m, mod_re)) {
    u64 p = std::stoull(m[2]);
    Field::prime(p);
    return mod(std::stoll(m[1]), p);
  }
  if (std::regex_match(s, m, rat_re)) {
    mpz_class num(m[1].str());
    mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw DivisionByZero();
    return rational(mpq_class(num, den));
  }
  throw DomainError("malformed scalar: '" + s + "'");
}

std::optional<Scalar> sqrt_in_field(const Scalar& x) {
  if (x.is_zero()) return x;
  if (x.is_literal() || x.is_rational()) {
    mpq_class q = x.is_literal() ? mpq_class(mpz_class(static_cast<long>(std::get<Scalar::Literal>(x.rep()).v)))
                                 : x.rational_value();
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Scalar::rational(mpq_class(rn, rd));
  }
  if (x.is_mod()) {
    const auto& r = std::get<Scalar::Mod>(x.rep());
    if (!is_residue(r.v, r.p)) return std::nullopt;
    return Scalar::mod(static_cast<long long>(sqrt_mod(r.v, r.p)), r.p);
  }
  const auto& r = std::get<Scalar::Quad>(x.rep());
  const u64 p = r.p, d = r.d;
  auto make = [&](u64 a, u64 b) { return Scalar::quad(static_cast<long long>(a), static_cast<long long>(b), p, d); };
  if (r.b == 0) {
    if (is_residue(r.a, p)) return make(sqrt_mod(r.a, p), 0);
    return make(0, sqrt_mod(mulmod(r.a, invmod(d, p), p), p));
  }
  u64 norm = (mulmod(r.a, r.a, p) + p - mulmod(mulmod(r.b, r.b, p), d, p)) % p;
  if (!is_residue(norm, p)) return std::nullopt;
  u64 n = sqrt_mod(norm, p);
  u64 half = invmod(2, p);
  for (u64 s : {n, (p - n) % p}) {
    u64 t = mulmod((r.a + s) % p, half, p);
    if (!is_residue(t, p)) continue;
    u64 c = sqrt_mod(t, p);
    if (c == 0) continue;
    u64 e = mulmod(r.b, invmod(mulmod(2, c, p), p), p);
    Scalar cand = make(c, e);
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

bool is_square(const Scalar& x) { return sqrt_in_field(x).has_value(); }

std::optional<Field> common_field(const std::vector<Scalar>& xs) {
  std::optional<Field> f;
  for (const auto& x : xs) {
    auto g = x.field();
    if (!g) continue;
    if (!f) {
      f = g;
      continue;
    }
    if (*f == *g) continue;
    if (f->kind() == Field::Kind::Prime && g->kind() == Field::Kind::Quadratic &&
        f->characteristic() == g->characteristic()) {
      f = g;
      continue;
    }
    if (g->kind() == Field::Kind::Prime && f->kind() == Field::Kind::Quadratic &&
        f->characteristic() == g->characteristic())
      continue;
    throw FieldMismatch("scalars from " + f->describe() + " and " + g->describe());
  }
  return f;
}

}  // namespace bimodulus
