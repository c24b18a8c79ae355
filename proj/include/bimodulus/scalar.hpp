#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "bimodulus/errors.hpp"

namespace bimodulus {

class Scalar;

/// Descriptor of one of the supported exact fields: Q, F_p, or F_p(sqrt d).
class Field {
 public:
  enum class Kind { Rational, Prime, Quadratic };

  static Field rational();
  /// Odd prime, word sized. Throws DomainError otherwise.
  static Field prime(std::uint64_t p);
  /// F_p(sqrt d) with d the smallest quadratic non-residue mod p.
  static Field quadratic(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t nonresidue() const { return d_; }
  bool is_finite() const { return kind_ != Kind::Rational; }
  /// Number of elements; only for finite fields.
  std::uint64_t size() const;

  /// F_p for F_p(sqrt d); identity otherwise.
  Field base() const;
  /// F_p(sqrt d) for F_p. Throws for Q and for fields that already are extensions.
  Field extension() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// i-th element in a fixed enumeration order (0, 1, 2, ... then a + b sqrt d).
  Scalar element(std::uint64_t i) const;
  /// sqrt(d) in F_p(sqrt d).
  Scalar root_of_nonresidue() const;
  Scalar random(std::mt19937_64& rng) const;
  Scalar random_nonzero(std::mt19937_64& rng) const;

  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind k, std::uint64_t p, std::uint64_t d) : kind_(k), p_(p), d_(d) {}
  Kind kind_;
  std::uint64_t p_;
  std::uint64_t d_;
};

bool is_prime(std::uint64_t n);
std::uint64_t smallest_nonresidue(std::uint64_t p);

/// Exact field element. A bare integer literal (what Eigen produces for
/// Scalar(0) and Scalar(1)) carries no field and adopts its partner's field
/// in every binary operation.
class Scalar {
 public:
  struct Literal {
    long long v;
  };
  struct Rat {
    mpq_class q;
  };
  struct Mod {
    std::uint64_t v, p;
  };
  struct Quad {
    std::uint64_t a, b, p, d;
  };

  Scalar() : rep_(Literal{0}) {}
  template <typename I, typename = std::enable_if_t<std::is_integral_v<I>>>
  Scalar(I v) : rep_(Literal{static_cast<long long>(v)}) {}

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long long num, long long den = 1);
  static Scalar mod(long long v, std::uint64_t p);
  static Scalar quad(long long a, long long b, std::uint64_t p, std::uint64_t d);

  bool is_literal() const { return std::holds_alternative<Literal>(rep_); }
  bool is_rational() const { return std::holds_alternative<Rat>(rep_); }
  bool is_mod() const { return std::holds_alternative<Mod>(rep_); }
  bool is_quad() const { return std::holds_alternative<Quad>(rep_); }
  /// Field of a typed scalar; empty for literals.
  std::optional<Field> field() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long long e) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  /// Total order used only for canonical sorting (not a field order).
  friend bool canonical_less(const Scalar& x, const Scalar& y);

  /// Coerce into a given field (literals, F_p into F_p(sqrt d)).
  Scalar in(const Field& f) const;
  /// Components of an extension element (b = 0 for F_p elements).
  std::uint64_t quad_a() const;
  std::uint64_t quad_b() const;
  const mpq_class& rational_value() const;

  std::string to_string() const;
  static Scalar parse(std::string_view s);

  const auto& rep() const { return rep_; }

 private:
  explicit Scalar(Literal l) : rep_(l) {}
  explicit Scalar(Rat r) : rep_(std::move(r)) {}
  explicit Scalar(Mod m) : rep_(m) {}
  explicit Scalar(Quad q) : rep_(q) {}
  std::variant<Literal, Rat, Mod, Quad> rep_;
};

/// Square root in the scalar's own field, or empty if there is none.
/// For rationals only perfect squares have roots.
std::optional<Scalar> sqrt_in_field(const Scalar& x);
bool is_square(const Scalar& x);

/// Field shared by a list of scalars, ignoring literals; empty if all literals.
std::optional<Field> common_field(const std::vector<Scalar>& xs);
bool canonical_less(const Scalar& x, const Scalar& y);
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace bimodulus
