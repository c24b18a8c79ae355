#include "bimodulus/bimodules.hpp"

#include <algorithm>
#include <cstdlib>

namespace bimodulus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void inconsistent(const std::string& why) { throw DomainError("inconsistent descriptor: " + why); }

bool even(int x) { return x % 2 == 0; }

// Floor division by 2 that is exact on the parity branches where it is used.
int half(int x) {
  check_internal(even(x), "odd value halved");
  return x / 2;
}

std::pair<int, int> sorted(int a, int b) { return a <= b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

std::string to_string(Resolution r) { return r == Resolution::NodalConic ? "NodalConic" : "TwoLines"; }

Resolution resolution_from_string(const std::string& s) {
  if (s == "NodalConic") return Resolution::NodalConic;
  if (s == "TwoLines") return Resolution::TwoLines;
  throw DomainError("unknown resolution '" + s + "'");
}

std::string descriptor_kind(const BimodDescriptor& d) {
  return std::visit(overloaded{[](const Type11Desc&) { return std::string("Type11"); },
                               [](const NonReducedDesc&) { return std::string("NonReduced"); },
                               [](const IntegralInvertibleDesc&) { return std::string("IntegralInvertible"); },
                               [](const IntegralNonInvertibleDesc&) { return std::string("IntegralNonInvertible"); },
                               [](const ReducibleInvertibleDesc&) { return std::string("ReducibleInvertible"); },
                               [](const ReducibleNonInvertibleDesc&) {
                                 return std::string("ReducibleNonInvertible");
                               }},
                    d);
}

int chi(const BimodDescriptor& d) {
  return std::visit(overloaded{[](const Type11Desc& t) { return t.a + t.b + 2; },
                               [](const NonReducedDesc& t) { return 2 * t.k - t.deg_D; },
                               [](const IntegralInvertibleDesc& t) { return t.deg; },
                               [](const IntegralNonInvertibleDesc& t) { return t.i + 1; },
                               [](const ReducibleInvertibleDesc& t) { return t.p + t.q; },
                               [](const ReducibleNonInvertibleDesc& t) {
                                 return t.p + t.q + (t.resolution == Resolution::NodalConic ? 1 : 2);
                               }},
                    d);
}

void validate_descriptor(const BimodDescriptor& d) {
  std::visit(overloaded{
                 [](const Type11Desc& t) {
                   if (t.a > t.b) inconsistent("Type11 needs a <= b");
                 },
                 [](const NonReducedDesc& t) {
                   if (t.deg_D < 0) inconsistent("deg D < 0");
                   if (t.pullback && t.twisted_pullback) inconsistent("L and u*O(-1) (x) L cannot both be v-pullbacks");
                 },
                 [](const IntegralInvertibleDesc& t) {
                   if (!is_integral(t.type)) inconsistent("integral descriptor on type " + to_string(t.type));
                   if ((t.pullback || t.twisted_pullback) && !even(t.deg)) inconsistent("pullback flag with odd degree");
                   if (t.pullback && t.twisted_pullback) inconsistent("both pullback flags set");
                 },
                 [](const IntegralNonInvertibleDesc& t) {
                   if (t.type != KodairaType::I1 && t.type != KodairaType::II)
                     inconsistent("non-invertible U on integral W needs a singular W (I1 or II)");
                 },
                 [](const ReducibleInvertibleDesc& t) {
                   if (!is_reducible(t.type)) inconsistent("reducible descriptor on type " + to_string(t.type));
                   if (t.p > t.q) inconsistent("needs p <= q");
                   if ((t.pullback || t.twisted_pullback) && t.p != t.q) inconsistent("pullback flag with p != q");
                   if (t.pullback && t.twisted_pullback) inconsistent("both pullback flags set");
                 },
                 [](const ReducibleNonInvertibleDesc& t) {
                   if (!is_reducible(t.type)) inconsistent("reducible descriptor on type " + to_string(t.type));
                   if (t.p > t.q) inconsistent("needs p <= q");
                 }},
             d);
}

// ---- tables ----

std::pair<int, int> split_ab(const BimodDescriptor& d) {
  validate_descriptor(d);
  const int c = chi(d);
  return std::visit(
      overloaded{
          [](const Type11Desc& t) { return std::make_pair(t.a, t.b); },
          [c](const NonReducedDesc& t) {
            if (t.deg_D == 0) {
              const int deg = 2 * t.k;
              return t.pullback ? std::make_pair(half(deg) - 2, half(deg)) : std::make_pair(half(deg) - 1, half(deg) - 1);
            }
            if (t.deg_D == 1) return std::make_pair((c - 3) / 2, (c - 1) / 2);
            return std::make_pair(half(c - t.deg_D), half(c + t.deg_D) - 2);
          },
          [](const IntegralInvertibleDesc& t) {
            if (even(t.deg))
              return t.pullback ? std::make_pair(half(t.deg) - 2, half(t.deg))
                                : std::make_pair(half(t.deg) - 1, half(t.deg) - 1);
            return std::make_pair(half(t.deg - 1) - 1, half(t.deg - 1));
          },
          [](const IntegralNonInvertibleDesc& t) {
            return even(t.i) ? std::make_pair(half(t.i) - 1, half(t.i)) : std::make_pair(half(t.i - 1), half(t.i - 1));
          },
          [](const ReducibleInvertibleDesc& t) {
            const int gap = t.q - t.p;
            if (gap == 0) return t.pullback ? std::make_pair(t.p - 2, t.p) : std::make_pair(t.p - 1, t.p - 1);
            if (gap == 1) return std::make_pair(t.p - 1, t.p);
            return std::make_pair(t.p, t.q - 2);
          },
          [](const ReducibleNonInvertibleDesc& t) {
            if (t.resolution == Resolution::TwoLines) return std::make_pair(t.p, t.q);
            return t.p == t.q ? std::make_pair(t.p - 1, t.p) : std::make_pair(t.p, t.q - 1);
          }},
      d);
}

std::pair<int, int> split_ab_prime(const BimodDescriptor& d) {
  validate_descriptor(d);
  const int c = chi(d);
  return std::visit(
      overloaded{
          [](const Type11Desc& t) { return std::make_pair(t.a - 1, t.b - 1); },
          [c](const NonReducedDesc& t) {
            if (t.deg_D == 0) {
              const int deg = 2 * t.k;
              return t.twisted_pullback ? std::make_pair(half(deg) - 3, half(deg) - 1)
                                        : std::make_pair(half(deg) - 2, half(deg) - 2);
            }
            if (t.deg_D == 1) return std::make_pair((c - 5) / 2, (c - 3) / 2);
            return std::make_pair(half(c - t.deg_D) - 1, half(c + t.deg_D) - 3);
          },
          [](const IntegralInvertibleDesc& t) {
            if (even(t.deg))
              return t.twisted_pullback ? std::make_pair(half(t.deg) - 3, half(t.deg) - 1)
                                        : std::make_pair(half(t.deg) - 2, half(t.deg) - 2);
            return std::make_pair(half(t.deg - 1) - 2, half(t.deg - 1) - 1);
          },
          [](const IntegralNonInvertibleDesc& t) {
            return even(t.i) ? std::make_pair(half(t.i) - 2, half(t.i) - 1)
                             : std::make_pair(half(t.i - 1) - 1, half(t.i - 1) - 1);
          },
          [](const ReducibleInvertibleDesc& t) {
            const int gap = t.q - t.p;
            if (gap == 0)
              return t.twisted_pullback ? std::make_pair(t.p - 3, t.p - 1) : std::make_pair(t.p - 2, t.p - 2);
            if (gap == 1) return std::make_pair(t.p - 2, t.p - 1);
            return std::make_pair(t.p - 1, t.q - 3);
          },
          [](const ReducibleNonInvertibleDesc& t) {
            if (t.resolution == Resolution::TwoLines) return std::make_pair(t.p - 1, t.q - 1);
            return t.p == t.q ? std::make_pair(t.p - 2, t.p - 1) : std::make_pair(t.p - 1, t.q - 2);
          }},
      d);
}

SplitType split_from_table(const BimodDescriptor& d) {
  auto [a, b] = split_ab(d);
  auto [a1, b1] = split_ab_prime(d);
  const int c = chi(d);
  check_internal(a + b + 2 == c && a1 + b1 + 4 == c && a <= b && a1 <= b1, "table row violates a + b + 2 = chi");
  return {a, b, a1, b1};
}

// ---- concrete side ----

BimodDescriptor classify_bimodule(const BimodConcrete& b) {
  if (const auto* s = std::get_if<NRSheaf>(&b)) {
    NonReducedDesc d;
    d.k = s->L.k_u + s->L.k_v;
    d.deg_D = s->degree_D();
    if (d.deg_D == 0) {
      d.pullback = nr_is_v_pullback(s->L);
      NRLineBundle t = s->L;
      t.k_u -= 1;
      d.twisted_pullback = nr_is_v_pullback(t);
    }
    return d;
  }
  const auto& L = std::get<LineBundle>(b);
  const CurveW& w = L.curve();
  if (w.type() == KodairaType::NonReduced) throw DomainError("use the non-reduced model for W = 2 Delta");
  auto v_pullback = [&](const LineBundle& M, int k) { return lb_isomorphic(M, lb_make(w, 0, k)); };
  if (is_integral(w.type())) {
    IntegralInvertibleDesc d{w.type(), L.degree(), false, false};
    if (even(d.deg)) {
      d.pullback = v_pullback(L, half(d.deg));
      d.twisted_pullback = v_pullback(lb_twist(L, -1, 0), half(d.deg) - 1);
    }
    return d;
  }
  auto cd = component_degrees(L);
  check_internal(cd.has_value(), "reducible W without component degrees");
  auto [p, q] = sorted(cd->first, cd->second);
  ReducibleInvertibleDesc d{w.type(), p, q, false, false};
  if (p == q) {
    d.pullback = v_pullback(L, p);
    d.twisted_pullback = v_pullback(lb_twist(L, -1, 0), p - 1);
  }
  return d;
}

std::pair<int, int> split_from_h0_sequence(const std::function<int(int)>& h0, int lo, int hi) {
  std::map<int, int> h;
  for (int j = lo; j <= hi; ++j) h[j] = h0(j);
  auto first_positive = [&](auto fn) {
    for (int j = lo; j <= hi; ++j)
      if (fn(j) > 0) return j;
    throw InternalError("twist range too small to read off the splitting");
  };
  const int b = -first_positive([&](int j) { return h[j]; });
  const int a = -first_positive([&](int j) { return h[j] - std::max(b + j + 1, 0); });
  for (int j = lo; j <= hi; ++j)
    check_internal(h[j] == std::max(a + j + 1, 0) + std::max(b + j + 1, 0), "h0 of twists is not of rank-2 shape");
  return {a, b};
}

SplitType split_from_cohomology(const BimodConcrete& b) {
  SplitType out;
  if (const auto* s = std::get_if<NRSheaf>(&b)) {
    std::tie(out.a, out.b) = nr_pushforward_split(*s);
    NRSheaf t = *s;
    t.L.k_u -= 1;
    std::tie(out.a1, out.b1) = nr_pushforward_split(t);
    return out;
  }
  const auto& L = std::get<LineBundle>(b);
  const int J = std::abs(L.degree()) + 6;
  std::tie(out.a, out.b) = split_from_h0_sequence([&](int j) { return lb_h0(lb_twist(L, 0, j)); }, -J, J);
  LineBundle T = lb_twist(L, -1, 0);
  std::tie(out.a1, out.b1) = split_from_h0_sequence([&](int j) { return lb_h0(lb_twist(T, 0, j)); }, -J - 2, J);
  check_internal(out.a + out.b + 2 == L.degree(), "cohomological splitting violates a + b + 2 = chi");
  return out;
}

BimodConcrete twist_bimodule(const BimodConcrete& b, const Mat2& g, const Mat2& h, int k_u, int k_v) {
  if (const auto* s = std::get_if<NRSheaf>(&b)) {
    auto scalar = [](const Mat2& m) { return m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1]; };
    if (!scalar(g) || !scalar(h)) throw DomainError("non-reduced model supports only line-bundle twists");
    NRSheaf t = *s;
    t.L.k_u += k_u;
    t.L.k_v += k_v;
    return t;
  }
  const auto& L = std::get<LineBundle>(b);
  CurveW w = validate_support(transform_form(L.curve().form(), g, h));
  std::vector<ProjPoint> minus, plus;
  for (const auto& p : L.minus()) minus.push_back(transform_point(p, g, h));
  for (const auto& p : L.plus()) plus.push_back(transform_point(p, g, h));
  return lb_make(w, L.m() + k_u, L.n() + k_v, minus, plus);
}

// ---- Hilbert polynomial and stability ----

std::string HilbertData::polynomial() const {
  return std::to_string(leading) + "t " + (chi < 0 ? "- " : "+ ") + std::to_string(std::abs(chi));
}

std::string HilbertData::reduced() const {
  mpq_class c = reduced_constant;
  if (c == 0) return "t";
  return std::string("t ") + (c < 0 ? "- " : "+ ") + mpq_class(abs(c)).get_str();
}

HilbertData hilbert_polynomial(int support_degree, int chi) {
  if (support_degree <= 0) throw DomainError("support degree must be positive");
  HilbertData h;
  h.leading = support_degree;
  h.chi = chi;
  h.reduced_constant = mpq_class(chi, support_degree);
  h.reduced_constant.canonicalize();
  return h;
}

HilbertData hilbert_data(const BimodDescriptor& d) { return hilbert_polynomial(8, chi(d)); }

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "semi-stable but not stable";
    default: return "unstable";
  }
}

Stability stability_classify(const BimodDescriptor& d) {
  validate_descriptor(d);
  auto by_gap = [](int gap, int stable_max) {
    if (gap <= stable_max) return Stability::Stable;
    if (gap == stable_max + 1) return Stability::StrictlySemistable;
    return Stability::Unstable;
  };
  return std::visit(
      overloaded{[](const Type11Desc& t) { return t.a < t.b ? Stability::Unstable : Stability::StrictlySemistable; },
                 [&](const NonReducedDesc& t) { return by_gap(t.deg_D, 1); },
                 [](const IntegralInvertibleDesc&) { return Stability::Stable; },
                 [](const IntegralNonInvertibleDesc&) { return Stability::Stable; },
                 [&](const ReducibleInvertibleDesc& t) { return by_gap(t.q - t.p, 1); },
                 [&](const ReducibleNonInvertibleDesc& t) {
                   if (t.resolution == Resolution::NodalConic) return by_gap(t.q - t.p, 0);
                   return t.q == t.p ? Stability::StrictlySemistable : Stability::Unstable;
                 }},
      d);
}

// ---- numerology ----

ExtDims ext_dims(const BimodConcrete& b) {
  if (const auto* L = std::get_if<LineBundle>(&b)) {
    auto e = extpair_dims(L->curve(), L->m(), L->n());
    check_internal(e[0] - e[1] + e[2] == -8, "Ext Euler characteristic is not -8");
    return {e, -8};
  }
  return ext_dims(classify_bimodule(b));
}

ExtDims ext_dims(const BimodDescriptor& d) {
  const bool invertible = std::holds_alternative<IntegralInvertibleDesc>(d) ||
                          std::holds_alternative<ReducibleInvertibleDesc>(d) ||
                          (std::holds_alternative<NonReducedDesc>(d) && std::get<NonReducedDesc>(d).deg_D == 0);
  if (invertible || stability_classify(d) == Stability::Stable) return {std::array<int, 3>{1, 9, 0}, -8};
  return {std::nullopt, -8};
}

HochschildDims hochschild_dims(int d) {
  if (d < 0) throw DomainError("d must be nonnegative");
  HochschildDims h;
  h.hh1 = std::max(d - 1, 0) + 6;
  h.hh2 = std::max(d - 3, 0) + 9 + std::max(d - 1, 0);
  h.hh3 = std::max(d - 3, 0);
  h.altsum = -h.hh1 + h.hh2 - h.hh3;
  return h;
}

ModuliDims moduli_dim_check() {
  ModuliDims m;
  m.linear_system = 3 * 3 - 1;  // P(H^0(O(2,2)))
  m.picard = 1;                 // Pic^0 of a genus-1 curve
  m.smooth_locus = m.linear_system + m.picard;
  m.quotient = m.smooth_locus - 2 * 3;  // PGL_2 x PGL_2
  return m;
}

}  // namespace bimodulus
