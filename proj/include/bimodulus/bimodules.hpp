#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "bimodulus/line_bundles.hpp"
#include "bimodulus/nonreduced.hpp"

namespace bimodulus {

enum class Resolution { NodalConic, TwoLines };
std::string to_string(Resolution r);
Resolution resolution_from_string(const std::string& s);

// Descriptors: the discrete data the tables are keyed on.

/// U = O(a) + O(b) on a (1,1) support (the commutative case).
struct Type11Desc {
  int a = 0, b = 0;
};
/// W = 2 Delta. k = degree of L on W_red; chi = 2k - deg D.
struct NonReducedDesc {
  int k = 0;
  bool pullback = false;          // L is a v-pullback
  bool twisted_pullback = false;  // u*O(-1) (x) L is a v-pullback
  int deg_D = 0;
};
struct IntegralInvertibleDesc {
  KodairaType type = KodairaType::I0;
  int deg = 0;
  bool pullback = false;          // U ~ v*O(deg/2)
  bool twisted_pullback = false;  // u*O(-1) (x) U ~ v*O(deg/2 - 1)
};
/// U = pushforward of O(i) from the normalization.
struct IntegralNonInvertibleDesc {
  KodairaType type = KodairaType::I1;
  int i = 0;
};
/// Component degrees p <= q.
struct ReducibleInvertibleDesc {
  KodairaType type = KodairaType::I2;
  int p = 0, q = 0;
  bool pullback = false;          // p = q and U ~ v*O(p)
  bool twisted_pullback = false;  // p = q and U (x) u*O(-1) ~ v*O(p-1)
};
struct ReducibleNonInvertibleDesc {
  KodairaType type = KodairaType::I2;
  Resolution resolution = Resolution::NodalConic;
  int p = 0, q = 0;
};

using BimodDescriptor = std::variant<Type11Desc, NonReducedDesc, IntegralInvertibleDesc, IntegralNonInvertibleDesc,
                                     ReducibleInvertibleDesc, ReducibleNonInvertibleDesc>;

std::string descriptor_kind(const BimodDescriptor& d);
int chi(const BimodDescriptor& d);
/// Throws DomainError("inconsistent descriptor: ...").
void validate_descriptor(const BimodDescriptor& d);

/// Invertible U on reduced W, or the non-reduced model.
using BimodConcrete = std::variant<LineBundle, NRSheaf>;

BimodDescriptor classify_bimodule(const BimodConcrete& b);

struct SplitType {
  int a = 0, b = 0;    // v_* U = O(a) + O(b)
  int a1 = 0, b1 = 0;  // v_*(u*O(-1) (x) U) = O(a1) + O(b1)
  friend bool operator==(const SplitType&, const SplitType&) = default;
};

std::pair<int, int> split_ab(const BimodDescriptor& d);
std::pair<int, int> split_ab_prime(const BimodDescriptor& d);
SplitType split_from_table(const BimodDescriptor& d);
SplitType split_from_cohomology(const BimodConcrete& b);
/// (a, b) with h(j) = max(a+j+1,0) + max(b+j+1,0) for every j in [lo, hi].
std::pair<int, int> split_from_h0_sequence(const std::function<int(int)>& h0, int lo, int hi);

/// (g,h) acts on coordinates, then U is twisted by u*O(k_u) (x) v*O(k_v).
BimodConcrete twist_bimodule(const BimodConcrete& b, const Mat2& g, const Mat2& h, int k_u, int k_v);

struct HilbertData {
  int leading = 8;  // degree of the support under O(2,2)
  int chi = 0;
  mpq_class reduced_constant;  // p(t) = t + chi / leading
  std::string polynomial() const;
  std::string reduced() const;
};
HilbertData hilbert_polynomial(int support_degree, int chi);
HilbertData hilbert_data(const BimodDescriptor& d);

enum class Stability { Stable, StrictlySemistable, Unstable };
std::string to_string(Stability s);
Stability stability_classify(const BimodDescriptor& d);

struct ExtDims {
  std::optional<std::array<int, 3>> dims;
  int euler = -8;
};
ExtDims ext_dims(const BimodConcrete& b);
ExtDims ext_dims(const BimodDescriptor& d);

struct HochschildDims {
  int hh1, hh2, hh3, altsum;
};
HochschildDims hochschild_dims(int d);

struct ModuliDims {
  int smooth_locus = 9;
  int linear_system = 8;
  int picard = 1;
  int quotient = 3;
};
ModuliDims moduli_dim_check();

}  // namespace bimodulus
