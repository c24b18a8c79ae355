// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "bimodulus/serialization.hpp"
#include "grid.hpp"
#include "oracles.hpp"

using namespace bimodulus;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int n, const std::string& title, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.ok) ++failures;
  std::printf("%s %2d %s: %s (%.2fs)\n", v.ok ? "PASS" : "FAIL", n, title.c_str(), v.detail.c_str(), secs);
  std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

oracle::i64 as_int(const Scalar& s) { return oracle::md(oracle::to_int(s), 101); }

// coefficients of prod (x1 - r x0) in the order x0^4, x0^3 x1, ..., x1^4
std::array<oracle::i64, 5> quartic_from_roots(const std::array<oracle::i64, 4>& r, oracle::i64 p) {
  std::vector<oracle::i64> c{1};  // polynomial in t = x1/x0, low degree first
  for (auto root : r) {
    std::vector<oracle::i64> n(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      n[i + 1] = oracle::md(n[i + 1] + c[i], p);
      n[i] = oracle::md(n[i] - root * c[i], p);
    }
    c = n;
  }
  return {c[0], c[1], c[2], c[3], c[4]};
}

Verdict c1_cech() {
  for (const Field& f : {Field::prime(101), Field::rational()}) {
    for (long long a : {0LL, 1LL, 5LL, -7LL}) {
      NRLineBundle L{0, 0, f.from_int(a)};
      auto h = nr_cech(L);
      const std::pair<int, int> want = a == 0 ? std::make_pair(1, 1) : std::make_pair(0, 0);
      if (h != want) return {false, fmt("a=%lld over %s gives (%d,%d)", a, f.describe().c_str(), h.first, h.second)};
    }
  }
  return {true, "(1,1) at a=0, (0,0) otherwise, over F_101 and Q"};
}

Verdict c2_pushforward() {
  const Field f = Field::prime(101);
  if (nr_pushforward_split(NRLineBundle{0, 0, f.zero()}) != std::make_pair(-2, 0)) return {false, "a=0 not (-2,0)"};
  for (long long a : {1LL, 2LL, 50LL, 100LL})
    if (nr_pushforward_split(NRLineBundle{0, 0, f.from_int(a)}) != std::make_pair(-1, -1))
      return {false, fmt("a=%lld not (-1,-1)", a)};
  return {true, "(-2,0) for a=0, (-1,-1) for a!=0"};
}

Verdict c3_split_agreement() {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(3);
  int n = 0;
  for (int pass = 0; pass < 2; ++pass)
    for (auto t : {KodairaType::I0, KodairaType::I1, KodairaType::I2, KodairaType::III})
      for (int deg = -2; deg <= 4; ++deg) {
        LineBundle L = random_bundle(random_curve(t, f, rng), deg, rng);
        BimodConcrete b{L};
        if (split_from_table(classify_bimodule(b)) != split_from_cohomology(b))
          return {false, fmt("disagreement on %s degree %d", to_string(t).c_str(), deg)};
        ++n;
      }
  return {true, fmt("%d instances, types I0/I1/I2/III, degrees -2..4", n)};
}

Verdict c4_ext() {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    LineBundle L = random_bundle(random_curve(KodairaType::I0, f, rng), static_cast<int>(rng() % 7) - 2, rng);
    auto e = ext_dims(BimodConcrete{L});
    if (!e.dims || *e.dims != std::array<int, 3>{1, 9, 0} || e.euler != -8) return {false, fmt("instance %d", i)};
  }
  return {true, "10 smooth instances give (1,9,0), chi = -8"};
}

Verdict c5_hochschild() {
  for (int d = 0; d <= 6; ++d) {
    auto h = hochschild_dims(d);
    if (-h.hh1 + h.hh2 - h.hh3 != 3) return {false, fmt("d=%d alternating sum %d", d, -h.hh1 + h.hh2 - h.hh3)};
  }
  auto m = moduli_dim_check();
  if (m.smooth_locus != 9 || m.quotient != 3) return {false, fmt("moduli dims (%d,%d)", m.smooth_locus, m.quotient)};
  return {true, "alternating sum 3 for d=0..6, moduli (9,3)"};
}

Verdict c6_relations() {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(6);
  for (int comp = 0; comp < 2; ++comp)
    for (int i = 0; i < 20; ++i) {
      Quadruple q = random_quadruple(comp, f, rng);
      PsiResult r = comp == 0 ? psi0(q) : psi1(q);
      const int want_target = comp == 0 ? 6 : 5, want_dim = comp == 0 ? 2 : 3;
      if (r.evaluation.cols() != 8 || r.target_dim != want_target || r.ideal.dim() != want_dim ||
          oracle::rank_mod([&] {
            std::vector<std::vector<oracle::i64>> m;
            for (Eigen::Index a = 0; a < r.evaluation.rows(); ++a) {
              m.emplace_back();
              for (Eigen::Index b = 0; b < 8; ++b) m.back().push_back(as_int(r.evaluation(a, b)));
            }
            return m;
          }(), 101) != 8 - want_dim)
        return {false, fmt("component %d instance %d: kernel %ld", comp, i, static_cast<long>(r.ideal.dim()))};
    }
  return {true, "psi0 8->6 kernel 2, psi1 8->5 kernel 3, 20 quadruples each"};
}

Verdict c7_roundtrip() {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(7);
  int passed = 0, degenerate = 0, draws = 0;
  while (passed < 10 && draws < 40) {
    ++draws;
    LineBundle U = random_admissible_u(0, f, rng);
    RoundTripReport r = roundtrip0(U);
    if (r.pass()) {
      ++passed;
      continue;
    }
    if (r.failed_stage == "phi" || r.message.find("degenerate") != std::string::npos ||
        r.message.find("singular") != std::string::npos) {
      ++degenerate;
      continue;
    }
    return {false, "failed at " + r.failed_stage + ": " + r.message};
  }
  return {passed >= 10, fmt("%d passed, %d degenerate excluded", passed, degenerate)};
}

Verdict c8_strong() {
  auto grid = testgrid::descriptors(-5, 5, {1, 2});
  for (const auto& d : grid) {
    const bool oracle = split_ab_prime(d).first >= -2;
    if (strong_m1_table(d) != oracle) return {false, "mismatch on " + json(to_json(d)).dump()};
  }
  return {true, fmt("%zu descriptors", grid.size())};
}

Verdict c9_stability() {
  std::ifstream in(BIMODULUS_GOLDEN_DIR "/stability_tables.json");
  json g = json::parse(in);
  auto grid = testgrid::descriptors(-4, 6, {-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6});
  int rows = 0, checked = 0;
  for (const auto& table : g["tables"]) {
    const std::string kase = table["case"];
    for (const auto& row : table["rows"]) {
      ++rows;
      for (const auto& d : grid) {
        std::optional<int> v;  // value of the table variable if d belongs to this case
        bool member = false;
        if (const auto* t = std::get_if<NonReducedDesc>(&d); t && kase == "non-reduced") member = true, v = t->deg_D;
        if (kase == "integral" && (std::holds_alternative<IntegralInvertibleDesc>(d) ||
                                   std::holds_alternative<IntegralNonInvertibleDesc>(d)))
          member = true;
        if (const auto* t = std::get_if<ReducibleInvertibleDesc>(&d); t && kase == "reducible-invertible")
          member = true, v = t->q - t->p;
        if (const auto* t = std::get_if<ReducibleNonInvertibleDesc>(&d)) {
          if ((kase == "reducible-nodal-conic" && t->resolution == Resolution::NodalConic) ||
              (kase == "reducible-two-lines" && t->resolution == Resolution::TwoLines))
            member = true, v = t->q - t->p;
        }
        if (const auto* t = std::get_if<Type11Desc>(&d); t && kase == "type-11") member = true, v = t->b - t->a;
        if (!member) continue;
        if (v && !row["from"].is_null() && *v < row["from"].get<int>()) continue;
        if (v && !row["to"].is_null() && *v > row["to"].get<int>()) continue;
        ++checked;
        if (to_string(stability_classify(d)) != row["stability"].get<std::string>())
          return {false, kase + " row expects " + row["stability"].get<std::string>()};
      }
    }
  }
  for (int dD = 0; dD <= 8; ++dD) {
    mpq_class want(-dD, 8);
    want.canonicalize();
    if (hilbert_data(NonReducedDesc{0, false, false, dD}).reduced_constant != want)
      return {false, fmt("p(m) != m - %d/8", dD)};
  }
  for (const auto& h : g["reduced_hilbert"]) {
    mpq_class want(h["constant"].get<std::string>());
    want.canonicalize();
    if (hilbert_polynomial(h["support_degree"], h["chi"]).reduced_constant != want)
      return {false, h["label"].get<std::string>()};
  }
  return {true, fmt("%d golden rows over %d descriptors, Hilbert spot checks", rows, checked)};
}

Verdict c10_toric() {
  auto t = toric_matrices_check();
  std::ostringstream s;
  s << "W*K zero " << (t.product_zero ? "yes" : "no") << ", ranks " << t.rank_weights << " and " << t.rank_kernel;
  if (!t.product_zero) s << "; nonzero entries of W*K:";
  for (int i = 0; i < t.product.rows(); ++i)
    for (int j = 0; j < t.product.cols(); ++j)
      if (t.product(i, j) != 0) s << " (" << i << "," << j << ")=" << t.product(i, j);
  return {t.product_zero && t.rank_weights == 3 && t.rank_kernel == 4, s.str()};
}

Verdict c11_mckay() {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(11);
  std::vector<Scalar> lambdas;
  for (int i = 0; i < 10; ++i) lambdas.push_back(f.random_nonzero(rng));
  lambdas.push_back(Scalar::rational(3, 7));
  for (const auto& l : lambdas) {
    auto r = mckay_verify(l);
    if (!r.pass() || r.closure_dim != 6 || r.kernel_dim != 6) return {false, "lambda " + l.to_string()};
  }
  const auto paths = path_basis(quiver_sigma2(), 1, 4).size();
  if (paths != 12 || paths - 6 != 6 || s_graded_dim(2, 3) != 6) return {false, "hom count identity"};
  return {true, "11 values of lambda, closure = kernel (dim 6 of 12), 12 - 6 = 6 = dim S_3"};
}

Verdict c12_hom_ext() {
  struct Case {
    SplitType s;
    int hom14, paths, rels;
    const char* quiver;
  };
  const std::array<Case, 2> cases{Case{{0, 0, -1, -1}, 6, 8, 2, "Q0"}, Case{{-1, 0, -2, -1}, 5, 8, 3, "Q1"}};
  for (const auto& c : cases) {
    HomExt h = hom_ext_matrix(c.s, 1);
    if (h.hom[0][3] != c.hom14) return {false, fmt("Hom(E1,E4) = %d", h.hom[0][3])};
    for (auto& r : h.ext1)
      for (int e : r)
        if (e != 0) return {false, "nonzero Ext^1"};
    const Quiver q = std::string(c.quiver) == "Q0" ? quiver_q0() : quiver_q1();
    if (static_cast<int>(path_basis(q, 1, 4).size()) != c.paths || c.paths - c.rels != c.hom14)
      return {false, std::string("path count on ") + c.quiver};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (j != i + 3 && static_cast<int>(path_basis(q, i + 1, j + 1).size()) != h.hom[i][j])
          return {false, fmt("%s paths %d->%d", c.quiver, i + 1, j + 1)};
  }
  return {true, "Hom(E1,E4) = 6 and 5, Ext^1 = 0, 8-2 = 6 and 8-3 = 5"};
}

Verdict c13_j() {
  const oracle::i64 p = 101;
  const Field f = Field::prime(101);
  std::mt19937_64 rng(13);
  auto lib_j = [&](const std::array<oracle::i64, 4>& r) {
    auto c = quartic_from_roots(r, p);
    std::vector<Scalar> cs;
    for (auto v : c) cs.push_back(Scalar::mod(v, 101));
    return as_int(j_from_quartic(BinaryForm(4, cs)));
  };
  for (int i = 0; i < 100; ++i) {
    auto roots = random_distinct_roots(f, rng);
    std::array<oracle::i64, 4> r{};
    for (int k = 0; k < 4; ++k) r[k] = as_int(roots[k]);
    const oracle::i64 want = oracle::j_from_cross_ratio(oracle::cross_ratio(r, p), p);
    if (lib_j(r) != want) return {false, fmt("instance %d: %lld vs %lld", i, (long long)lib_j(r), (long long)want)};
  }
  const std::array<oracle::i64, 4> harmonic{1, p - 1, 3, oracle::invmod(3, p)};
  if (oracle::j_from_cross_ratio(oracle::cross_ratio(harmonic, p), p) != 1728 % p || lib_j(harmonic) != 1728 % p)
    return {false, "harmonic configuration"};
  // x0 x1 (x1^2 - x0^2): roots 0, infinity, 1, -1
  const Scalar jh = j_from_quartic(BinaryForm(4, {f.zero(), f.from_int(-1), f.zero(), f.one(), f.zero()}));
  if (jh != f.from_int(1728)) return {false, "harmonic with a root at infinity"};
  return {true, "100 split quartics over F_101 agree, harmonic gives 1728"};
}

Verdict c14_kodaira() {
  const Field f = Field::prime(5);
  std::mt19937_64 rng(14);
  const std::array<KodairaType, 6> types{KodairaType::I0, KodairaType::I1,  KodairaType::I2,
                                         KodairaType::II, KodairaType::III, KodairaType::NonReduced};
  std::map<std::string, int> seen;
  for (int i = 0; i < 200; ++i) {
    MultiPoly g;
    if (i % 2 == 0) {
      g = MultiPoly::zero({2, 2});
      for (Eigen::Index k = 0; k < g.size(); ++k) g.coeffs()(k) = f.random(rng);
    } else {
      g = random_form(types[static_cast<std::size_t>((i / 2) % 6)], f, rng);
    }
    std::string lib;
    try {
      lib = to_string(classify_kodaira(validate_support(g)));
    } catch (const DomainError&) {
      lib = "rejected";
    }
    const std::string want = oracle::kodaira(5, oracle::form_from(g));
    ++seen[want];
    if (lib != want) return {false, fmt("form %d: classifier %s, oracle %s", i, lib.c_str(), want.c_str())};
  }
  std::string mix;
  for (auto& [k, v] : seen) mix += " " + k + "=" + std::to_string(v);
  return {true, "200 forms over F_5:" + mix};
}

}  // namespace

int main() {
  run(1, "Cech cohomology of L_a", c1_cech);
  run(2, "pushforward splitting on 2 Delta", c2_pushforward);
  run(3, "table vs cohomology splitting", c3_split_agreement);
  run(4, "Ext dimensions", c4_ext);
  run(5, "Hochschild numerology", c5_hochschild);
  run(6, "relations dimensions", c6_relations);
  run(7, "round trip", c7_roundtrip);
  run(8, "strongness equivalence", c8_strong);
  run(9, "stability tables", c9_stability);
  run(10, "toric matrices as printed", c10_toric);
  run(11, "McKay relations", c11_mckay);
  run(12, "Hom/Ext matrices", c12_hom_ext);
  run(13, "j-invariant calibration", c13_j);
  run(14, "Kodaira classifier vs brute force", c14_kodaira);
  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
