#include "bimodulus/serialization.hpp"

#include <regex>

namespace bimodulus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& field_at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_at(const json& j, const char* key) {
  const json& v = field_at(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool bool_at(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw DomainError(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

Field field_from_string(const std::string& s) {
  static const std::regex prime_re(R"(^F_(\d+)$)");
  std::smatch m;
  if (s == "Q") return Field::rational();
  if (std::regex_match(s, m, prime_re)) return Field::prime(std::stoull(m[1]));
  throw DomainError("unknown field '" + s + "' (expected Q or F_p)");
}

json points_json(const std::vector<ProjPoint>& pts, const Field& f) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p, f));
  return a;
}

std::vector<ProjPoint> points_from(const json& j) {
  if (!j.is_array()) throw DomainError("points must be an array");
  std::vector<ProjPoint> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

json int_matrix(const Eigen::MatrixXi& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    a.push_back(row);
  }
  return a;
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar::rational(j.get<long long>());
  if (!j.is_string()) throw DomainError("scalars are strings such as \"3/4\" or \"5 mod 101\"");
  return Scalar::parse(j.get<std::string>());
}

json to_json(const Field& f) { return f.describe(); }

json to_json(const MultiPoly& f) {
  const auto fld = f.field();
  json terms = json::array();
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    const Scalar& c = f.coeffs()(i);
    if (c.is_zero()) continue;
    terms.push_back({{"exp", f.exponent_of(i)}, {"coef", to_json(fld ? c.in(*fld) : c)}});
  }
  return {{"blocks", f.blocks()}, {"degree", f.degree()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
  const int blocks = int_at(j, "blocks");
  const json& dj = field_at(j, "degree");
  if (!dj.is_array() || static_cast<int>(dj.size()) != blocks) throw DomainError("'degree' must list one entry per block");
  std::vector<int> degree = dj.get<std::vector<int>>();
  for (int d : degree)
    if (d < 0) throw DomainError("negative degree");
  MultiPoly f = MultiPoly::zero(degree);
  std::optional<Field> fld;
  for (const auto& t : field_at(j, "terms")) {
    std::vector<int> e = field_at(t, "exp").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != 2 * blocks) throw DomainError("'exp' must have two entries per block");
    std::vector<int> k(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      if (e[2 * ub] < 0 || e[2 * ub + 1] < 0 || e[2 * ub] + e[2 * ub + 1] != degree[ub])
        throw DomainError("exponent does not match the block degree");
      k[ub] = e[2 * ub + 1];
    }
    Scalar c = scalar_from_json(field_at(t, "coef"));
    if (auto cf = c.field()) {
      if (fld && !(*fld == *cf)) throw FieldMismatch("coefficients from different fields");
      fld = cf;
    }
    f.set_coeff(k, f.coeff(k) + c);
  }
  if (fld)
    for (Eigen::Index i = 0; i < f.size(); ++i) f.coeffs()(i) = f.coeffs()(i).in(*fld);
  return f;
}

json to_json(const ProjPoint& p, const Field& f) {
  json a = json::array();
  for (const auto& c : p.coords()) a.push_back(to_json(c.in(f)));
  return a;
}

ProjPoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() % 2 != 0 || j.empty()) throw DomainError("a point is an even-length array of scalars");
  std::vector<Scalar> c;
  for (const auto& s : j) c.push_back(scalar_from_json(s));
  return ProjPoint(c);
}

json to_json(const LineBundle& L) {
  const Field& f = L.curve().field();
  return {{"curve", to_json(L.curve().form())},
          {"twist", {L.m(), L.n()}},
          {"minus_points", points_json(L.minus(), f)},
          {"plus_points", points_json(L.plus(), f)}};
}

LineBundle bundle_from_json(const json& j) {
  CurveW w = validate_support(multipoly_from_json(field_at(j, "curve")));
  const json& t = field_at(j, "twist");
  if (!t.is_array() || t.size() != 2) throw DomainError("'twist' must be [m, n]");
  std::vector<ProjPoint> minus, plus;
  if (j.contains("minus_points")) minus = points_from(j.at("minus_points"));
  if (j.contains("plus_points")) plus = points_from(j.at("plus_points"));
  return lb_make(w, t[0].get<int>(), t[1].get<int>(), minus, plus);
}

json to_json(const NRSheaf& s, const Field& f) {
  return {{"model", "double-diagonal"}, {"field", to_json(f)}, {"k_u", s.L.k_u}, {"k_v", s.L.k_v},
          {"a", to_json(s.L.a.in(f))},    {"n0", s.n0},          {"n_inf", s.n_inf}};
}

NRSheaf nr_sheaf_from_json(const json& j) {
  NRSheaf s;
  Field f = j.contains("field") ? field_from_string(j.at("field").get<std::string>()) : Field::rational();
  s.L.k_u = int_at(j, "k_u");
  s.L.k_v = int_at(j, "k_v");
  s.L.a = j.contains("a") ? scalar_from_json(j.at("a")).in(f) : f.zero();
  s.n0 = j.contains("n0") ? int_at(j, "n0") : 0;
  s.n_inf = j.contains("n_inf") ? int_at(j, "n_inf") : 0;
  if (s.n0 < 0 || s.n_inf < 0) throw DomainError("divisor multiplicities must be nonnegative");
  return s;
}

json to_json(const BimodConcrete& b) {
  if (const auto* s = std::get_if<NRSheaf>(&b)) {
    auto f = s->L.a.field();
    return to_json(*s, f ? *f : Field::rational());
  }
  return to_json(std::get<LineBundle>(b));
}

bool is_concrete_bimodule(const json& j) {
  return j.is_object() && (j.contains("curve") || (j.contains("model") && j.at("model") == "double-diagonal"));
}

BimodConcrete bimodule_from_json(const json& j) {
  if (j.is_object() && j.contains("model")) {
    if (j.at("model") != "double-diagonal") throw DomainError("unknown bimodule model");
    return nr_sheaf_from_json(j);
  }
  return bundle_from_json(j);
}

bool is_descriptor(const json& j) { return j.is_object() && j.contains("kind"); }

json to_json(const BimodDescriptor& d) {
  json out{{"kind", descriptor_kind(d)}};
  std::visit(overloaded{[&](const Type11Desc& t) {
                          out["a"] = t.a;
                          out["b"] = t.b;
                        },
                        [&](const NonReducedDesc& t) {
                          out["k"] = t.k;
                          out["deg_D"] = t.deg_D;
                          out["pullback"] = t.pullback;
                          out["twisted_pullback"] = t.twisted_pullback;
                        },
                        [&](const IntegralInvertibleDesc& t) {
                          out["type"] = to_string(t.type);
                          out["deg"] = t.deg;
                          out["pullback"] = t.pullback;
                          out["twisted_pullback"] = t.twisted_pullback;
                        },
                        [&](const IntegralNonInvertibleDesc& t) {
                          out["type"] = to_string(t.type);
                          out["i"] = t.i;
                        },
                        [&](const ReducibleInvertibleDesc& t) {
                          out["type"] = to_string(t.type);
                          out["p"] = t.p;
                          out["q"] = t.q;
                          out["pullback"] = t.pullback;
                          out["twisted_pullback"] = t.twisted_pullback;
                        },
                        [&](const ReducibleNonInvertibleDesc& t) {
                          out["type"] = to_string(t.type);
                          out["resolution"] = to_string(t.resolution);
                          out["p"] = t.p;
                          out["q"] = t.q;
                        }},
             d);
  out["chi"] = chi(d);
  return out;
}

BimodDescriptor descriptor_from_json(const json& j) {
  const std::string kind = field_at(j, "kind").get<std::string>();
  auto type = [&] { return kodaira_from_string(field_at(j, "type").get<std::string>()); };
  BimodDescriptor d;
  if (kind == "Type11") {
    d = Type11Desc{int_at(j, "a"), int_at(j, "b")};
  } else if (kind == "NonReduced") {
    d = NonReducedDesc{int_at(j, "k"), bool_at(j, "pullback", false), bool_at(j, "twisted_pullback", false),
                       int_at(j, "deg_D")};
  } else if (kind == "IntegralInvertible") {
    d = IntegralInvertibleDesc{type(), int_at(j, "deg"), bool_at(j, "pullback", false),
                               bool_at(j, "twisted_pullback", false)};
  } else if (kind == "IntegralNonInvertible") {
    d = IntegralNonInvertibleDesc{type(), int_at(j, "i")};
  } else if (kind == "ReducibleInvertible") {
    d = ReducibleInvertibleDesc{type(), int_at(j, "p"), int_at(j, "q"), bool_at(j, "pullback", false),
                                bool_at(j, "twisted_pullback", false)};
  } else if (kind == "ReducibleNonInvertible") {
    d = ReducibleNonInvertibleDesc{type(), resolution_from_string(field_at(j, "resolution").get<std::string>()),
                                   int_at(j, "p"), int_at(j, "q")};
  } else {
    throw DomainError("unknown descriptor kind '" + kind + "'");
  }
  validate_descriptor(d);
  if (j.contains("chi") && int_at(j, "chi") != chi(d)) throw DomainError("inconsistent descriptor: chi does not match");
  return d;
}

json to_json(const SplitType& s) { return {{"a", s.a}, {"b", s.b}, {"a_prime", s.a1}, {"b_prime", s.b1}}; }

json to_json(const HomExt& h) { return {{"hom", h.hom}, {"ext1", h.ext1}}; }

json to_json(const RelationsIdeal& I) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < I.rows.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < I.rows.cols(); ++c) row.push_back(to_json(I.rows(r, c)));
    rows.push_back(row);
  }
  const Quiver q = I.quiver == "Q0" ? quiver_q0() : quiver_q1();
  json paths = json::array();
  for (const auto& p : path_basis(q, 1, 4)) paths.push_back(path_label(q, p));
  return {{"quiver", I.quiver}, {"dim", I.dim()}, {"paths", paths}, {"rows", rows}};
}

json to_json(const Quadruple& q) {
  return {{"component", q.component}, {"L0", to_json(q.L0)}, {"L1", to_json(q.L1)}, {"L2", to_json(q.L2)}};
}

Quadruple quadruple_from_json(const json& j) {
  return make_quadruple(bundle_from_json(field_at(j, "L0")), bundle_from_json(field_at(j, "L1")),
                        bundle_from_json(field_at(j, "L2")));
}

json to_json(const RoundTripReport& r) {
  json out;
  out["pass"] = r.pass();
  if (r.descriptor) out["descriptor"] = to_json(*r.descriptor);
  if (r.relations) out["relations"] = to_json(*r.relations);
  out["ci_smooth"] = r.ci_smooth;
  out["j_W"] = r.j_w ? to_json(*r.j_w) : json(nullptr);
  out["j_N"] = r.j_n ? to_json(*r.j_n) : json(nullptr);
  out["j_equal"] = r.j_equal;
  out["ideals_equal"] = r.ideals_equal;
  out["images_on_N"] = r.on_ci;
  out["injective"] = r.injective;
  out["point_counts_equal"] = r.counts_equal;
  out["theta_stable"] = {{"stable", r.theta_stable}, {"samples", r.theta_samples}};
  if (!r.failed_stage.empty()) out["failed_stage"] = r.failed_stage;
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

json to_json(const McKayReport& r) {
  return {{"lambda", to_json(r.lambda)},
          {"closure_dim", r.closure_dim},
          {"kernel_dim", r.kernel_dim},
          {"surviving_paths", r.surviving},
          {"s_graded_dim_2_3", r.expected},
          {"subspaces_equal", r.subspaces_equal},
          {"pbw_confluent", r.confluent},
          {"hom_dims_match", r.hom_dims_match},
          {"pass", r.pass()}};
}

json to_json(const ToricReport& r) {
  return {{"weights", int_matrix(r.weights)},
          {"kernel", int_matrix(r.kernel)},
          {"product", int_matrix(r.product)},
          {"product_zero", r.product_zero},
          {"rank_weights", r.rank_weights},
          {"rank_kernel", r.rank_kernel},
          {"corrected_entry", {{"row", "t2"}, {"column", "a3"}, {"printed", r.weights(0, 2)}, {"incidence", 0}}},
          {"corrected_product_zero", r.corrected_product_zero},
          {"corrected_rank_weights", r.corrected_rank}};
}

}  // namespace bimodulus
