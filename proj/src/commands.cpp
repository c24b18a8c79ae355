#include "bimodulus/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include "bimodulus/serialization.hpp"

namespace bimodulus {

namespace {

struct RunConfig {
  std::string command;
  std::string in, out;
  std::uint64_t prime = 101;
  bool rational = false;
  std::uint64_t seed = 1;
  int count = -1;
  std::optional<int> d;
  int m = 1;
  std::string lambda;
  std::string kind;
  int component = 0;

  Field field() const {
    if (rational) return Field::rational();
    if (prime <= 3 || !is_prime(prime)) throw DomainError("--prime must be a prime larger than 3");
    return Field::prime(prime);
  }
  int count_or(int fallback) const {
    if (count == 0 || count < -1) throw DomainError("--count must be positive");
    return count > 0 ? count : fallback;
  }
};

struct Outcome {
  json report;
  bool ok = true;
};

json read_input(const RunConfig& c) {
  std::ifstream f(c.in);
  if (!f) throw DomainError("cannot open input file '" + c.in + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

// One or many inputs: a single object or an array of objects.
std::vector<json> input_items(const RunConfig& c) {
  json j = read_input(c);
  if (j.is_array()) return {j.begin(), j.end()};
  return {j};
}

std::vector<BimodConcrete> random_bimodules(const RunConfig& c, int fallback) {
  std::mt19937_64 rng(c.seed);
  const Field f = c.field();
  const std::array<KodairaType, 5> types{KodairaType::I0, KodairaType::I1, KodairaType::II, KodairaType::I2,
                                         KodairaType::III};
  std::vector<BimodConcrete> out;
  const int n = c.count_or(fallback);
  for (int i = 0; i < n; ++i) {
    if (i % 6 == 5)
      out.emplace_back(random_nr_sheaf(f, rng));
    else
      out.emplace_back(random_invertible(types[static_cast<std::size_t>(i % 6)], f, rng));
  }
  return out;
}

std::vector<BimodConcrete> bimodules(const RunConfig& c, int fallback) {
  if (c.in.empty()) return random_bimodules(c, fallback);
  std::vector<BimodConcrete> out;
  for (const auto& j : input_items(c)) out.push_back(bimodule_from_json(j));
  return out;
}

// Descriptor inputs pass through; concrete inputs are classified.
std::vector<std::pair<json, BimodDescriptor>> descriptors(const RunConfig& c, int fallback) {
  std::vector<std::pair<json, BimodDescriptor>> out;
  if (!c.in.empty()) {
    for (const auto& j : input_items(c)) {
      if (is_descriptor(j))
        out.emplace_back(j, descriptor_from_json(j));
      else
        out.emplace_back(j, classify_bimodule(bimodule_from_json(j)));
    }
    return out;
  }
  for (const auto& b : random_bimodules(c, fallback)) out.emplace_back(to_json(b), classify_bimodule(b));
  return out;
}

std::string curve_type(const BimodConcrete& b) {
  if (std::holds_alternative<NRSheaf>(b)) return to_string(KodairaType::NonReduced);
  return to_string(std::get<LineBundle>(b).curve().type());
}

Outcome cmd_classify(const RunConfig& c) {
  Outcome o{json::array()};
  for (const auto& b : bimodules(c, 6)) {
    auto d = classify_bimodule(b);
    o.report.push_back({{"input", to_json(b)}, {"support", curve_type(b)}, {"descriptor", to_json(d)}});
  }
  return o;
}

Outcome cmd_split(const RunConfig& c) {
  Outcome o{json::array()};
  if (!c.in.empty()) {
    for (const auto& j : input_items(c)) {
      if (!is_descriptor(j)) continue;
      auto d = descriptor_from_json(j);
      o.report.push_back({{"descriptor", to_json(d)}, {"table", to_json(split_from_table(d))}});
    }
    if (!o.report.empty()) return o;
  }
  for (const auto& b : bimodules(c, 12)) {
    auto d = classify_bimodule(b);
    SplitType table = split_from_table(d);
    SplitType coh = split_from_cohomology(b);
    const bool agree = table == coh;
    o.ok = o.ok && agree;
    o.report.push_back({{"support", curve_type(b)},
                        {"descriptor", to_json(d)},
                        {"table", to_json(table)},
                        {"cohomology", to_json(coh)},
                        {"agree", agree}});
  }
  return o;
}

Outcome cmd_stability(const RunConfig& c) {
  Outcome o{json::array()};
  for (const auto& [input, d] : descriptors(c, 6)) {
    HilbertData h = hilbert_data(d);
    o.report.push_back({{"descriptor", to_json(d)},
                        {"stability", to_string(stability_classify(d))},
                        {"hilbert_polynomial", h.polynomial()},
                        {"reduced", h.reduced()}});
  }
  return o;
}

Outcome cmd_ext(const RunConfig& c) {
  Outcome o{json::array()};
  auto emit = [&](const json& input, const ExtDims& e) {
    json r{{"input", input}, {"euler", e.euler}};
    if (e.dims) {
      r["dims"] = *e.dims;
      const bool ok = (*e.dims)[0] - (*e.dims)[1] + (*e.dims)[2] == e.euler;
      r["euler_consistent"] = ok;
      o.ok = o.ok && ok;
    }
    o.report.push_back(r);
  };
  if (!c.in.empty()) {
    for (const auto& j : input_items(c)) {
      if (is_descriptor(j))
        emit(j, ext_dims(descriptor_from_json(j)));
      else
        emit(j, ext_dims(bimodule_from_json(j)));
    }
    return o;
  }
  std::mt19937_64 rng(c.seed);
  const Field f = c.field();
  for (int i = 0; i < c.count_or(10); ++i) {
    LineBundle U = random_invertible(KodairaType::I0, f, rng);
    emit(to_json(U), ext_dims(BimodConcrete{U}));
  }
  return o;
}

json hochschild_json(int d) {
  auto h = hochschild_dims(d);
  return {{"d", d}, {"dims", {h.hh1, h.hh2, h.hh3}}, {"altsum", h.altsum}};
}

Outcome cmd_hochschild(const RunConfig& c) {
  Outcome o;
  if (c.d) {
    o.report = hochschild_json(*c.d);
    o.ok = o.report["altsum"] == 3;
    return o;
  }
  o.report = json::array();
  for (int d = 0; d <= 6; ++d) {
    o.report.push_back(hochschild_json(d));
    o.ok = o.ok && o.report.back()["altsum"] == 3;
  }
  return o;
}

Outcome cmd_strong(const RunConfig& c) {
  Outcome o{json::array()};
  for (const auto& [input, d] : descriptors(c, 6)) {
    SplitType s = split_from_table(d);
    json r{{"descriptor", to_json(d)}, {"m", c.m}, {"split", to_json(s)}, {"strong", is_strong(s, c.m)}};
    const int x = chi(d);
    if (c.m == 1 && (x == 1 || x == 2)) {
      const bool table = strong_m1_table(d);
      r["corollary_list"] = table;
      r["agree"] = table == is_strong(s, 1);
      o.ok = o.ok && table == is_strong(s, 1);
    }
    o.report.push_back(r);
  }
  return o;
}

Outcome cmd_hom_matrix(const RunConfig& c) {
  Outcome o{json::array()};
  for (const auto& [input, d] : descriptors(c, 6)) {
    SplitType s = split_from_table(d);
    json r{{"descriptor", to_json(d)}, {"m", c.m}, {"split", to_json(s)}};
    r.update(to_json(hom_ext_matrix(s, c.m)));
    o.report.push_back(r);
  }
  return o;
}

Outcome cmd_psi(const RunConfig& c) {
  Outcome o{json::array()};
  std::vector<Quadruple> qs;
  if (!c.in.empty()) {
    for (const auto& j : input_items(c)) qs.push_back(quadruple_from_json(j));
  } else {
    std::mt19937_64 rng(c.seed);
    const Field f = c.field();
    for (int i = 0; i < c.count_or(5); ++i) qs.push_back(random_quadruple(c.component, f, rng));
  }
  for (const auto& q : qs) {
    PsiResult p = q.component == 0 ? psi0(q) : psi1(q);
    const int expected = q.component == 0 ? 2 : 3;
    const bool ok = p.ideal.dim() == expected;
    o.ok = o.ok && ok;
    o.report.push_back({{"quadruple", to_json(q)},
                        {"relations", to_json(p.ideal)},
                        {"target_dim", p.target_dim},
                        {"kernel_dim", p.ideal.dim()},
                        {"pass", ok}});
  }
  return o;
}

Outcome cmd_roundtrip(const RunConfig& c) {
  Outcome o{json::array()};
  std::vector<LineBundle> us;
  if (!c.in.empty()) {
    for (const auto& j : input_items(c)) us.push_back(bundle_from_json(j));
  } else {
    std::mt19937_64 rng(c.seed);
    const Field f = c.field();
    for (int i = 0; i < c.count_or(10); ++i) us.push_back(random_admissible_u(0, f, rng));
  }
  for (const auto& u : us) {
    RoundTripReport r = roundtrip0(u);
    o.ok = o.ok && r.pass();
    json j = to_json(r);
    j["input"] = to_json(u);
    o.report.push_back(j);
  }
  return o;
}

Outcome cmd_cech(const RunConfig& c) {
  Outcome o{json::array()};
  std::vector<NRSheaf> ss;
  if (!c.in.empty()) {
    for (const auto& j : input_items(c)) ss.push_back(nr_sheaf_from_json(j));
  } else {
    std::mt19937_64 rng(c.seed);
    const Field f = c.field();
    for (int i = 0; i < c.count_or(5); ++i) ss.push_back(random_nr_sheaf(f, rng));
  }
  for (const auto& s : ss) {
    auto [h0, h1] = nr_cech(s);
    auto [a, b] = nr_pushforward_split(s);
    auto f = s.L.a.field();
    o.report.push_back({{"input", to_json(s, f ? *f : c.field())},
                        {"h0", h0},
                        {"h1", h1},
                        {"chi", s.chi()},
                        {"split", {a, b}}});
  }
  return o;
}

Outcome cmd_toric(const RunConfig&) {
  ToricReport r = toric_matrices_check();
  return {to_json(r), r.product_zero && r.rank_weights == 3 && r.rank_kernel == 4};
}

Scalar parse_lambda(const RunConfig& c) {
  const std::string& s = c.lambda;
  if (s.find_first_of("/md") != std::string::npos) return Scalar::parse(s);
  const long long v = std::stoll(s);
  return c.rational ? Scalar::rational(v) : Scalar::mod(v, c.field().characteristic());
}

Outcome cmd_mckay(const RunConfig& c) {
  Outcome o{json::array()};
  std::vector<Scalar> lambdas;
  if (!c.lambda.empty()) {
    lambdas.push_back(parse_lambda(c));
  } else {
    std::mt19937_64 rng(c.seed);
    const Field f = c.field();
    for (int i = 0; i < c.count_or(10); ++i) lambdas.push_back(f.random_nonzero(rng));
  }
  for (const auto& l : lambdas) {
    McKayReport r = mckay_verify(l);
    o.ok = o.ok && r.pass();
    o.report.push_back(to_json(r));
  }
  return o;
}

Outcome cmd_mrel_dim(const RunConfig&) {
  MrelDims m = mrel_dim_check();
  ModuliDims d = moduli_dim_check();
  json r{{"ambient", m.ambient},
         {"group", m.group},
         {"stabilizer", m.kernel},
         {"dim", m.result},
         {"moduli", {{"smooth_locus", d.smooth_locus}, {"linear_system", d.linear_system}, {"picard", d.picard},
                     {"quotient", d.quotient}}}};
  return {r, m.result == 3 && d.smooth_locus == 9 && d.quotient == 3};
}

Outcome cmd_generate(const RunConfig& c) {
  std::mt19937_64 rng(c.seed);
  const Field f = c.field();
  std::string kind = c.kind;
  for (const auto& [from, to] : std::map<std::string, std::string>{{"\xcf\x87", "chi"}})
    if (auto pos = kind.find(from); pos != std::string::npos) kind.replace(pos, from.size(), to);
  std::function<json()> draw;
  if (kind == "smooth-bimodule-chi2" || kind == "smooth-bimodule-chi1") {
    const int deg = kind.back() == '2' ? 2 : 1;
    draw = [&, deg] { return to_json(random_bundle(random_curve(KodairaType::I0, f, rng), deg, rng)); };
  } else if (kind == "non-reduced") {
    draw = [&] { return to_json(random_nr_sheaf(f, rng), f); };
  } else if (kind == "reducible") {
    draw = [&] {
      const KodairaType t = rng() % 2 ? KodairaType::I2 : KodairaType::III;
      return to_json(random_invertible(t, f, rng));
    };
  } else if (kind == "quadruple") {
    draw = [&] { return to_json(random_quadruple(c.component, f, rng)); };
  } else {
    throw DomainError("--kind must be one of smooth-bimodule-chi2, smooth-bimodule-chi1, non-reduced, reducible, quadruple");
  }
  Outcome o{json::array()};
  for (int i = 0; i < c.count_or(1); ++i) o.report.push_back(draw());
  return o;
}

const std::map<std::string, std::function<Outcome(const RunConfig&)>>& dispatch() {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table{
      {"classify", cmd_classify},   {"split", cmd_split},       {"stability", cmd_stability},
      {"ext", cmd_ext},             {"hochschild", cmd_hochschild}, {"strong", cmd_strong},
      {"hom-matrix", cmd_hom_matrix}, {"psi", cmd_psi},         {"roundtrip", cmd_roundtrip},
      {"cech", cmd_cech},           {"toric-check", cmd_toric}, {"mckay", cmd_mckay},
      {"mrel-dim", cmd_mrel_dim},   {"generate", cmd_generate}};
  return table;
}

// "bimodule split" -> "split", "mckay verify" -> "mckay".
std::vector<std::string> strip_group(std::vector<std::string> args) {
  static const std::map<std::string, std::vector<std::string>> groups{
      {"bimodule", {"classify", "split", "stability", "ext", "hochschild", "cech"}},
      {"quiver", {"strong", "hom-matrix", "toric-check", "mrel-dim", "stability"}},
      {"moduli", {"psi", "roundtrip", "mrel-dim"}}};
  if (args.size() >= 2) {
    auto g = groups.find(args[0]);
    if (g != groups.end() && std::find(g->second.begin(), g->second.end(), args[1]) != g->second.end())
      args.erase(args.begin());
    else if (args[0] == "mckay" && args[1] == "verify")
      args.erase(args.begin() + 1);
  }
  return args;
}

}  // namespace

int run_command(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = strip_group(raw);
  if (args.empty() || !dispatch().count(args[0])) {
    err << "usage: bimodulus <subcommand> [--in file.json] [--prime P] [--seed S] [--count N] [--out file.json]\n"
           "subcommands:";
    for (const auto& [name, fn] : dispatch()) err << " " << name;
    err << "\n";
    return kExitInput;
  }
  RunConfig c;
  c.command = args[0];
  CLI::App app{"bimodulus " + c.command};
  app.add_option("--in,--bimodule,--descriptor,--quadruple", c.in, "input JSON file");
  app.add_option("--out", c.out, "write the report here instead of stdout");
  app.add_option("--prime", c.prime, "field characteristic");
  app.add_flag("--rational", c.rational, "work over Q");
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--count", c.count, "number of random instances");
  app.add_option("--d", c.d, "weight d");
  app.add_option("--m", c.m, "twist m of the collection");
  app.add_option("--lambda", c.lambda, "scalar lambda");
  app.add_option("--kind", c.kind, "instance kind for generate");
  app.add_option("--component", c.component, "quadruple component (0 or 1)");
  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Outcome o;
  try {
    o = dispatch().at(c.command)(c);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  const std::string text = o.report.dump(2) + "\n";
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      err << "input error: cannot write '" << c.out << "'\n";
      return kExitInput;
    }
    f << text;
  }
  if (!o.ok) {
    err << c.command << ": check failed\n";
    return kExitInternal;
  }
  return kExitPass;
}

}  // namespace bimodulus
