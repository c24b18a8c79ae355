#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bimodulus/commands.hpp"
#include "bimodulus/serialization.hpp"

using namespace bimodulus;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bimodulus_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, HochschildSingleDegree) {
  Outcome r = run({"hochschild", "--d", "2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  json j = r.report();
  EXPECT_EQ(j["dims"], json::parse("[7,10,0]"));
  EXPECT_EQ(j["altsum"], 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"split", "--prime", "4"}).code, kExitInput);
  EXPECT_EQ(run({"split", "--prime", "3"}).code, kExitInput);
  EXPECT_EQ(run({"split", "--count", "0"}).code, kExitInput);
  EXPECT_EQ(run({"classify", "--in", temp_file("missing.json")}).code, kExitInput);
  const std::string bad = temp_file("bad.json");
  write(bad, "{");
  EXPECT_EQ(run({"classify", "--in", bad}).code, kExitInput);
  write(bad, R"({"kind": "type-11", "a": 2, "b": 1})");
  EXPECT_EQ(run({"stability", "--in", bad}).code, kExitInput);
  // the printed toric weight matrix does not annihilate the kernel matrix
  EXPECT_EQ(run({"toric-check"}).code, kExitInternal);
}

TEST(Cli, SameSeedSameReport) {
  Outcome a = run({"split", "--seed", "5", "--count", "4"});
  Outcome b = run({"split", "--seed", "5", "--count", "4"});
  Outcome c = run({"split", "--seed", "6", "--count", "4"});
  ASSERT_EQ(a.code, kExitPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  for (const auto& row : a.report()) {
    EXPECT_TRUE(row["agree"].get<bool>());
    EXPECT_EQ(row["table"], row["cohomology"]);
  }
}

TEST(Cli, GenerateThenClassifyPipeline) {
  const std::string path = temp_file("gen.json");
  ASSERT_EQ(run({"generate", "--kind", "smooth-bimodule-chi2", "--count", "3", "--seed", "9", "--out", path}).code,
            kExitPass);
  Outcome r = run({"classify", "--in", path});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  json j = r.report();
  ASSERT_EQ(j.size(), 3u);
  for (const auto& row : j) {
    EXPECT_EQ(row["support"], "I0");
    EXPECT_EQ(row["descriptor"]["chi"], 2);
  }
  Outcome s = run({"split", "--in", path});
  EXPECT_EQ(s.code, kExitPass) << s.err;
  Outcome e = run({"ext", "--in", path});
  ASSERT_EQ(e.code, kExitPass) << e.err;
}

TEST(Cli, GenerateKinds) {
  for (std::string kind : {"smooth-bimodule-chi1", "non-reduced", "reducible", "quadruple"}) {
    Outcome r = run({"generate", "--kind", kind, "--count", "2"});
    ASSERT_EQ(r.code, kExitPass) << kind << ": " << r.err;
    EXPECT_EQ(r.report().size(), 2u);
  }
  EXPECT_EQ(run({"generate", "--kind", "elliptic-surface"}).code, kExitInput);
}

TEST(Cli, QuadrupleFileFeedsPsi) {
  const std::string path = temp_file("quad.json");
  ASSERT_EQ(run({"generate", "--kind", "quadruple", "--component", "1", "--count", "2", "--out", path}).code,
            kExitPass);
  Outcome r = run({"psi", "--in", path});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  for (const auto& row : r.report()) EXPECT_EQ(row["relations"]["dim"], 3);
}

TEST(Cli, Descriptors) {
  const std::string path = temp_file("desc.json");
  write(path, R"([{"kind": "NonReduced", "k": 1, "pullback": false, "twisted_pullback": false, "deg_D": 0},
                 {"kind": "Type11", "a": 0, "b": 4}])");
  Outcome s = run({"stability", "--in", path});
  ASSERT_EQ(s.code, kExitPass) << s.err;
  json j = s.report();
  ASSERT_EQ(j.size(), 2u);
  for (const auto& row : j) {
    const std::string v = row["stability"];
    EXPECT_TRUE(v == "stable" || v == "semi-stable but not stable" || v == "unstable") << v;
  }
  Outcome st = run({"strong", "--in", path});
  ASSERT_EQ(st.code, kExitPass) << st.err;
}

TEST(Cli, OtherSubcommands) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"mckay", "--lambda", "5", "--prime", "101"},
           {"mckay", "verify", "--lambda", "3/7", "--rational"},
           {"mrel-dim"},
           {"cech", "--count", "3"},
           {"hom-matrix", "--count", "2"},
           {"roundtrip", "--count", "1"},
           {"psi", "--component", "0", "--count", "2"},
           {"hochschild"}}) {
    Outcome r = run(args);
    EXPECT_EQ(r.code, kExitPass) << args[0] << ": " << r.err;
    EXPECT_NO_THROW(r.report()) << args[0];
  }
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = temp_file("out.json");
  std::filesystem::remove(path);
  ASSERT_EQ(run({"mrel-dim", "--out", path}).code, kExitPass);
  std::ifstream in(path);
  json j = json::parse(in);
  EXPECT_EQ(j["dim"], 3);
}

TEST(Serialization, RoundTrips) {
  for (std::string s : {"3/4", "5 mod 101", "[3,4] mod 101 adjoin sqrt(2)"})
    EXPECT_EQ(to_json(scalar_from_json(json(s))), json(s));
  EXPECT_EQ(scalar_from_json(json(7)), Scalar::rational(7));

  std::mt19937_64 rng(3);
  const Field f = Field::prime(101);
  LineBundle L = random_invertible(KodairaType::I2, f, rng);
  json j = to_json(L);
  LineBundle back = bundle_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_TRUE(lb_isomorphic(back, L));

  NRSheaf s = random_nr_sheaf(f, rng);
  EXPECT_EQ(to_json(nr_sheaf_from_json(to_json(s, f)), f), to_json(s, f));

  Quadruple q = random_quadruple(0, f, rng);
  EXPECT_EQ(to_json(quadruple_from_json(to_json(q))), to_json(q));

  BimodDescriptor d = ReducibleNonInvertibleDesc{KodairaType::III, Resolution::TwoLines, 0, 1};
  json dj = to_json(d);
  EXPECT_TRUE(is_descriptor(dj));
  EXPECT_EQ(to_json(descriptor_from_json(dj)), dj);
  dj["chi"] = 7;
  EXPECT_THROW(descriptor_from_json(dj), DomainError);
}
