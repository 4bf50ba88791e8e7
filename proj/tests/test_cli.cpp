#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "render.hpp"

using namespace constaclass;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, FactorExample) {
  const auto r = run({"factor", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi^1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "unit=1; (X^3 + xi^8)^2; case=ii.b\n");
  const auto shaped = run({"factor", "--field", "GF(2^4)", "--ell", "3", "--t", "1", "--s", "1", "--lambda", "xi"});
  EXPECT_EQ(shaped.out, r.out);
}

TEST(Cli, FactorSevenOverGF25) {
  const auto r = run({"factor", "--field", "GF(5^2)", "--n", "7", "--lambda", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "unit=1; (X + xi^12) (X^3 + xi*X^2 + xi^17*X + xi^12) (X^3 + xi^5*X^2 + xi^13*X + xi^12); case=i\n");
}

TEST(Cli, Classes) {
  const auto r = run({"classes", "--field", "GF(5^2)", "--n", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4U);
  EXPECT_EQ(ls[0], "field=GF(5^2); n=20; classes=3");
  EXPECT_NE(ls[1].find("size=6;"), std::string::npos);
  EXPECT_NE(ls[2].find("size=12;"), std::string::npos);
  EXPECT_NE(ls[3].find("size=6;"), std::string::npos);

  const auto big = run({"classes", "--field", "GF(2^8)", "--n", "3"});
  ASSERT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("more; use --full"), std::string::npos);
  const auto full = run({"classes", "--field", "GF(2^8)", "--n", "3", "--full"});
  EXPECT_EQ(full.out.find("more; use --full"), std::string::npos);
}

TEST(Cli, Witness) {
  const auto r = run({"witness", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi", "--mu", "xi^5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a=xi^4; k=5\n");
  const auto bad = run({"witness", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi", "--mu", "1"});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi", "--weights"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5U);
  EXPECT_EQ(ls[1], "codes=3");
  EXPECT_EQ(ls[2], "e=(0); g=1; dim=6; size=16^6; distance: not computed (size cap)");
  EXPECT_EQ(ls[3], "e=(1); g=X^3 + xi^8; dim=3; size=16^3; weights=1,0,45,0,675,0,3375; distance=2");
  EXPECT_EQ(ls[4], "e=(2); g=X^6 + xi; dim=0; size=16^0; weights=1,0,0,0,0,0,0; distance=none");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"factor", "--n", "6", "--lambda", "1"}).code, 1);
  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--lambda", "1"}).code, 1);
  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--n", "6", "--ell", "3", "--t", "1", "--lambda", "1"}).code, 1);
  EXPECT_EQ(run({"factor", "--field", "GF(6)", "--n", "6", "--lambda", "1"}).code, 1);
  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi^"}).code, 1);
  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--n", "6", "--lambda", "1", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"tables", "--table", "9"}).code, 1);

  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--n", "6", "--lambda", "0"}).code, 2);
  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--ell", "2", "--t", "1", "--lambda", "1"}).code, 2);

  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--n", "2000000", "--lambda", "1"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--field", "GF(5^2)", "--n", "175", "--lambda", "xi", "--max-codes", "100"}).code, 3);
  EXPECT_EQ(run({"classes", "--field", "GF(2^21)", "--n", "3"}).code, 3);
  EXPECT_EQ(run({"factor", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi", "--help"}).code, 0);
}

TEST(Cli, JsonMatchesText) {
  for (const char* lambda : {"1", "xi", "xi^5", "xi^3"}) {
    const std::vector<std::string> base{"factor", "--field", "GF(5^2)", "--n", "20", "--lambda", lambda};
    const auto text = run(base);
    auto args = base;
    args.insert(args.end(), {"--format", "json"});
    const auto js = run(args);
    ASSERT_EQ(js.code, 0);
    const json j = json::parse(js.out);
    const auto F = parse_field(j.at("field").get<std::string>());
    EXPECT_EQ(j.at("n"), 20);
    EXPECT_TRUE(parse_element(*F, j.at("lambda").get<std::string>()) == parse_element(*F, lambda));
    Factorization f;
    f.field = F;
    f.unit = parse_element(*F, j.at("unit").get<std::string>());
    for (const auto& entry : j.at("factors")) {
      f.factors.push_back({cli::poly_from_json(F, entry.at("poly")), entry.at("mult").get<std::uint64_t>()});
    }
    const std::string label = j.at("case");
    f.provenance = label == "i" ? Provenance::kCyclotomicCaseI
                   : label == "ii.a" ? Provenance::kBlakeCaseIIa
                   : label == "ii.b" ? Provenance::kBinomialCaseIIb
                                     : Provenance::kOracle;
    EXPECT_EQ(cli::factorization_text(f) + "\n", text.out);
  }

  const auto cj = json::parse(run({"classes", "--field", "GF(5^2)", "--n", "20", "--format", "json"}).out);
  EXPECT_EQ(cj.at("class_count"), 3);
  EXPECT_EQ(cj.at("classes").at(1).at("size"), 12);
  const auto ej = json::parse(
      run({"enumerate", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi", "--weights", "--format", "json"}).out);
  ASSERT_EQ(ej.at("codes").size(), 3U);
  EXPECT_EQ(ej.at("codes").at(1).at("size"), "16^3");
  EXPECT_EQ(ej.at("codes").at(1).at("distance"), 2);
  EXPECT_TRUE(ej.at("codes").at(0).at("weights").is_null());
  const auto wj = json::parse(
      run({"witness", "--field", "GF(2^4)", "--n", "6", "--lambda", "xi", "--mu", "xi^5", "--format", "json"}).out);
  EXPECT_EQ(wj.at("a"), "xi^4");
  EXPECT_EQ(wj.at("k"), 5);
}

TEST(Cli, TablesAreStable) {
  const auto first = run({"tables"});
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(run({"tables"}).out, first.out);
  EXPECT_EQ(run({"tables", "--seed", "99"}).out, first.out);
  const auto t2 = run({"tables", "--table", "2"});
  const auto ls = lines(t2.out);
  ASSERT_EQ(ls.size(), 11U);
  EXPECT_EQ(ls[0], "Table 2: GF(2^4), n=6, lambda ~_6 xi^5, a^6*lambda = (xi^5)^k, 10 rows");
  EXPECT_EQ(ls[1], "xi^1 | k=5 | a=xi^4 | <(X^3 + xi^8)^j0>, 0 <= j0 <= 2 | 16^(6-3j0) | case=ii.b");
  EXPECT_NE(first.out.find("Table 3: GF(5^2), n=175"), std::string::npos);
  const auto js = json::parse(run({"tables", "--table", "4", "--format", "json"}).out);
  ASSERT_EQ(js.size(), 1U);
  const auto expanded = run({"tables", "--table", "1", "--expand"});
  EXPECT_GT(lines(expanded.out).size(), lines(run({"tables", "--table", "1"}).out).size());
}

TEST(Cli, SeedEnvironmentOverride) {
  const std::vector<std::string> args{"factor", "--field", "GF(3^2)", "--n", "10", "--lambda", "xi", "--seed", "5"};
  const auto plain = run(args);
  ASSERT_EQ(plain.code, 0);
  EXPECT_NE(plain.out.find("case=oracle"), std::string::npos);
  ::setenv("CONSTACLASS_SEED", "12345", 1);
  const auto seeded = run(args);
  ::setenv("CONSTACLASS_SEED", "not-a-number", 1);
  const auto bad = run(args);
  ::unsetenv("CONSTACLASS_SEED");
  EXPECT_EQ(seeded.code, 0);
  EXPECT_EQ(seeded.out, plain.out);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("CONSTACLASS_SEED"), std::string::npos);
}

TEST(Cli, Selftest) {
  const auto r = run({"selftest", "--max-n", "12"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("GF(3^4)"), std::string::npos);
  EXPECT_NE(r.out.find("mismatches=0\n"), std::string::npos);
  const auto js = json::parse(run({"selftest", "--max-n", "8", "--format", "json"}).out);
  EXPECT_TRUE(js.at("failures").empty());
}
