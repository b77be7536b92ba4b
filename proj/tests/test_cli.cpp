#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ellq/verify.hpp"

using namespace ellq;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args)
{
  std::string cmd = std::string(ELLQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json runJson(const std::string& args)
{
  CliResult r = run("--json " + args);
  EXPECT_EQ(r.code, 0) << args;
  return nlohmann::json::parse(r.out);
}

fs::path scratchDir(const std::string& name)
{
  fs::path d = fs::temp_directory_path() / ("ellq-cli-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

} // namespace

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("verify nope").code, 2);
  EXPECT_EQ(run("group X3").code, 2);
  EXPECT_EQ(run("fake G2 --char nope").code, 2);
  EXPECT_EQ(run("fourier").code, 2);
  EXPECT_EQ(run("affine B2").code, 2);
  EXPECT_EQ(run("mx --fixture nope").code, 2);
  EXPECT_EQ(run("group G2").code, 0);
  // DISCREPANCY rows do not fail the run
  EXPECT_EQ(run("verify g2-formal").code, 0);
  EXPECT_EQ(run("verify all").code, 0);
}

TEST(Cli, SignTextRendering)
{
  CliResult r = run("efd G2 --sgn");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)"), std::string::npos) << r.out;
}

TEST(Cli, JsonRoundTrip)
{
  auto w = weylGroup("G2");
  auto j = runJson("efd G2");
  ASSERT_EQ(int(j.size()), w->numIrreps());
  for (const auto& e : j) {
    int i = w->irrIndex(e.at("char"));
    EXPECT_EQ(rationalFunctionFromJson(e), ellipticFakeDegree(*w, w->irreducible(i))) << e.at("char");
    EXPECT_EQ(e.at("text"), render(rationalFunctionFromJson(e)));
  }
  for (const auto& e : runJson("mx")) EXPECT_EQ(rationalFunctionFromJson(e), unipotentParam(e.at("id")).expected);
  auto f = runJson("fourier --gamma Z2");
  EXPECT_EQ(matrixFromJson(f.at("matrix")), fourierMatrix("Z2").rationalMatrix());
  auto a = runJson("affine G2 --formal");
  auto rep = g2AffineReport();
  ASSERT_EQ(a.at("formal").size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(rationalFunctionFromJson(a["formal"][i]), rep.formal[i]);
  auto b2 = weylGroup("B2");
  for (const auto& e : runJson("fake B2"))
    EXPECT_EQ(e.at("text"), fakeDegree(*b2, b2->irreducible(b2->irrIndex(e.at("char")))).str());
}

TEST(Cli, VerifyStatuses)
{
  auto j = runJson("verify cyc");
  ASSERT_EQ(j.size(), 5u);
  for (const auto& r : j) EXPECT_EQ(r.at("status"), "PASS") << r.at("checkId");
  std::map<std::string, std::string> st;
  for (const auto& r : runJson("verify g2-formal")) st[r.at("checkId")] = r.at("status");
  for (const char* e : {"(1,1)", "(1,eps)", "(1,r)", "(g3,1)", "(g3,theta)", "(g3,theta^2)"})
    EXPECT_EQ(st["g2-formal/" + std::string(e)], "PASS") << e;
  EXPECT_EQ(st["g2-formal/(g2,1)"], "DISCREPANCY");
  EXPECT_EQ(st["g2-formal/(g2,eps)"], "DISCREPANCY");
  auto sp = runJson("verify sp4");
  int rows = 0;
  for (const auto& r : sp) {
    EXPECT_NE(r.at("status"), "FAIL") << r.at("checkId");
    if (r.at("checkId").get<std::string>().find("/(") != std::string::npos) ++rows;
  }
  EXPECT_EQ(rows, 4);
}

TEST(Cli, Deterministic)
{
  CliResult a = run("--json verify all");
  CliResult b = run("--json verify all");
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  std::vector<std::string> ids;
  for (const auto& r : j) ids.push_back(r.at("checkId"));
  // sorted within each suite
  std::vector<std::string> cyc(ids.begin(), ids.begin() + 5);
  EXPECT_TRUE(std::is_sorted(cyc.begin(), cyc.end()));
}

TEST(Cli, FixtureOverride)
{
  fs::path d = scratchDir("override");
  const Fixture& f = fixture("cyc-table");
  nlohmann::json cyc{{"id", f.id}, {"provenance", f.provenance}, {"source", f.source}, {"payload", f.payload}};
  cyc["payload"]["G2"] = "Phi2 Phi3 Phi6";
  std::ofstream(d / "cyc-table.json") << cyc.dump();
  CliResult r = run("--fixtures " + d.string() + " verify cyc");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL        cyc/G2"), std::string::npos) << r.out;

  std::ofstream(d / "cyc-table.json") << "{ not json";
  r = run("--json --fixtures " + d.string() + " verify cyc");
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].at("status"), "FAIL");
  EXPECT_EQ(run("--fixtures " + (d / "missing").string() + " verify cyc").code, 2);
  fs::remove_all(d);
}

TEST(Cli, EmptyList)
{
  auto j = runJson("independence G2");
  EXPECT_EQ(j.at("coincidentPairs").dump(), "[]");
  EXPECT_TRUE(j.at("independent").get<bool>());
}
