#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome qipc(const std::string& args) {
  const std::string cmd = std::string(QIPC_PATH) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("qipc_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

TEST_F(Cli, GenIsDeterministic) {
  const Outcome a = qipc("gen gsa --seed 11 --d 3 --N 9 --den 7");
  const Outcome b = qipc("gen gsa --seed 11 --d 3 --N 9 --den 7");
  const Outcome c = qipc("gen gsa --seed 12 --d 3 --N 9 --den 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("kind"), "gsa");
  EXPECT_EQ(j.at("data").at("alpha").size(), 3u);
}

TEST_F(Cli, ReduceDecideVerify) {
  std::ofstream(path("g.json")) << R"({"kind":"gsa","data":{"alpha":["1/3"],"N":"3","eps":"1/3"}})";
  ASSERT_EQ(qipc("reduce " + path("g.json") + " --target eae -o " + path("s.json")).code, 0);
  const auto s = nlohmann::json::parse(std::ifstream(path("s.json")));
  EXPECT_EQ(s.at("kind"), "sentence");
  EXPECT_EQ(s.at("provenance").at("reduction"), "gsa-eae");
  const auto& blocks = s.at("data").at("blocks");
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_EQ(blocks[0].at("q"), "exists");
  EXPECT_EQ(blocks[1].at("q"), "forall");
  EXPECT_EQ(blocks[2].at("unbounded"), 3);

  const Outcome d = qipc("decide " + path("s.json"));
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "true\n");
  EXPECT_EQ(qipc("count " + path("g.json")).out, "3\n");

  for (const char* t : {"eae", "proj", "two-quant"}) {
    const Outcome v = qipc("verify " + path("g.json") + " --target " + t);
    EXPECT_EQ(v.code, 0) << t;
    EXPECT_EQ(v.out.rfind("PASS", 0), 0u) << v.out;
  }
  const Outcome x = qipc("export " + path("s.json") + " --format smtlib2-lia");
  EXPECT_EQ(x.code, 0);
  EXPECT_EQ(x.out.rfind("(set-logic LIA)", 0), 0u);
}

TEST_F(Cli, ProjectionCount) {
  std::ofstream(path("g.json")) << R"({"kind":"gsa","data":{"alpha":["1/2"],"N":"2","eps":"1/4"}})";
  ASSERT_EQ(qipc("reduce " + path("g.json") + " --target proj -o " + path("p.json")).code, 0);
  EXPECT_EQ(qipc("count " + path("p.json")).out, "projcount 1\nN-projcount 1\n");
  ASSERT_EQ(qipc("reduce " + path("p.json") + " --target simplices -o " + path("t.json")).code, 0);
  EXPECT_EQ(qipc("count " + path("t.json")).out, "projcount 1\nN-projcount 1\n");
}

TEST_F(Cli, Q3Sat) {
  ASSERT_EQ(qipc("gen q3sat --seed 3 --k 1 --ell 2 --clauses 2 -o " + path("q.json")).code, 0);
  const Outcome v = qipc("verify " + path("q.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.rfind("PASS qsat", 0), 0u) << v.out;
}

TEST_F(Cli, Sweep) {
  const Outcome r = qipc("verify sweep --grid small --seed 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS "), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(qipc("").code, 3);
  EXPECT_EQ(qipc("frobnicate").code, 3);
  EXPECT_EQ(qipc("reduce").code, 3);
  EXPECT_EQ(qipc("decide " + path("missing.json")).code, 3);
  std::ofstream(path("bad.json")) << R"({"kind":"gsa","data":{"alpha":["1/3"],"N":"0","eps":"1/3"}})";
  EXPECT_EQ(qipc("decide " + path("bad.json")).code, 3);
  std::ofstream(path("big.json")) << R"({"kind":"gsa","data":{"alpha":["1/3"],"N":"100000000000000","eps":"1/7"}})";
  EXPECT_EQ(qipc("decide " + path("big.json")).code, 2);
}

}  // namespace
