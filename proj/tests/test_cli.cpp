#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Out {
  int code = -1;
  std::string text;  // stdout and stderr together
};

Out sh(const std::string& args) {
  std::string cmd = std::string(ITINF_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  Out o;
  if (!p) return o;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) o.text.append(buf.data(), n);
  int st = pclose(p);
  o.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return o;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("itinf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name), std::ios::binary) << body;
    return path(name);
  }
  static std::string read(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

const char* kHeader1D =
    R"({"type":"header","dimension":1,"target":{"kind":"halfspace","normal":[1],"offset":0},"stream":null,)"
    R"("learner":"hand","pairing":"cantor","enumeration":"shell-lex","code_version":"itinf-1",)"
    R"("initial":{"hypothesis":"a","semantics":{"kind":"halfspace","normal":[1],"offset":0},"mode":"open"}})";

}  // namespace

TEST_F(Cli, RunConverges) {
  Out o = sh("run --dim 2 --target 0,1 --offset 0");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.text, "CONVERGED t=5 locks=1\n");
}

TEST_F(Cli, RunRejectsZeroSlopes) {
  Out o = sh("run --dim 2 --target 0,0 --offset 1");
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.text.find("error: target slopes all zero"), std::string::npos) << o.text;
}

TEST_F(Cli, RunRejectsBadArguments) {
  EXPECT_EQ(sh("run --dim 2 --target 1,x --offset 0").code, 1);
  EXPECT_EQ(sh("run --dim 3 --target 1,2 --offset 0").code, 1);
  EXPECT_EQ(sh("run --dim 2 --target 1,2 --offset 0 --stream shuffled").code, 1);
  EXPECT_EQ(sh("frobnicate").code, 1);
}

TEST_F(Cli, RunIsByteDeterministic) {
  std::string args = "run --dim 2 --target 3,-2 --offset 1/2 --stream permuted --seed 7 --out ";
  ASSERT_EQ(sh(args + path("a.jsonl")).code, 0);
  ASSERT_EQ(sh(args + path("b.jsonl")).code, 0);
  std::string a = read(path("a.jsonl"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, read(path("b.jsonl")));
}

TEST_F(Cli, RunReportsNotConverged) {
  Out o = sh("run --dim 2 --target 2,-3 --offset 1 --max-steps 3");
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(o.text.rfind("NOT_CONVERGED", 0), 0u) << o.text;
}

TEST_F(Cli, VerifyPassesOnOwnTrace) {
  ASSERT_EQ(sh("run --dim 2 --target 1,2 --offset -1 --out " + path("t.jsonl")).code, 0);
  Out o = sh("verify " + path("t.jsonl"));
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.text, "conv PASS\nsnu PASS\n");
}

TEST_F(Cli, VerifyReportsHandmadeFailure) {
  std::string body = std::string(kHeader1D) + "\n" +
                     R"({"type":"step","t":0,"point":[5],"label":1,"hypothesis":"b",)"
                     R"("semantics":{"kind":"halfspace","normal":[1],"offset":-1},"mode":"open"})" + "\n";
  Out o = sh("verify " + write("caut.jsonl", body) + " --restrictions caut,smon,canny");
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(o.text, "caut FAIL(0,0,1)\nsmon FAIL(0,0,1)\ncanny PASS\n");
}

TEST_F(Cli, VerifyNeedsRadiusForFixtures) {
  std::string header =
      R"({"type":"header","dimension":1,"target":{"kind":"fixture","family":"cofin","index":"0"},"stream":null,)"
      R"("learner":"hand","pairing":"cantor","enumeration":"shell-lex","code_version":"itinf-1",)"
      R"("initial":{"hypothesis":"a","semantics":{"kind":"fixture","family":"cofin","index":"0"},"mode":"open"}})";
  std::string body = header + "\n" +
                     R"({"type":"step","t":0,"point":[3],"label":1,"hypothesis":"b",)"
                     R"("semantics":{"kind":"fixture","family":"cosingleton","index":"11"},"mode":"open"})" + "\n";
  std::string f = write("fx.jsonl", body);
  Out o = sh("verify " + f + " --restrictions smon");
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.text.find("adapter insufficient"), std::string::npos) << o.text;
  Out b = sh("verify " + f + " --restrictions smon --radius 5");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.text, "smon BOUNDED-PASS(5)\n");
  EXPECT_EQ(sh("verify " + f + " --restrictions smon --radius 12").text, "smon FAIL(0,0,1)\n");
}

TEST_F(Cli, VerifyRejectsMalformedTraces) {
  Out o = sh("verify " + write("bad.jsonl", "{\"type\":\"step\"}\n"));
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.text.find("malformed trace"), std::string::npos) << o.text;
  EXPECT_EQ(sh("verify " + path("missing.jsonl")).code, 1);
  ASSERT_EQ(sh("run --dim 2 --target 0,1 --offset 0 --out " + path("t.jsonl")).code, 0);
  EXPECT_EQ(sh("verify " + path("t.jsonl") + " --restrictions conv,mono").code, 1);
  // A datum that differs from the stream named in the header.
  std::string t = read(path("t.jsonl"));
  const std::string from = "\"point\":[0,0],\"label\":1";
  auto at = t.find(from);
  ASSERT_NE(at, std::string::npos);
  t.replace(at, from.size(), "\"point\":[0,0],\"label\":0");
  Out r = sh("verify " + write("tampered.jsonl", t));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.text.find("does not match"), std::string::npos) << r.text;
}

TEST_F(Cli, GeomCommands) {
  EXPECT_EQ(sh("geom reduce 4 6 2").text, "2 3 | 1\n");
  EXPECT_EQ(sh("geom tangent 2 3 1").text, "plus: 2 3 | 1\nminus: -2 -3 | -2\n");
  EXPECT_EQ(sh("geom mindist 3 4").text, "1/25 (squared)\n");
  EXPECT_EQ(sh("geom jdist 2 3 1 -j 1").text, "1/2\n");
  EXPECT_EQ(sh("geom jdist 0 3 3 -j 1").text, "undefined\n");
  EXPECT_EQ(sh("geom reduce 0 0 1").code, 1);
}

TEST_F(Cli, TransformInformantAndText) {
  std::string in = write("in.jsonl", "[4,1]\n[3,0]\n");
  ASSERT_EQ(sh("transform --in " + in + " --out " + path("out.jsonl")).code, 0);
  EXPECT_EQ(read(path("out.jsonl")), "[8,1]\n[9,0]\n[7,1]\n[6,0]\n");
  ASSERT_EQ(sh("transform --in " + in + " --out " + path("out.txt") + " --text").code, 0);
  EXPECT_EQ(read(path("out.txt")), "8\n7\n");
  std::string empty = write("empty.jsonl", "");
  ASSERT_EQ(sh("transform --in " + empty + " --out " + path("e.jsonl")).code, 0);
  EXPECT_EQ(read(path("e.jsonl")), "");
  EXPECT_EQ(sh("transform --in " + write("x.jsonl", "[3,0]\n[3,1]\n") + " --out " + path("x.out")).code, 1);
  EXPECT_EQ(sh("transform --in " + write("y.jsonl", "[3,2]\n") + " --out " + path("y.out")).code, 1);
}

TEST_F(Cli, BenchHeaderOnly) {
  Out o = sh("bench --dim 2 --coeff-bound 1 --offset-min 0 --offset-max 0 --seeds 0");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.text, "target,seed,status,steps_to_converge,lock_count,max_lock_count_bound\n");
}

TEST_F(Cli, BenchLocksWithinBound) {
  Out o = sh("bench --dim 2 --coeff-bound 2 --offset-min -1 --offset-max 1 --seeds 2");
  ASSERT_EQ(o.code, 0) << o.text;
  std::istringstream rows(o.text);
  std::string line;
  std::getline(rows, line);
  int n = 0;
  while (std::getline(rows, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    ASSERT_EQ(f.size(), 6u) << line;
    EXPECT_EQ(f[2], "CONVERGED") << line;
    EXPECT_LE(std::stoul(f[4]), std::stoul(f[5])) << line;
    ++n;
  }
  // Primitive normals with entries in [-2, 2], three offsets, two seeds.
  EXPECT_EQ(n, 16 * 3 * 2);
}
