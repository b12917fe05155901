#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CGT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(CGT_DATA_DIR) + "/" + name; }

std::string tmpfile_with(const std::string& text) {
  static int counter = 0;
  std::string path = "/tmp/cgt_cli_test_" + std::to_string(counter++) + ".cg";
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("genus subcommand prints the targets") {
  CHECK(run("genus --n 7").out == "1\n");
  CHECK(run("genus --n 36").out == "88\n");
  CHECK(run("genus --n 72").out == "391\n");
  CHECK(run("genus --n 108").out == "910\n");
  CHECK(run("genus --n 7").exit_code == 0);
}

TEST_CASE("verify exits 0 on a passing cascade and 1 on a law failure") {
  auto ok = run("verify " + data("cascade_s1.cg"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("C5 PASS") != std::string::npos);

  std::string path = tmpfile_with(
      "group 3 12\n"
      "v 1 : e1.0\n"
      "v 2 : e1.1 e2.0\n"
      "v 3 : e2.1\n"
      "e 1 sig +1 cur (0,1)\n"
      "e 2 sig +1 cur (0,2)\n");
  auto bad = run("verify " + path);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("C1 FAIL") != std::string::npos);
  CHECK(bad.out.find("vertex 2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("malformed input exits 2 with a position") {
  std::string path = tmpfile_with("group 3 12\nv 1 what\n");
  auto r = run("verify " + path);
  CHECK(r.exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("pipeline certifies the bundled cascade and is byte-deterministic") {
  std::string args = "pipeline " + data("cascade_s1.cg") + " --emit-derived /tmp/cgt_derived_a.txt";
  auto a = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("result                PASS") != std::string::npos);
  CHECK(a.out.find("genus                 88") != std::string::npos);

  auto b = run("pipeline " + data("cascade_s1.cg") + " --emit-derived /tmp/cgt_derived_b.txt");
  CHECK(a.out == b.out);

  std::ifstream fa("/tmp/cgt_derived_a.txt", std::ios::binary);
  std::ifstream fb("/tmp/cgt_derived_b.txt", std::ios::binary);
  std::string da((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
  std::string db((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
  CHECK(da == db);
  CHECK(!da.empty());
  std::remove("/tmp/cgt_derived_a.txt");
  std::remove("/tmp/cgt_derived_b.txt");
}

TEST_CASE("running a cascade in index-2 mode fails on the face count") {
  auto r = run("pipeline " + data("cascade_s1.cg") + " --mode index2");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("INDEX FAIL") != std::string::npos);
}

TEST_CASE("trace prints one face with its log for the cascade") {
  auto r = run("trace " + data("cascade_s1.cg"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("face 0 len 36") != std::string::npos);
  CHECK(r.out.find("log 0 len 35") != std::string::npos);
  CHECK(r.out.find("orientable no") != std::string::npos);
}

TEST_CASE("derive then certify round-trips through files") {
  auto d = run("derive " + data("cascade_s1.cg") + " -o /tmp/cgt_rs.txt");
  CHECK(d.exit_code == 0);
  auto c = run("certify /tmp/cgt_rs.txt");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("result                PASS") != std::string::npos);
  std::remove("/tmp/cgt_rs.txt");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verify").exit_code == 2);
  CHECK(run("frobnicate x").exit_code == 2);
  CHECK(run("genus").exit_code == 2);
}
