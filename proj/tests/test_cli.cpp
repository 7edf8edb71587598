#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "slc/json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_slc(const std::string& args) {
  std::string cmd = std::string(SLC_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "slc_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kStdlib = SLC_STDLIB_DIR;

}  // namespace

TEST_CASE("check") {
  CHECK(run_slc("check " + kStdlib + "/stdlib.slc").code == 0);
  auto bad = run_slc("check " + fixture("bad.slc", "def bad = \\x. !x\n"));
  CHECK(bad.code == 2);
  CHECK(bad.out.find("abstraction over temporary variable") != std::string::npos);
  CHECK(run_slc("check /nonexistent/file.slc").code == 1);
  CHECK(run_slc("check " + fixture("syntax.slc", "def x = (\n")).code == 1);
}

TEST_CASE("stats") {
  auto two = fixture("two.slc", "def t = two\n");
  auto r = run_slc("stats " + two + " --n 4 --json");
  REQUIRE(r.code == 0);
  auto j = slc::Json::parse(r.out);
  CHECK(j["metrics"]["size"] == 7);
  CHECK(j["metrics"]["depth"] == 0);
  CHECK(j["metrics"]["rank"] == 2);
  CHECK(j["metrics"]["weight"] == 6);
  CHECK(j["metrics"]["nlet"] == 1);
  CHECK(j["certificate"]["bound"] == "343");
  auto x = slc::Json::parse(run_slc("stats " + fixture("x.slc", "def x = x\n") + " --json").out);
  CHECK(x["metrics"]["size"] == 1);
  CHECK(x["metrics"]["weight"] == 1);
  CHECK(x["certificate"]["bound"] == "1");
  CHECK(run_slc("stats " + two + " --n 1").code == 2);
}

TEST_CASE("reduce") {
  auto app = fixture("app.slc", "def main = ((two !g) z)\n");
  auto r = run_slc("reduce " + app);
  CHECK(r.code == 0);
  CHECK(r.out.find("steps 3") != std::string::npos);
  CHECK(r.out.find("normal form (g (g z))") != std::string::npos);
  auto j = slc::Json::parse(run_slc("reduce " + app + " --monitor --json").out);
  CHECK(j["length"] == 3);
  CHECK(j["normal_form"] == "(g (g z))");
  CHECK(run_slc("reduce " + fixture("nf.slc", "def main = (f x)\n")).out.find("steps 0") != std::string::npos);
  auto rnd = fixture("rnd.slc", "def main = ((\\x. x) ((\\y. y) ((\\w. w) z)))\n");
  auto a = run_slc("reduce " + rnd + " --strategy random --seed 7 --json");
  auto b = run_slc("reduce " + rnd + " --strategy random --seed 7 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run_slc("reduce " + app + " --strategy sideways").code == 1);
  CHECK(run_slc("reduce " + app + " --def nothere").code == 1);
}

TEST_CASE("type") {
  CHECK(run_slc("type " + kStdlib + "/stdlib.typed.slc").code == 0);
  auto r = run_slc("type " + fixture("dup.slc", "def dup : (1 -o 1) -o 1 = \\f : 1 -o 1. (f (f ()))\n") + " --json");
  CHECK(r.code == 2);
  auto j = slc::Json::parse(r.out);
  CHECK(j["definitions"][0]["error"]["kind"] == "LinearityViolation");
}

TEST_CASE("demo") {
  auto s = run_slc("demo sort --list 2,0,1 --slack 3");
  CHECK(s.code == 0);
  CHECK(s.out.find("output 0,1,2\n") != std::string::npos);
  auto e = run_slc("demo sort --list \"\" --slack 0");
  CHECK(e.code == 0);
  CHECK(e.out.find("output \n") != std::string::npos);
  auto m = slc::Json::parse(run_slc("demo map --fn succ --list 0,2 --slack 2 --json").out);
  CHECK(m["output"] == "0,1");
  CHECK(m["within_bound"] == true);
  CHECK(run_slc("demo sort --list 0,1,2 --slack 1").code == 1);
  CHECK(run_slc("demo sort --list 0,3").code == 1);
}

TEST_CASE("bound-check") {
  auto r = slc::Json::parse(run_slc("bound-check --max-size 6 --json").out);
  CHECK(r["ok"] == true);
  CHECK(r["terms"].get<int>() > 1000);
  auto one = slc::Json::parse(run_slc("bound-check --max-size 1 --json").out);
  CHECK(one["terms"] == 1);
  CHECK(one["rows"][0]["longest"] == 0);
  CHECK(run_slc("bound-check --max-size 3 --inject-fault").code == 3);
}

TEST_CASE("usage") {
  CHECK(run_slc("").code == 1);
  CHECK(run_slc("frobnicate").code == 1);
  CHECK(run_slc("--help").code == 0);
}
