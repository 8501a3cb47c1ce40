#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "posalg/cli.hpp"
#include "posalg/matrix_io.hpp"

using namespace posalg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "posalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("posalg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

Json last_line(const std::string& out) {
  std::istringstream in(out);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return Json::parse(last);
}

}  // namespace

TEST_CASE("build-example writes files and algebra-dim reads them") {
  const std::string prefix = (scratch() / "ks7").string();
  const Run b = run({"build-example", "ks7", "--out", prefix});
  REQUIRE(b.code == 0);
  CHECK(fs::exists(prefix + "_E.json"));
  const Run a = run({"algebra-dim", prefix + "_E.json", prefix + "_F.json", "--unital"});
  CHECK(a.code == 0);
  CHECK(last_line(a.out)["dim"] == 9);
  const Run nine = run({"idem-check", prefix + "_E.json", prefix + "_F.json", "--what", "nine"});
  CHECK(nine.code == 0);
  CHECK(last_line(nine.out)["pass"] == true);
  CHECK(run({"idem-check", prefix + "_E.json", prefix + "_F.json", "--what", "key"}).code == 0);
  CHECK(run({"idem-check", prefix + "_E.json", prefix + "_F.json", "--what", "band"}).code == 0);
  CHECK(run({"idem-check", prefix + "_E.json", prefix + "_F.json", "--what", "two-idem"}).code == 0);
  const Run split = run({"band-split", prefix + "_E.json"});
  CHECK(split.code == 0);
  CHECK(last_line(split.out)["L2"].is_array());
}

TEST_CASE("exit codes: usage and input errors are 2") {
  const std::string rect = write("rect.json", R"({"rows":2,"cols":3,"entries":[[1,0,0],[0,1,0]]})");
  const std::string bad = write("bad.json", R"({"rows":2,"cols":2,"entries":[[1,0],[0)");
  const std::string neg = write("neg.json", R"({"rows":2,"cols":2,"entries":[[1,-1],[0,1]]})");
  const std::string frac = write("frac.json", R"({"rows":1,"cols":1,"entries":[["1/0"]]})");
  CHECK(run({"frobenius", rect}).code == 2);
  CHECK(run({"frobenius", bad}).code == 2);
  CHECK(run({"frobenius", frac}).code == 2);
  CHECK(run({"supercone", neg}).code == 2);
  CHECK(run({"band-split", neg}).code == 2);
  CHECK(run({"frobenius", (scratch() / "missing.json").string()}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"random-check", "--theorem", "nope"}).code == 2);
  CHECK(run({"random-check", "--theorem", "thm_one", "--trials", "0"}).code == 2);
  CHECK(run({"build-example", "ks9"}).code == 2);
  const Run diag = run({"supercone", neg});
  CHECK(diag.err.find("(1,2)") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit code 1 when a check fails") {
  const std::string ones = write("ones3.json", R"({"rows":3,"cols":3,"entries":[[1,1,1],[1,1,1],[0,1,0]]})");
  const std::string perm = write("perm3.json", R"({"rows":3,"cols":3,"entries":[[0,1,0],[0,0,1],[1,0,0]]})");
  const Run r = run({"triangularizable", ones, perm});
  CHECK(r.code == 1);
  CHECK(last_line(r.out)["pass"] == false);
}

TEST_CASE("frobenius and supercone output") {
  const std::string m = write("m.json", R"({"rows":3,"cols":3,"entries":[[1,0,0],[1,1,0],[0,1,1]]})");
  const Run f = run({"frobenius", m});
  CHECK(f.code == 0);
  const Json j = last_line(f.out);
  CHECK(j["permutation"] == Json::parse("[3,2,1]"));
  CHECK(j["block_sizes"] == Json::parse("[1,1,1]"));
  const std::string d = write("d.json", R"({"rows":3,"cols":3,"entries":[[3,0,0],[0,2,0],[0,0,1]]})");
  const Run left = run({"supercone", d, "--side", "left"});
  CHECK(left.code == 0);
  CHECK(last_line(left.out)["dim"] == 6);
  CHECK(last_line(left.out)["bound_check"] == "holds");
  const Run right = run({"supercone", "--matrix", d, "--side", "right", "--serial"});
  CHECK(right.code == 0);
  CHECK(last_line(right.out)["dim"] == 6);
}

TEST_CASE("repro and random-check are deterministic") {
  const Run a = run({"repro"});
  const Run b = run({"repro", "--serial"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(last_line(a.out)["pass"] == true);
  CHECK(last_line(a.out)["rows"].get<int>() >= 15);
  const Run p = run({"repro", "--pretty"});
  CHECK(p.out.find("ks7_dim") != std::string::npos);

  const std::vector<std::string> rc{"random-check", "--theorem", "thm_key", "--trials", "20", "--seed", "5"};
  const Run c = run(rc);
  CHECK(c.code == 0);
  CHECK(c.out == run(rc).out);
}

TEST_CASE("POSALG_TRIAL_BUDGET overrides the budget") {
  ::setenv("POSALG_TRIAL_BUDGET", "1", 1);
  const Run r = run({"random-check", "--theorem", "lemma_zero_fd", "--trials", "10", "--seed", "1", "--n-min", "6",
                     "--n-max", "6"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out)["exhausted"].get<int>() > 0);
  ::setenv("POSALG_TRIAL_BUDGET", "zero", 1);
  CHECK(run({"random-check", "--theorem", "thm_one"}).code == 2);
  ::unsetenv("POSALG_TRIAL_BUDGET");
}
