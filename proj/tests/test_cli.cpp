#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "teachlab/cli.hpp"
#include "teachlab/johnson.hpp"
#include "teachlab/nc_teaching.hpp"
#include "teachlab/tournament.hpp"

using namespace teachlab;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = TEACHLAB_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file " << p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// Set TEACHLAB_UPDATE_GOLDEN=1 to rewrite the expected files from the current output.
bool updating() {
  const char* v = std::getenv("TEACHLAB_UPDATE_GOLDEN");
  return v && std::string(v) == "1";
}

void expect_golden(const std::string& name, const std::string& actual) {
  fs::path p = kGolden / name;
  if (updating()) spit(p, actual);
  CHECK_MESSAGE(slurp(p) == actual, "golden mismatch: " << name);
}

/// Temporary directory removed on scope exit.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("teachlab_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string in_golden(const std::string& name) { return (kGolden / name).string(); }

CommandOutcome run(std::vector<std::string> args) { return dispatch(args); }

struct Case {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

}  // namespace

TEST_CASE("every subcommand matches its golden text") {
  const std::string half = in_golden("half3.class");
  const std::string teacher = in_golden("half3.teacher");
  const std::string linear = in_golden("linear3.tour");
  const std::vector<Case> cases = {
      {"td_half.txt", {"td", "--class", half}, 0},
      {"td_concept.txt", {"td", "--class", half, "--concept", "4"}, 0},
      {"rtd_half.txt", {"rtd", "--class", half, "--oracle"}, 0},
      {"nctd_half.txt", {"nctd", "--class", half}, 0},
      {"nctd_cube_capped.txt", {"nctd", "--class", in_golden("cube3.class"), "--max-d", "1"}, 3},
      {"verify_teacher.txt", {"verify-teacher", "--class", half, "--teacher", teacher}, 0},
      {"verify_teacher_clash.txt", {"verify-teacher", "--class", half, "--teacher", in_golden("clash3.teacher")}, 1},
      {"gen_linear.txt", {"tournament", "gen", "--n", "3", "--linear"}, 0},
      {"gen_seed.txt", {"tournament", "gen", "--n", "5", "--seed", "11"}, 0},
      {"gen_index.txt", {"tournament", "gen", "--n", "3", "--index", "5"}, 0},
      {"class1.txt", {"tournament", "class", "--mode", "1", "--in", linear}, 0},
      {"class2.txt", {"tournament", "class", "--mode", "2", "--in", linear}, 0},
      {"recover.txt", {"tournament", "recover", "--class", half, "--teacher", teacher}, 0},
      {"recover_find.txt", {"tournament", "recover", "--class", half, "--find-teacher"}, 0},
      {"hmax.txt", {"johnson", "hmax", "--n", "6", "--k", "3", "--t", "2"}, 0},
      {"hmax_trivial.txt", {"johnson", "hmax", "--n", "5", "--k", "2", "--t", "2", "--pruning", "trivial"}, 0},
      {"hmax_capped.txt", {"johnson", "hmax", "--n", "12", "--k", "4", "--t", "2", "--size-cap", "100"}, 3},
      {"bounds_4_1.txt", {"bounds", "--n", "4", "--d", "1"}, 0},
      {"bounds_4_2.txt", {"bounds", "--n", "4", "--d", "2"}, 0},
      {"bounds_30_7.txt", {"bounds", "--n", "30", "--d", "7", "--t", "3"}, 0},
      {"bounds_json.txt", {"--json", "bounds", "--n", "6", "--d", "3"}, 0},
      {"tdmin.txt", {"experiment", "tdmin", "--n", "8", "--trials", "10", "--seed", "1"}, 0},
      {"claim.txt", {"experiment", "claim", "--scan-max", "100000"}, 0},
      {"tau.txt", {"experiment", "tau", "--n", "16", "--trials", "50", "--seed", "7", "--k", "1"}, 0},
      {"tau_vacuous.txt", {"experiment", "tau", "--n", "16", "--trials", "20", "--seed", "7"}, 0},
      {"dim1.txt", {"verify", "dim1", "--n", "3"}, 0},
      {"dim1_json.txt", {"--json", "verify", "dim1", "--n", "2"}, 0},
      {"maxclass.txt", {"search", "maxclass", "--n", "3", "--d", "1"}, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CommandOutcome r = run(c.args);
    CHECK(r.exit_code == c.exit_code);
    expect_golden(c.name, r.out);
    CHECK(run(c.args).out == r.out);
  }
}

TEST_CASE("json output is one object per report") {
  for (std::vector<std::string> args : {std::vector<std::string>{"--json", "bounds", "--n", "4", "--d", "2"},
                                        {"--json", "td", "--class", in_golden("half3.class")},
                                        {"--json", "johnson", "hmax", "--n", "5", "--k", "2", "--t", "2"},
                                        {"--json", "experiment", "tau", "--n", "8", "--trials", "5", "--seed", "1"}}) {
    CommandOutcome r = run(args);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.is_object());
  }
  auto b = nlohmann::json::parse(run({"--json", "bounds", "--n", "4", "--d", "2"}).out);
  CHECK(b["ksz"] == 24);
  CHECK(b["gub"] == "64/3");
  CHECK(b["h_kind"] == "exact");
  auto b1 = nlohmann::json::parse(run({"--json", "bounds", "--n", "4", "--d", "1"}).out);
  CHECK(b1["ksz"] == 8);
  CHECK(b1["factor"] == 1.0);
}

TEST_CASE("named examples") {
  CommandOutcome b = run({"bounds", "--n", "4", "--d", "1"});
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("ksz       8\n") != std::string::npos);
  CHECK(b.out.find("factor    1.0\n") != std::string::npos);

  Scratch s;
  CHECK(run({"tournament", "gen", "--n", "3", "--linear", "--out", s / "g.tour"}).exit_code == 0);
  CHECK(run({"tournament", "class", "--mode", "2", "--in", s / "g.tour", "--out", s / "k.class"}).exit_code == 0);
  CHECK(slurp(s / "k.class") == "n=3\n000\n100\n110\n111\n011\n001\n");
  CHECK(slurp(s / "k.class") == slurp(in_golden("half3.class")));

  CHECK(run({"verify", "dim1", "--n", "3"}).exit_code == 0);
}

TEST_CASE("csv outputs match golden files") {
  Scratch s;
  CHECK(run({"td", "--class", in_golden("half3.class"), "--csv", s / "td.csv"}).exit_code == 0);
  expect_golden("td_half.csv", slurp(s / "td.csv"));
  CHECK(run({"bounds", "--n", "5", "--d", "2", "--csv", s / "b.csv"}).exit_code == 0);
  expect_golden("bounds_5_2.csv", slurp(s / "b.csv"));
  CHECK(run({"experiment", "tdmin", "--n", "8", "--trials", "10", "--seed", "1", "--out", s / "e.csv"}).exit_code == 0);
  expect_golden("tdmin.csv", slurp(s / "e.csv"));

  // Same CSV regardless of the worker count.
  CHECK(run({"--jobs", "3", "experiment", "tdmin", "--n", "8", "--trials", "10", "--seed", "1", "--out", s / "e3.csv"})
            .exit_code == 0);
  CHECK(slurp(s / "e3.csv") == slurp(s / "e.csv"));
  std::string first = slurp(s / "e.csv");
  CHECK(first.rfind("trial,seed,n,td_min,nctd\n", 0) == 0);
}

TEST_CASE("files written by the tool read back byte for byte") {
  Scratch s;
  REQUIRE(run({"tournament", "gen", "--n", "7", "--seed", "5", "--out", s / "g.tour"}).exit_code == 0);
  std::string tour = slurp(s / "g.tour");
  CHECK(serialize_tournament(parse_tournament(tour)) == tour);

  REQUIRE(run({"tournament", "class", "--mode", "2", "--in", s / "g.tour", "--out", s / "k.class"}).exit_code == 0);
  std::string cls = slurp(s / "k.class");
  CHECK(serialize_class(parse_class(cls)) == cls);

  REQUIRE(run({"nctd", "--class", s / "k.class", "--emit-teacher", s / "t.teacher"}).exit_code == 0);
  std::string teacher = slurp(s / "t.teacher");
  CHECK(serialize_teacher(parse_teacher(teacher)) == teacher);
  CHECK(run({"verify-teacher", "--class", s / "k.class", "--teacher", s / "t.teacher"}).exit_code == 0);

  REQUIRE(run({"tournament", "recover", "--class", s / "k.class", "--teacher", s / "t.teacher", "--out", s / "r.tour"})
              .exit_code == 0);
  CHECK(slurp(s / "r.tour") == tour);

  REQUIRE(run({"johnson", "hmax", "--n", "6", "--k", "3", "--t", "2", "--witness", s / "w.txt"}).exit_code == 0);
  std::string wit = slurp(s / "w.txt");
  CHECK(serialize_family(parse_family(wit, 6, 3)) == wit);
  CHECK_FALSE(has_narrow_clique(parse_family(wit, 6, 3), 2));
}

TEST_CASE("exit codes") {
  Scratch s;
  spit(s / "bad.class", "n=3\n01\n");
  spit(s / "bad.tour", "n=3\n1 2\n");
  CHECK(run({}).exit_code == 2);
  CHECK(run({"nosuch"}).exit_code == 2);
  CHECK(run({"td"}).exit_code == 2);
  CHECK(run({"td", "--class", s / "missing.class"}).exit_code == 2);
  CHECK(run({"td", "--class", s / "bad.class"}).exit_code == 2);
  CHECK(run({"td", "--class", in_golden("half3.class"), "--concept", "9"}).exit_code == 2);
  CHECK(run({"tournament", "class", "--mode", "3", "--in", in_golden("linear3.tour")}).exit_code == 2);
  CHECK(run({"tournament", "class", "--mode", "1", "--in", s / "bad.tour"}).exit_code == 2);
  CHECK(run({"tournament", "gen", "--n", "3"}).exit_code == 2);
  CHECK(run({"tournament", "gen", "--n", "3", "--linear", "--seed", "4"}).exit_code == 2);
  CHECK(run({"bounds", "--n", "3", "--d", "4"}).exit_code == 2);
  CHECK(run({"bounds", "--n", "5", "--d", "3", "--t", "4"}).exit_code == 2);
  CHECK(run({"johnson", "hmax", "--n", "5", "--k", "2", "--t", "3"}).exit_code == 2);
  CHECK(run({"johnson", "hmax", "--n", "5", "--k", "2", "--t", "2", "--pruning", "magic"}).exit_code == 2);
  CHECK(run({"verify", "dim1", "--n", "5"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);

  // A class of the right size that no tournament produces.
  spit(s / "odd.class", "n=3\n000\n100\n010\n001\n110\n101\n");
  CHECK(run({"tournament", "recover", "--class", s / "odd.class", "--find-teacher"}).exit_code == 1);
  CHECK(run({"tournament", "recover", "--class", s / "odd.class", "--teacher", in_golden("half3.teacher")}).exit_code ==
        2);
}
