#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "arrows/cli.hpp"
#include "arrows/harness.hpp"

namespace cli = arrows::cli;

namespace {

// A scene file that lives for one test case.
class TempScene {
 public:
  explicit TempScene(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("arrows_cli_test_" + std::to_string(++counter) + ".scene");
    std::ofstream(path_) << text;
  }
  ~TempScene() { std::filesystem::remove(path_); }

  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

const char* kDemo =
    "dim 2\n"
    "point O 0 0\n"
    "point G 2 0\n"
    "point P 1 3\n"
    "point A 0 0\n"
    "point B 1 1\n"
    "point C 2 2\n"
    "point D 3 5\n";

cli::DispatchResult run(std::vector<std::string> args) {
  return cli::dispatch(args);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden transcript: project") {
  const TempScene scene(kDemo);
  const auto r = run({"project", "--scene", scene.path(), "--line", "O", "G",
                      "--point", "P"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "t = 1/2\nW = (1, 0)\nresidual_sq = 9\n");
  CHECK(r.err.empty());
}

TEST_CASE("golden transcript: undefined addition") {
  const TempScene scene(kDemo);
  const auto r = run({"add", "--scene", scene.path(), "--arrow", "A", "B",
                      "--arrow", "C", "D"});
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err == "error: undefined addition: head B != tail C\n");
}

TEST_CASE("golden transcript: check is deterministic and passes") {
  const auto r1 = run({"check", "--trials", "100", "--dim", "2", "--seed", "1"});
  const auto r2 = run({"check", "--trials", "100", "--dim", "2", "--seed", "1"});
  CHECK(r1.exit_code == 0);
  CHECK(r1.err.empty());
  CHECK(r1.out == r2.out);

  // One line per advertised check, all passing.
  std::size_t lines = 0;
  for (char c : r1.out) lines += (c == '\n');
  const std::size_t expected = arrows::harness::axiom_check_names().size() +
                               arrows::harness::theorem_check_names().size();
  CHECK(lines == expected);
  for (const auto& name : arrows::harness::axiom_check_names()) {
    CHECK(r1.out.find("CHECK " + name + " trials=100 failures=0\n") !=
          std::string::npos);
  }
  for (const auto& name : arrows::harness::theorem_check_names()) {
    CHECK(r1.out.find("CHECK " + name + " trials=100 failures=0\n") !=
          std::string::npos);
  }
}

TEST_CASE("addition through an alias point is defined") {
  // B2 has B's coordinates under another name: addition cares about points,
  // not names.
  const TempScene scene(
      "dim 2\npoint A 0 0\npoint B 1 1\npoint B2 1 1\npoint D 3 5\n");
  const auto r = run({"add", "--scene", scene.path(), "--arrow", "A", "B",
                      "--arrow", "B2", "D"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "result = (0, 0) -> (3, 5)\n");
}

TEST_CASE("scale") {
  const TempScene scene(kDemo);
  const auto r = run({"scale", "--scene", scene.path(), "--arrow", "A", "B",
                      "--by", "-3/2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "result = (0, 0) -> (-3/2, -3/2)\n");

  const auto zero = run({"scale", "--scene", scene.path(), "--arrow", "A", "B",
                         "--by", "0"});
  CHECK(zero.exit_code == 0);
  CHECK(zero.out == "result = (0, 0) -> (0, 0)\n");

  const auto bad = run({"scale", "--scene", scene.path(), "--arrow", "A", "B",
                        "--by", "x"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.err == "error: bad rational literal 'x'\n");
}

TEST_CASE("between") {
  const TempScene scene(kDemo);
  const auto yes =
      run({"between", "--scene", scene.path(), "--points", "A", "B", "C"});
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "between = true\n");

  const auto no =
      run({"between", "--scene", scene.path(), "--points", "A", "C", "B"});
  CHECK(no.exit_code == 0);
  CHECK(no.out == "between = false\n");

  const auto off =
      run({"between", "--scene", scene.path(), "--points", "A", "P", "C"});
  CHECK(off.exit_code == 2);
  CHECK(off.err.find("error:") == 0);
}

TEST_CASE("classify") {
  const TempScene scene(kDemo);
  const auto r = run({"classify", "--scene", scene.path(), "--arrow", "A", "B",
                      "--arrow", "A", "C"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "direction = Same\n");

  const auto perp = run({"classify", "--scene", scene.path(), "--arrow", "O",
                         "G", "--arrow", "A", "D"});
  CHECK(perp.exit_code == 0);
  CHECK(perp.out == "direction = Oblique\n");
}

TEST_CASE("barycenter") {
  const TempScene scene(kDemo);
  const auto mid = run({"barycenter", "--scene", scene.path(), "--points", "A",
                        "C", "--weights", "1/2", "1/2"});
  CHECK(mid.exit_code == 0);
  CHECK(mid.out == "M = (1, 1)\n");

  const auto affine =
      run({"barycenter", "--scene", scene.path(), "--points", "A", "C",
           "--weights=-1/2", "--weights=3/2"});
  CHECK(affine.exit_code == 0);
  CHECK(affine.out == "M = (3, 3)\nnote: affine (not convex) combination\n");

  const auto with_origin =
      run({"barycenter", "--scene", scene.path(), "--points", "A", "C",
           "--weights", "1/2", "1/2", "--origin", "P"});
  CHECK(with_origin.exit_code == 0);
  CHECK(with_origin.out == "M = (1, 1)\n");

  const auto bad_sum = run({"barycenter", "--scene", scene.path(), "--points",
                            "A", "C", "--weights", "1/2", "1/3"});
  CHECK(bad_sum.exit_code == 2);
  CHECK(bad_sum.out.empty());
  CHECK(bad_sum.err.find("error:") == 0);

  const auto mismatch = run({"barycenter", "--scene", scene.path(), "--points",
                             "A", "C", "--weights", "1"});
  CHECK(mismatch.exit_code == 1);
}

TEST_CASE("vadd") {
  const TempScene scene(kDemo);
  const auto fast = run({"vadd", "--scene", scene.path(), "--arrow", "A", "B",
                         "--arrow", "C", "D"});
  CHECK(fast.exit_code == 0);
  CHECK(fast.out == "v = (2, 4)\n");

  const auto routed = run({"vadd", "--scene", scene.path(), "--arrow", "A", "B",
                           "--arrow", "C", "D", "--at", "P"});
  CHECK(routed.exit_code == 0);
  CHECK(routed.out == "v = (2, 4)\n");
}

TEST_CASE("--approx annotates every rational in the output") {
  const TempScene scene(kDemo);
  const auto r = run({"project", "--scene", scene.path(), "--line", "O", "G",
                      "--point", "P", "--approx", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "t = 1/2 ~0.500\nW = (1, 0) ~(1.000, 0.000)\nresidual_sq = 9 ~9.000\n");

  const auto v = run({"vadd", "--scene", scene.path(), "--arrow", "A", "B",
                      "--arrow", "C", "D", "--approx", "1"});
  CHECK(v.out == "v = (2, 4) ~(2.0, 4.0)\n");

  const auto s = run({"scale", "--scene", scene.path(), "--arrow", "A", "B",
                      "--by", "1/3", "--approx", "2"});
  CHECK(s.out ==
        "result = (0, 0) -> (1/3, 1/3) ~(0.00, 0.00) -> (0.33, 0.33)\n");
}

TEST_CASE("exit taxonomy: usage problems are exit 1") {
  const TempScene scene(kDemo);

  const auto no_sub = run({});
  CHECK(no_sub.exit_code == 1);
  CHECK(no_sub.err.find("error:") == 0);

  const auto unknown_sub = run({"bogus"});
  CHECK(unknown_sub.exit_code == 1);

  const auto missing_scene = run({"between", "--points", "A", "B", "C"});
  CHECK(missing_scene.exit_code == 1);

  const auto unknown_point = run(
      {"between", "--scene", scene.path(), "--points", "A", "B", "Nope"});
  CHECK(unknown_point.exit_code == 1);
  CHECK(unknown_point.err == "error: unknown point 'Nope'\n");

  const auto unreadable =
      run({"between", "--scene", "/missing.scene", "--points", "A", "B", "C"});
  CHECK(unreadable.exit_code == 1);

  const TempScene bad("dim 2\npoint A 1\n");
  const auto parse_err =
      run({"between", "--scene", bad.path(), "--points", "A", "A", "A"});
  CHECK(parse_err.exit_code == 1);
  CHECK(parse_err.err.find("line 2") != std::string::npos);

  const auto bad_suite = run({"check", "--suite", "nope"});
  CHECK(bad_suite.exit_code == 1);

  const auto bad_dim = run({"check", "--dim", "0", "--trials", "1"});
  CHECK(bad_dim.exit_code == 1);
}

TEST_CASE("exit taxonomy: well-formed but undefined requests are exit 2") {
  const TempScene scene(kDemo);

  const auto degenerate = run({"project", "--scene", scene.path(), "--line",
                               "O", "O", "--point", "P"});
  CHECK(degenerate.exit_code == 2);

  const auto not_between = run({"between", "--scene", scene.path(), "--points",
                                "A", "A", "B"});
  CHECK(not_between.exit_code == 2);
}

TEST_CASE("check subcommand suite selection") {
  const auto axioms = run({"check", "--trials", "20", "--suite", "axioms"});
  CHECK(axioms.exit_code == 0);
  std::size_t lines = 0;
  for (char c : axioms.out) lines += (c == '\n');
  CHECK(lines == arrows::harness::axiom_check_names().size());

  const auto theorems = run({"check", "--trials", "20", "--suite", "theorems"});
  CHECK(theorems.exit_code == 0);
  CHECK(theorems.out.find("axiom1") == std::string::npos);

  const auto none = run({"check", "--trials", "0"});
  CHECK(none.exit_code == 0);
  CHECK(none.out.empty());
}

TEST_CASE("help exits zero") {
  const auto top = run({"--help"});
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("Usage") != std::string::npos);
  CHECK(top.out.find("barycenter") != std::string::npos);

  const auto sub = run({"project", "--help"});
  CHECK(sub.exit_code == 0);
}

}  // TEST_SUITE
