#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "biperiodic/report.hpp"

using namespace biperiodic;

namespace {

struct Result {
  int status;
  std::string out;
};

// Runs the CLI with `args`; stderr is merged into `out` when `merge_stderr`.
Result run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string("\"") + BIPERIODIC_CLI + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("term") {
  const Result lucas6 = run("term --kind lucas --a 1 --b 1 --n 6");
  CHECK(lucas6.status == 0);
  CHECK(lucas6.out == "18\n");

  const Result l0 = run("term --kind lucas-matrix --a 1 --b 1 --n 0 --format json");
  CHECK(l0.status == 0);
  CHECK(l0.out == "[[\"1\",\"2\"],[\"2\",\"-1\"]]\n");

  const Result frac = run("term --kind lucas --a 1/2 --b 3 --n 3 --format json");
  CHECK(frac.out == "\"9/4\"\n");

  const Result all = run("term --kind lucas-matrix --a 1/2 --b 3 --n 6 --source all --format json");
  const json j = json::parse(all.out);
  CHECK(j.at("rec") == j.at("closed"));
  CHECK(j.at("rec") == j.at("binet"));
  CHECK(matrix_from_json(j.at("binet")) ==
        RatMat{Rational(377, 16), Rational(259, 8), Rational(259, 48), Rational(59, 8)});
}

TEST_CASE("validation errors exit with 2") {
  const Result zero_a = run("term --kind fib --a 0 --b 1 --n 3", true);
  CHECK(zero_a.status == 2);
  CHECK(zero_a.out.find("parameter a must be nonzero") != std::string::npos);

  const Result zero_b = run("term --kind fib --a 1 --b 0/5 --n 3", true);
  CHECK(zero_b.status == 2);
  CHECK(zero_b.out.find("parameter b must be nonzero") != std::string::npos);

  const Result order = run("series --order 0", true);
  CHECK(order.status == 2);
  CHECK(order.out.find("order must be >= 1") != std::string::npos);

  CHECK(run("term --kind lucas-matrix --a 2 --b -2 --n 3 --source binet").status == 2);
  CHECK(run("term --kind lucas-matrix --a 2 --b -2 --n 3 --source closed").status == 0);
  CHECK(run("term --kind bogus").status == 2);
  CHECK(run("term --a 1.5").status == 2);
  CHECK(run("table --n 3 --n-max 2").status == 2);
  CHECK(run("term --kind fib-matrix --n -1 --source rec").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("table") {
  const Result fib = run("table --kind fib --a 2 --b 1 --n 0 --n-max 5 --format csv");
  CHECK(fib.status == 0);
  CHECK(fib.out == "index,value\n0,0\n1,1\n2,2\n3,3\n4,8\n5,11\n");

  const Result lucas = run("table --kind lucas --a 1 --b 1 --n 0 --n-max 4");
  CHECK(lucas.out == "index,value\n0,2\n1,1\n2,3\n3,4\n4,7\n");

  const Result single = run("table --kind lucas --a 1 --b 1 --n 4 --n-max 4");
  CHECK(single.out == "index,value\n4,7\n");

  const Result matrices = run("table --kind lucas-matrix --a 1/2 --b 3 --n 0 --n-max 2");
  CHECK(matrices.out == "index,e11,e12,e21,e22\n0,1/2,2,1/3,-1/2\n1,7/12,1/2,1/12,1/3\n2,9/4,7/2,7/12,1/2\n");

  const Result negative = run("table --kind fib --a 2 --b 1 --n -3 --n-max -1 --format json");
  CHECK(json::parse(negative.out) ==
        json::parse(R"([{"index":-3,"value":"3"},{"index":-2,"value":"-2"},{"index":-1,"value":"1"}])"));
}

TEST_CASE("series") {
  const Result gen = run("series --a 1 --b 1 --order 5 --format json");
  CHECK(gen.status == 0);
  const json rows = json::parse(gen.out);
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) CHECK(r.at("match") == true);
  CHECK(rows[4].at("coefficient") == json::parse(R"([["11","7"],["7","4"]])"));

  const Result small = run("series --a 3 --b -1 --order 3 --format csv");
  CHECK(small.status == 0);
  CHECK(small.out.rfind("index,", 0) == 0);
  std::size_t lines = 0, matches = 0;
  for (std::size_t pos = 0; (pos = small.out.find('\n', pos)) != std::string::npos; ++pos) ++lines;
  for (std::size_t pos = 0; (pos = small.out.find(",true\n", pos)) != std::string::npos; ++pos) ++matches;
  CHECK(lines == 4);
  CHECK(matches == 3);

  CHECK(run("series --a 2 --b 3 --order 20 --inverse").status == 0);

  // the misstated numerators reproduce L0, L1 and then diverge
  const Result original = run("series --a 1 --b 1 --order 4 --inverse --form original --format json");
  CHECK(original.status == 1);
  const json o = json::parse(original.out);
  CHECK(o[1].at("match") == true);
  CHECK(o[2].at("match") == false);
  CHECK(run("series --form original").status == 2);
}

TEST_CASE("verify") {
  const Result degenerate = run("verify --a 2 --b -2 --n-max 12");
  CHECK(degenerate.status == 0);
  const json d = json::parse(degenerate.out);
  CHECK(d.at("failures").empty());
  REQUIRE(d.at("skipped").size() == 2);
  CHECK(d.at("skipped")[0].at("reason") == "ab = -4 degenerate");

  const Result boundary = run("verify --a 1 --b 1 --n-max 0");
  CHECK(boundary.status == 0);
  const long at_zero = json::parse(boundary.out).at("checks_run").get<long>();
  const long at_one = json::parse(run("verify --a 1 --b 1 --n-max 1").out).at("checks_run").get<long>();
  CHECK(at_zero > 0);
  CHECK(at_zero < at_one);

  const Result report = run("verify --a -3/2 --b 5/3 --n-max 4");
  CHECK(report.status == 0);
  const json r = json::parse(report.out);
  for (const char* key : {"suite", "params", "checks_run", "failures", "skipped"}) CHECK(r.contains(key));
  CHECK(to_json(report_from_json(r)) == r);

  CHECK(run("verify --grid default --a 1").status == 2);
  CHECK(run("verify --grid nope").status == 2);
}

TEST_CASE("output is deterministic unless timestamps are requested") {
  const std::string args = "verify --a 5/3 --b -1 --n-max 5";
  CHECK(run(args).out == run(args).out);
  CHECK(run("table --kind fib-matrix --a 2 --b 3 --n 0 --n-max 8").out ==
        run("table --kind fib-matrix --a 2 --b 3 --n 0 --n-max 8").out);
  const json stamped = json::parse(run(args + " --timestamps").out);
  CHECK(stamped.contains("started_at"));
  CHECK(stamped.contains("finished_at"));
  CHECK_FALSE(json::parse(run(args).out).contains("started_at"));
}
