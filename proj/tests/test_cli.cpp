#include <doctest.h>

#include <json.hpp>

#include "support/run.hpp"

using permbound::testing::run;
using permbound::testing::RunResult;

namespace {

const std::string kCli = PERMBOUND_CLI;
const std::string kData = PERMBOUND_TEST_DATA;

RunResult cli(const std::string& args) { return run("'" + kCli + "' " + args + " 2>/dev/null"); }
std::string data(const std::string& name) { return "'" + kData + "/" + name + "'"; }

}  // namespace

TEST_CASE("validate") {
  const RunResult ok = cli("validate " + data("example1.txt"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "acyclic; n=4; 4 edges\n");

  const RunResult cyc = cli("validate " + data("cycle3.txt"));
  CHECK(cyc.exit_code == 2);
  CHECK(cyc.out == "cyclic; n=3; 3 edges; witness 1→2→3→1\n");

  CHECK(cli("validate " + data("vertex_zero.txt")).exit_code == 1);
  CHECK(cli("validate " + data("missing.txt")).exit_code == 1);
  CHECK(cli("validate").exit_code == 1);
  CHECK(cli("frobnicate").exit_code == 1);
}

TEST_CASE("enumerate") {
  const RunResult r = cli("enumerate " + data("example1.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 4 2 3\n2 4 1 3\n3 4 1 2\ncount=3\n");

  const RunResult j = cli("enumerate --json " + data("example1.json"));
  CHECK(j.exit_code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["count"] == 3);

  const RunResult cyc = cli("enumerate " + data("cycle3.txt"));
  CHECK(cyc.exit_code == 2);
  CHECK(cyc.out == "count=0\n");

  CHECK(cli("enumerate --limit 5 " + data("standard_example.txt")).exit_code == 3);
  CHECK(run("PERMBOUND_LIMIT=5 '" + kCli + "' enumerate " + data("standard_example.txt") + " 2>/dev/null").exit_code == 3);
  CHECK(run("PERMBOUND_LIMIT=oops '" + kCli + "' enumerate " + data("example1.txt") + " 2>/dev/null").exit_code == 1);
}

TEST_CASE("diameter") {
  const RunResult linf = cli("diameter --metric linf --witness " + data("example1.txt"));
  CHECK(linf.exit_code == 0);
  CHECK(linf.out.find("bound: 2\n") != std::string::npos);
  CHECK(linf.out.find("witness: 1 4 2 3\nwitness: 3 4 1 2\n") != std::string::npos);

  const RunResult kt = cli("diameter --metric kendall --json " + data("example1.txt"));
  CHECK(kt.exit_code == 0);
  const auto j = nlohmann::json::parse(kt.out);
  CHECK(j["bound"] == 2);
  CHECK(j["attained"] == true);
  CHECK(j["method"] == "realizer");

  const RunResult se = cli("diameter --metric kendall --limit 6 " + data("standard_example.txt"));
  CHECK(se.exit_code == 0);
  CHECK(se.out.find("bound: 8\n") != std::string::npos);
  CHECK(se.out.find("method: oracle\n") != std::string::npos);
  CHECK(se.out.find("incomparable pairs: 9\n") != std::string::npos);

  const RunResult formula = cli("diameter --metric kendall --limit 5 " + data("standard_example.txt"));
  CHECK(formula.exit_code == 0);
  CHECK(formula.out.find("attained: no\n") != std::string::npos);

  CHECK(cli("diameter --metric hamming " + data("example1.txt")).exit_code == 1);
  CHECK(cli("diameter " + data("cycle3.txt")).exit_code == 2);
}

TEST_CASE("dimension") {
  const RunResult e = cli("dimension " + data("example1.txt"));
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("dim<=2: yes\n") != std::string::npos);
  CHECK(e.out.find("sigma: 3 4 1 2\nrho: 1 4 2 3\n") != std::string::npos);
  CHECK(cli("dimension " + data("standard_example.txt")).out == "dim<=2: no\n");
}

TEST_CASE("descent") {
  const RunResult one = cli("descent --n 3 --descents 1 --metric kendall");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("closed form: 5\ngeneric: 1\nagree: no\n") != std::string::npos);

  const RunResult all = cli("descent --n 5 --all");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("agree 16/16\n") != std::string::npos);

  const RunResult set = cli("descent --set 'n=5; D={1,3}' --json");
  CHECK(set.exit_code == 0);
  CHECK(nlohmann::json::parse(set.out)["agree"] == true);

  CHECK(cli("descent --n 3 --descents 3").exit_code == 1);
  CHECK(cli("descent").exit_code == 1);
}

TEST_CASE("hessenberg") {
  const RunResult s = cli("hessenberg --h 2,3,4,4 --sigma 2413");
  CHECK(s.exit_code == 0);
  CHECK(s.out == "h=2,3,4,4\nsigma: 2 4 1 3\nInv_h: {(2,3)}\n");
  CHECK(cli("hessenberg --h 2,3,4,4 --sigma 213").exit_code == 1);
  CHECK(cli("hessenberg --h 2,1 --sigma 12").exit_code == 1);
  CHECK(cli("hessenberg --h 2,3,4,4").exit_code == 1);
}

TEST_CASE("generate is seeded and always acyclic") {
  const RunResult a = cli("generate --n 12 --seed 42");
  const RunResult b = cli("generate --n 12 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(cli("generate --n 0").exit_code == 1);
  CHECK(cli("generate --n 4 --p 2").exit_code == 1);
}
