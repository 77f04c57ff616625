#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "chowbound/bounds.hpp"
#include "chowbound/bounds_io.hpp"
#include "chowbound/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chowbound");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = chowbound::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bernoulli subcommand prints the exact rational") {
  RunResult r = run_cli({"bernoulli", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "-691/2730\n");
  CHECK(r.err.empty());
  CHECK(run_cli({"bernoulli", "0"}).out == "1\n");
  CHECK(run_cli({"bernoulli", "7"}).out == "0\n");
}

TEST_CASE("todd subcommand, full polynomial") {
  RunResult r = run_cli({"todd", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 1/2*c1 + 1/12*c1^2 + 1/12*c2\n");
}

TEST_CASE("todd subcommand, single coefficient with verdict") {
  RunResult r = run_cli({"todd", "--degree", "4", "--coeff", "c1^4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "coefficient of c1^4 in the weight-4 Todd polynomial (rank 4): -1/720\n"
        "verdict: nonzero\n");

  // odd coefficients of the one-variable series vanish
  RunResult z = run_cli({"todd", "--degree", "3", "--rank", "1", "--coeff", "c1^3"});
  CHECK(z.code == 0);
  CHECK(z.out ==
        "coefficient of c1^3 in the weight-3 Todd polynomial (rank 1): 0\n"
        "verdict: zero\n");

  CHECK(run_cli({"todd", "--degree", "4", "--coeff", "c1^2"}).code == 2);
  CHECK(run_cli({"todd", "--degree", "4", "--coeff", "2*c1^4"}).code == 2);
}

TEST_CASE("todd degree cap guards accidental huge runs") {
  RunResult r = run_cli({"todd", "--degree", "31"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--degree-cap") != std::string::npos);
  CHECK(run_cli({"todd", "--degree", "8", "--degree-cap", "8"}).code == 0);
}

TEST_CASE("derham subcommand in both bases") {
  RunResult newton = run_cli({"derham", "--g", "4", "--degree", "4", "--basis", "newton"});
  CHECK(newton.code == 0);
  CHECK(newton.out == "c2(H) = -N2\nc4(H) = 1/2*N2^2 - 1/2*N4\n");

  RunResult lambda = run_cli({"derham", "--g", "1", "--degree", "2"});
  CHECK(lambda.code == 0);
  CHECK(lambda.out == "1 + -1*c1^2\n");

  // the Newton list stops at min(degree, 2g)
  RunResult deep = run_cli({"derham", "--g", "2", "--degree", "12", "--basis", "newton"});
  CHECK(deep.code == 0);
  CHECK(deep.out.find("c4(H)") != std::string::npos);
  CHECK(deep.out.find("c6(H)") == std::string::npos);

  CHECK(run_cli({"derham", "--g", "2", "--degree", "4", "--basis", "weird"}).code == 2);
}

TEST_CASE("nk subcommand: single index and table formats") {
  RunResult one = run_cli({"nk", "13"});
  CHECK(one.code == 0);
  CHECK(one.out == "n_13 = 24 = 2^3 * 3\n");

  RunResult csv = run_cli({"nk", "--table", "14", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("k,n_k,factorization,B_2k\n") == 0);
  CHECK(csv.out.find("\n1,24,2^3*3,1/6\n") != std::string::npos);
  CHECK(csv.out.find("\n13,24,2^3*3,8553103/6\n") != std::string::npos);
  CHECK(csv.out.find("\n14,6960,2^4*3*5*29,-23749461029/870\n") != std::string::npos);

  RunResult text = run_cli({"nk", "--table", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("k\tn_k\tfactorization\tB_2k\n") == 0);
  CHECK(text.out.find("2\t240\t2^4 * 3 * 5\t-1/30\n") != std::string::npos);

  RunResult js = run_cli({"nk", "--table", "2", "--format", "json"});
  CHECK(js.code == 0);
  CHECK(js.out.find("\"n_k\": \"240\"") != std::string::npos);

  CHECK(run_cli({"nk"}).code == 2);
  CHECK(run_cli({"nk", "3", "--table", "5"}).code == 2);
  CHECK(run_cli({"nk", "--table", "5", "--format", "yaml"}).code == 2);
}

TEST_CASE("factor subcommand certifies the printed factorization") {
  RunResult r = run_cli({"factor", "236364091"});
  CHECK(r.code == 0);
  CHECK(r.out == "103 * 2294797\n");
  CHECK(run_cli({"factor", "1"}).out == "1\n");
  CHECK(run_cli({"factor", "23749461029"}).out == "7 * 9349 * 362903\n");
  CHECK(run_cli({"factor", "0"}).code == 2);
}

TEST_CASE("ledger subcommand, small context in text form") {
  RunResult r = run_cli({"ledger", "--g", "2", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("threshold 2g+d+1 = 8") != std::string::npos);
  CHECK(r.out.find("annihilator 1") != std::string::npos);
  CHECK(r.out.find("EvdG order in cohomology: 24 or 12") != std::string::npos);
  CHECK(r.out.find("EvdG order in cohomology: 240 or 120") != std::string::npos);
}

TEST_CASE("ledger subcommand, worked context as canonical JSON") {
  RunResult a = run_cli({"ledger", "--g", "13", "--level", "4", "--format", "json"});
  CHECK(a.code == 0);
  RunResult b = run_cli({"ledger", "--g", "13", "--level", "4", "--format", "json"});
  CHECK(a.out == b.out);

  chowbound::Ledger led = chowbound::ledger_from_json(a.out);
  chowbound::Ledger direct = chowbound::build_ledger(
      chowbound::Context::make(13, std::nullopt, 4, std::nullopt));
  CHECK(led == direct);

  CHECK(run_cli({"ledger", "--g", "13", "--level", "4", "--d", "91"}).code == 2);
  CHECK(run_cli({"ledger", "--g", "13", "--level", "4", "--char", "2"}).code == 2);
}

TEST_CASE("ledger --paper-comparison appends the printed pairings") {
  RunResult r = run_cli({"ledger", "--g", "13", "--level", "4", "--paper-comparison"});
  CHECK(r.code == 0);
  CHECK(r.out.find("published worked example, as printed") != std::string::npos);
  CHECK(r.out.find("c_12: 691") != std::string::npos);
  CHECK(r.out.find("c_26: 23749461029") != std::string::npos);
  CHECK(r.out.find("Z[1/105!]") != std::string::npos);
  CHECK(r.out.find("annihilator 454630321 = 691 * 657931") != std::string::npos);
}

TEST_CASE("ledger in characteristic p") {
  RunResult r = run_cli({"ledger", "--g", "2", "--d", "3", "--char", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("characteristic 5") != std::string::npos);
  CHECK(r.out.find("fzip: p^2 - 1 = 24 = 2^3 * 3") != std::string::npos);
  CHECK(run_cli({"ledger", "--g", "2", "--d", "3", "--char", "6"}).code == 2);
}

TEST_CASE("verify subcommand reports per-check lines") {
  RunResult r = run_cli({"verify", "--suite", "hirzebruch", "--max-degree", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(run_cli({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("usage errors exit with code 2 and a diagnostic") {
  RunResult none = run_cli({});
  CHECK(none.code == 2);
  CHECK(none.err.find("error:") == 0);
  CHECK(run_cli({"bernoulli"}).code == 2);
  CHECK(run_cli({"bernoulli", "12", "--bogus"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("bernoulli") != std::string::npos);
  CHECK(help.out.find("ledger") != std::string::npos);
}
