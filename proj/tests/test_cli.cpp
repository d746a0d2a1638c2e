#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "permcensus/cli.hpp"

using namespace permcensus;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  file << text;
}

const std::string kLine = "sperm n=2 pi=1,2 tails=[T(+1),T(-1)] M=[0,0] corr=fperm n=2 cycles=";
const std::string kBlock3 = "sperm n=1 pi=1 tails=[P(3:120)] M=[0] corr=fperm n=1 cycles=";
const std::string kSwap = "fperm n=1 cycles=((1,1) (1,2))";
const std::string kBlockPlusRay =
    "sperm n=2 pi=1,2 tails=[P(2:10),T(0)] M=[0,0] corr=fperm n=2 cycles=";

}  // namespace

TEST_CASE("analyze prints census, order and support") {
  CliResult r = run({"analyze", kBlock3});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "eta(3)=inf, eta_inf=0, order=3");
  CHECK(r.out.find("support: infinite") != std::string::npos);

  r = run({"analyze", "fperm n=2 cycles=((1,1) (2,3))"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "eta(1)=inf, eta(2)=1, eta_inf=0, order=2");
  CHECK(r.out.find("support: finite (2 points)") != std::string::npos);
  CHECK(r.out.find("core: (1,1) (2,3)") != std::string::npos);

  r = run({"analyze", "fperm n=1 cycles="});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "eta(1)=inf, eta_inf=0, order=1");
  CHECK(r.out.find("support: empty") != std::string::npos);
  CHECK(r.out.find("core: none") != std::string::npos);

  r = run({"analyze", kLine});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "eta_inf=1, order=inf");
}

TEST_CASE("compose prints the normal form of the product") {
  CliResult r = run({"compose", "fperm n=1 cycles=((1,1) (1,2))", "fperm n=1 cycles=((1,2) (1,3))"});
  CHECK(r.code == 0);
  CHECK(r.out == "sperm n=1 pi=1 tails=[T(0)] M=[0] corr=fperm n=1 cycles=((1,1) (1,3) (1,2))\n");

  // a translation against its inverse collapses to the identity
  const std::string inv = "sperm n=2 pi=1,2 tails=[T(-1),T(+1)] M=[0,0] corr=fperm n=2 cycles=";
  r = run({"compose", kLine, inv});
  CHECK(r.code == 0);
  CHECK(r.out == "sperm n=2 pi=1,2 tails=[T(0),T(0)] M=[0,0] corr=fperm n=2 cycles=\n");

  // net drift against a periodic tail leaves the representable family
  r = run({"compose", kLine, kBlockPlusRay});
  CHECK(r.code == 3);
  CHECK(r.err.find("unrepresentable:") != std::string::npos);
}

TEST_CASE("parse failures exit 2 and carry a byte offset") {
  CliResult r = run({"analyze", "fperm n=0 cycles="});
  CHECK(r.code == 2);
  CHECK(r.err.find("element:") != std::string::npos);
  CHECK(r.err.find("(at offset 8)") != std::string::npos);

  r = run({"compose", kSwap, "fperm n=1 loops="});
  CHECK(r.code == 2);
  CHECK(r.err.find("second:") != std::string::npos);
  CHECK(r.err.find("(at offset 10)") != std::string::npos);

  r = run({"oracle", "--m", "4", "--rho", "21x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--rho:") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", kSwap, "--bogus"}).code == 2);
  CHECK(run({"witness", kSwap, "--count", "0"}).code == 2);

  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage: permcensus") != std::string::npos);
}

TEST_CASE("witness and verify round-trip across all strategies") {
  struct Row {
    std::string literal;
    std::string strategy;
  };
  const std::vector<Row> corpus = {
      {kLine, "CaseA"},
      {kBlock3, "CaseB"},
      {kSwap, "CaseC"},
      {kBlockPlusRay, "NoInfiniteOrbit"},
      {"fperm n=1 cycles=", "InnerOnly"},
  };
  for (const Row& row : corpus) {
    CAPTURE(row.literal);
    CliResult w = run({"witness", row.literal, "--count", "3"});
    REQUIRE(w.code == 0);
    CHECK(w.out.find("strategy: " + row.strategy) != std::string::npos);

    const std::string path = "cli_cert_" + row.strategy + ".txt";
    write_file(path, w.out);
    CliResult v = run({"verify", path});
    CHECK(v.code == 0);
    const std::string prefix = "verified: 3 witnesses, strategy " + row.strategy + ", separator ";
    CHECK(first_line(v.out).substr(0, prefix.size()) == prefix);
  }

  // default count is five witnesses
  CliResult w = run({"witness", kSwap});
  CHECK(w.code == 0);
  std::size_t lines = 0;
  for (std::size_t at = w.out.find("witness: "); at != std::string::npos;
       at = w.out.find("witness: ", at + 1))
    ++lines;
  CHECK(lines == 5);
}

TEST_CASE("verify refutes tampered certificates") {
  CliResult w = run({"witness", kLine, "--count", "3"});
  REQUIRE(w.code == 0);

  std::string tampered = w.out;
  const std::size_t at = tampered.find("value=2 ");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 8, "value=7 ");
  write_file("cli_cert_tampered.txt", tampered);
  CliResult v = run({"verify", "cli_cert_tampered.txt"});
  CHECK(v.code == 1);
  CHECK(v.out == "refuted\n");

  write_file("cli_cert_garbage.txt", "witness-certificate v2\n");
  v = run({"verify", "cli_cert_garbage.txt"});
  CHECK(v.code == 2);
  CHECK(v.err.find("at offset") != std::string::npos);

  v = run({"verify", "cli_cert_missing.txt"});
  CHECK(v.code == 2);
  CHECK(v.err.find("cannot read file") != std::string::npos);
}

TEST_CASE("oracle emits deterministic tables") {
  CliResult r = run({"oracle", "--m", "4"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "rho | ambient | R(phi_rho) | class sizes | reformulation");
  CHECK(row == "1234 | S_4 | 5 | 1,6,8,3,6 | ok");

  r = run({"oracle", "--m", "4", "--rho", "2134", "--format", "tsv"});
  CHECK(r.code == 0);
  std::istringstream tsv(r.out);
  std::getline(tsv, header);
  std::getline(tsv, row);
  CHECK(row == "2134\tS_4\t5\t6,3,8,6,1\tok");

  r = run({"oracle", "--m", "4", "--alt"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A_4") != std::string::npos);

  CHECK(run({"oracle", "--m", "9"}).code == 3);
  CliResult mismatch = run({"oracle", "--m", "3", "--rho", "2134"});
  CHECK(mismatch.code == 3);
  CHECK(mismatch.err.find("invalid input") != std::string::npos);
}

TEST_CASE("rfbuild prints the union action and verdict") {
  write_file("cli_family.txt", "q=2 gen1=21\nq=4 gen1=2341\n");
  CliResult r = run({"rfbuild", "cli_family.txt"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "degree: 6\n"
        "blocks: 2 4\n"
        "gen1: 214563\n"
        "orbits: all finite\n");

  write_file("cli_family_bad.txt", "q=2 gen1=21\nzz\n");
  r = run({"rfbuild", "cli_family_bad.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("(at offset 12)") != std::string::npos);

  CHECK(run({"rfbuild", "cli_family_missing.txt"}).code == 2);
}
