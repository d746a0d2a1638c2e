#include "doctest.h"

#include <string>
#include <vector>

#include "permcensus/certificate.hpp"
#include "permcensus/errors.hpp"

using namespace permcensus;

namespace {

std::vector<int> identity_map(int rays) {
  std::vector<int> rm(rays);
  for (int i = 0; i < rays; ++i) rm[i] = i + 1;
  return rm;
}

StructuredPermutation line_translation() {
  return StructuredPermutation(
      2, identity_map(2), {TailDescriptor::translation(1), TailDescriptor::translation(-1)},
      {0, 0}, FinitePermutation(2));
}

StructuredPermutation block_on_ray(int rays, int ray, std::vector<int> block) {
  std::vector<TailDescriptor> tails(rays, TailDescriptor::translation(0));
  std::vector<std::int64_t> thresholds(rays, 0);
  tails[ray - 1] = TailDescriptor::periodic(std::move(block));
  return StructuredPermutation(rays, identity_map(rays), tails, thresholds,
                               FinitePermutation(rays));
}

bool families_equal(const WitnessFamily& a, const WitnessFamily& b) {
  return a.rho == b.rho && a.strategy == b.strategy && a.separator == b.separator && a.s == b.s &&
         a.witnesses == b.witnesses && a.values == b.values;
}

std::size_t offset_of(const std::string& doc) {
  try {
    parse_certificate(doc);
  } catch (const ParseError& e) {
    return e.offset;
  }
  FAIL("expected a ParseError");
  return 0;
}

}  // namespace

TEST_CASE("certificates have a fixed layout") {
  WitnessFamily fam = inner_witness_family(1);
  CHECK(format_certificate(fam) ==
        "witness-certificate v1\n"
        "rho: sperm n=1 pi=1 tails=[T(0)] M=[0] corr=fperm n=1 cycles=\n"
        "strategy: InnerOnly\n"
        "separator: cycle-length\n"
        "witness: value=3 perm=fperm n=1 cycles=((1,1) (1,2) (1,3))\n"
        "end\n");
}

TEST_CASE("certificates round-trip for every strategy") {
  std::vector<WitnessFamily> families = {
      inner_witness_family(2),
      case_a_family(line_translation(), 3),
      case_b_family(block_on_ray(1, 1, {1, 2, 0}), 3),
      case_c_family(StructuredPermutation::embed(
                        FinitePermutation::transposition(1, {1, 1}, {1, 2})),
                    2),
      no_infinite_orbit_family(block_on_ray(2, 1, {1, 0}), 3),
  };
  for (const auto& fam : families) {
    WitnessFamily parsed = parse_certificate(format_certificate(fam));
    CHECK(families_equal(parsed, fam));
    CHECK(check_witness_family(parsed));
  }
}

TEST_CASE("certificate parse errors carry document offsets") {
  CHECK(offset_of("witness certificate v1\n") == 0);
  CHECK(offset_of("") == 0);

  // offset points into the embedded rho literal (line start + "rho: ")
  CHECK(offset_of("witness-certificate v1\n"
                  "rho: sperm n=0 pi=1 tails=[T(0)] M=[0] corr=fperm n=1 cycles=\n") ==
        23 + 5 + 8);

  std::string good = format_certificate(inner_witness_family(1));

  std::string bad = good;
  bad.replace(bad.find("InnerOnly"), 9, "CaseD0000");  // same length
  CHECK(offset_of(bad) == good.find("InnerOnly"));

  bad = good;
  bad.replace(bad.find("cycle-length"), 12, "eta_q1234567");  // same length
  CHECK(offset_of(bad) == good.find("cycle-length"));

  // a missing end line runs off the document
  bad = good.substr(0, good.find("end\n"));
  CHECK(offset_of(bad) == bad.size());

  // trailing garbage after end
  bad = good + "extra\n";
  CHECK(offset_of(bad) == good.size());

  // malformed witness line
  bad = good;
  bad.replace(bad.find("witness: value=3"), 16, "witness: count=3");
  CHECK(offset_of(bad) == good.find("witness: value=3"));
}

TEST_CASE("tampered certificates parse but fail verification") {
  WitnessFamily fam = case_b_family(block_on_ray(1, 1, {1, 2, 0}), 3);
  std::string doc = format_certificate(fam);
  REQUIRE(check_witness_family(parse_certificate(doc)));

  // bump one separator value
  std::string tampered = doc;
  std::size_t pos = tampered.find("value=6");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 7, "value=7");
  CHECK_FALSE(check_witness_family(parse_certificate(tampered)));

  // claim a mismatched strategy for the separator
  tampered = doc;
  pos = tampered.find("strategy: CaseB");
  tampered.replace(pos, 15, "strategy: CaseC");
  CHECK_FALSE(check_witness_family(parse_certificate(tampered)));

  // swap in an odd witness (the first case B witness is one inverted 3-cycle)
  tampered = doc;
  const std::string inverted = "perm=fperm n=1 cycles=((1,1) (1,3) (1,2))";
  pos = tampered.find(inverted);
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, inverted.size(), "perm=fperm n=1 cycles=((1,1) (1,2))");
  CHECK_FALSE(check_witness_family(parse_certificate(tampered)));
}
