#ifndef PERMCENSUS_RF_ACTION_HPP
#define PERMCENSUS_RF_ACTION_HPP

#include <string_view>
#include <vector>

#include "permcensus/small_perm.hpp"
#include "permcensus/structured_perm.hpp"

namespace permcensus {

// A finite, strictly increasing list of primes.
struct PrimeSet {
  explicit PrimeSet(std::vector<int> primes);  // rejects non-primes and disorder
  std::vector<int> primes;
};

// The period-n rotation block on the given ray (identity on rays below it):
// pos -> pos - n + 1 when pos is a multiple of n, else pos -> pos + 1.
// Order n, with infinitely many n-cycles.  Requires n >= 2.
StructuredPermutation rho_block(int n, int ray);

// One rotation-block generator per prime on pairwise distinct rays of a
// shared ambient (the prime p acts on ray p), so the generators commute and
// any product of distinct-prime generators has order equal to the product.
// The empty set yields no generators.
std::vector<StructuredPermutation> torsion_sum(const PrimeSet& s);

// A finite quotient, presented by the images of the abstract generators
// inside the symmetric group on {1..degree}.
struct Quotient {
  int degree = 1;
  std::vector<SmallPerm> generator_images;
};

// All quotients must agree on the number of abstract generators.
struct QuotientFamily {
  explicit QuotientFamily(std::vector<Quotient> quotients);
  std::vector<Quotient> quotients;
};

// One quotient per line: `q=<degree> gen1=<one-line perm> gen2=...`; blank
// lines are skipped.  Throws ParseError with document offsets.
QuotientFamily parse_quotient_family(std::string_view text);

// The abstract generators acting block-diagonally on the disjoint union of
// the quotient ground sets: generator j moves block i by its image in
// quotient i.  Block i occupies degrees [1 + sum of earlier degrees, ...].
struct UnionAction {
  std::vector<int> block_degrees;
  std::vector<SmallPerm> generators;
};

UnionAction union_quotient_action(const QuotientFamily& family);

// A union of finite blocks never has an infinite orbit.
bool all_orbits_finite(const UnionAction& action);

// Census form for structured elements: true iff no orbit escapes.
bool all_orbits_finite(const StructuredPermutation& g);

}  // namespace permcensus

#endif
