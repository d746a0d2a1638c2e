#ifndef PERMCENSUS_TWISTED_HPP
#define PERMCENSUS_TWISTED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permcensus/structured_perm.hpp"

namespace permcensus {

// Proof pattern applicable to a conjugator rho, keyed off its cycle census.
// For phi_rho(g) = rho^-1 g rho, the twisted classes of a and b coincide
// exactly when rho*a and rho*b are conjugate by an ambient element, so
// census-separated products certify distinct twisted classes.
enum class Strategy { case_a, case_b, case_c, no_infinite_orbit, inner_only };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);  // std::invalid_argument on unknown

// Census entry whose values separate a witness family pairwise.
enum class SeparatorKind { eta_1, eta_s, support_nesting, cycle_length };

std::string separator_name(SeparatorKind k);

// x transports a to b under phi_rho: (x^-1)phi_rho * a * x = b, which holds
// iff x^-1 * (rho a) * x = rho b.
struct TwistedPair {
  StructuredPermutation rho, a, b;
};

// Checks the transport equation pointwise via exact normal forms; throws
// UnsupportedComposition when a product leaves the representable family.
bool verify_twisted_witness(const TwistedPair& pair, const StructuredPermutation& x);

// Conjugacy in the full symmetric group of the ray space: census equality.
// A necessary condition for conjugacy in every subgroup, which is the only
// direction the witness machinery relies on.
bool sym_conjugate(const StructuredPermutation& a, const StructuredPermutation& b);

// A family of finitely-supported even witnesses a_k whose products rho*a_k
// are pairwise census-separated, certifying infinitely many phi_rho-twisted
// classes.  `values` lists the separator reading per witness: eta_1 and
// eta_s read the census of rho*a_k at length 1 resp. s, support_nesting
// reads eta_2 of the witness itself (the products' supports strictly nest),
// and cycle_length reads the witness's single cycle length.
struct WitnessFamily {
  StructuredPermutation rho;
  Strategy strategy;
  SeparatorKind separator;
  std::uint64_t s = 1;
  std::vector<FinitePermutation> witnesses;
  std::vector<std::uint64_t> values;
};

// Total and deterministic on representable elements: identity -> inner_only;
// eta_1 finite -> case_a when eta_inf > 0 else case_b; eta_1 infinite ->
// no_infinite_orbit when eta_inf = 0 and every stored census entry is
// infinite (the representable shadow of "eta_r infinite for all r"), else
// case_c.
Strategy select_strategy(const StructuredPermutation& rho);

// rho = identity on one ray; witnesses are cycles of length 3, 5, ...,
// 2*count+1, pairwise census-distinct.
WitnessFamily inner_witness_family(int count);

// Requires eta_1(rho) finite and eta_inf(rho) > 0.  Witnesses a_{2k} pair up
// consecutive points x_0, x_1, ... along an escaping orbit into disjoint
// transpositions (x_{2i} x_{2i+1}); rho*a_{2k} gains exactly 2k fixed
// points, so eta_1 strictly increases in k.
WitnessFamily case_a_family(const StructuredPermutation& rho, int count);

// Requires eta_1(rho) finite and eta_inf(rho) = 0.  Inverts finite cycles
// of rho drawn from an infinite supply of a single length (smallest odd
// length preferred, else cycles taken in pairs to stay even); each inverted
// cycle turns into fixed points of the product.
WitnessFamily case_b_family(const StructuredPermutation& rho, int count);

// Requires s > 1 for s the least length with eta_s(rho) finite.  Witness k
// places 2k fresh disjoint s-cycles on the smallest fixed points of rho, so
// eta_s(rho*a_k) = eta_s(rho) + 2k.
WitnessFamily case_c_family(const StructuredPermutation& rho, int count);

// Requires eta_1(rho) infinite, eta_inf(rho) = 0 and no finite nonzero
// census entry.  Witness b_k extends b_{k-1} by two fresh 2-cycles on fixed
// points of rho; the supports of rho*b_k strictly nest, which separates the
// twisted classes in any group acting with all orbits finite.
WitnessFamily no_infinite_orbit_family(const StructuredPermutation& rho, int count);

// Dispatches on select_strategy(rho).
WitnessFamily make_witness_family(const StructuredPermutation& rho, int count);

// Re-derives every certified claim of a family from scratch: shapes, witness
// parity, separator readings against fresh censuses, pairwise distinctness,
// pairwise non-conjugacy of the products, and strict support nesting where
// that is the certificate.  Returns false on the first failed claim.
bool check_witness_family(const WitnessFamily& family);

// Executable form of the nesting obstruction: given Supp(b) strictly inside
// Supp(a) and g^-1 a g = b (both checked, PreconditionError otherwise),
// returns whether g has an infinite orbit.  The underlying theorem says the
// return value is always true.
bool nesting_forces_infinite_orbit_check(const StructuredPermutation& a,
                                         const StructuredPermutation& b,
                                         const StructuredPermutation& g);

}  // namespace permcensus

#endif
