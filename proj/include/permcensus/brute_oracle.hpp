#ifndef PERMCENSUS_BRUTE_ORACLE_HPP
#define PERMCENSUS_BRUTE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permcensus/small_perm.hpp"

namespace permcensus {

enum class Ambient { sym, alt };

std::string ambient_name(Ambient ambient, int degree);

// Full element lists in rank order.  Degrees above the enumeration cap (8)
// raise ResourceLimit.
std::vector<SmallPerm> symmetric_group(int m);
std::vector<SmallPerm> alternating_group(int m);

// Closure of the generated subgroup, sorted by rank.  All generators must
// share the given degree.
std::vector<SmallPerm> group_closure(int degree, const std::vector<SmallPerm>& gens);

struct TwistedClassPartition {
  SmallPerm rho;
  Ambient ambient;
  // Disjoint classes covering the ambient group; each class sorted by rank,
  // classes ordered by their minimal element.  Class count = R(phi_rho).
  std::vector<std::vector<SmallPerm>> classes;
};

// Classes of a ~ phi(x^-1) a x over all x in the ambient, for phi the
// conjugation automorphism g -> rho^-1 g rho.
TwistedClassPartition twisted_classes(const SmallPerm& rho, Ambient ambient);

// True iff a, b lie in a common twisted class exactly when rho*a and rho*b
// are conjugate by an ambient element, for all a, b.  The right side is
// decided independently: cycle types for the symmetric ambient, cycle types
// plus the class-splitting parity rule for the alternating one.
bool check_reformulation(const SmallPerm& rho, Ambient ambient);

// Independent decision of "u and v are conjugate by an even permutation":
// equal cycle types, and when the type splits (all lengths odd and
// distinct) the canonical conjugator must be even.
bool alternating_conjugate(const SmallPerm& u, const SmallPerm& v);

// True iff the conjugacy classes of S_m are exactly the cycle-type fibers.
bool conjugacy_equals_cycle_type(int m);

// Intersection of all <g_gens>-conjugates of <h_gens>, as a sorted element
// list; throws when <h_gens> is not contained in <g_gens>.
std::vector<SmallPerm> normal_core(int degree, const std::vector<SmallPerm>& h_gens,
                                   const std::vector<SmallPerm>& g_gens);

// Exhaustive search for g with g^-1 a g = b over the full symmetric group.
std::optional<SmallPerm> nesting_search(const SmallPerm& a, const SmallPerm& b);

// Number of integer partitions of m, by the independent coin-change count.
std::uint64_t partition_count(int m);

// Table `rho | ambient | R(phi_rho) | class sizes | reformulation`, one row
// per rho (the given one, or one representative per cycle type).
std::string oracle_report(int m, const std::optional<SmallPerm>& rho, Ambient ambient,
                          bool tsv);

}  // namespace permcensus

#endif
