#ifndef PERMCENSUS_FINITE_PERM_HPP
#define PERMCENSUS_FINITE_PERM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "permcensus/point.hpp"

namespace permcensus {

enum class Parity { even, odd };

// Parity of a product of permutations is the sum of parities.
constexpr Parity combine(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}

// A finitely supported permutation of the ray space X_n.  The mapping is
// stored support-minimally: fixed points never appear, the key set equals
// the value set, and equality is independent of how the element was built.
class FinitePermutation {
 public:
  // Identity on X_rays.
  explicit FinitePermutation(int rays);

  // From an explicit mapping; rejects fixed entries, non-bijective data and
  // out-of-range points.
  FinitePermutation(int rays, const std::map<Point, Point>& mapping);

  // From a list of pairwise disjoint cycles, each of length >= 2.
  static FinitePermutation from_cycles(int rays, const std::vector<std::vector<Point>>& cycles);

  static FinitePermutation transposition(int rays, Point a, Point b);
  static FinitePermutation three_cycle(int rays, Point a, Point b, Point c);

  int ray_count() const { return rays_; }
  bool is_identity() const { return mapping_.empty(); }
  const std::map<Point, Point>& mapping() const { return mapping_; }

  Point apply(Point x) const;
  Point apply_inverse(Point x) const;
  FinitePermutation inverse() const;

  Parity parity() const;
  std::set<Point> support() const;
  std::uint64_t order() const;

  // Disjoint cycles in canonical form: every cycle starts at its smallest
  // point and cycles are sorted by those starting points.
  std::vector<std::vector<Point>> cycle_decomposition() const;

  // Writes an even permutation as a product of 3-cycles by pairing the
  // consecutive transpositions of its transposition decomposition.  Each
  // triple (a, b, c) denotes the cycle a -> b -> c -> a, and the product of
  // the triples, applied left to right, recomposes the element.  Throws
  // ParityError on odd input.
  std::vector<std::array<Point, 3>> decompose_into_3cycles() const;

  friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;

 private:
  int rays_;
  std::map<Point, Point> mapping_;
};

// Right-action composition: apply f first, then g.
FinitePermutation compose(const FinitePermutation& f, const FinitePermutation& g);

}  // namespace permcensus

#endif
