#ifndef PERMCENSUS_STRUCTURED_PERM_HPP
#define PERMCENSUS_STRUCTURED_PERM_HPP

#include <cstdint>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "permcensus/cycle_census.hpp"
#include "permcensus/finite_perm.hpp"
#include "permcensus/point.hpp"

namespace permcensus {

// Eventual behaviour of one ray.
//
// Translation(t): positions far out on the ray map to pos + t on the image
// ray.  Points whose image would fall below position 1 are routed, in
// lexicographic order, onto the positions left uncovered by the translated
// tails; this stitches rays with negative drift to rays with positive drift
// (the two-ray line translation is Translation(+1) against Translation(-1)
// with an empty correction).  Translation rays carry threshold 0.
//
// Periodic(block) with threshold M: positions M+1, M+2, ... are cut into
// blocks of length p = block.size() and each block is permuted by `block`
// (0-based residues); positions <= M are untouched by the tail.  Periodic
// tails require the ray map to be the identity.
struct TailDescriptor {
  enum class Kind { translation, periodic };

  static TailDescriptor translation(std::int64_t shift) {
    return TailDescriptor{Kind::translation, shift, {}};
  }

  static TailDescriptor periodic(std::vector<int> block) {
    return TailDescriptor{Kind::periodic, 0, std::move(block)};
  }

  bool is_translation() const { return kind == Kind::translation; }
  bool is_periodic() const { return kind == Kind::periodic; }
  std::int64_t period() const { return static_cast<std::int64_t>(block.size()); }

  Kind kind = Kind::translation;
  std::int64_t shift = 0;       // translation only
  std::vector<int> block;       // periodic only

  friend bool operator==(const TailDescriptor&, const TailDescriptor&) = default;
};

struct FiniteOrbit {
  std::vector<Point> points;  // in orbit order, starting at the queried point
};

struct EscapingOrbit {
  Point witness;   // the queried point
  int ray;         // ray along which the forward trajectory escapes
  int direction;   // +1: positions increase without bound on that ray
};

using Orbit = std::variant<FiniteOrbit, EscapingOrbit>;

// Exact description of the support of a structured permutation: finitely
// many explicitly listed moved points at or below a per-ray horizon, plus a
// per-ray pattern that is exact beyond the horizon.
struct SupportDescriptor {
  enum class TailSupport { fixed, moved, residues };

  struct RayInfo {
    TailSupport kind = TailSupport::fixed;
    std::int64_t horizon = 0;        // pattern applies for pos > horizon
    std::int64_t period = 0;         // residues only
    std::int64_t phase = 0;          // residues only: residue of pos is (pos-phase-1) mod period
    std::set<int> moved_residues;    // residues only
  };

  std::set<Point> core;      // moved points with pos <= horizon of their ray
  std::vector<RayInfo> rays; // indexed by ray-1

  bool contains(Point x) const;
  bool is_subset_of(const SupportDescriptor& other) const;
  bool is_strict_subset_of(const SupportDescriptor& other) const;
  // True when infinitely many points lie outside the support.
  bool infinite_complement() const;
  std::set<int> eventually_moved_rays() const;
};

// A finitely-describable permutation of X_n in normal form: a ray map pi, a
// tail descriptor and threshold per ray, and a finitely supported correction
// applied after the tail model.  The constructor normalises: periodic blocks
// are reduced to their least period, thresholds are minimal (translation
// rays carry 0, periodic thresholds are reduced modulo the period), identity
// blocks collapse to Translation(0), and the correction stores exactly the
// deviation from the tail model.  Pointwise-equal elements therefore compare
// equal.
class StructuredPermutation {
 public:
  // ray_map lists the image ray of each ray, 1-based.
  StructuredPermutation(int rays, std::vector<int> ray_map, std::vector<TailDescriptor> tails,
                        std::vector<std::int64_t> thresholds, FinitePermutation correction);

  static StructuredPermutation identity(int rays);
  static StructuredPermutation embed(const FinitePermutation& f);

  int ray_count() const { return rays_; }
  const std::vector<int>& ray_map() const { return ray_map_; }
  const std::vector<TailDescriptor>& tails() const { return tails_; }
  const std::vector<std::int64_t>& thresholds() const { return thresholds_; }
  const FinitePermutation& correction() const { return correction_; }

  bool is_identity() const;

  Point apply(Point x) const;
  Point apply_inverse(Point x) const;
  StructuredPermutation inverse() const;

  Orbit orbit(Point x) const;
  CycleCensus cycle_census() const;
  ExtendedCount order() const;
  SupportDescriptor support_descriptor() const;

  friend bool operator==(const StructuredPermutation& a, const StructuredPermutation& b) {
    return a.rays_ == b.rays_ && a.ray_map_ == b.ray_map_ && a.tails_ == b.tails_ &&
           a.thresholds_ == b.thresholds_ && a.correction_ == b.correction_;
  }

  // Positions at or below this bound (per ray) capture all irregular
  // behaviour; used by the exact census, truncation and support routines.
  std::vector<std::int64_t> trace_bounds() const;

 private:
  struct Recognizer;  // normal-form builder shared by ctor/compose/inverse
  StructuredPermutation() : correction_(1) {}

  int rays_ = 1;
  std::vector<int> ray_map_;                  // 1-based images
  std::vector<int> inv_ray_map_;
  std::vector<TailDescriptor> tails_;
  std::vector<std::int64_t> thresholds_;
  FinitePermutation correction_;
  std::map<Point, Point> route_fwd_;          // translation underflow -> gaps
  std::map<Point, Point> route_bwd_;

  void build_routing();
  Point model_apply(Point x) const;
  Point model_apply_inverse(Point x) const;

  friend struct Recognizer;
  friend StructuredPermutation compose(const StructuredPermutation&, const StructuredPermutation&);
  friend StructuredPermutation conjugate(const StructuredPermutation&,
                                         const StructuredPermutation&);
};

// Right action: apply g first, then h.  Throws UnsupportedComposition when
// the composite tail behaviour leaves the representable family.
StructuredPermutation compose(const StructuredPermutation& g, const StructuredPermutation& h);

// c^-1 * g * c.  Closed for every pairing the composite vocabulary covers:
// translation conjugators shift periodic phases, finite conjugators never
// touch the tails.
StructuredPermutation conjugate(const StructuredPermutation& g, const StructuredPermutation& c);

// mu^-1 g mu g^-1 for mu the 3-cycle (x_{-1} x_0 x_1) along the g-orbit of
// x0; requires x0 to lie on an infinite orbit.  The result is the 3-cycle
// (x_{-2} x_{-1} x_1).
FinitePermutation commutator_with_3cycle(const StructuredPermutation& g, Point x0);

struct Truncation {
  FinitePermutation perm;               // restriction of g to the box
  std::vector<std::int64_t> cutoffs;    // per-ray box heights
};

// Restricts a finite-order element to the smallest invariant box whose
// per-ray cutoffs are at least min_cutoff.  Periodic rays round up to block
// boundaries; paired translation rays offset their cutoffs by the drift.
// Throws NotTruncatable on elements of infinite order.
Truncation truncate(const StructuredPermutation& g, std::int64_t min_cutoff);

}  // namespace permcensus

#endif
