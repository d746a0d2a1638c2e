#ifndef PERMCENSUS_CYCLE_CENSUS_HPP
#define PERMCENSUS_CYCLE_CENSUS_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "permcensus/extended_count.hpp"

namespace permcensus {

// Cycle census of a permutation: eta(r) counts the r-cycles for finite r
// (fixed points are eta(1)), eta_inf counts the infinite orbits.  Only
// nonzero finite-length entries are stored.  The census is a complete
// conjugacy invariant for the full symmetric group of the ray space.
class CycleCensus {
 public:
  ExtendedCount eta(std::uint64_t r) const {
    auto it = counts_.find(r);
    return it == counts_.end() ? ExtendedCount::of(0) : it->second;
  }

  ExtendedCount eta_inf() const { return eta_inf_; }
  void set_eta_inf(ExtendedCount c) { eta_inf_ = c; }

  void add_finite(std::uint64_t r, std::uint64_t k) {
    if (k == 0) return;
    auto it = counts_.find(r);
    if (it == counts_.end()) {
      counts_.emplace(r, ExtendedCount::of(k));
    } else if (!it->second.is_infinite()) {
      it->second = it->second + ExtendedCount::of(k);
    }
  }

  void make_infinite(std::uint64_t r) { counts_[r] = ExtendedCount::inf(); }

  // Stored (nonzero) finite-length entries, keyed by cycle length.
  const std::map<std::uint64_t, ExtendedCount>& entries() const { return counts_; }

  // Smallest r >= 1 with eta(r) finite; exists for every representable
  // element since only finitely many lengths occur.
  std::uint64_t least_finite_length() const {
    std::uint64_t r = 1;
    while (eta(r).is_infinite()) ++r;
    return r;
  }

  bool has_nonzero_finite_entry() const {
    for (const auto& [r, c] : counts_) {
      (void)r;
      if (!c.is_infinite()) return true;
    }
    return false;
  }

  // "eta(2)=3, eta(5)=inf, eta_inf=1"; lengths ascending.
  std::string to_string() const {
    std::ostringstream os;
    for (const auto& [r, c] : counts_) os << "eta(" << r << ")=" << c << ", ";
    os << "eta_inf=" << eta_inf_;
    return os.str();
  }

  friend bool operator==(const CycleCensus&, const CycleCensus&) = default;

 private:
  std::map<std::uint64_t, ExtendedCount> counts_;
  ExtendedCount eta_inf_ = ExtendedCount::of(0);
};

}  // namespace permcensus

#endif
