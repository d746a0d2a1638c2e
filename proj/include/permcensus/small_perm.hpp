#ifndef PERMCENSUS_SMALL_PERM_HPP
#define PERMCENSUS_SMALL_PERM_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "permcensus/finite_perm.hpp"

namespace permcensus {

// Permutation of {1..m} in one-line notation, for brute-force enumeration.
class SmallPerm {
 public:
  explicit SmallPerm(int degree);                // identity
  explicit SmallPerm(std::vector<int> images);   // images[i] is the image of i+1

  static SmallPerm transposition(int degree, int a, int b);
  static SmallPerm cycle(int degree, const std::vector<int>& points);

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int apply(int i) const;
  bool is_identity() const;

  SmallPerm inverse() const;
  Parity parity() const;
  std::uint64_t order() const;
  std::vector<int> cycle_type() const;  // lengths descending, fixed points included
  std::set<int> support() const;

  // Lehmer index in [0, m!); unrank(m, rank()) is the identity map and the
  // rank order coincides with lexicographic order on one-line notation.
  std::uint64_t rank() const;
  static SmallPerm unrank(int degree, std::uint64_t r);

  // One-line text: plain digits for degree <= 9, else comma separated.
  std::string to_string() const;

  friend bool operator==(const SmallPerm&, const SmallPerm&) = default;
  friend std::strong_ordering operator<=>(const SmallPerm& a, const SmallPerm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// Right action: apply a first, then b.
SmallPerm compose(const SmallPerm& a, const SmallPerm& b);

std::uint64_t factorial(int m);

}  // namespace permcensus

#endif
