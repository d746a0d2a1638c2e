#ifndef PERMCENSUS_POINT_HPP
#define PERMCENSUS_POINT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace permcensus {

// A point of the ray space X_n = {1..n} x {1,2,3,...}: ray index first,
// position along the ray second.  Ordering is lexicographic (ray, pos).
struct Point {
  int ray = 1;
  std::int64_t pos = 1;

  friend auto operator<=>(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);
std::string to_string(const Point& p);

}  // namespace permcensus

#endif
