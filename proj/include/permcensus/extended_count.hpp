#ifndef PERMCENSUS_EXTENDED_COUNT_HPP
#define PERMCENSUS_EXTENDED_COUNT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace permcensus {

// A count in N u {infinity}.  Infinity is absorbing under addition and
// compares greater than every finite value; it carries no cardinality
// information beyond "infinite".
class ExtendedCount {
 public:
  constexpr ExtendedCount() = default;

  static constexpr ExtendedCount of(std::uint64_t v) {
    ExtendedCount c;
    c.value_ = v;
    return c;
  }

  static constexpr ExtendedCount inf() {
    ExtendedCount c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

  constexpr std::uint64_t value() const {
    if (infinite_) throw std::logic_error("ExtendedCount: value() of infinity");
    return value_;
  }

  friend constexpr ExtendedCount operator+(ExtendedCount a, ExtendedCount b) {
    if (a.infinite_ || b.infinite_) return inf();
    return of(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ExtendedCount a, ExtendedCount b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtendedCount a, ExtendedCount b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

inline std::string to_string(ExtendedCount c) {
  return c.is_infinite() ? "inf" : std::to_string(c.value());
}

inline std::ostream& operator<<(std::ostream& os, ExtendedCount c) {
  return os << to_string(c);
}

}  // namespace permcensus

#endif
