#ifndef PERMCENSUS_ERRORS_HPP
#define PERMCENSUS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permcensus {

// Two elements live on ray spaces with different ray counts.
struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The composite of two structured permutations leaves the representable
// family (e.g. a nonzero translation against a periodic tail).
struct UnsupportedComposition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A witness-family generator was fed a conjugator whose census violates the
// hypothesis of that case; the message names the violated condition.
struct WrongCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No fresh fixed points are available for witness placement.
struct PlacementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// truncate() was asked to box an element with an escaping orbit.
struct NotTruncatable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that requires an even permutation got an odd one.
struct ParityError : std::domain_error {
  using std::domain_error::domain_error;
};

// A checked precondition of an exact operation does not hold.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Brute-force degree cap exceeded.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text input rejected; offset is the byte position inside the input.
// `message` keeps the bare text so nested parsers can rebase the offset.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        message(what),
        offset(offset) {}
  std::string message;
  std::size_t offset;
};

}  // namespace permcensus

#endif
