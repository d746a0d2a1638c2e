#ifndef PERMCENSUS_TEXT_FORMAT_HPP
#define PERMCENSUS_TEXT_FORMAT_HPP

#include <string>
#include <string_view>

#include "permcensus/finite_perm.hpp"
#include "permcensus/small_perm.hpp"
#include "permcensus/structured_perm.hpp"

namespace permcensus {

// Finite permutations: `fperm n=<n> cycles=((1,2) (1,3))((2,1) (2,2))`,
// cycles in canonical order, `cycles=` empty for the identity.
std::string format_fperm(const FinitePermutation& f);
FinitePermutation parse_fperm(std::string_view text);

// Structured permutations:
// `sperm n=<n> pi=<one-line rays> tails=[T(+1),P(3:120),...] M=[...] corr=<fperm literal>`
// where P(p:block) lists the 0-based block in one-line notation (plain
// digits for p <= 10, comma separated above).  Parsing re-normalises, so
// any literal for the same element reads back as the same value.
std::string format_sperm(const StructuredPermutation& g);
StructuredPermutation parse_sperm(std::string_view text);

// Either literal; fperm input is embedded into the structured family.
StructuredPermutation parse_element(std::string_view text);

// One-line notation for {1..m}: plain digits for m <= 9, else commas.
SmallPerm parse_one_line(std::string_view text);

// All parsers throw ParseError carrying the byte offset of the problem.

}  // namespace permcensus

#endif
