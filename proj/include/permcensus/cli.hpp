#ifndef PERMCENSUS_CLI_HPP
#define PERMCENSUS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permcensus {

// Batch front door; args excludes the program name.  One verb per call:
//
//   analyze <elem>             census, order and support of an element
//   compose <first> <second>   normal form of the product
//   witness <rho> [--count k]  emit a witness-family certificate
//   verify <certificate file>  re-verify a certificate from scratch
//   oracle --m M [--rho R] [--alt] [--format plain|tsv]
//   rfbuild <family file>      union action of a finite quotient family
//
// Exit codes: 0 success or verified, 1 property refuted, 2 parse error
// (message carries a byte offset), 3 violated case hypothesis or
// unrepresentable request.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permcensus

#endif
