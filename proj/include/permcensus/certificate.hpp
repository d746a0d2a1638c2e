#ifndef PERMCENSUS_CERTIFICATE_HPP
#define PERMCENSUS_CERTIFICATE_HPP

#include <string>
#include <string_view>

#include "permcensus/twisted.hpp"

namespace permcensus {

// Plain-text certificate for a witness family:
//
//   witness-certificate v1
//   rho: <sperm literal>
//   strategy: <CaseA|CaseB|CaseC|NoInfiniteOrbit|InnerOnly>
//   separator: <eta_1|eta_s s=<s>|support-nesting|cycle-length>
//   witness: value=<v> perm=<fperm literal>   (one line per witness)
//   end
//
// The certificate carries every claim needed to re-verify the family from
// scratch with check_witness_family; parsing performs no verification.
std::string format_certificate(const WitnessFamily& family);
WitnessFamily parse_certificate(std::string_view text);

}  // namespace permcensus

#endif
