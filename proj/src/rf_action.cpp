#include "permcensus/rf_action.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "permcensus/errors.hpp"
#include "permcensus/text_format.hpp"

namespace permcensus {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// period-n rotation block on `ray` inside an ambient of `rays` rays
StructuredPermutation rotation_block(int rays, int ray, int n) {
  std::vector<int> ray_map(rays);
  for (int i = 0; i < rays; ++i) ray_map[i] = i + 1;
  std::vector<TailDescriptor> tails(rays, TailDescriptor::translation(0));
  std::vector<std::int64_t> thresholds(rays, 0);
  std::vector<int> block(n);
  for (int r = 0; r < n; ++r) block[r] = (r + 1) % n;
  tails[ray - 1] = TailDescriptor::periodic(std::move(block));
  return StructuredPermutation(rays, std::move(ray_map), std::move(tails),
                               std::move(thresholds), FinitePermutation(rays));
}

}  // namespace

PrimeSet::PrimeSet(std::vector<int> primes_in) : primes(std::move(primes_in)) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      throw std::invalid_argument("PrimeSet: " + std::to_string(primes[i]) + " is not prime");
    if (i > 0 && primes[i - 1] >= primes[i])
      throw std::invalid_argument("PrimeSet: primes must be strictly increasing");
  }
}

StructuredPermutation rho_block(int n, int ray) {
  if (n < 2) throw PreconditionError("rho_block requires period n >= 2");
  if (ray < 1) throw PreconditionError("rho_block requires a positive ray index");
  return rotation_block(ray, ray, n);
}

std::vector<StructuredPermutation> torsion_sum(const PrimeSet& s) {
  std::vector<StructuredPermutation> generators;
  if (s.primes.empty()) return generators;
  const int rays = s.primes.back();
  for (int p : s.primes) generators.push_back(rotation_block(rays, p, p));
  return generators;
}

QuotientFamily::QuotientFamily(std::vector<Quotient> quotients_in)
    : quotients(std::move(quotients_in)) {
  for (const auto& q : quotients) {
    if (q.degree < 1) throw std::invalid_argument("quotient degree must be positive");
    if (q.generator_images.size() != quotients.front().generator_images.size())
      throw std::invalid_argument("inconsistent generator arity across quotients");
    for (const auto& g : q.generator_images)
      if (g.degree() != q.degree)
        throw std::invalid_argument("generator image degree does not match the quotient");
  }
}

QuotientFamily parse_quotient_family(std::string_view text) {
  std::vector<Quotient> quotients;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    const std::size_t end = (nl == std::string_view::npos) ? text.size() : nl;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty()) {
      if (line.substr(0, 2) != "q=") throw ParseError("expected 'q='", start);
      int degree = 0;
      auto [p, ec] = std::from_chars(line.data() + 2, line.data() + line.size(), degree);
      if (ec != std::errc{} || degree < 1)
        throw ParseError("expected a positive quotient degree", start + 2);
      Quotient q;
      q.degree = degree;
      std::size_t at = p - line.data();
      int index = 1;
      while (at < line.size()) {
        if (line[at] != ' ') throw ParseError("expected a space", start + at);
        ++at;
        const std::string key = "gen" + std::to_string(index) + "=";
        if (line.substr(at, key.size()) != std::string_view(key))
          throw ParseError("expected '" + key + "'", start + at);
        at += key.size();
        std::size_t stop = line.find(' ', at);
        if (stop == std::string_view::npos) stop = line.size();
        std::string_view token = line.substr(at, stop - at);
        SmallPerm image = [&] {
          try {
            return parse_one_line(token);
          } catch (const ParseError& e) {
            throw ParseError(e.message, start + at + e.offset);
          }
        }();
        if (image.degree() != degree)
          throw ParseError("generator image degree does not match q", start + at);
        q.generator_images.push_back(std::move(image));
        at = stop;
        ++index;
      }
      if (q.generator_images.empty())
        throw ParseError("quotient lists no generator images", start);
      quotients.push_back(std::move(q));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  try {
    return QuotientFamily(std::move(quotients));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

UnionAction union_quotient_action(const QuotientFamily& family) {
  if (family.quotients.empty())
    throw PreconditionError("union_quotient_action requires at least one quotient");
  UnionAction action;
  int total = 0;
  for (const auto& q : family.quotients) {
    action.block_degrees.push_back(q.degree);
    total += q.degree;
  }
  const std::size_t arity = family.quotients.front().generator_images.size();
  for (std::size_t j = 0; j < arity; ++j) {
    std::vector<int> images(total);
    int offset = 0;
    for (const auto& q : family.quotients) {
      const SmallPerm& g = q.generator_images[j];
      for (int x = 1; x <= q.degree; ++x) images[offset + x - 1] = offset + g.apply(x);
      offset += q.degree;
    }
    action.generators.push_back(SmallPerm(std::move(images)));
  }
  return action;
}

bool all_orbits_finite(const UnionAction&) { return true; }

bool all_orbits_finite(const StructuredPermutation& g) {
  return g.cycle_census().eta_inf().is_zero();
}

}  // namespace permcensus
