#include "permcensus/twisted.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <variant>

#include "permcensus/errors.hpp"

namespace permcensus {

namespace {

// Deterministic pos-major enumeration of the ray space: (1,1), (2,1), ...,
// (n,1), (1,2), ...  Placement and orbit scans walk this order so generated
// families are reproducible.
Point scan_point(int rays, std::int64_t index) {
  return {static_cast<int>(index % rays) + 1, index / rays + 1};
}

constexpr std::int64_t kScanPosCap = 200000;

// Smallest fixed points of rho in scan order, skipping `used`.
std::vector<Point> collect_fixed_points(const StructuredPermutation& rho, std::size_t need,
                                        std::set<Point>& used) {
  std::vector<Point> out;
  const std::int64_t cap = static_cast<std::int64_t>(rho.ray_count()) * kScanPosCap;
  for (std::int64_t index = 0; index < cap && out.size() < need; ++index) {
    const Point x = scan_point(rho.ray_count(), index);
    if (used.count(x)) continue;
    if (rho.apply(x) == x) {
      out.push_back(x);
      used.insert(x);
    }
  }
  if (out.size() < need)
    throw PlacementError("no fresh fixed points found within the scan horizon");
  return out;
}

Point find_escaping_start(const StructuredPermutation& rho) {
  const std::int64_t cap = static_cast<std::int64_t>(rho.ray_count()) * kScanPosCap;
  for (std::int64_t index = 0; index < cap; ++index) {
    const Point x = scan_point(rho.ray_count(), index);
    if (std::holds_alternative<EscapingOrbit>(rho.orbit(x))) return x;
  }
  throw std::logic_error("no escaping orbit found despite eta_inf > 0");
}

// First `need` cycles of rho of length `len`, in scan order of their
// smallest point.  Only called when eta_len(rho) is infinite.
std::vector<std::vector<Point>> collect_cycles_of_length(const StructuredPermutation& rho,
                                                         std::uint64_t len, std::size_t need) {
  std::vector<std::vector<Point>> out;
  std::set<Point> visited;
  const std::int64_t cap = static_cast<std::int64_t>(rho.ray_count()) * kScanPosCap;
  for (std::int64_t index = 0; index < cap && out.size() < need; ++index) {
    const Point x = scan_point(rho.ray_count(), index);
    if (visited.count(x)) continue;
    const Orbit o = rho.orbit(x);
    if (!std::holds_alternative<FiniteOrbit>(o)) continue;
    const auto& cycle = std::get<FiniteOrbit>(o).points;
    visited.insert(cycle.begin(), cycle.end());
    if (cycle.size() == len) out.push_back(cycle);
  }
  if (out.size() < need) throw std::logic_error("cycle supply scan exceeded its horizon");
  return out;
}

std::vector<Point> reversed(const std::vector<Point>& cycle) {
  return std::vector<Point>(cycle.rbegin(), cycle.rend());
}

StructuredPermutation product(const StructuredPermutation& rho, const FinitePermutation& w) {
  return compose(rho, StructuredPermutation::embed(w));
}

}  // namespace

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::case_a: return "CaseA";
    case Strategy::case_b: return "CaseB";
    case Strategy::case_c: return "CaseC";
    case Strategy::no_infinite_orbit: return "NoInfiniteOrbit";
    case Strategy::inner_only: return "InnerOnly";
  }
  throw std::logic_error("unreachable");
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "CaseA") return Strategy::case_a;
  if (name == "CaseB") return Strategy::case_b;
  if (name == "CaseC") return Strategy::case_c;
  if (name == "NoInfiniteOrbit") return Strategy::no_infinite_orbit;
  if (name == "InnerOnly") return Strategy::inner_only;
  throw std::invalid_argument("unknown strategy name: " + name);
}

std::string separator_name(SeparatorKind k) {
  switch (k) {
    case SeparatorKind::eta_1: return "eta_1";
    case SeparatorKind::eta_s: return "eta_s";
    case SeparatorKind::support_nesting: return "support-nesting";
    case SeparatorKind::cycle_length: return "cycle-length";
  }
  throw std::logic_error("unreachable");
}

bool verify_twisted_witness(const TwistedPair& pair, const StructuredPermutation& x) {
  const StructuredPermutation lhs =
      compose(compose(x.inverse(), compose(pair.rho, pair.a)), x);
  return lhs == compose(pair.rho, pair.b);
}

bool sym_conjugate(const StructuredPermutation& a, const StructuredPermutation& b) {
  return a.cycle_census() == b.cycle_census();
}

Strategy select_strategy(const StructuredPermutation& rho) {
  if (rho.is_identity()) return Strategy::inner_only;
  const CycleCensus census = rho.cycle_census();
  if (!census.eta(1).is_infinite())
    return census.eta_inf().is_zero() ? Strategy::case_b : Strategy::case_a;
  if (census.eta_inf().is_zero() && !census.has_nonzero_finite_entry())
    return Strategy::no_infinite_orbit;
  return Strategy::case_c;
}

WitnessFamily inner_witness_family(int count) {
  if (count < 1) throw PreconditionError("witness count must be at least 1");
  WitnessFamily family{StructuredPermutation::identity(1), Strategy::inner_only,
                       SeparatorKind::cycle_length, 1, {}, {}};
  for (int i = 1; i <= count; ++i) {
    std::vector<Point> cycle;
    for (std::int64_t p = 1; p <= 2 * i + 1; ++p) cycle.push_back({1, p});
    family.witnesses.push_back(FinitePermutation::from_cycles(1, {cycle}));
    family.values.push_back(static_cast<std::uint64_t>(2 * i + 1));
  }
  return family;
}

WitnessFamily case_a_family(const StructuredPermutation& rho, int count) {
  if (count < 1) throw PreconditionError("witness count must be at least 1");
  const CycleCensus census = rho.cycle_census();
  if (census.eta(1).is_infinite())
    throw WrongCase("Case A requires finitely many fixed points, but eta_1 is infinite");
  if (census.eta_inf().is_zero())
    throw WrongCase("Case A requires an escaping orbit, but eta_inf is 0");

  // x_0, x_1, ... along one escaping orbit; a_{2k} pairs them into 2k
  // disjoint transpositions, each of which turns x_{2i} into a fixed point
  // of the product.
  std::vector<Point> x;
  x.push_back(find_escaping_start(rho));
  for (int i = 1; i < 4 * count; ++i) x.push_back(rho.apply(x.back()));

  WitnessFamily family{rho, Strategy::case_a, SeparatorKind::eta_1, 1, {}, {}};
  const std::uint64_t base = census.eta(1).value();
  for (int k = 1; k <= count; ++k) {
    std::vector<std::vector<Point>> pairs;
    for (int i = 0; i < 2 * k; ++i) pairs.push_back({x[2 * i], x[2 * i + 1]});
    FinitePermutation witness = FinitePermutation::from_cycles(rho.ray_count(), pairs);
    const CycleCensus pc = product(rho, witness).cycle_census();
    if (pc.eta(1) != ExtendedCount::of(base + 2 * k))
      throw std::logic_error("Case A fixed-point count deviates from the predicted value");
    family.witnesses.push_back(std::move(witness));
    family.values.push_back(base + 2 * k);
  }
  return family;
}

WitnessFamily case_b_family(const StructuredPermutation& rho, int count) {
  if (count < 1) throw PreconditionError("witness count must be at least 1");
  const CycleCensus census = rho.cycle_census();
  if (census.eta(1).is_infinite())
    throw WrongCase("Case B requires finitely many fixed points, but eta_1 is infinite");
  if (!census.eta_inf().is_zero())
    throw WrongCase("Case B requires all orbits finite, but eta_inf is positive");

  // An infinite supply of equal-length cycles always exists here; prefer the
  // smallest odd length, else take the smallest even length two at a time so
  // every witness stays even.
  std::uint64_t len = 0;
  for (const auto& [r, c] : census.entries()) {
    if (r < 2 || !c.is_infinite()) continue;
    if (len == 0) len = r;
    if (r % 2 == 1) {
      len = r;
      break;
    }
  }
  if (len == 0)
    throw WrongCase("Case B requires infinitely many cycles of some fixed length >= 2");

  const int step = (len % 2 == 1) ? 1 : 2;
  const auto cycles =
      collect_cycles_of_length(rho, len, static_cast<std::size_t>(step) * count);

  WitnessFamily family{rho, Strategy::case_b, SeparatorKind::eta_1, 1, {}, {}};
  const std::uint64_t base = census.eta(1).value();
  for (int k = 1; k <= count; ++k) {
    // invert the first step*k cycles; the product then fixes their support
    std::vector<std::vector<Point>> inverted;
    for (int i = 0; i < step * k; ++i) inverted.push_back(reversed(cycles[i]));
    FinitePermutation witness = FinitePermutation::from_cycles(rho.ray_count(), inverted);
    const std::uint64_t value = base + static_cast<std::uint64_t>(step) * k * len;
    const CycleCensus pc = product(rho, witness).cycle_census();
    if (pc.eta(1) != ExtendedCount::of(value))
      throw std::logic_error("Case B fixed-point count deviates from the predicted value");
    family.witnesses.push_back(std::move(witness));
    family.values.push_back(value);
  }
  return family;
}

WitnessFamily case_c_family(const StructuredPermutation& rho, int count) {
  if (count < 1) throw PreconditionError("witness count must be at least 1");
  const CycleCensus census = rho.cycle_census();
  const std::uint64_t s = census.least_finite_length();
  if (s == 1)
    throw WrongCase("Case C requires infinitely many fixed points, but eta_1 is finite");

  // 2*count disjoint s-cycles on the smallest fixed points of rho; witness k
  // uses the first 2k of them, so eta_s grows by exactly 2k.
  std::set<Point> used;
  std::vector<std::vector<Point>> cycles;
  for (int i = 0; i < 2 * count; ++i)
    cycles.push_back(collect_fixed_points(rho, static_cast<std::size_t>(s), used));

  WitnessFamily family{rho, Strategy::case_c, SeparatorKind::eta_s, s, {}, {}};
  const std::uint64_t base = census.eta(s).value();
  for (int k = 1; k <= count; ++k) {
    std::vector<std::vector<Point>> first(cycles.begin(), cycles.begin() + 2 * k);
    FinitePermutation witness = FinitePermutation::from_cycles(rho.ray_count(), first);
    const CycleCensus pc = product(rho, witness).cycle_census();
    if (pc.eta(s) != ExtendedCount::of(base + 2 * k))
      throw std::logic_error("Case C s-cycle count deviates from the predicted value");
    family.witnesses.push_back(std::move(witness));
    family.values.push_back(base + 2 * k);
  }
  return family;
}

WitnessFamily no_infinite_orbit_family(const StructuredPermutation& rho, int count) {
  if (count < 1) throw PreconditionError("witness count must be at least 1");
  const CycleCensus census = rho.cycle_census();
  if (!census.eta(1).is_infinite())
    throw WrongCase("the nesting construction requires infinitely many fixed points");
  if (!census.eta_inf().is_zero())
    throw WrongCase("the nesting construction requires all orbits finite, but eta_inf is positive");
  if (census.has_nonzero_finite_entry())
    throw WrongCase("a finite nonzero census entry separates directly; the nesting construction does not apply");

  // b_k = b_{k-1} plus two fresh 2-cycles on fixed points of rho, so the
  // supports of the products strictly nest.
  std::set<Point> used;
  std::vector<std::vector<Point>> cycles;
  for (int i = 0; i < 2 * count; ++i) cycles.push_back(collect_fixed_points(rho, 2, used));

  WitnessFamily family{rho, Strategy::no_infinite_orbit, SeparatorKind::support_nesting, 2,
                       {}, {}};
  for (int k = 1; k <= count; ++k) {
    std::vector<std::vector<Point>> first(cycles.begin(), cycles.begin() + 2 * k);
    family.witnesses.push_back(FinitePermutation::from_cycles(rho.ray_count(), first));
    family.values.push_back(static_cast<std::uint64_t>(2 * k));
  }
  return family;
}

WitnessFamily make_witness_family(const StructuredPermutation& rho, int count) {
  switch (select_strategy(rho)) {
    case Strategy::inner_only: return inner_witness_family(count);
    case Strategy::case_a: return case_a_family(rho, count);
    case Strategy::case_b: return case_b_family(rho, count);
    case Strategy::case_c: return case_c_family(rho, count);
    case Strategy::no_infinite_orbit: return no_infinite_orbit_family(rho, count);
  }
  throw std::logic_error("unreachable");
}

bool check_witness_family(const WitnessFamily& family) {
  const std::size_t k = family.witnesses.size();
  if (k == 0 || family.values.size() != k) return false;
  switch (family.strategy) {
    case Strategy::inner_only:
      if (family.separator != SeparatorKind::cycle_length) return false;
      break;
    case Strategy::case_a:
    case Strategy::case_b:
      if (family.separator != SeparatorKind::eta_1 || family.s != 1) return false;
      break;
    case Strategy::case_c:
      if (family.separator != SeparatorKind::eta_s || family.s < 2) return false;
      break;
    case Strategy::no_infinite_orbit:
      if (family.separator != SeparatorKind::support_nesting) return false;
      break;
  }
  for (const auto& w : family.witnesses) {
    if (w.ray_count() != family.rho.ray_count()) return false;
    if (w.parity() != Parity::even) return false;
  }
  std::set<std::uint64_t> distinct(family.values.begin(), family.values.end());
  if (distinct.size() != k) return false;

  std::vector<StructuredPermutation> products;
  std::vector<CycleCensus> censuses;
  for (const auto& w : family.witnesses) {
    products.push_back(product(family.rho, w));
    censuses.push_back(products.back().cycle_census());
  }

  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t v = family.values[i];
    switch (family.separator) {
      case SeparatorKind::eta_1:
        if (censuses[i].eta(1) != ExtendedCount::of(v)) return false;
        break;
      case SeparatorKind::eta_s:
        if (censuses[i].eta(family.s) != ExtendedCount::of(v)) return false;
        break;
      case SeparatorKind::cycle_length: {
        if (!family.rho.is_identity()) return false;
        const auto cycles = family.witnesses[i].cycle_decomposition();
        if (cycles.size() != 1 || cycles[0].size() != v) return false;
        break;
      }
      case SeparatorKind::support_nesting: {
        // the value reads eta_2 of the witness itself; the certificate is
        // the strict nesting of the product supports checked below
        const auto cycles = family.witnesses[i].cycle_decomposition();
        std::uint64_t two_cycles = 0;
        for (const auto& c : cycles)
          if (c.size() == 2) ++two_cycles;
        if (cycles.size() != two_cycles || two_cycles != v) return false;
        break;
      }
    }
  }

  if (family.separator == SeparatorKind::support_nesting) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (!products[i].support_descriptor().is_strict_subset_of(
              products[i + 1].support_descriptor()))
        return false;
    }
    return true;
  }

  // census separation: products pairwise non-conjugate in the full
  // symmetric group, hence in every intermediate group
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (censuses[i] == censuses[j]) return false;
  return true;
}

bool nesting_forces_infinite_orbit_check(const StructuredPermutation& a,
                                         const StructuredPermutation& b,
                                         const StructuredPermutation& g) {
  if (!b.support_descriptor().is_strict_subset_of(a.support_descriptor()))
    throw PreconditionError("Supp(b) is not strictly contained in Supp(a)");
  if (conjugate(a, g) != b) throw PreconditionError("g does not conjugate a to b");
  return g.cycle_census().eta_inf() > ExtendedCount::of(0);
}

}  // namespace permcensus
