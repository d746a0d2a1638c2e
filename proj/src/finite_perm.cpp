#include "permcensus/finite_perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permcensus/errors.hpp"

namespace permcensus {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.ray << ',' << p.pos << ')';
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

namespace {

void check_point(int rays, Point p) {
  if (p.ray < 1 || p.ray > rays || p.pos < 1) {
    throw std::invalid_argument("point " + to_string(p) + " outside X_" + std::to_string(rays));
  }
}

}  // namespace

FinitePermutation::FinitePermutation(int rays) : rays_(rays) {
  if (rays < 1) throw std::invalid_argument("ray count must be positive");
}

FinitePermutation::FinitePermutation(int rays, const std::map<Point, Point>& mapping)
    : rays_(rays) {
  if (rays < 1) throw std::invalid_argument("ray count must be positive");
  std::set<Point> values;
  for (const auto& [from, to] : mapping) {
    check_point(rays, from);
    check_point(rays, to);
    if (from == to) continue;  // never store fixed points
    if (!values.insert(to).second) {
      throw std::invalid_argument("mapping is not injective at " + to_string(to));
    }
    mapping_.emplace(from, to);
  }
  for (const auto& [from, to] : mapping_) {
    (void)to;
    if (!values.count(from)) {
      throw std::invalid_argument("mapping moves " + to_string(from) +
                                  " but nothing maps onto it");
    }
  }
  if (values.size() != mapping_.size()) {
    throw std::invalid_argument("mapping key set differs from value set");
  }
}

FinitePermutation FinitePermutation::from_cycles(int rays,
                                                 const std::vector<std::vector<Point>>& cycles) {
  std::map<Point, Point> mapping;
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) throw std::invalid_argument("cycle of length < 2");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (mapping.count(from)) {
        throw std::invalid_argument("cycles are not disjoint at " + to_string(from));
      }
      mapping.emplace(from, to);
    }
  }
  return FinitePermutation(rays, mapping);
}

FinitePermutation FinitePermutation::transposition(int rays, Point a, Point b) {
  return from_cycles(rays, {{a, b}});
}

FinitePermutation FinitePermutation::three_cycle(int rays, Point a, Point b, Point c) {
  return from_cycles(rays, {{a, b, c}});
}

Point FinitePermutation::apply(Point x) const {
  auto it = mapping_.find(x);
  return it == mapping_.end() ? x : it->second;
}

Point FinitePermutation::apply_inverse(Point x) const {
  for (const auto& [from, to] : mapping_) {
    if (to == x) return from;
  }
  return x;
}

FinitePermutation FinitePermutation::inverse() const {
  std::map<Point, Point> inv;
  for (const auto& [from, to] : mapping_) inv.emplace(to, from);
  return FinitePermutation(rays_, inv);
}

Parity FinitePermutation::parity() const {
  // Each k-cycle contributes k-1 transpositions.
  std::size_t transpositions = 0;
  for (const auto& cycle : cycle_decomposition()) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::set<Point> FinitePermutation::support() const {
  std::set<Point> s;
  for (const auto& [from, to] : mapping_) {
    (void)to;
    s.insert(from);
  }
  return s;
}

std::uint64_t FinitePermutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycle_decomposition()) {
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  }
  return result;
}

std::vector<std::vector<Point>> FinitePermutation::cycle_decomposition() const {
  std::vector<std::vector<Point>> cycles;
  std::set<Point> seen;
  // std::map iterates keys in ascending order, so each cycle is discovered
  // at its smallest point and the list comes out sorted.
  for (const auto& [start, first] : mapping_) {
    if (seen.count(start)) continue;
    std::vector<Point> cycle{start};
    seen.insert(start);
    for (Point p = first; p != start; p = apply(p)) {
      cycle.push_back(p);
      seen.insert(p);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<std::array<Point, 3>> FinitePermutation::decompose_into_3cycles() const {
  if (parity() != Parity::even) {
    throw ParityError("decompose_into_3cycles requires an even permutation");
  }
  // Transposition decomposition: (p0 p1 ... pk) = (p0 p1)(p0 p2)...(p0 pk),
  // applied left to right.
  std::vector<std::pair<Point, Point>> trans;
  for (const auto& cycle : cycle_decomposition()) {
    for (std::size_t i = 1; i < cycle.size(); ++i) trans.emplace_back(cycle[0], cycle[i]);
  }
  // Pair consecutive transpositions; each pair is one or two 3-cycles.
  std::vector<std::array<Point, 3>> result;
  auto emit = [&result, this](const FinitePermutation& f) {
    auto cycles = f.cycle_decomposition();
    if (cycles.size() != 1 || cycles[0].size() != 3) {
      throw std::logic_error("pairing did not produce a 3-cycle");
    }
    result.push_back({cycles[0][0], cycles[0][1], cycles[0][2]});
  };
  for (std::size_t i = 0; i + 1 < trans.size(); i += 2) {
    auto [a, b] = trans[i];
    auto [c, d] = trans[i + 1];
    FinitePermutation t1 = transposition(rays_, a, b);
    FinitePermutation t2 = transposition(rays_, c, d);
    FinitePermutation product = compose(t1, t2);
    if (product.is_identity()) continue;
    if (product.support().size() == 3) {
      emit(product);
      continue;
    }
    // Disjoint transpositions: (a b)(c d) = [(a b)(b c)] [(b c)(c d)].
    FinitePermutation bridge = transposition(rays_, b, c);
    emit(compose(t1, bridge));
    emit(compose(bridge, t2));
  }
  return result;
}

FinitePermutation compose(const FinitePermutation& f, const FinitePermutation& g) {
  if (f.ray_count() != g.ray_count()) {
    throw AmbientMismatch("compose: ray counts " + std::to_string(f.ray_count()) + " vs " +
                          std::to_string(g.ray_count()));
  }
  std::map<Point, Point> mapping;
  for (const auto& [from, to] : f.mapping()) mapping[from] = g.apply(to);
  for (const auto& [from, to] : g.mapping()) {
    (void)to;
    if (!mapping.count(from)) mapping[from] = g.apply(from);
  }
  return FinitePermutation(f.ray_count(), mapping);
}

}  // namespace permcensus
