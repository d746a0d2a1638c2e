#include "permcensus/structured_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permcensus/errors.hpp"

namespace permcensus {

namespace {

constexpr std::int64_t kWalkCap = 50'000'000;  // internal bug guard, not a semantic limit

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::vector<int> inverse_ray_map(const std::vector<int>& rm) {
  std::vector<int> inv(rm.size(), 0);
  for (std::size_t i = 0; i < rm.size(); ++i) inv[rm[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

bool is_ray_permutation(const std::vector<int>& rm) {
  std::vector<char> seen(rm.size(), 0);
  for (int v : rm) {
    if (v < 1 || v > static_cast<int>(rm.size()) || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

bool is_identity_block(const std::vector<int>& b) {
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] != static_cast<int>(j)) return false;
  return true;
}

bool valid_block(const std::vector<int>& b) {
  if (b.empty()) return false;
  std::vector<char> seen(b.size(), 0);
  for (int v : b) {
    if (v < 0 || v >= static_cast<int>(b.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Smallest window length e (a divisor of the block length) such that the
// block is the e-periodic repetition b[r+e] = b[r] + e; the block's minimal
// window period equals the minimal period of its displacement sequence.
std::vector<int> reduce_block(const std::vector<int>& b) {
  const int p = static_cast<int>(b.size());
  for (int e = 1; e < p; ++e) {
    if (p % e != 0) continue;
    bool ok = true;
    for (int r = 0; ok && r < e; ++r) ok = b[r] < e;
    for (int r = 0; ok && r + e < p; ++r) ok = b[r + e] == b[r] + e;
    if (ok) return std::vector<int>(b.begin(), b.begin() + e);
  }
  return b;
}

// Cycle lengths of the block viewed as a permutation of {0..p-1}, with
// multiplicities; fixed residues count as length 1.
std::map<std::uint64_t, std::uint64_t> block_cycle_lengths(const std::vector<int>& b) {
  std::map<std::uint64_t, std::uint64_t> out;
  std::vector<char> seen(b.size(), 0);
  for (std::size_t s = 0; s < b.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(b[j])) {
      seen[j] = 1;
      ++len;
    }
    ++out[len];
  }
  return out;
}

std::int64_t max_abs_shift(const StructuredPermutation& g) {
  std::int64_t m = 0;
  for (const auto& t : g.tails())
    if (t.is_translation()) m = std::max(m, abs64(t.shift));
  return m;
}

std::int64_t max_period(const StructuredPermutation& g) {
  std::int64_t m = 1;
  for (const auto& t : g.tails())
    if (t.is_periodic()) m = std::max(m, t.period());
  return m;
}

// Scalar position beyond which, on every ray, the element acts purely by
// its tail pattern and so does one further application.
std::int64_t global_bound(const StructuredPermutation& g) {
  std::int64_t b = 1;
  for (std::int64_t v : g.trace_bounds()) b = std::max(b, v);
  return b + max_abs_shift(g) + max_period(g) + 2;
}

// Ray cycles of the ray map restricted to translation rays, with the net
// drift and total |shift| span of each cycle.  Periodic rays force the
// identity ray map, so they only ever form fixed singletons and are skipped.
struct RayCycles {
  std::vector<std::vector<int>> cycles;  // 1-based rays in cycle order
  std::vector<std::int64_t> net;
  std::vector<std::int64_t> span;
  std::vector<int> cycle_of;  // per ray (0-based), -1 for periodic rays

  explicit RayCycles(const StructuredPermutation& g) : cycle_of(g.ray_count(), -1) {
    const int n = g.ray_count();
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (seen[i] || g.tails()[i].is_periodic()) continue;
      std::vector<int> cyc;
      std::int64_t s = 0, sp = 0;
      for (int j = i; !seen[j]; j = g.ray_map()[j] - 1) {
        seen[j] = 1;
        cyc.push_back(j + 1);
        cycle_of[j] = static_cast<int>(cycles.size());
        s += g.tails()[j].shift;
        sp += abs64(g.tails()[j].shift);
      }
      cycles.push_back(std::move(cyc));
      net.push_back(s);
      span.push_back(sp);
    }
  }
};

// Escape certificates for orbit walks: a point on a translation ray whose
// cycle drifts the right way and whose position clears the cycle's band
// plus one full lap can never return, and never re-enters the band either,
// so certified orbits are enumerated exactly once from band points.
struct WalkContext {
  std::vector<std::int64_t> dirty;
  RayCycles rc;
  std::int64_t wmargin = 2;                // exceeds any single-step drop
  std::vector<std::int64_t> band;          // per ray enumeration bound
  std::vector<std::int64_t> escape_bound;  // per ray, for translation rays

  explicit WalkContext(const StructuredPermutation& g) : dirty(g.trace_bounds()), rc(g) {
    for (std::size_t c = 0; c < rc.cycles.size(); ++c)
      wmargin = std::max(wmargin, rc.span[c] + 2);
    for (int i = 0; i < g.ray_count(); ++i)
      if (g.tails()[i].is_periodic()) wmargin = std::max(wmargin, g.tails()[i].period() + 2);
    band.resize(g.ray_count());
    for (int i = 0; i < g.ray_count(); ++i) band[i] = dirty[i] + wmargin;
    escape_bound.assign(g.ray_count(), 0);
    for (std::size_t c = 0; c < rc.cycles.size(); ++c) {
      std::int64_t top = 0;
      for (int ray : rc.cycles[c]) top = std::max(top, band[ray - 1]);
      for (int ray : rc.cycles[c]) escape_bound[ray - 1] = top + rc.span[c] + 1;
    }
  }

  bool certified(Point y, int direction) const {
    const int c = rc.cycle_of[y.ray - 1];
    if (c < 0) return false;
    const std::int64_t n = rc.net[c];
    if (direction > 0 ? n <= 0 : n >= 0) return false;
    return y.pos > escape_bound[y.ray - 1];
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// model action

void StructuredPermutation::build_routing() {
  route_fwd_.clear();
  route_bwd_.clear();
  inv_ray_map_ = inverse_ray_map(ray_map_);
  std::vector<Point> under, gaps;
  for (int i = 0; i < rays_; ++i) {
    const auto& t = tails_[i];
    if (!t.is_translation()) continue;
    if (t.shift < 0)
      for (std::int64_t p = 1; p <= -t.shift; ++p) under.push_back({i + 1, p});
    if (t.shift > 0)
      for (std::int64_t q = 1; q <= t.shift; ++q) gaps.push_back({ray_map_[i], q});
  }
  std::sort(gaps.begin(), gaps.end());
  if (under.size() != gaps.size())
    throw std::logic_error("routing imbalance despite balanced shifts");
  for (std::size_t k = 0; k < under.size(); ++k) {
    route_fwd_[under[k]] = gaps[k];
    route_bwd_[gaps[k]] = under[k];
  }
}

Point StructuredPermutation::model_apply(Point x) const {
  const int i = x.ray - 1;
  const auto& t = tails_[i];
  if (t.is_translation()) {
    const std::int64_t p = x.pos + t.shift;
    if (p >= 1) return {ray_map_[i], p};
    return route_fwd_.at(x);
  }
  const std::int64_t M = thresholds_[i];
  if (x.pos <= M) return x;
  const std::int64_t q = x.pos - M - 1, d = t.period();
  return {x.ray, M + 1 + (q / d) * d + t.block[q % d]};
}

Point StructuredPermutation::model_apply_inverse(Point y) const {
  const int j = y.ray - 1;
  const int i = inv_ray_map_[j] - 1;
  const auto& t = tails_[i];
  if (t.is_translation()) {
    const std::int64_t p = y.pos - t.shift;
    if (p >= 1) return {i + 1, p};
    return route_bwd_.at(y);
  }
  // periodic tails keep the ray fixed
  const std::int64_t M = thresholds_[j];
  if (y.pos <= M) return y;
  const std::int64_t q = y.pos - M - 1, d = tails_[j].period();
  const std::int64_t r = q % d;
  for (std::int64_t s = 0; s < d; ++s)
    if (tails_[j].block[s] == r) return {y.ray, M + 1 + (q / d) * d + s};
  throw std::logic_error("periodic block is not a bijection");
}

Point StructuredPermutation::apply(Point x) const { return correction_.apply(model_apply(x)); }

Point StructuredPermutation::apply_inverse(Point x) const {
  return model_apply_inverse(correction_.apply_inverse(x));
}

// ---------------------------------------------------------------------------
// normal-form recognition

namespace {

// Claimed eventual behaviour of one ray of a composite map: either an exact
// translation, or a periodic pattern whose displacements repeat with window
// `period` (an lcm of the contributing periods).  `shift` doubles as the
// translation fallback when a claimed periodic composite degenerates to a
// pure shift (net translation through cancelling periodic stages).
struct EventualTail {
  int dest = 1;
  bool periodic = false;
  std::int64_t shift = 0;
  std::int64_t period = 1;
};

bool window_matches(const std::function<Point(Point)>& fwd, int ray, std::int64_t M,
                    const std::vector<int>& blk) {
  for (std::size_t j = 0; j < blk.size(); ++j) {
    const Point y = fwd({ray, M + 1 + static_cast<std::int64_t>(j)});
    if (y.ray != ray || y.pos != M + 1 + blk[j]) return false;
  }
  return true;
}

// Reads the window permutation at phase anchor W (window = [W+1, W+D]);
// empty result when the map is not window-aligned there.
std::vector<int> read_block(const std::function<Point(Point)>& fwd, int ray, std::int64_t W,
                            std::int64_t D) {
  std::vector<int> blk(D, -1);
  std::vector<char> seen(D, 0);
  for (std::int64_t j = 0; j < D; ++j) {
    const Point y = fwd({ray, W + 1 + j});
    const std::int64_t v = y.pos - (W + 1);
    if (y.ray != ray || v < 0 || v >= D || seen[v]) return {};
    seen[v] = 1;
    blk[j] = static_cast<int>(v);
  }
  return blk;
}

}  // namespace

struct StructuredPermutation::Recognizer {
  // Builds the canonical normal form of the bijection computed by `fwd`,
  // given per-ray claims that are exact beyond `bound`: translation claims
  // carry the exact shift; periodic claims carry a window length that the
  // eventual displacement provably repeats with.  Claims that match no
  // representable tail raise UnsupportedComposition.
  static StructuredPermutation build(int rays, const std::vector<EventualTail>& claims,
                                     const std::function<Point(Point)>& fwd,
                                     std::int64_t bound) {
    StructuredPermutation r;
    r.rays_ = rays;
    r.ray_map_.resize(rays);
    r.tails_.assign(rays, TailDescriptor::translation(0));
    r.thresholds_.assign(rays, 0);
    std::int64_t dmax = 1;
    for (int i = 0; i < rays; ++i) dmax = std::max(dmax, claims[i].period);

    for (int i = 0; i < rays; ++i) {
      const EventualTail& cl = claims[i];
      const std::int64_t D = std::max<std::int64_t>(1, cl.period);
      r.ray_map_[i] = cl.dest;
      bool settled = false;

      if (cl.periodic && cl.dest == i + 1) {
        // find any aligned phase at window length D
        std::vector<int> raw;
        for (std::int64_t ph = 0; ph < D && raw.empty(); ++ph) {
          const std::int64_t W = bound + ((ph - bound) % D + D) % D;
          raw = read_block(fwd, i + 1, W, D);
        }
        if (!raw.empty()) {
          const std::vector<int> red = reduce_block(raw);
          if (is_identity_block(red)) {
            r.tails_[i] = TailDescriptor::translation(0);
            settled = true;
          } else {
            // canonical form: the unique phase with the least threshold
            const std::int64_t d = static_cast<std::int64_t>(red.size());
            std::int64_t best_m = -1;
            std::vector<int> best_b;
            for (std::int64_t ph = 0; ph < d; ++ph) {
              const std::int64_t W = bound + ((ph - bound) % d + d) % d;
              std::vector<int> blk = read_block(fwd, i + 1, W, d);
              if (blk.empty()) continue;
              std::int64_t M = W;
              while (M - d >= 0 && window_matches(fwd, i + 1, M - d, blk)) M -= d;
              if (best_m < 0 || M < best_m) {
                best_m = M;
                best_b = std::move(blk);
              }
            }
            if (best_m < 0) throw std::logic_error("lost the phase found at the lcm window");
            r.tails_[i] = TailDescriptor::periodic(best_b);
            r.thresholds_[i] = best_m;
            settled = true;
          }
        }
      }

      if (!settled) {
        // exact translation, verified across one displacement period
        for (std::int64_t pos = bound + 1; pos <= bound + D; ++pos) {
          const Point y = fwd({i + 1, pos});
          if (y.ray != cl.dest || y.pos != pos + cl.shift)
            throw UnsupportedComposition("composite tail on ray " + std::to_string(i + 1) +
                                         " is neither periodic nor a translation");
        }
        r.tails_[i] = TailDescriptor::translation(cl.shift);
      }
    }

    if (!is_ray_permutation(r.ray_map_))
      throw std::logic_error("recognized ray map is not a permutation");
    std::int64_t net = 0;
    for (const auto& t : r.tails_)
      if (t.is_translation()) net += t.shift;
    if (net != 0) throw std::logic_error("recognized shifts do not balance");

    r.build_routing();
    std::int64_t shifts = max_abs_shift(r);
    std::int64_t sweep_base = 1;
    for (int i = 0; i < rays; ++i)
      sweep_base = std::max({sweep_base, r.thresholds_[i] + max_period(r), shifts});
    const std::int64_t sweep = std::max(bound, sweep_base) + dmax + 2;

    std::map<Point, Point> corr;
    for (int i = 0; i < rays; ++i)
      for (std::int64_t pos = 1; pos <= sweep; ++pos) {
        const Point x{i + 1, pos};
        const Point y = r.model_apply(x);
        const Point z = fwd(x);
        if (y != z) corr[y] = z;
      }
    r.correction_ = FinitePermutation(rays, corr);
    return r;
  }
};

// ---------------------------------------------------------------------------
// construction

StructuredPermutation::StructuredPermutation(int rays, std::vector<int> ray_map,
                                             std::vector<TailDescriptor> tails,
                                             std::vector<std::int64_t> thresholds,
                                             FinitePermutation correction)
    : correction_(rays > 0 ? rays : 1) {
  if (rays < 1) throw PreconditionError("ray count must be at least 1");
  if (static_cast<int>(ray_map.size()) != rays || !is_ray_permutation(ray_map))
    throw PreconditionError("ray map must be a permutation of 1..n");
  if (static_cast<int>(tails.size()) != rays || static_cast<int>(thresholds.size()) != rays)
    throw PreconditionError("need one tail and one threshold per ray");
  if (correction.ray_count() != rays)
    throw AmbientMismatch("correction lives on a different ray count");

  bool any_periodic = false;
  std::int64_t net = 0;
  for (int i = 0; i < rays; ++i) {
    if (thresholds[i] < 0) throw PreconditionError("thresholds must be nonnegative");
    if (tails[i].is_periodic()) {
      any_periodic = true;
      if (!valid_block(tails[i].block))
        throw PreconditionError("periodic block must be a permutation of 0..p-1");
    } else {
      if (thresholds[i] != 0) throw PreconditionError("translation rays carry threshold 0");
      net += tails[i].shift;
    }
  }
  if (net != 0) throw PreconditionError("translation shifts must sum to zero");
  if (any_periodic)
    for (int i = 0; i < rays; ++i)
      if (ray_map[i] != i + 1)
        throw PreconditionError("periodic tails require the identity ray map");

  // raw semantics: tail model as given, then the correction
  StructuredPermutation raw;
  raw.rays_ = rays;
  raw.ray_map_ = std::move(ray_map);
  raw.tails_ = std::move(tails);
  raw.thresholds_ = std::move(thresholds);
  raw.correction_ = std::move(correction);
  raw.build_routing();

  std::vector<EventualTail> claims(rays);
  for (int i = 0; i < rays; ++i) {
    if (raw.tails_[i].is_periodic()) {
      claims[i] = {i + 1, true, 0, raw.tails_[i].period()};
    } else {
      claims[i] = {raw.ray_map_[i], false, raw.tails_[i].shift, 1};
    }
  }
  *this = Recognizer::build(
      rays, claims, [&raw](Point x) { return raw.apply(x); }, global_bound(raw));
}

StructuredPermutation StructuredPermutation::identity(int rays) {
  if (rays < 1) throw PreconditionError("ray count must be at least 1");
  StructuredPermutation g;
  g.rays_ = rays;
  g.ray_map_.resize(rays);
  for (int i = 0; i < rays; ++i) g.ray_map_[i] = i + 1;
  g.tails_.assign(rays, TailDescriptor::translation(0));
  g.thresholds_.assign(rays, 0);
  g.correction_ = FinitePermutation(rays);
  g.build_routing();
  return g;
}

StructuredPermutation StructuredPermutation::embed(const FinitePermutation& f) {
  StructuredPermutation g = identity(f.ray_count());
  g.correction_ = f;
  return g;
}

bool StructuredPermutation::is_identity() const {
  if (!correction_.is_identity()) return false;
  for (int i = 0; i < rays_; ++i)
    if (ray_map_[i] != i + 1 || !tails_[i].is_translation() || tails_[i].shift != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// group operations

StructuredPermutation StructuredPermutation::inverse() const {
  std::vector<EventualTail> claims(rays_);
  for (int i = 0; i < rays_; ++i) {
    if (tails_[i].is_periodic()) {
      claims[i] = {i + 1, true, 0, tails_[i].period()};
    } else {
      claims[ray_map_[i] - 1] = {i + 1, false, -tails_[i].shift, 1};
    }
  }
  return Recognizer::build(
      rays_, claims, [this](Point x) { return apply_inverse(x); }, global_bound(*this));
}

StructuredPermutation compose(const StructuredPermutation& g, const StructuredPermutation& h) {
  if (g.rays_ != h.rays_) throw AmbientMismatch("compose: mismatched ray counts");
  const int n = g.rays_;
  std::vector<EventualTail> claims(n);
  for (int i = 0; i < n; ++i) {
    const TailDescriptor& a = g.tails_[i];
    const int p = g.ray_map_[i];
    const TailDescriptor& b = h.tails_[p - 1];
    const int dest = h.ray_map_[p - 1];
    std::int64_t period = 1, shift = 0;
    bool periodic = false;
    if (a.is_periodic()) {
      periodic = true;
      period = std::lcm(period, a.period());
    } else {
      shift += a.shift;
    }
    if (b.is_periodic()) {
      periodic = true;
      period = std::lcm(period, b.period());
    } else {
      shift += b.shift;
    }
    claims[i] = {dest, periodic && dest == i + 1, shift, period};
  }
  const std::int64_t bound = global_bound(g) + global_bound(h) + 2;
  return StructuredPermutation::Recognizer::build(
      n, claims, [&g, &h](Point x) { return h.apply(g.apply(x)); }, bound);
}

StructuredPermutation conjugate(const StructuredPermutation& g, const StructuredPermutation& c) {
  if (g.rays_ != c.rays_) throw AmbientMismatch("conjugate: mismatched ray counts");
  const int n = g.rays_;
  std::vector<EventualTail> claims(n);
  for (int i = 0; i < n; ++i) {
    const int j = c.inv_ray_map_[i];          // c^{-1} sends ray i to ray j
    const int m = g.ray_map_[j - 1];          // then g sends it to ray m
    const int dest = c.ray_map_[m - 1];       // then c sends it to dest
    std::int64_t period = 1, shift = 0;
    bool periodic = false;
    for (const TailDescriptor* t :
         {&c.tails_[j - 1], &g.tails_[j - 1], &c.tails_[m - 1]}) {
      if (t->is_periodic()) {
        periodic = true;
        period = std::lcm(period, t->period());
      }
    }
    if (c.tails_[j - 1].is_translation()) shift -= c.tails_[j - 1].shift;
    if (g.tails_[j - 1].is_translation()) shift += g.tails_[j - 1].shift;
    if (c.tails_[m - 1].is_translation()) shift += c.tails_[m - 1].shift;
    claims[i] = {dest, periodic && dest == i + 1, shift, period};
  }
  const std::int64_t bound = global_bound(g) + 2 * global_bound(c) + 2;
  return StructuredPermutation::Recognizer::build(
      n, claims,
      [&g, &c](Point x) { return c.apply(g.apply(c.apply_inverse(x))); }, bound);
}

// ---------------------------------------------------------------------------
// bounds, orbits, census

std::vector<std::int64_t> StructuredPermutation::trace_bounds() const {
  std::vector<std::int64_t> b(rays_, 1);
  for (int i = 0; i < rays_; ++i) {
    const auto& t = tails_[i];
    if (t.is_translation()) {
      b[i] = std::max(b[i], abs64(t.shift) + 1);
      if (t.shift > 0)
        b[ray_map_[i] - 1] = std::max(b[ray_map_[i] - 1], t.shift + 1);
    } else {
      b[i] = std::max(b[i], thresholds_[i] + t.period());
    }
  }
  for (const auto& [k, v] : correction_.mapping()) {
    b[k.ray - 1] = std::max(b[k.ray - 1], k.pos);
    b[v.ray - 1] = std::max(b[v.ray - 1], v.pos);
  }
  return b;
}

Orbit StructuredPermutation::orbit(Point x) const {
  const WalkContext ctx(*this);
  FiniteOrbit fin;
  Point cur = x;
  for (std::int64_t steps = 0;; ++steps) {
    if (steps > kWalkCap) throw std::logic_error("orbit walk exceeded internal bound");
    if (ctx.certified(cur, +1)) return EscapingOrbit{x, cur.ray, +1};
    fin.points.push_back(cur);
    cur = apply(cur);
    if (cur == x) return fin;
  }
}

CycleCensus StructuredPermutation::cycle_census() const {
  CycleCensus census;
  const WalkContext ctx(*this);

  // clean regions: zero-drift ray cycles and periodic windows repeat forever
  for (std::size_t c = 0; c < ctx.rc.cycles.size(); ++c)
    if (ctx.rc.net[c] == 0) census.make_infinite(ctx.rc.cycles[c].size());
  for (int i = 0; i < rays_; ++i)
    if (tails_[i].is_periodic())
      for (const auto& [len, cnt] : block_cycle_lengths(tails_[i].block)) {
        (void)cnt;
        census.make_infinite(len);
      }

  // everything irregular passes through the band
  std::set<Point> visited;
  std::uint64_t escaping = 0;
  for (int i = 0; i < rays_; ++i) {
    for (std::int64_t pos = 1; pos <= ctx.band[i]; ++pos) {
      const Point start{i + 1, pos};
      if (visited.count(start)) continue;
      std::vector<Point> trail{start};
      bool escapes = ctx.certified(start, +1);
      Point cur = start;
      for (std::int64_t steps = 0; !escapes; ++steps) {
        if (steps > kWalkCap) throw std::logic_error("census walk exceeded internal bound");
        cur = apply(cur);
        if (cur == start) break;
        trail.push_back(cur);
        escapes = ctx.certified(cur, +1);
      }
      for (const Point& p : trail) visited.insert(p);
      if (!escapes) {
        census.add_finite(trail.size(), 1);
        continue;
      }
      ++escaping;
      cur = start;
      for (std::int64_t steps = 0; !ctx.certified(cur, -1); ++steps) {
        if (steps > kWalkCap) throw std::logic_error("census walk exceeded internal bound");
        cur = apply_inverse(cur);
        visited.insert(cur);
      }
    }
  }
  census.set_eta_inf(ExtendedCount::of(escaping));
  return census;
}

ExtendedCount StructuredPermutation::order() const {
  const CycleCensus census = cycle_census();
  if (!census.eta_inf().is_zero()) return ExtendedCount::inf();
  unsigned __int128 l = 1;
  for (const auto& [r, c] : census.entries()) {
    (void)c;
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(l % r), r);
    l = l / g * r;
    if (l > static_cast<unsigned __int128>(UINT64_MAX))
      throw ResourceLimit("order does not fit in 64 bits");
  }
  return ExtendedCount::of(static_cast<std::uint64_t>(l));
}

// ---------------------------------------------------------------------------
// support

SupportDescriptor StructuredPermutation::support_descriptor() const {
  SupportDescriptor sd;
  sd.rays.resize(rays_);
  const std::vector<std::int64_t> dirty = trace_bounds();
  for (int i = 0; i < rays_; ++i) {
    auto& info = sd.rays[i];
    info.horizon = dirty[i] + max_period(*this) + 1;
    const auto& t = tails_[i];
    if (t.is_translation()) {
      const bool moved = t.shift != 0 || ray_map_[i] != i + 1;
      info.kind = moved ? SupportDescriptor::TailSupport::moved
                        : SupportDescriptor::TailSupport::fixed;
    } else {
      std::set<int> moved;
      for (int r = 0; r < static_cast<int>(t.block.size()); ++r)
        if (t.block[r] != r) moved.insert(r);
      if (static_cast<std::int64_t>(moved.size()) == t.period()) {
        info.kind = SupportDescriptor::TailSupport::moved;
      } else {
        info.kind = SupportDescriptor::TailSupport::residues;
        info.period = t.period();
        info.phase = thresholds_[i];
        info.moved_residues = std::move(moved);
      }
    }
    for (std::int64_t pos = 1; pos <= info.horizon; ++pos) {
      const Point x{i + 1, pos};
      if (apply(x) != x) sd.core.insert(x);
    }
  }
  return sd;
}

bool SupportDescriptor::contains(Point x) const {
  if (x.ray < 1 || x.ray > static_cast<int>(rays.size())) return false;
  const RayInfo& info = rays[x.ray - 1];
  if (x.pos <= info.horizon) return core.count(x) > 0;
  switch (info.kind) {
    case TailSupport::fixed:
      return false;
    case TailSupport::moved:
      return true;
    case TailSupport::residues: {
      const std::int64_t r = ((x.pos - info.phase - 1) % info.period + info.period) % info.period;
      return info.moved_residues.count(static_cast<int>(r)) > 0;
    }
  }
  return false;
}

bool SupportDescriptor::is_subset_of(const SupportDescriptor& other) const {
  if (rays.size() != other.rays.size())
    throw AmbientMismatch("support comparison needs equal ray counts");
  for (const Point& p : core)
    if (!other.contains(p)) return false;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const int ray = static_cast<int>(i) + 1;
    const std::int64_t h = std::max(rays[i].horizon, other.rays[i].horizon);
    std::int64_t window = 1;
    if (rays[i].kind == TailSupport::residues) window = std::lcm(window, rays[i].period);
    if (other.rays[i].kind == TailSupport::residues)
      window = std::lcm(window, other.rays[i].period);
    for (std::int64_t pos = rays[i].horizon + 1; pos <= h + window; ++pos) {
      const Point x{ray, pos};
      if (contains(x) && !other.contains(x)) return false;
    }
  }
  return true;
}

bool SupportDescriptor::is_strict_subset_of(const SupportDescriptor& other) const {
  return is_subset_of(other) && !other.is_subset_of(*this);
}

bool SupportDescriptor::infinite_complement() const {
  for (const RayInfo& info : rays) {
    if (info.kind == TailSupport::fixed) return true;
    if (info.kind == TailSupport::residues &&
        static_cast<std::int64_t>(info.moved_residues.size()) < info.period)
      return true;
  }
  return false;
}

std::set<int> SupportDescriptor::eventually_moved_rays() const {
  std::set<int> out;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].kind != TailSupport::fixed) out.insert(static_cast<int>(i) + 1);
  return out;
}

// ---------------------------------------------------------------------------
// derived operations

FinitePermutation commutator_with_3cycle(const StructuredPermutation& g, Point x0) {
  if (std::holds_alternative<FiniteOrbit>(g.orbit(x0)))
    throw PreconditionError("base point lies on a finite orbit");
  const Point xm1 = g.apply_inverse(x0);
  const Point x1 = g.apply(x0);
  const FinitePermutation mu =
      FinitePermutation::from_cycles(g.ray_count(), {{xm1, x0, x1}});
  const StructuredPermutation result =
      compose(compose(compose(StructuredPermutation::embed(mu.inverse()), g),
                      StructuredPermutation::embed(mu)),
              g.inverse());
  if (!(StructuredPermutation::embed(result.correction()) == result))
    throw std::logic_error("commutator with a finite element is not finite");
  return result.correction();
}

Truncation truncate(const StructuredPermutation& g, std::int64_t min_cutoff) {
  const CycleCensus census = g.cycle_census();
  if (!census.eta_inf().is_zero())
    throw NotTruncatable("element has an infinite orbit; no finite box is invariant");
  min_cutoff = std::max<std::int64_t>(min_cutoff, 1);

  const std::vector<std::int64_t> dirty = g.trace_bounds();
  const int n = g.ray_count();
  std::vector<std::int64_t> cut(n, 0);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    if (g.tails()[i].is_periodic()) {
      seen[i] = 1;
      const std::int64_t d = g.tails()[i].period(), m = g.thresholds()[i];
      const std::int64_t req = std::max(dirty[i], min_cutoff);
      cut[i] = req <= m ? m : m + (req - m + d - 1) / d * d;
      continue;
    }
    // zero-net translation cycle: cutoffs differ by the running drift
    std::vector<int> cyc;
    std::vector<std::int64_t> off;
    std::int64_t o = 0;
    for (int j = i; !seen[j]; j = g.ray_map()[j] - 1) {
      seen[j] = 1;
      cyc.push_back(j);
      off.push_back(o);
      o += g.tails()[j].shift;
    }
    std::int64_t base = 1;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      base = std::max(base, std::max(dirty[cyc[k]], min_cutoff) - off[k]);
    for (std::size_t k = 0; k < cyc.size(); ++k) cut[cyc[k]] = base + off[k];
  }

  std::map<Point, Point> mapping;
  for (int i = 0; i < n; ++i)
    for (std::int64_t pos = 1; pos <= cut[i]; ++pos) {
      const Point x{i + 1, pos};
      const Point y = g.apply(x);
      if (y.pos > cut[y.ray - 1])
        throw std::logic_error("truncation box is not invariant");
      if (y != x) mapping[x] = y;
    }
  return {FinitePermutation(n, mapping), std::move(cut)};
}

}  // namespace permcensus
