#include "permcensus/brute_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "permcensus/errors.hpp"

namespace permcensus {

namespace {

constexpr int kDegreeCap = 8;

void check_cap(int m) {
  if (m < 1) throw PreconditionError("degree must be positive");
  if (m > kDegreeCap)
    throw ResourceLimit("degree " + std::to_string(m) + " exceeds the enumeration cap of " +
                        std::to_string(kDegreeCap));
}

std::vector<SmallPerm> ambient_elements(Ambient ambient, int m) {
  return ambient == Ambient::sym ? symmetric_group(m) : alternating_group(m);
}

// Any generating set of the ambient; twisted classes are orbits of the
// ambient acting on itself, so generator edges suffice for connectivity.
std::vector<SmallPerm> ambient_generators(Ambient ambient, int m) {
  std::vector<SmallPerm> gens;
  if (ambient == Ambient::sym) {
    if (m >= 2) gens.push_back(SmallPerm::transposition(m, 1, 2));
    if (m >= 3) {
      std::vector<int> full(m);
      std::iota(full.begin(), full.end(), 1);
      gens.push_back(SmallPerm::cycle(m, full));
    }
  } else {
    for (int k = 3; k <= m; ++k) gens.push_back(SmallPerm::cycle(m, {1, 2, k}));
  }
  return gens;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

SmallPerm conj(const SmallPerm& u, const SmallPerm& g) {
  return compose(compose(g.inverse(), u), g);
}

bool type_splits(const std::vector<int>& type) {
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i] % 2 == 0) return false;
    if (i + 1 < type.size() && type[i] == type[i + 1]) return false;
  }
  return true;
}

// Points listed cycle by cycle, longest cycle first, each cycle starting at
// its smallest point.  For splitting types the ordering is unambiguous.
std::vector<int> canonical_sequence(const SmallPerm& u) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(u.degree(), 0);
  for (int s = 1; s <= u.degree(); ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cycle;
    for (int j = s; !seen[j - 1]; j = u.apply(j)) {
      seen[j - 1] = 1;
      cycle.push_back(j);
    }
    cycles.push_back(std::move(cycle));
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<int> seq;
  for (const auto& c : cycles) seq.insert(seq.end(), c.begin(), c.end());
  return seq;
}

}  // namespace

std::string ambient_name(Ambient ambient, int degree) {
  return (ambient == Ambient::sym ? "S_" : "A_") + std::to_string(degree);
}

std::vector<SmallPerm> symmetric_group(int m) {
  check_cap(m);
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  std::vector<SmallPerm> out;
  out.reserve(factorial(m));
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<SmallPerm> alternating_group(int m) {
  std::vector<SmallPerm> out;
  for (const SmallPerm& p : symmetric_group(m))
    if (p.parity() == Parity::even) out.push_back(p);
  return out;
}

std::vector<SmallPerm> group_closure(int degree, const std::vector<SmallPerm>& gens) {
  check_cap(degree);
  for (const SmallPerm& g : gens)
    if (g.degree() != degree) throw AmbientMismatch("generator degree mismatch");
  std::vector<char> seen(factorial(degree), 0);
  std::vector<SmallPerm> closure{SmallPerm(degree)};
  seen[closure[0].rank()] = 1;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const SmallPerm& g : gens) {
      SmallPerm next = compose(closure[i], g);
      const std::uint64_t r = next.rank();
      if (!seen[r]) {
        seen[r] = 1;
        closure.push_back(std::move(next));
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

TwistedClassPartition twisted_classes(const SmallPerm& rho, Ambient ambient) {
  const int m = rho.degree();
  check_cap(m);
  const std::vector<SmallPerm> elems = ambient_elements(ambient, m);
  std::vector<int> index(factorial(m), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].rank()] = static_cast<int>(i);

  // one edge per generator x: a ~ phi(x^-1) a x
  const SmallPerm rho_inv = rho.inverse();
  std::vector<std::pair<SmallPerm, SmallPerm>> edges;  // (phi(x^-1), x)
  for (const SmallPerm& x : ambient_generators(ambient, m))
    edges.emplace_back(compose(compose(rho_inv, x.inverse()), rho), x);

  UnionFind uf(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& [left, right] : edges) {
      const SmallPerm image = compose(compose(left, elems[i]), right);
      uf.unite(static_cast<int>(i), index[image.rank()]);
    }
  }

  std::map<int, std::vector<SmallPerm>> grouped;
  for (std::size_t i = 0; i < elems.size(); ++i)
    grouped[uf.find(static_cast<int>(i))].push_back(elems[i]);
  TwistedClassPartition out{rho, ambient, {}};
  for (auto& [root, cls] : grouped) {
    (void)root;
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool alternating_conjugate(const SmallPerm& u, const SmallPerm& v) {
  if (u.degree() != v.degree()) throw AmbientMismatch("degree mismatch");
  if (u.cycle_type() != v.cycle_type()) return false;
  if (!type_splits(u.cycle_type())) return true;
  // map u's canonical point sequence onto v's; centralizer elements are all
  // even here, so the conjugator parity is well defined
  const std::vector<int> su = canonical_sequence(u), sv = canonical_sequence(v);
  std::vector<int> images(u.degree());
  for (std::size_t k = 0; k < su.size(); ++k) images[su[k] - 1] = sv[k];
  return SmallPerm(std::move(images)).parity() == Parity::even;
}

bool check_reformulation(const SmallPerm& rho, Ambient ambient) {
  const TwistedClassPartition partition = twisted_classes(rho, ambient);
  const int m = rho.degree();
  std::vector<SmallPerm> elems;
  std::vector<int> twisted_id;
  for (std::size_t c = 0; c < partition.classes.size(); ++c)
    for (const SmallPerm& a : partition.classes[c]) {
      elems.push_back(a);
      twisted_id.push_back(static_cast<int>(c));
    }

  std::vector<SmallPerm> shifted;  // rho * a
  shifted.reserve(elems.size());
  for (const SmallPerm& a : elems) shifted.push_back(compose(rho, a));

  std::map<std::vector<int>, int> type_ids;
  std::vector<int> type_of(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    type_of[i] = type_ids.emplace(shifted[i].cycle_type(), static_cast<int>(type_ids.size()))
                     .first->second;
  (void)m;

  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const bool twisted_same = twisted_id[i] == twisted_id[j];
      bool conjugate_same;
      if (ambient == Ambient::sym) {
        conjugate_same = type_of[i] == type_of[j];
      } else {
        conjugate_same =
            type_of[i] == type_of[j] && alternating_conjugate(shifted[i], shifted[j]);
      }
      if (twisted_same != conjugate_same) return false;
    }
  return true;
}

bool conjugacy_equals_cycle_type(int m) {
  const TwistedClassPartition classes = twisted_classes(SmallPerm(m), Ambient::sym);
  std::map<std::vector<int>, std::vector<SmallPerm>> fibers;
  for (const SmallPerm& p : symmetric_group(m)) fibers[p.cycle_type()].push_back(p);
  if (fibers.size() != classes.classes.size()) return false;
  for (const auto& cls : classes.classes) {
    auto it = fibers.find(cls.front().cycle_type());
    if (it == fibers.end() || it->second != cls) return false;
  }
  return true;
}

std::vector<SmallPerm> normal_core(int degree, const std::vector<SmallPerm>& h_gens,
                                   const std::vector<SmallPerm>& g_gens) {
  const std::vector<SmallPerm> g = group_closure(degree, g_gens);
  const std::vector<SmallPerm> h = group_closure(degree, h_gens);
  if (!std::includes(g.begin(), g.end(), h.begin(), h.end()))
    throw PreconditionError("H is not contained in G");
  std::vector<SmallPerm> core;
  for (const SmallPerm& x : h) {
    bool in_all = true;
    for (const SmallPerm& gg : g) {
      if (!std::binary_search(h.begin(), h.end(), conj(x, gg))) {
        in_all = false;
        break;
      }
    }
    if (in_all) core.push_back(x);
  }
  // the intersection of conjugate subgroups is normal by construction
  for (const SmallPerm& x : core)
    for (const SmallPerm& gg : g_gens)
      if (!std::binary_search(core.begin(), core.end(), conj(x, gg)))
        throw std::logic_error("normal core failed its normality check");
  return core;
}

std::optional<SmallPerm> nesting_search(const SmallPerm& a, const SmallPerm& b) {
  if (a.degree() != b.degree()) throw AmbientMismatch("degree mismatch");
  for (const SmallPerm& g : symmetric_group(a.degree()))
    if (conj(a, g) == b) return g;
  return std::nullopt;
}

std::uint64_t partition_count(int m) {
  if (m < 0) throw PreconditionError("partition count needs m >= 0");
  std::vector<std::uint64_t> dp(m + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= m; ++part)
    for (int s = part; s <= m; ++s) dp[s] += dp[s - part];
  return dp[m];
}

std::string oracle_report(int m, const std::optional<SmallPerm>& rho, Ambient ambient,
                          bool tsv) {
  check_cap(m);
  std::vector<SmallPerm> rows;
  if (rho) {
    if (rho->degree() != m) throw AmbientMismatch("rho degree differs from --m");
    rows.push_back(*rho);
  } else {
    // one representative per cycle type, smallest rank first
    std::map<std::vector<int>, SmallPerm> reps;
    for (const SmallPerm& p : symmetric_group(m)) reps.try_emplace(p.cycle_type(), p);
    std::vector<SmallPerm> sorted;
    for (const auto& [type, rep] : reps) {
      (void)type;
      sorted.push_back(rep);
    }
    std::sort(sorted.begin(), sorted.end());
    rows = std::move(sorted);
  }

  const char* sep = tsv ? "\t" : " | ";
  std::ostringstream os;
  os << "rho" << sep << "ambient" << sep << "R(phi_rho)" << sep << "class sizes" << sep
     << "reformulation" << '\n';
  for (const SmallPerm& r : rows) {
    const TwistedClassPartition partition = twisted_classes(r, ambient);
    os << r.to_string() << sep << ambient_name(ambient, m) << sep << partition.classes.size()
       << sep;
    for (std::size_t i = 0; i < partition.classes.size(); ++i) {
      if (i) os << ',';
      os << partition.classes[i].size();
    }
    os << sep << (check_reformulation(r, ambient) ? "ok" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace permcensus
