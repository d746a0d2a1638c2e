#include "permcensus/small_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permcensus/errors.hpp"

namespace permcensus {

SmallPerm::SmallPerm(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

SmallPerm::SmallPerm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("one-line notation is not a bijection of 1..m");
    seen[v - 1] = 1;
  }
}

SmallPerm SmallPerm::transposition(int degree, int a, int b) {
  return cycle(degree, {a, b});
}

SmallPerm SmallPerm::cycle(int degree, const std::vector<int>& points) {
  SmallPerm p(degree);
  if (points.size() < 2) throw std::invalid_argument("cycle of length < 2");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i], to = points[(i + 1) % points.size()];
    if (from < 1 || from > degree) throw std::invalid_argument("cycle point outside 1..m");
    if (p.images_[from - 1] != from) throw std::invalid_argument("cycle repeats a point");
    p.images_[from - 1] = to;
  }
  return SmallPerm(p.images_);  // revalidates, catching duplicate targets
}

int SmallPerm::apply(int i) const {
  if (i < 1 || i > degree()) throw std::invalid_argument("point outside 1..m");
  return images_[i - 1];
}

bool SmallPerm::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

SmallPerm SmallPerm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  return SmallPerm(std::move(inv));
}

Parity SmallPerm::parity() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t SmallPerm::order() const {
  std::uint64_t result = 1;
  for (int len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::vector<int> SmallPerm::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (int s = 1; s <= degree(); ++s) {
    if (seen[s - 1]) continue;
    int len = 0;
    for (int j = s; !seen[j - 1]; j = images_[j - 1]) {
      seen[j - 1] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::set<int> SmallPerm::support() const {
  std::set<int> s;
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) s.insert(i);
  return s;
}

std::uint64_t factorial(int m) {
  if (m < 0 || m > 20) throw std::invalid_argument("factorial argument out of range");
  std::uint64_t f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

std::uint64_t SmallPerm::rank() const {
  const int m = degree();
  std::uint64_t r = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (images_[j] < images_[i]) ++smaller;
    r += smaller * factorial(m - 1 - i);
  }
  return r;
}

SmallPerm SmallPerm::unrank(int degree, std::uint64_t r) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  if (r >= factorial(degree)) throw std::invalid_argument("rank out of range");
  std::vector<int> pool(degree);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  for (int i = degree - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const std::size_t k = static_cast<std::size_t>(r / f);
    r %= f;
    images.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return SmallPerm(std::move(images));
}

std::string SmallPerm::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < degree(); ++i) {
    if (degree() > 9 && i > 0) os << ',';
    os << images_[i];
  }
  return os.str();
}

SmallPerm compose(const SmallPerm& a, const SmallPerm& b) {
  if (a.degree() != b.degree()) {
    throw AmbientMismatch("compose: degrees " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
  }
  std::vector<int> images(a.degree());
  for (int i = 1; i <= a.degree(); ++i) images[i - 1] = b.apply(a.apply(i));
  return SmallPerm(std::move(images));
}

}  // namespace permcensus
