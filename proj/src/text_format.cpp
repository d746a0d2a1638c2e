#include "permcensus/text_format.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "permcensus/errors.hpp"

namespace permcensus {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t base = 0;  // offset of s inside the original input

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base + pos); }

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  void ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool try_consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  void keyword(std::string_view kw) {
    if (s.substr(pos, kw.size()) != kw) fail("expected '" + std::string(kw) + "'");
    pos += kw.size();
  }

  std::int64_t integer() {
    std::size_t start = pos;
    bool neg = false;
    if (try_consume('-')) {
      neg = true;
    } else {
      try_consume('+');
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos = start;
      fail("expected an integer");
    }
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      int digit = s[pos] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("integer overflow");
      value = value * 10 + digit;
      ++pos;
    }
    return neg ? -value : value;
  }

  int small_int(const std::string& what) {
    std::size_t at = pos;
    std::int64_t v = integer();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      pos = at;
      fail(what + " out of range");
    }
    return static_cast<int>(v);
  }

  void end() {
    ws();
    if (!done()) fail("trailing input");
  }
};

void print_point(std::ostream& os, Point p) { os << '(' << p.ray << ',' << p.pos << ')'; }

Point parse_point(Cursor& c) {
  c.expect('(');
  int ray = c.small_int("ray index");
  c.expect(',');
  std::int64_t pos = c.integer();
  c.expect(')');
  return Point{ray, pos};
}

// `fperm n=<n> cycles=((r,p) (r,p) ...)(...)`; consumes the cursor to the end.
FinitePermutation parse_fperm_at(Cursor& c) {
  c.ws();
  c.keyword("fperm");
  c.ws();
  c.keyword("n=");
  std::size_t n_at = c.pos;
  int rays = c.small_int("ray count");
  if (rays < 1) {
    c.pos = n_at;
    c.fail("ray count must be positive");
  }
  c.ws();
  c.keyword("cycles=");
  std::vector<std::vector<Point>> cycles;
  while (true) {
    std::size_t before = c.pos;
    c.ws();
    if (c.done()) break;
    if (c.peek() != '(') {
      c.pos = before;
      break;
    }
    c.expect('(');
    std::vector<Point> cycle;
    cycle.push_back(parse_point(c));
    while (true) {
      c.ws();
      if (c.try_consume(')')) break;
      cycle.push_back(parse_point(c));
    }
    cycles.push_back(std::move(cycle));
  }
  c.end();
  try {
    return FinitePermutation::from_cycles(rays, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), c.base);
  }
}

// One tail entry: T(<shift>) or P(<p>:<block>).
TailDescriptor parse_tail(Cursor& c) {
  if (c.try_consume('T')) {
    c.expect('(');
    std::int64_t shift = c.integer();
    c.expect(')');
    return TailDescriptor::translation(shift);
  }
  if (c.try_consume('P')) {
    c.expect('(');
    std::size_t p_at = c.pos;
    std::int64_t period = c.integer();
    if (period < 1) {
      c.pos = p_at;
      c.fail("block period must be positive");
    }
    c.expect(':');
    std::vector<int> block;
    if (period <= 10) {
      for (std::int64_t i = 0; i < period; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a block digit");
        block.push_back(c.s[c.pos] - '0');
        ++c.pos;
      }
    } else {
      block.push_back(c.small_int("block value"));
      while (c.try_consume(',')) block.push_back(c.small_int("block value"));
      if (static_cast<std::int64_t>(block.size()) != period) c.fail("block length does not match period");
    }
    for (std::size_t r = 0; r < block.size(); ++r) {
      if (block[r] < 0 || block[r] >= period) c.fail("block value out of range");
    }
    c.expect(')');
    return TailDescriptor::periodic(block);
  }
  c.fail("expected a tail descriptor 'T(...)' or 'P(...)'");
}

void print_tail(std::ostream& os, const TailDescriptor& t) {
  if (t.is_translation()) {
    os << "T(";
    if (t.shift > 0) os << '+';
    os << t.shift << ')';
    return;
  }
  os << "P(" << t.period() << ':';
  if (t.period() <= 10) {
    for (int v : t.block) os << v;
  } else {
    for (std::size_t r = 0; r < t.block.size(); ++r) {
      if (r > 0) os << ',';
      os << t.block[r];
    }
  }
  os << ')';
}

}  // namespace

std::string format_fperm(const FinitePermutation& f) {
  std::ostringstream os;
  os << "fperm n=" << f.ray_count() << " cycles=";
  for (const auto& cycle : f.cycle_decomposition()) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) os << ' ';
      print_point(os, cycle[i]);
    }
    os << ')';
  }
  return os.str();
}

FinitePermutation parse_fperm(std::string_view text) {
  Cursor c{text, 0, 0};
  return parse_fperm_at(c);
}

std::string format_sperm(const StructuredPermutation& g) {
  std::ostringstream os;
  os << "sperm n=" << g.ray_count() << " pi=";
  for (int i = 0; i < g.ray_count(); ++i) {
    if (i > 0) os << ',';
    os << g.ray_map()[i];
  }
  os << " tails=[";
  for (int i = 0; i < g.ray_count(); ++i) {
    if (i > 0) os << ',';
    print_tail(os, g.tails()[i]);
  }
  os << "] M=[";
  for (int i = 0; i < g.ray_count(); ++i) {
    if (i > 0) os << ',';
    os << g.thresholds()[i];
  }
  os << "] corr=" << format_fperm(g.correction());
  return os.str();
}

StructuredPermutation parse_sperm(std::string_view text) {
  Cursor c{text, 0, 0};
  c.ws();
  c.keyword("sperm");
  c.ws();
  c.keyword("n=");
  std::size_t n_at = c.pos;
  int rays = c.small_int("ray count");
  if (rays < 1) {
    c.pos = n_at;
    c.fail("ray count must be positive");
  }

  c.ws();
  c.keyword("pi=");
  std::vector<int> ray_map;
  ray_map.push_back(c.small_int("ray image"));
  while (c.try_consume(',')) ray_map.push_back(c.small_int("ray image"));
  if (static_cast<int>(ray_map.size()) != rays) c.fail("pi length does not match n");

  c.ws();
  c.keyword("tails=[");
  std::vector<TailDescriptor> tails;
  tails.push_back(parse_tail(c));
  while (c.try_consume(',')) tails.push_back(parse_tail(c));
  c.expect(']');
  if (static_cast<int>(tails.size()) != rays) c.fail("tail list length does not match n");

  c.ws();
  c.keyword("M=[");
  std::vector<std::int64_t> thresholds;
  thresholds.push_back(c.integer());
  while (c.try_consume(',')) thresholds.push_back(c.integer());
  c.expect(']');
  if (static_cast<int>(thresholds.size()) != rays) c.fail("threshold list length does not match n");

  c.ws();
  c.keyword("corr=");
  Cursor rest{text.substr(c.pos), 0, c.pos};
  FinitePermutation corr = parse_fperm_at(rest);

  try {
    return StructuredPermutation(rays, std::move(ray_map), std::move(tails), std::move(thresholds),
                                 std::move(corr));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

StructuredPermutation parse_element(std::string_view text) {
  Cursor probe{text, 0, 0};
  probe.ws();
  if (text.substr(probe.pos, 5) == "fperm") return StructuredPermutation::embed(parse_fperm(text));
  if (text.substr(probe.pos, 5) == "sperm") return parse_sperm(text);
  probe.fail("expected an 'fperm' or 'sperm' literal");
}

SmallPerm parse_one_line(std::string_view text) {
  Cursor c{text, 0, 0};
  c.ws();
  std::vector<int> images;
  if (text.find(',') == std::string_view::npos) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a permutation digit");
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      images.push_back(c.s[c.pos] - '0');
      ++c.pos;
    }
  } else {
    images.push_back(c.small_int("image"));
    while (c.try_consume(',')) images.push_back(c.small_int("image"));
  }
  c.end();
  try {
    return SmallPerm(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace permcensus
