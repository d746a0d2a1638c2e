#include "permcensus/certificate.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "permcensus/errors.hpp"
#include "permcensus/text_format.hpp"

namespace permcensus {

namespace {

struct Line {
  std::string_view text;  // without the trailing newline
  std::size_t offset;     // of the line start in the document
};

std::vector<Line> split_lines(std::string_view doc) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= doc.size()) {
    std::size_t nl = doc.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back({doc.substr(start), start});
      break;
    }
    lines.push_back({doc.substr(start, nl - start), start});
    start = nl + 1;
  }
  return lines;
}

// strips `prefix` or fails at the line start
std::string_view expect_prefix(const Line& line, std::string_view prefix) {
  if (line.text.substr(0, prefix.size()) != prefix)
    throw ParseError("expected a line starting with '" + std::string(prefix) + "'", line.offset);
  return line.text.substr(prefix.size());
}

std::uint64_t parse_u64(std::string_view text, std::size_t offset, const char*& next) {
  std::uint64_t value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || p == text.data())
    throw ParseError("expected an unsigned integer", offset);
  next = p;
  return value;
}

// reruns a nested literal parser with offsets rebased into the document
template <typename F>
auto rebased(F&& parse, std::size_t base) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw ParseError(e.message, base + e.offset);
  }
}

}  // namespace

std::string format_certificate(const WitnessFamily& family) {
  std::ostringstream os;
  os << "witness-certificate v1\n";
  os << "rho: " << format_sperm(family.rho) << '\n';
  os << "strategy: " << strategy_name(family.strategy) << '\n';
  os << "separator: " << separator_name(family.separator);
  if (family.separator == SeparatorKind::eta_s) os << " s=" << family.s;
  os << '\n';
  for (std::size_t i = 0; i < family.witnesses.size(); ++i) {
    os << "witness: value=" << family.values[i] << " perm=" << format_fperm(family.witnesses[i])
       << '\n';
  }
  os << "end\n";
  return os.str();
}

WitnessFamily parse_certificate(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  std::size_t at = 0;
  auto next_line = [&]() -> const Line& {
    if (at >= lines.size())
      throw ParseError("unexpected end of certificate", text.size());
    return lines[at++];
  };

  {
    const Line& header = next_line();
    if (header.text != "witness-certificate v1")
      throw ParseError("expected 'witness-certificate v1'", header.offset);
  }

  const Line& rho_line = next_line();
  std::string_view rho_text = expect_prefix(rho_line, "rho: ");
  StructuredPermutation rho =
      rebased([&] { return parse_sperm(rho_text); }, rho_line.offset + 5);

  const Line& strategy_line = next_line();
  std::string_view strategy_text = expect_prefix(strategy_line, "strategy: ");
  Strategy strategy;
  try {
    strategy = strategy_from_name(std::string(strategy_text));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), strategy_line.offset + 10);
  }

  const Line& sep_line = next_line();
  std::string_view sep_text = expect_prefix(sep_line, "separator: ");
  SeparatorKind separator;
  std::uint64_t s = 1;
  if (sep_text == "eta_1") {
    separator = SeparatorKind::eta_1;
  } else if (sep_text == "support-nesting") {
    separator = SeparatorKind::support_nesting;
    s = 2;
  } else if (sep_text == "cycle-length") {
    separator = SeparatorKind::cycle_length;
  } else if (sep_text.substr(0, 8) == "eta_s s=") {
    separator = SeparatorKind::eta_s;
    const char* next = nullptr;
    s = parse_u64(sep_text.substr(8), sep_line.offset + 19, next);
    if (next != sep_text.data() + sep_text.size())
      throw ParseError("trailing input after the separator",
                       sep_line.offset + 11 + (next - sep_text.data()));
  } else {
    throw ParseError("unknown separator", sep_line.offset + 11);
  }

  WitnessFamily family{std::move(rho), strategy, separator, s, {}, {}};
  while (true) {
    const Line& line = next_line();
    if (line.text == "end") break;
    std::string_view rest = expect_prefix(line, "witness: value=");
    const char* next = nullptr;
    family.values.push_back(parse_u64(rest, line.offset + 15, next));
    std::string_view after(next, rest.data() + rest.size() - next);
    const std::size_t after_offset = line.offset + 15 + (next - rest.data());
    if (after.substr(0, 6) != " perm=")
      throw ParseError("expected ' perm=' after the witness value", after_offset);
    family.witnesses.push_back(
        rebased([&] { return parse_fperm(after.substr(6)); }, after_offset + 6));
  }

  for (; at < lines.size(); ++at) {
    if (!lines[at].text.empty())
      throw ParseError("trailing input after 'end'", lines[at].offset);
  }
  return family;
}

}  // namespace permcensus
