#include "permcensus/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "permcensus/brute_oracle.hpp"
#include "permcensus/certificate.hpp"
#include "permcensus/errors.hpp"
#include "permcensus/rf_action.hpp"
#include "permcensus/text_format.hpp"
#include "permcensus/twisted.hpp"

namespace permcensus {

namespace {

std::string count_text(ExtendedCount c) {
  return c.is_infinite() ? "inf" : std::to_string(c.value());
}

// Reparse errors keep their offset but name the offending argument.
StructuredPermutation parse_element_arg(const std::string& text, const char* which) {
  try {
    return parse_element(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(which) + ": " + e.message, e.offset);
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_support(const SupportDescriptor& sd, std::ostream& out) {
  bool infinite = false;
  for (const auto& ray : sd.rays)
    if (ray.kind != SupportDescriptor::TailSupport::fixed) infinite = true;
  if (infinite)
    out << "support: infinite\n";
  else if (sd.core.empty())
    out << "support: empty\n";
  else
    out << "support: finite (" << sd.core.size() << " points)\n";

  out << "core:";
  if (sd.core.empty()) out << " none";
  for (const Point& p : sd.core) out << " (" << p.ray << "," << p.pos << ")";
  out << '\n';

  for (std::size_t i = 0; i < sd.rays.size(); ++i) {
    const auto& ray = sd.rays[i];
    out << "ray " << (i + 1) << ": ";
    switch (ray.kind) {
      case SupportDescriptor::TailSupport::fixed:
        out << "fixed past " << ray.horizon;
        break;
      case SupportDescriptor::TailSupport::moved:
        out << "moved past " << ray.horizon;
        break;
      case SupportDescriptor::TailSupport::residues: {
        out << "residues {";
        bool first = true;
        for (int r : ray.moved_residues) {
          if (!first) out << ",";
          out << r;
          first = false;
        }
        out << "} of period " << ray.period << " (phase " << ray.phase << ") moved past "
            << ray.horizon;
        break;
      }
    }
    out << '\n';
  }
}

int cmd_analyze(const std::string& literal, std::ostream& out) {
  StructuredPermutation g = parse_element_arg(literal, "element");
  out << g.cycle_census().to_string() << ", order=" << count_text(g.order()) << '\n';
  print_support(g.support_descriptor(), out);
  return 0;
}

int cmd_compose(const std::string& first, const std::string& second, std::ostream& out) {
  StructuredPermutation a = parse_element_arg(first, "first");
  StructuredPermutation b = parse_element_arg(second, "second");
  out << format_sperm(compose(a, b)) << '\n';
  return 0;
}

int cmd_witness(const std::string& literal, int count, std::ostream& out) {
  StructuredPermutation rho = parse_element_arg(literal, "rho");
  out << format_certificate(make_witness_family(rho, count));
  return 0;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    err << "cannot read file: " << path << '\n';
    return 2;
  }
  WitnessFamily family = parse_certificate(*text);
  if (!check_witness_family(family)) {
    out << "refuted\n";
    return 1;
  }
  out << "verified: " << family.witnesses.size() << " witnesses, strategy "
      << strategy_name(family.strategy) << ", separator " << separator_name(family.separator)
      << '\n';
  return 0;
}

int cmd_oracle(int m, const std::optional<std::string>& rho_text, bool alt, bool tsv,
               std::ostream& out) {
  std::optional<SmallPerm> rho;
  if (rho_text) {
    try {
      rho = parse_one_line(*rho_text);
    } catch (const ParseError& e) {
      throw ParseError("--rho: " + e.message, e.offset);
    }
  }
  out << oracle_report(m, rho, alt ? Ambient::alt : Ambient::sym, tsv);
  return 0;
}

int cmd_rfbuild(const std::string& path, std::ostream& out, std::ostream& err) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    err << "cannot read file: " << path << '\n';
    return 2;
  }
  UnionAction action = union_quotient_action(parse_quotient_family(*text));
  int total = 0;
  for (int d : action.block_degrees) total += d;
  out << "degree: " << total << '\n';
  out << "blocks:";
  for (int d : action.block_degrees) out << ' ' << d;
  out << '\n';
  for (std::size_t j = 0; j < action.generators.size(); ++j)
    out << "gen" << (j + 1) << ": " << action.generators[j].to_string() << '\n';
  out << (all_orbits_finite(action) ? "orbits: all finite\n" : "orbits: escaping\n");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact census and twisted-conjugacy toolkit", "permcensus"};
  app.require_subcommand(1);

  std::string first, second, rho_literal, cert_path, family_path;
  std::string format = "plain";
  std::string rho_one_line;
  int count = 5;
  int m = 0;
  bool alt = false;

  CLI::App* analyze = app.add_subcommand("analyze", "census, order and support of an element");
  analyze->add_option("element", first, "fperm or sperm literal")->required();

  CLI::App* comp = app.add_subcommand("compose", "normal form of a product");
  comp->add_option("first", first, "fperm or sperm literal")->required();
  comp->add_option("second", second, "fperm or sperm literal")->required();

  CLI::App* wit = app.add_subcommand("witness", "emit a witness-family certificate");
  wit->add_option("rho", rho_literal, "conjugator literal")->required();
  wit->add_option("--count", count, "number of witnesses")->check(CLI::Range(1, 1000000));

  CLI::App* ver = app.add_subcommand("verify", "re-verify a certificate from scratch");
  ver->add_option("certificate", cert_path, "certificate file")->required();

  CLI::App* orc = app.add_subcommand("oracle", "brute-force twisted-class tables");
  orc->add_option("--m", m, "ambient degree")->required()->check(CLI::Range(1, 64));
  orc->add_option("--rho", rho_one_line, "one-line conjugator (default: one per cycle type)");
  orc->add_flag("--alt", alt, "alternating ambient");
  orc->add_option("--format", format, "plain or tsv")
      ->check(CLI::IsMember({"plain", "tsv"}));

  CLI::App* rfb = app.add_subcommand("rfbuild", "union action of a quotient family");
  rfb->add_option("family", family_path, "quotient family file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(first, out);
    if (app.got_subcommand(comp)) return cmd_compose(first, second, out);
    if (app.got_subcommand(wit)) return cmd_witness(rho_literal, count, out);
    if (app.got_subcommand(ver)) return cmd_verify(cert_path, out, err);
    if (app.got_subcommand(orc)) {
      std::optional<std::string> rho_text;
      if (orc->count("--rho") > 0) rho_text = rho_one_line;
      return cmd_oracle(m, rho_text, alt, format == "tsv", out);
    }
    if (app.got_subcommand(rfb)) return cmd_rfbuild(family_path, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const WrongCase& e) {
    err << "hypothesis violation: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedComposition& e) {
    err << "unrepresentable: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace permcensus
