#include "permideal/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "permideal/ideal.hpp"
#include "permideal/permanental.hpp"
#include "permideal/poly_text.hpp"
#include "permideal/primes.hpp"
#include "permideal/report_json.hpp"
#include "permideal/verify.hpp"

namespace permideal {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  int m = 3;
  int n = 3;
  std::string field = "q";
  std::string order = "diag-lex";
  long budget_ms = 60'000;
  std::string out;
};

struct Inputs {
  std::vector<std::string> ideals;
  std::vector<std::string> ideal_files;
  std::string poly;
  int r = 2;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--m", c.m, "Number of rows")->capture_default_str();
  cmd->add_option("--n", c.n, "Number of columns")->capture_default_str();
  cmd->add_option("--field", c.field, "q or fp:<p>")->capture_default_str();
  cmd->add_option("--order", c.order, "diag-lex or diag-lex-T")->capture_default_str();
  cmd->add_option("--budget-ms", c.budget_ms, "Time budget per basis computation; 0 for none")
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write results to this file instead of standard output");
}

void add_ideal_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--ideal", in.ideals,
                  "Named ideal: perm2, perm<r>, radical, q-component, unmixed-1, unmixed-2, "
                  "unmixed-3");
  cmd->add_option("--ideal-file", in.ideal_files, "File with one generator per line");
  cmd->add_option("--r", in.r, "Subpermanent size for --ideal perm")->capture_default_str();
}

Ring make_ring(const Common& c) { return Ring(Shape(c.m, c.n), FieldSpec::parse(c.field)); }

GbOptions make_options(const Common& c) {
  GbOptions o;
  if (c.budget_ms > 0) o.budget = Budget::millis(c.budget_ms);
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Ideal named_ideal(const std::string& name, const Ring& ring, int r) {
  if (name == "perm2") return permanental_ideal(ring, 2);
  if (name == "perm") return permanental_ideal(ring, r);
  if (name.rfind("perm", 0) == 0 && name.size() > 4 &&
      name.find_first_not_of("0123456789", 4) == std::string::npos) {
    return permanental_ideal(ring, std::stoi(name.substr(4)));
  }
  if (name == "radical") return radical_generators(ring);
  if (name == "q-component") return embedded_Q(ring);
  if (name == "unmixed-1") return unmixed_part(ring, 1);
  if (name == "unmixed-2") return unmixed_part(ring, 2);
  if (name == "unmixed-3") return unmixed_part(ring, 3);
  throw UsageError("unknown ideal '" + name + "'");
}

std::vector<Ideal> collect_ideals(const Inputs& in, const Ring& ring) {
  std::vector<Ideal> out;
  for (const auto& name : in.ideals) out.push_back(named_ideal(name, ring, in.r));
  for (const auto& path : in.ideal_files) {
    out.emplace_back(ring, parse_poly_list(read_file(path), ring));
  }
  return out;
}

Ideal single_ideal(const Inputs& in, const Ring& ring) {
  auto ideals = collect_ideals(in, ring);
  if (ideals.empty()) return permanental_ideal(ring);
  if (ideals.size() != 1) throw UsageError("expected one ideal");
  return ideals.front();
}

Polynomial required_poly(const Inputs& in, const Ring& ring) {
  if (in.poly.empty()) throw UsageError("--poly is required");
  return parse_poly(in.poly, ring);
}

void print_generators(std::ostream& os, const std::vector<Polynomial>& gens,
                      const TermOrder& order) {
  for (const auto& g : gens) os << print_poly(g, order) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases, decompositions and checks for 2x2 permanental ideals",
               "permideal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  Common common;
  Inputs inputs;
  bool allow_large = false;
  bool timings = false;
  bool json = false;
  std::string checks;

  auto* gb = app.add_subcommand("gb", "Canonical reduced Groebner basis of an ideal");
  auto* nf = app.add_subcommand("nf", "Normal form of a polynomial modulo an ideal");
  auto* member = app.add_subcommand("member", "Ideal membership");
  auto* radical = app.add_subcommand("radical-member", "Radical membership");
  auto* intersect = app.add_subcommand("intersect", "Intersection of two or more ideals");
  auto* count = app.add_subcommand("count", "Counting formulas for a shape");
  auto* primes = app.add_subcommand("primes", "Minimal primes with heights");
  auto* decompose = app.add_subcommand("decompose", "Primary decomposition pieces");
  auto* verify = app.add_subcommand("verify", "Run the check suite");

  for (auto* cmd : {gb, nf, member, radical, intersect, count, primes, decompose, verify}) {
    add_common(cmd, common);
  }
  for (auto* cmd : {gb, nf, member, radical, intersect}) add_ideal_inputs(cmd, inputs);
  for (auto* cmd : {nf, member, radical}) cmd->add_option("--poly", inputs.poly, "Polynomial");
  verify->add_option("--checks", checks, "Comma-separated check ids");
  for (auto* cmd : {intersect, decompose, verify}) {
    cmd->add_flag("--allow-large", allow_large, "Allow intersections beyond 3x3");
  }
  verify->add_flag("--timings", timings, "Record elapsed times in the JSON report");
  verify->add_flag("--json", json, "Print the JSON report instead of the table");

  std::vector<const char*> argv{"permideal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!common.out.empty()) {
    file.open(common.out);
    if (!file) {
      err << "permideal: cannot write " << common.out << "\n";
      return kExitUsage;
    }
  }
  std::ostream& os = common.out.empty() ? out : file;

  try {
    const Ring ring = make_ring(common);
    const TermOrder order = TermOrder::parse(common.order);
    const GbOptions options = make_options(common);
    const bool small = common.m <= 3 && common.n <= 3;

    if (*gb) {
      const Ideal ideal = single_ideal(inputs, ring);
      const auto report = ideal.groebner(order, options);
      print_generators(os, report->basis, order);
      err << report->basis.size() << " elements, " << report->stats.s_pairs_processed
          << " S-pairs reduced\n";
    } else if (*nf) {
      const Ideal ideal = single_ideal(inputs, ring);
      os << print_poly(normal_form(required_poly(inputs, ring), ideal.basis(order, options), order),
                       order)
         << "\n";
    } else if (*member) {
      const Ideal ideal = single_ideal(inputs, ring);
      os << (ideal_member(required_poly(inputs, ring), ideal, order, options) ? "true" : "false")
         << "\n";
    } else if (*radical) {
      const Ideal ideal = single_ideal(inputs, ring);
      os << (radical_member(required_poly(inputs, ring), ideal, order, options) ? "true" : "false")
         << "\n";
    } else if (*intersect) {
      const auto ideals = collect_ideals(inputs, ring);
      if (ideals.size() < 2) throw UsageError("intersect needs at least two ideals");
      if (!small && !allow_large) throw UsageError("intersections beyond 3x3 need --allow-large");
      print_generators(os, intersect_all(ideals, order, options).basis(order, options), order);
    } else if (*count) {
      os << "gb=" << gb_count_formula(ring.shape) << "\n"
         << "radical-gb=" << radical_gb_count_formula(ring.shape) << "\n"
         << "components=" << component_count(ring.shape) << "\n"
         << "gap-length=" << gap_length_formula(ring.shape) << "\n";
    } else if (*primes) {
      for (const auto& p : minimal_primes(ring.shape)) {
        os << p.describe() << "  height=" << p.height(ring.shape) << "\n";
      }
    } else if (*decompose) {
      if (ring.shape.m >= 3 && ring.shape.n >= 3) {
        os << "# Q\n";
        print_generators(os, embedded_Q(ring).generators(), order);
      }
      for (int k = 1; k <= 3; ++k) {
        if ((k == 1 && ring.shape.n < 3) || (k == 2 && ring.shape.m < 3)) continue;
        os << "# I" << k << "\n";
        print_generators(os, unmixed_part(ring, k).generators(), order);
      }
      os << "# minimal primes\n";
      for (const auto& p : minimal_primes(ring.shape)) {
        os << p.describe() << "  height=" << p.height(ring.shape) << "\n";
      }
    } else if (*verify) {
      SuiteOptions suite;
      suite.shape = ring.shape;
      suite.field = ring.field;
      suite.order = order;
      suite.gb = options;
      suite.allow_large = allow_large;
      std::stringstream ids(checks);
      for (std::string id; std::getline(ids, id, ',');) {
        if (!id.empty()) suite.checks.push_back(id);
      }
      const Report report = run_suite(suite);
      if (json) {
        os << report_to_json(report, timings);
      } else if (!common.out.empty()) {
        os << report_to_json(report, timings);
        out << render_text(report);
      } else {
        os << render_text(report);
      }
      if (report.any_failed()) return kExitCheckFailed;
      if (report.any_timeout()) return kExitBudget;
    }
  } catch (const BudgetExceeded& e) {
    err << "permideal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "permideal: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "permideal: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "permideal: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace permideal
