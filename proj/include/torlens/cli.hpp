#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "torlens/report.hpp"

namespace torlens {

namespace detail {

// "-" selects the provided stream (stdin in production).
inline std::string read_input_text(const std::string& path,
                                   std::istream& fallback) {
  if (path == "-") {
    std::ostringstream os;
    os << fallback.rdbuf();
    return os.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw InputFormatError("cannot open input file: " + path);
  }
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

// Half-open degree range "A..B".
inline std::pair<long long, long long> parse_m_range(const std::string& s) {
  const std::size_t sep = s.find("..");
  if (sep == std::string::npos) {
    throw InputFormatError("--m-range must look like A..B (got \"" + s +
                           "\")");
  }
  const std::string lo = s.substr(0, sep);
  const std::string hi = s.substr(sep + 2);
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const long long a = std::stoll(lo, &used_lo);
    const long long b = std::stoll(hi, &used_hi);
    if (used_lo != lo.size() || used_hi != hi.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return {a, b};
  } catch (const std::exception&) {
    throw InputFormatError("--m-range bounds must be integers (got \"" + s +
                           "\")");
  }
}

}  // namespace detail

// Exit codes: 0 success, 1 validation or semantic failure, 2 malformed
// input or usage error.
inline int run_cli(int argc, const char* const* argv, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{
      "invariants of lattice actions of odd-prime order and of the flat "
      "torus bundles they define"};
  app.require_subcommand(1);

  std::string input = "-";
  long long l_flag = 3;
  std::string m_range = "0..4";
  bool json_out = false;
  bool with_oracles = false;

  const auto add_input = [&input](CLI::App* cmd) {
    cmd->add_option("--input", input,
                    "input JSON document (\"-\" reads stdin)");
  };
  const auto add_l = [&l_flag](CLI::App* cmd) {
    return cmd->add_option(
        "--l", l_flag,
        "fiber sphere dimension, odd and >= 3 (overrides the document)");
  };

  CLI::App* validate =
      app.add_subcommand("validate", "check that the action is admissible");
  add_input(validate);

  CLI::App* invariants = app.add_subcommand(
      "invariants", "homology, conjugacy classes, fixed points, r-vector");
  add_input(invariants);

  CLI::App* ltheory =
      app.add_subcommand("ltheory", "L-group table and Whitehead groups");
  add_input(ltheory);
  ltheory->add_option("--m-range", m_range,
                      "half-open degree range A..B (default 0..4)");

  CLI::App* sset = app.add_subcommand(
      "structure-set", "periodic and geometric structure sets of the bundle");
  add_input(sset);
  CLI::Option* l_on_sset = add_l(sset);

  CLI::App* detect = app.add_subcommand(
      "detect", "splitting obstruction census and rho-invariant targets");
  add_input(detect);
  CLI::Option* l_on_detect = add_l(detect);

  CLI::App* verify =
      app.add_subcommand("verify", "run every independent oracle");
  add_input(verify);

  CLI::App* report =
      app.add_subcommand("report", "everything in one document");
  add_input(report);
  CLI::Option* l_on_report = add_l(report);
  report->add_option("--m-range", m_range,
                     "half-open degree range A..B (default 0..4)");
  report->add_flag("--json", json_out, "emit machine-readable JSON");
  report->add_flag("--with-oracles", with_oracles,
                   "append oracle outcomes to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const InputDocument doc =
        parse_input_document(detail::read_input_text(input, in));
    const ActionData action = validate_action(doc.p, doc.rho);

    const bool l_set = (l_on_sset->count() > 0) ||
                       (l_on_detect->count() > 0) ||
                       (l_on_report->count() > 0);

    ReportOptions opts;
    opts.l = l_set ? l_flag : doc.l.value_or(3);
    const auto [m_lo, m_hi] = detail::parse_m_range(m_range);
    opts.m_lo = m_lo;
    opts.m_hi = m_hi;
    opts.with_group_invariants =
        invariants->parsed() || report->parsed();
    opts.with_l_theory = ltheory->parsed() || report->parsed();
    opts.with_structure_sets = sset->parsed() || detect->parsed() ||
                               report->parsed();
    opts.with_detection = detect->parsed() || report->parsed();
    opts.with_oracles = verify->parsed() || with_oracles;

    const OrderedJson rep = build_report(action, opts);

    if (report->parsed() && json_out) {
      out << rep.dump(2) << "\n";
    } else {
      out << render_text(rep);
    }

    if (verify->parsed()) {
      for (const auto& row : rep["oracles"]) {
        if (!row["agree"].get<bool>()) return 1;
      }
    }
    return 0;
  } catch (const InputFormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ActionValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace torlens
