#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torlens/abelian_group.hpp"
#include "torlens/action.hpp"
#include "torlens/base.hpp"
#include "torlens/group_invariants.hpp"
#include "torlens/l_theory.hpp"
#include "torlens/oracles.hpp"
#include "torlens/structure_sets.hpp"

namespace torlens {

using OrderedJson = nlohmann::ordered_json;

// Malformed input document: not JSON, missing or mistyped fields, ragged or
// non-square matrix.  Distinct from validation failures on a well-formed
// action.
class InputFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputDocument {
  Int p;
  IntMatrix rho;
  std::optional<long long> l;
};

namespace detail {

// Integers arrive as JSON numbers or, when they may exceed 64 bits, as
// decimal strings.
inline Int json_to_int(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start ||
        s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw InputFormatError("field \"" + field +
                             "\" is not a decimal integer string: \"" + s +
                             "\"");
    }
    return Int(s);
  }
  throw InputFormatError("field \"" + field +
                         "\" must be an integer or a decimal string");
}

}  // namespace detail

// Parses the single-document input format
//   {"p": 3, "rho": [[0, -1], [1, -1]], "l": 3}
// where "l" is optional and every integer may also be a decimal string.
inline InputDocument parse_input_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError(std::string("input is not valid JSON: ") +
                           e.what());
  }
  if (!doc.is_object()) {
    throw InputFormatError("input must be a JSON object");
  }
  if (!doc.contains("p")) throw InputFormatError("missing field \"p\"");
  if (!doc.contains("rho")) throw InputFormatError("missing field \"rho\"");

  InputDocument out;
  out.p = detail::json_to_int(doc["p"], "p");

  const nlohmann::json& rho = doc["rho"];
  if (!rho.is_array() || rho.empty()) {
    throw InputFormatError("field \"rho\" must be a nonempty array of rows");
  }
  std::vector<std::vector<Int>> rows;
  rows.reserve(rho.size());
  for (const auto& row : rho) {
    if (!row.is_array()) {
      throw InputFormatError("field \"rho\" must be an array of arrays");
    }
    std::vector<Int> conv;
    conv.reserve(row.size());
    for (const auto& entry : row) {
      conv.push_back(detail::json_to_int(entry, "rho"));
    }
    if (conv.size() != rho.front().size()) {
      throw InputFormatError("field \"rho\" has rows of unequal length");
    }
    rows.push_back(std::move(conv));
  }
  if (rows.size() != rows.front().size()) {
    throw InputFormatError("field \"rho\" must be a square matrix");
  }
  out.rho = IntMatrix::from_rows(rows);

  if (doc.contains("l")) {
    out.l = to_long_long(detail::json_to_int(doc["l"], "l"), "l");
  }
  return out;
}

inline OrderedJson group_to_json(const FgAbGroup& g) {
  OrderedJson j;
  j["free_rank"] = g.free_rank;
  j["invariant_factors"] = OrderedJson::array();
  for (const Int& d : g.invariant_factors) {
    j["invariant_factors"].push_back(d.str());
  }
  j["symbolic_summands"] = g.symbolic_summands;
  j["rendered"] = render_group(g);
  return j;
}

inline OrderedJson module_to_json(const LocalizedModule& m) {
  OrderedJson j;
  j["coefficient"] =
      m.inverted == 1 ? "Z" : "Z[1/" + m.inverted.str() + "]";
  j["free_rank"] = m.free_rank;
  j["torsion"] = OrderedJson::array();
  for (const Int& d : m.torsion) j["torsion"].push_back(d.str());
  j["rendered"] = render_module(m);
  return j;
}

// Section toggles for build_report; input and validation are always present.
struct ReportOptions {
  long long l = 3;
  long long m_lo = 0;
  long long m_hi = 4;  // half-open upper end
  bool with_group_invariants = false;
  bool with_l_theory = false;
  bool with_structure_sets = false;
  bool with_detection = false;
  bool with_oracles = false;
};

// Assembles the machine-readable report for a validated action.  Integers
// that may exceed 64 bits are decimal strings; bounded counts are numbers.
inline OrderedJson build_report(const ActionData& a, const ReportOptions& o) {
  OrderedJson rep;
  rep["schema"] = "torlens-report/1";

  {
    OrderedJson in;
    in["p"] = a.p.str();
    OrderedJson rho = OrderedJson::array();
    for (std::size_t i = 0; i < a.n; ++i) {
      OrderedJson row = OrderedJson::array();
      for (std::size_t j = 0; j < a.n; ++j) row.push_back(a.rho.at(i, j).str());
      rho.push_back(std::move(row));
    }
    in["rho"] = std::move(rho);
    in["l"] = o.l;
    rep["input"] = std::move(in);
  }

  {
    OrderedJson val;
    val["valid"] = true;
    val["n"] = static_cast<long long>(a.n);
    val["k"] = a.k;
    val["det_rho_minus_id"] = a.det_rho_minus_id.str();
    val["fixed_point_count"] = fixed_point_count(a).str();
    rep["validation"] = std::move(val);
  }

  if (o.with_group_invariants) {
    OrderedJson gi;
    gi["h1"] = group_to_json(h1(a));
    gi["abelianization"] = group_to_json(abelianization(a));
    gi["commutator_lattice_rank_full"] = commutator_rank_check(a);
    gi["subgroup_weyl_group"] = "trivial";
    const auto classes = conjugacy_classes(a);
    gi["conjugacy_class_count"] = static_cast<long long>(classes.size());
    OrderedJson cj = OrderedJson::array();
    for (const auto& c : classes) {
      OrderedJson row;
      row["label"] = c.label;
      OrderedJson tr = OrderedJson::array();
      for (const Int& t : c.translation) tr.push_back(t.str());
      row["translation"] = std::move(tr);
      cj.push_back(std::move(row));
    }
    gi["conjugacy_classes"] = std::move(cj);
    OrderedJson fps = OrderedJson::array();
    for (const auto& pt : torus_fixed_points(a)) {
      OrderedJson coords = OrderedJson::array();
      for (const Rational& c : pt.coordinates) coords.push_back(c.str());
      fps.push_back(std::move(coords));
    }
    gi["fixed_points"] = std::move(fps);
    gi["r_vector"] = fixed_exterior_ranks(a);
    rep["group_invariants"] = std::move(gi);
  }

  if (o.with_l_theory) {
    if (o.m_lo >= o.m_hi) {
      throw InputFormatError("m-range is empty: lower bound must be smaller");
    }
    if (o.m_hi - o.m_lo > 1024) {
      throw InputFormatError("m-range spans more than 1024 degrees");
    }
    OrderedJson lt;
    lt["peripheral_free_rank"] = peripheral_free_rank(a);
    lt["m_range"] = {o.m_lo, o.m_hi};
    OrderedJson table = OrderedJson::array();
    for (long long m = o.m_lo; m < o.m_hi; ++m) {
      OrderedJson row;
      row["m"] = m;
      row["group"] = group_to_json(ls_of_zgamma(a, m));
      table.push_back(std::move(row));
    }
    lt["table"] = std::move(table);
    lt["whitehead_1"] = group_to_json(whitehead_group(a, 1));
    lt["whitehead_0"] = group_to_json(whitehead_group(a, 0));
    rep["l_theory"] = std::move(lt);
  }

  if (o.with_structure_sets || o.with_detection) {
    const ManifoldParams mp = make_manifold_params(a, o.l);
    if (o.with_structure_sets) {
      OrderedJson ss;
      ss["l"] = mp.l;
      ss["dim"] = mp.dim;
      ss["d"] = mp.d;
      ss["rho_sign"] = mp.rho_sign;
      ss["bgamma_periodic_odd_m"] = module_to_json(sper_of_bgamma(a, 1));
      ss["bgamma_periodic_even_m"] = module_to_json(sper_of_bgamma(a, 0));
      ss["m_periodic"] = group_to_json(sper_of_m(mp));
      ss["m_geometric"] = group_to_json(sgeo_of_m(mp));
      rep["structure_sets"] = std::move(ss);
    }
    if (o.with_detection) {
      const DetectionReport dr = detection_report(mp);
      OrderedJson det;
      det["sigma_codomain"] = group_to_json(dr.sigma_codomain);
      OrderedJson rows = OrderedJson::array();
      for (const SplittingEntry& e : dr.splitting_entries) {
        OrderedJson row;
        row["subset"] = e.subset;
        row["vacuous"] = e.vacuous;
        row["group"] = group_to_json(e.obstruction_group);
        rows.push_back(std::move(row));
      }
      det["splitting_obstructions"] = std::move(rows);
      det["nontrivial_splitting_count"] = dr.nontrivial_splitting_count;
      OrderedJson targets = OrderedJson::array();
      for (const RhoTarget& t : dr.rho_entries) {
        OrderedJson row;
        row["label"] = t.class_rep.label;
        OrderedJson tr = OrderedJson::array();
        for (const Int& v : t.class_rep.translation) tr.push_back(v.str());
        row["translation"] = std::move(tr);
        row["target"] = module_to_json(t.target);
        targets.push_back(std::move(row));
      }
      det["rho_targets"] = std::move(targets);
      det["free_rank_audit"] = {{"direct", dr.audited_free_rank_direct},
                                {"summed", dr.audited_free_rank_summed}};
      rep["detection"] = std::move(det);
    }
  }

  if (o.with_oracles) {
    OrderedJson rows = OrderedJson::array();
    for (const OracleOutcome& oc : run_all_oracles(a)) {
      OrderedJson row;
      row["name"] = oc.name;
      row["expected"] = oc.expected;
      row["actual"] = oc.actual;
      row["agree"] = oc.agree;
      rows.push_back(std::move(row));
    }
    rep["oracles"] = std::move(rows);
  }
  return rep;
}

namespace detail {

inline std::string join_strings(const OrderedJson& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

}  // namespace detail

// Human-readable rendering; a pure function of the JSON report, so text and
// JSON output can never drift apart.
inline std::string render_text(const OrderedJson& rep) {
  std::ostringstream os;

  if (rep.contains("input")) {
    const auto& in = rep["input"];
    os << "[input]\n";
    os << "p = " << in["p"].get<std::string>() << "\n";
    os << "l = " << in["l"] << "\n";
    os << "rho =\n";
    for (const auto& row : in["rho"]) {
      os << "  [" << detail::join_strings(row, ", ") << "]\n";
    }
  }

  if (rep.contains("validation")) {
    const auto& val = rep["validation"];
    os << "\n[validation]\n";
    os << "valid action: p is an odd prime, rho has order p and is free away "
          "from the origin\n";
    os << "n = " << val["n"] << ", k = " << val["k"] << "\n";
    os << "det(rho - id) = " << val["det_rho_minus_id"].get<std::string>()
       << "\n";
    os << "torus fixed points: "
       << val["fixed_point_count"].get<std::string>() << "\n";
  }

  if (rep.contains("group_invariants")) {
    const auto& gi = rep["group_invariants"];
    os << "\n[group invariants]\n";
    os << "H_1 = " << gi["h1"]["rendered"].get<std::string>() << "\n";
    os << "abelianization = "
       << gi["abelianization"]["rendered"].get<std::string>() << "\n";
    os << "Weyl group of each order-p subgroup: "
       << gi["subgroup_weyl_group"].get<std::string>() << "\n";
    os << "conjugacy classes of order-p subgroups: "
       << gi["conjugacy_class_count"] << "\n";
    for (const auto& c : gi["conjugacy_classes"]) {
      os << "  class " << c["label"] << ": translation ("
         << detail::join_strings(c["translation"], ", ") << ")\n";
    }
    os << "torus fixed points:\n";
    for (const auto& pt : gi["fixed_points"]) {
      os << "  (" << detail::join_strings(pt, ", ") << ")\n";
    }
    os << "r-vector: (" << detail::join_strings(gi["r_vector"], ", ")
       << ")\n";
  }

  if (rep.contains("l_theory")) {
    const auto& lt = rep["l_theory"];
    os << "\n[L-theory]\n";
    os << "peripheral free rank p^k (p-1)/2 = " << lt["peripheral_free_rank"]
       << "\n";
    for (const auto& row : lt["table"]) {
      os << "L^s_" << row["m"] << "(Z Gamma) = "
         << row["group"]["rendered"].get<std::string>() << "\n";
    }
    os << "Wh_1 = " << lt["whitehead_1"]["rendered"].get<std::string>()
       << "\n";
    os << "Wh_0 = " << lt["whitehead_0"]["rendered"].get<std::string>()
       << "\n";
  }

  if (rep.contains("structure_sets")) {
    const auto& ss = rep["structure_sets"];
    os << "\n[structure sets]\n";
    os << "dim M = " << ss["dim"] << ", d = " << ss["d"]
       << ", rho-eigenspace sign = " << ss["rho_sign"] << "\n";
    os << "S_per(B Gamma), odd m: "
       << ss["bgamma_periodic_odd_m"]["rendered"].get<std::string>() << "\n";
    os << "S_per(B Gamma), even m: "
       << ss["bgamma_periodic_even_m"]["rendered"].get<std::string>() << "\n";
    os << "S_per(M) = " << ss["m_periodic"]["rendered"].get<std::string>()
       << "\n";
    os << "S_geo(M) = " << ss["m_geometric"]["rendered"].get<std::string>()
       << "\n";
  }

  if (rep.contains("detection")) {
    const auto& det = rep["detection"];
    os << "\n[detection]\n";
    os << "sigma codomain = "
       << det["sigma_codomain"]["rendered"].get<std::string>() << "\n";
    os << "splitting obstructions along subtori:\n";
    for (const auto& row : det["splitting_obstructions"]) {
      os << "  J = {" << detail::join_strings(row["subset"], ", ") << "}: "
         << row["group"]["rendered"].get<std::string>();
      if (row["vacuous"].get<bool>()) os << " (vacuous)";
      os << "\n";
    }
    const long long nontrivial =
        det["nontrivial_splitting_count"].get<long long>();
    os << nontrivial << " nontrivial splitting obstruction"
       << (nontrivial == 1 ? "" : "s") << "\n";
    os << "rho-invariant targets:\n";
    for (const auto& row : det["rho_targets"]) {
      os << "  class " << row["label"] << " at ("
         << detail::join_strings(row["translation"], ", ") << "): "
         << row["target"]["rendered"].get<std::string>() << "\n";
    }
    const auto count = det["rho_targets"].size();
    os << count << " rho-invariant target" << (count == 1 ? "" : "s") << "\n";
    os << "free-rank audit: direct = " << det["free_rank_audit"]["direct"]
       << ", summed = " << det["free_rank_audit"]["summed"] << "\n";
    os << "note: rows are detection targets only; no obstruction of an "
          "actual homotopy equivalence is evaluated\n";
  }

  if (rep.contains("oracles")) {
    const auto& rows = rep["oracles"];
    os << "\n[oracles]\n";
    long long disagreements = 0;
    for (const auto& row : rows) {
      const bool agree = row["agree"].get<bool>();
      if (!agree) ++disagreements;
      os << (agree ? "agree    " : "DISAGREE ")
         << row["name"].get<std::string>() << ": expected "
         << row["expected"].get<std::string>() << ", actual "
         << row["actual"].get<std::string>() << "\n";
    }
    if (disagreements == 0) {
      os << "all " << rows.size() << " oracle checks agree\n";
    } else {
      os << disagreements << " oracle check"
         << (disagreements == 1 ? "" : "s") << " disagree\n";
    }
  }

  return os.str();
}

}  // namespace torlens
