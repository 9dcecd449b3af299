#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "leech/engine.hpp"
#include "leech/module_io.hpp"

namespace leech {

enum class TableFormat { text, json, csv, latex };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "json") return TableFormat::json;
  if (s == "csv") return TableFormat::csv;
  if (s == "latex") return TableFormat::latex;
  raise(Errc::invalid_argument, "unknown format: " + s);
}

inline std::string group_text(const GroupDecomposition& g) { return g.to_string(); }

inline nlohmann::json group_json(const GroupDecomposition& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const Int& d : g.torsion()) torsion.push_back(detail::int_to_json(d));
  return {{"rank", g.free_rank()}, {"torsion", torsion}};
}

inline std::string group_latex(const GroupDecomposition& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank() == 1) {
    os << "\\mathbb{Z}";
    first = false;
  } else if (g.free_rank() > 1) {
    os << "\\mathbb{Z}^{" << g.free_rank() << "}";
    first = false;
  }
  for (const Int& d : g.torsion()) {
    os << (first ? "" : " \\oplus ") << "\\mathbb{Z}/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

/// Degree-indexed table of computed groups plus the labels needed to render
/// it stand-alone.
struct GroupTable {
  std::string kind;  // "cohomology" or "homology"
  CyclicMonoid monoid{0, 2};
  std::string coefficients;  // display label for the module
  std::vector<GroupDecomposition> groups;
};

inline GroupTable make_table(const LeechModule& mod, int max_degree, std::string coefficients) {
  GroupTable t;
  t.kind = mod.side() == Side::left ? "cohomology" : "homology";
  t.monoid = mod.monoid();
  t.coefficients = std::move(coefficients);
  t.groups = closed_form_table(mod, max_degree);
  return t;
}

inline std::string render_table(const GroupTable& t, TableFormat format) {
  std::ostringstream os;
  const char* sym = t.kind == "cohomology" ? "H^" : "H_";
  switch (format) {
    case TableFormat::text:
      os << t.kind << " of C_{" << t.monoid.index() << "," << t.monoid.period()
         << "} with coefficients " << t.coefficients << "\n";
      for (std::size_t n = 0; n < t.groups.size(); ++n)
        os << sym << n << " = " << group_text(t.groups[n]) << "\n";
      break;
    case TableFormat::json: {
      nlohmann::json j;
      j["kind"] = t.kind;
      j["monoid"] = {{"index", t.monoid.index()}, {"period", t.monoid.period()}};
      j["coefficients"] = t.coefficients;
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t n = 0; n < t.groups.size(); ++n) {
        nlohmann::json row = group_json(t.groups[n]);
        row["degree"] = n;
        rows.push_back(std::move(row));
      }
      j["table"] = std::move(rows);
      os << j.dump(2) << "\n";
      break;
    }
    case TableFormat::csv:
      os << "degree,group\n";
      for (std::size_t n = 0; n < t.groups.size(); ++n)
        os << n << "," << group_text(t.groups[n]) << "\n";
      break;
    case TableFormat::latex:
      os << "\\begin{tabular}{rl}\n\\hline\n$n$ & $\\mathrm{H}"
         << (t.kind == "cohomology" ? "^" : "_") << "{n}$ \\\\\n\\hline\n";
      for (std::size_t n = 0; n < t.groups.size(); ++n)
        os << n << " & $" << group_latex(t.groups[n]) << "$ \\\\\n";
      os << "\\hline\n\\end{tabular}\n";
      break;
  }
  return os.str();
}

}  // namespace leech
