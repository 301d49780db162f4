#ifndef MIXHOM_REPORT_HPP
#define MIXHOM_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mixhom/deform.hpp"
#include "mixhom/io.hpp"

// Report envelope shared by the command line verbs: identity checks,
// per-degree dimension tables, witness vectors, and free-form notes,
// serialized in insertion order (schema in docs/report.schema.json) so
// identical inputs always produce byte-identical documents. A plain
// fixed-width rendering backs --format table.

namespace mixhom {

inline Json report_envelope(std::string command, Json input) {
  Json r;
  r["command"] = std::move(command);
  r["input"] = std::move(input);
  r["ok"] = true;
  r["checks"] = Json::array();
  r["dimensions"] = Json::array();
  return r;
}

inline void add_check(Json& report, const std::string& identity, long degree,
                      bool holds, const std::string& witness = "") {
  Json e;
  e["identity"] = identity;
  e["degree"] = degree;
  e["holds"] = holds;
  if (!witness.empty()) e["witness"] = witness;
  report["checks"].push_back(std::move(e));
  if (!holds) report["ok"] = false;
}

inline void add_checks(Json& report, const IdentityReport& rep) {
  for (const auto& c : rep.checks)
    add_check(report, c.identity, c.degree, c.holds, c.witness);
}

inline void add_dimensions(Json& report, const std::string& name,
                           const std::vector<std::size_t>& by_degree,
                           std::optional<long> trusted = std::nullopt) {
  Json t;
  t["name"] = name;
  t["by_degree"] = by_degree;
  if (trusted) t["trusted_degree"] = *trusted;
  report["dimensions"].push_back(std::move(t));
}

template <class K>
void add_witness(Json& report, long degree, const Matrix<K>& column,
                 const Field<K>& fld) {
  if (!report.contains("witnesses")) report["witnesses"] = Json::array();
  Json w;
  w["degree"] = degree;
  Json v = Json::array();
  for (std::size_t i = 0; i < column.rows(); ++i)
    v.push_back(scalar_to_json(column.at(i, 0), fld));
  w["vector"] = std::move(v);
  report["witnesses"].push_back(std::move(w));
}

inline void add_note(Json& report, const std::string& note) {
  if (!report.contains("notes")) report["notes"] = Json::array();
  report["notes"].push_back(note);
}

// Fixed-width text rendering of a report. Dimension entries above a
// table's trusted degree are suffixed with "?" and footnoted as
// untrusted, never asserted.
inline std::string render_report(const Json& report) {
  std::ostringstream out;
  out << "command: " << report.at("command").get<std::string>() << "\n";
  out << "input:";
  for (const auto& [key, value] : report.at("input").items())
    out << " " << key << "="
        << (value.is_string() ? value.get<std::string>() : value.dump());
  out << "\n";
  out << "verdict: " << (report.at("ok").get<bool>() ? "ok" : "FAIL") << "\n";

  const Json& tables = report.at("dimensions");
  bool any_untrusted = false;
  if (!tables.empty()) {
    std::size_t degrees = 0;
    std::size_t name_w = 6;  // "degree"
    for (const Json& t : tables) {
      degrees = std::max(degrees, t.at("by_degree").size());
      name_w = std::max(name_w, t.at("name").get<std::string>().size());
    }
    std::vector<std::vector<std::string>> cells;
    for (const Json& t : tables) {
      std::vector<std::string> row;
      long trusted = t.contains("trusted_degree")
                         ? t.at("trusted_degree").get<long>()
                         : static_cast<long>(degrees);
      const Json& dims = t.at("by_degree");
      for (std::size_t n = 0; n < dims.size(); ++n) {
        std::string cell = dims.at(n).dump();
        if (static_cast<long>(n) > trusted) {
          cell += "?";
          any_untrusted = true;
        }
        row.push_back(std::move(cell));
      }
      cells.push_back(std::move(row));
    }
    std::vector<std::size_t> widths(degrees);
    for (std::size_t n = 0; n < degrees; ++n) {
      widths[n] = std::to_string(n).size();
      for (const auto& row : cells)
        if (n < row.size()) widths[n] = std::max(widths[n], row[n].size());
    }
    out << "\n" << std::string(name_w, ' ');
    for (std::size_t n = 0; n < degrees; ++n) {
      std::string h = std::to_string(n);
      out << "  " << std::string(widths[n] - h.size(), ' ') << h;
    }
    out << "  <- degree\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string name = tables.at(i).at("name").get<std::string>();
      out << name << std::string(name_w - name.size(), ' ');
      for (std::size_t n = 0; n < degrees; ++n) {
        std::string cell = n < cells[i].size() ? cells[i][n] : "";
        out << "  " << std::string(widths[n] - cell.size(), ' ') << cell;
      }
      out << "\n";
    }
    if (any_untrusted) out << "(? = untrusted (truncation))\n";
  }

  const Json& checks = report.at("checks");
  if (!checks.empty()) {
    std::size_t held = 0;
    for (const Json& c : checks)
      if (c.at("holds").get<bool>()) ++held;
    out << "\nchecks: " << held << " of " << checks.size() << " hold\n";
    for (const Json& c : checks)
      if (!c.at("holds").get<bool>()) {
        out << "  FAIL " << c.at("identity").get<std::string>()
            << " at degree " << c.at("degree").dump();
        if (c.contains("witness"))
          out << " (" << c.at("witness").get<std::string>() << ")";
        out << "\n";
      }
  }

  if (report.contains("witnesses"))
    for (const Json& w : report.at("witnesses")) {
      out << "witness at degree " << w.at("degree").dump() << ": [";
      const Json& v = w.at("vector");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << (v.at(i).is_string() ? v.at(i).get<std::string>()
                                    : v.at(i).dump());
      }
      out << "]\n";
    }

  if (report.contains("notes"))
    for (const Json& n : report.at("notes"))
      out << "note: " << n.get<std::string>() << "\n";

  return out.str();
}

}  // namespace mixhom

#endif  // MIXHOM_REPORT_HPP
