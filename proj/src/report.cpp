#include "gseq/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace gseq {

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "gseq " << r.tool_version << "\n";
  if (!r.assumptions.empty()) {
    os << "assumptions:\n";
    for (const auto& a : r.assumptions) os << "  - " << a << "\n";
  }
  for (size_t i = 0; i < r.tasks.size(); ++i) {
    const TaskSection& t = r.tasks[i];
    os << "\n== task " << (i + 1) << ": " << t.name
       << (t.ok ? "" : " [FAILED]") << " ==\n";
    for (const auto& n : t.notes) os << "note: " << n << "\n";
    // column layout for the dims table
    std::vector<std::string> cols;
    for (const auto& [deg, row] : t.tables)
      for (const auto& [k, v] : row.dims)
        if (std::find(cols.begin(), cols.end(), k) == cols.end())
          cols.push_back(k);
    if (!cols.empty()) {
      os << "  n";
      for (const auto& c : cols) os << " | " << c;
      os << "\n";
      for (const auto& [deg, row] : t.tables) {
        os << "  " << deg;
        for (const auto& c : cols) {
          auto it = row.dims.find(c);
          os << " | " << (it == row.dims.end() ? "-" : std::to_string(it->second));
        }
        if (row.exact.has_value()) os << (*row.exact ? "  exact" : "  NON-EXACT");
        if (!row.witnesses.empty()) {
          os << "  witnesses:";
          for (const auto& w : row.witnesses) os << " [" << w << "]";
        }
        os << "\n";
      }
    }
    for (const auto& [deg, row] : t.tables) {
      for (const auto& [label, term] : row.terms) {
        os << label << " dim " << term.dim;
        if (term.exact.has_value())
          os << (*term.exact ? ", exact" : ", non-exact");
        for (const auto& w : term.witnesses) os << ", witness " << w;
        os << "\n";
      }
      for (const auto& d : row.details) os << "  " << d << "\n";
    }
  }
  return os.str();
}

std::string render_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["tool_version"] = r.tool_version;
  j["assumptions"] = r.assumptions;
  j["tasks"] = ordered_json::array();
  for (const auto& t : r.tasks) {
    ordered_json jt;
    jt["name"] = t.name;
    jt["kind"] = t.kind;
    jt["ok"] = t.ok;
    if (!t.notes.empty()) jt["notes"] = t.notes;
    ordered_json tables = ordered_json::object();
    for (const auto& [deg, row] : t.tables) {
      ordered_json jr;
      jr["dims"] = ordered_json::object();
      for (const auto& [k, v] : row.dims) jr["dims"][k] = v;
      if (row.exact.has_value()) jr["exact"] = *row.exact;
      jr["witnesses"] = row.witnesses;
      if (!row.terms.empty()) {
        ordered_json terms = ordered_json::object();
        for (const auto& [label, term] : row.terms) {
          ordered_json jterm;
          jterm["dim"] = term.dim;
          if (term.exact.has_value()) jterm["exact"] = *term.exact;
          jterm["witnesses"] = term.witnesses;
          terms[label] = std::move(jterm);
        }
        jr["terms"] = std::move(terms);
      }
      if (!row.details.empty()) jr["details"] = row.details;
      tables[std::to_string(deg)] = std::move(jr);
    }
    jt["tables"] = std::move(tables);
    j["tasks"].push_back(std::move(jt));
  }
  return j.dump(2) + "\n";
}

}  // namespace gseq
