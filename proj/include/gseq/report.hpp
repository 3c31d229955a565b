#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gseq {

struct TermDetail {
  int dim = 0;
  std::optional<bool> exact;
  std::vector<std::string> witnesses;
};

struct ReportRow {
  std::map<std::string, int> dims;
  std::optional<bool> exact;
  std::vector<std::string> witnesses;
  std::map<std::string, TermDetail> terms;  // per-term data (g-sequence)
  std::vector<std::string> details;         // free-form expression lines
};

struct TaskSection {
  std::string name;
  std::string kind;
  std::map<int, ReportRow> tables;  // keyed by degree
  std::vector<std::string> notes;
  bool ok = true;
};

struct Report {
  std::string tool_version;
  std::vector<std::string> assumptions;
  std::vector<TaskSection> tasks;
  long long elapsed_ms = 0;  // timing metadata; never rendered
};

// Byte-identical across runs on identical inputs; both renderings carry the
// same data.
std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace gseq
