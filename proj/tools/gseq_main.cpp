#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gseq/report.hpp"
#include "gseq/tasks.hpp"
#include "gseq/version.hpp"
#include "gseq/workspace.hpp"

namespace {

// exit codes: 0 ok, 1 semantic/task error, 2 parse error, 3 internal invariant
constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kParse = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gseq::Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int load(const std::string& path, gseq::Workspace* out) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const gseq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  try {
    *out = gseq::parse_workspace(text);
  } catch (const gseq::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kParse;
  } catch (const gseq::SemanticError& e) {
    for (const auto& d : e.diagnostics)
      std::cerr << path << ":" << d.loc.line << ":" << d.loc.col << ": "
                << d.message << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational homotopy of function spaces from Sullivan models"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "parse and validate a workspace");
  check->add_option("file", check_file, "workspace file")->required();

  std::string run_file, task_filter, format = "text", out_path;
  int max_degree = 0;
  bool timings = false;
  auto* run = app.add_subcommand("run", "run the workspace's tasks");
  run->add_option("file", run_file, "workspace file")->required();
  run->add_option("--task", task_filter, "run only tasks of this kind");
  run->add_option("--max-degree", max_degree, "override the degree window");
  run->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("-o,--output", out_path, "write the report to a file");
  run->add_flag("--timings", timings, "print elapsed time to stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      gseq::Workspace ws;
      if (int rc = load(check_file, &ws); rc != kOk) return rc;
      std::cout << "ok: " << ws.models.size() << " model(s), "
                << ws.morphisms.size() << " map(s), " << ws.tasks.size()
                << " task(s)\n";
      return kOk;
    }

    gseq::Workspace ws;
    if (int rc = load(run_file, &ws); rc != kOk) return rc;
    gseq::RunOptions opts;
    opts.task_filter = task_filter;
    opts.max_degree_override = max_degree;
    gseq::Report report = gseq::run_tasks(ws, opts);
    const std::string rendered =
        format == "json" ? gseq::render_json(report) : gseq::render_text(report);
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kSemantic;
      }
      out << rendered;
    }
    if (timings)
      std::cerr << "completed in " << report.elapsed_ms << " ms\n";
    for (const auto& t : report.tasks)
      if (!t.ok) return kSemantic;
    return kOk;
  } catch (const gseq::InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const gseq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
}
