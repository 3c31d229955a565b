#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gseq/builtin.hpp"
#include "gseq/morphism.hpp"
#include "gseq/parser.hpp"

namespace gseq {

struct Diagnostic {
  SrcLoc loc;
  std::string message;
};

// Semantic validation failure carrying every collected diagnostic; maps to
// exit code 1 in the CLI.
class SemanticError : public Error {
 public:
  SemanticError(std::string what, std::vector<Diagnostic> diags)
      : Error(std::move(what)), diagnostics(std::move(diags)) {}
  std::vector<Diagnostic> diagnostics;
};

struct Task {
  std::string kind;
  std::map<std::string, std::string> params;
  std::map<std::string, SrcLoc> param_locs;
  SrcLoc loc;
};

class Workspace {
 public:
  std::map<std::string, std::shared_ptr<FreeDGAlgebra>> models;
  std::map<std::string, std::shared_ptr<DGMorphism>> morphisms;
  std::vector<Task> tasks;

  // Declared models shadow builtins of the same name.
  std::shared_ptr<FreeDGAlgebra> resolve_model(const std::string& name);
  std::shared_ptr<DGMorphism> resolve_morphism(const std::string& name) const;

 private:
  std::map<std::string, std::shared_ptr<FreeDGAlgebra>> builtins_;
};

// Semantic phase: builds real objects and collects every failure.
struct BuildResult {
  Workspace workspace;
  std::vector<Diagnostic> errors;
};
BuildResult build_workspace(const WorkspaceAst& ast);

// Parse + validate. Throws ParseError (syntax) or SemanticError (semantics,
// all failures listed).
Workspace parse_workspace(const std::string& text);

// Canonical printer; parse(render_workspace(w)) reproduces w.
std::string render_workspace(const Workspace& w);

}  // namespace gseq
