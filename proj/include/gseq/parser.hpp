#pragma once

#include <string>
#include <vector>

#include "gseq/algebra.hpp"

namespace gseq {

struct SrcLoc {
  int line = 1;
  int col = 1;
};

// Lexical or syntax failure; maps to exit code 2 in the CLI.
class ParseError : public Error {
 public:
  ParseError(SrcLoc l, const std::string& msg)
      : Error(std::to_string(l.line) + ":" + std::to_string(l.col) + ": " + msg),
        loc(l) {}
  SrcLoc loc;
};

struct PolyFactor {
  std::string name;
  int exp = 1;
  SrcLoc loc;
};
struct PolyTerm {
  Rational coef = Rational(1);
  std::vector<PolyFactor> factors;  // empty only for the literal 0
  SrcLoc loc;
};
struct PolyAst {
  std::vector<PolyTerm> terms;
  SrcLoc loc;
};

struct GenDecl {
  std::string name;
  long long degree = 0;
  SrcLoc loc;
};
struct DiffDecl {
  std::string gen;
  PolyAst value;
  SrcLoc loc;
};
struct ModelDecl {
  std::string name;
  std::vector<GenDecl> gens;
  std::vector<DiffDecl> diffs;
  SrcLoc loc;
};
struct ImageDecl {
  std::string gen;
  PolyAst value;
  SrcLoc loc;
};
struct MorphismDecl {
  std::string name, source, target;
  std::vector<ImageDecl> images;
  SrcLoc loc;
};
struct TaskParam {
  std::string key, value;
  SrcLoc loc;
};
struct TaskDecl {
  std::string kind;
  std::vector<TaskParam> params;
  SrcLoc loc;
};

struct WorkspaceAst {
  std::vector<ModelDecl> models;
  std::vector<MorphismDecl> morphisms;
  std::vector<TaskDecl> tasks;
};

WorkspaceAst parse_workspace_text(const std::string& text);
PolyAst parse_poly_text(const std::string& text);

// Builds the element denoted by a polynomial expression. Factors multiply in
// the written order, so Koszul signs of out-of-order odd factors are honored.
// Problems (unknown generator, vanishing odd square) are appended to
// `errors`; with errors == nullptr the first problem throws gseq::Error.
Element element_from_poly(const FreeDGAlgebra& a, const PolyAst& poly,
                          std::vector<std::string>* errors = nullptr,
                          const std::string& where = "");

Element parse_element(const FreeDGAlgebra& a, const std::string& text);

}  // namespace gseq
