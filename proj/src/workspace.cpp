#include "gseq/workspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gseq {

std::shared_ptr<FreeDGAlgebra> Workspace::resolve_model(const std::string& name) {
  auto it = models.find(name);
  if (it != models.end()) return it->second;
  auto bit = builtins_.find(name);
  if (bit != builtins_.end()) return bit->second;
  auto b = builtin_model(name);
  if (b) builtins_.emplace(name, b);
  return b;
}

std::shared_ptr<DGMorphism> Workspace::resolve_morphism(
    const std::string& name) const {
  auto it = morphisms.find(name);
  return it == morphisms.end() ? nullptr : it->second;
}

namespace {

struct TaskSchema {
  std::vector<std::string> required;
  std::vector<std::vector<std::string>> one_of;
  std::vector<std::string> optional;
};

const std::map<std::string, TaskSchema>& task_schemas() {
  static const std::map<std::string, TaskSchema> s = {
      {"homotopy-groups", {{}, {{"map", "model"}}, {"max-degree"}}},
      {"gottlieb", {{"model"}, {}, {"max-degree"}}},
      {"evaluation-subgroups", {{"map"}, {}, {"max-degree"}}},
      {"g-sequence", {{"map"}, {}, {"max-degree"}}},
      {"exactness", {{"map"}, {}, {"max-degree"}}},
      {"omega-homology", {{"map"}, {}, {"max-degree"}}},
      {"les", {{"map"}, {}, {"which", "max-degree"}}},
      {"based-groups", {{}, {{"map", "model"}}, {"max-degree"}}},
      {"thom", {{}, {{"map", "model"}}, {"m", "max-degree"}}},
      {"grivel", {{"map", "assume-f0"}, {}, {"max-degree"}}},
      {"splitting", {{"map", "assume-f0"}, {}, {"max-degree"}}},
      {"tncz", {{"total", "fiber", "base"}, {}, {}}},
      {"complex", {{}, {{"map", "model"}}, {"max-degree"}}},
  };
  return s;
}

bool parse_positive_int(const std::string& s, int* out) {
  if (s.empty() || s.size() > 6) return false;
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c))) return false;
  *out = std::stoi(s);
  return *out > 0;
}

void validate_task(const Task& t, Workspace& ws, std::vector<Diagnostic>& errs) {
  auto it = task_schemas().find(t.kind);
  if (it == task_schemas().end()) {
    errs.push_back({t.loc, "unknown task kind '" + t.kind + "'"});
    return;
  }
  const TaskSchema& schema = it->second;
  std::set<std::string> known(schema.required.begin(), schema.required.end());
  for (const auto& g : schema.one_of) known.insert(g.begin(), g.end());
  known.insert(schema.optional.begin(), schema.optional.end());
  for (const auto& [k, v] : t.params) {
    if (!known.count(k))
      errs.push_back({t.param_locs.at(k),
                      "task " + t.kind + ": unknown parameter '" + k + "'"});
  }
  for (const auto& k : schema.required) {
    if (!t.params.count(k))
      errs.push_back({t.loc, "task " + t.kind + ": missing parameter '" + k + "'"});
  }
  for (const auto& g : schema.one_of) {
    int have = 0;
    for (const auto& k : g) have += t.params.count(k) ? 1 : 0;
    if (have != 1) {
      std::string opts;
      for (const auto& k : g) opts += (opts.empty() ? "" : " or ") + k;
      errs.push_back({t.loc, "task " + t.kind + ": exactly one of " + opts +
                                 " is required"});
    }
  }
  auto loc_of = [&](const std::string& key) {
    auto lit = t.param_locs.find(key);
    return lit == t.param_locs.end() ? t.loc : lit->second;
  };
  // references
  for (const auto& key : {"model", "total", "fiber"}) {
    auto p = t.params.find(key);
    if (p == t.params.end()) continue;
    if (!ws.resolve_model(p->second))
      errs.push_back({loc_of(key), "task " + t.kind + ": model '" + p->second +
                                       "' is neither declared nor builtin"});
  }
  if (auto p = t.params.find("map"); p != t.params.end()) {
    if (!ws.resolve_morphism(p->second))
      errs.push_back({loc_of("map"), "task " + t.kind + ": map '" + p->second +
                                         "' not declared"});
  }
  // values
  for (const auto& key : {"max-degree", "m"}) {
    auto p = t.params.find(key);
    if (p == t.params.end()) continue;
    int v = 0;
    if (!parse_positive_int(p->second, &v))
      errs.push_back({loc_of(key), "task " + t.kind + ": parameter '" +
                                       std::string(key) +
                                       "' must be a positive integer"});
  }
  if (auto p = t.params.find("assume-f0"); p != t.params.end()) {
    if (p->second != "true" && p->second != "false")
      errs.push_back({loc_of("assume-f0"),
                      "task " + t.kind + ": assume-f0 must be true or false"});
  }
  if (auto p = t.params.find("which"); p != t.params.end()) {
    if (p->second != "fstar" && p->second != "f" && p->second != "fibration" &&
        p->second != "all")
      errs.push_back({loc_of("which"),
                      "task les: which must be fstar, f, fibration or all"});
  }
  if (t.kind == "thom" && t.params.count("model") && !t.params.count("m"))
    errs.push_back({t.loc, "task thom: parameter 'm' is required with model"});
  if (t.kind == "tncz" && t.params.count("total") && t.params.count("base")) {
    auto total = ws.resolve_model(t.params.at("total"));
    if (total && !total->gen_index(t.params.at("base")))
      errs.push_back({loc_of("base"),
                      "task tncz: base generator '" + t.params.at("base") +
                          "' not found in " + t.params.at("total")});
  }
}

}  // namespace

BuildResult build_workspace(const WorkspaceAst& ast) {
  BuildResult out;
  auto& errs = out.errors;
  auto& ws = out.workspace;

  for (const auto& m : ast.models) {
    if (ws.models.count(m.name)) {
      errs.push_back({m.loc, "duplicate model name '" + m.name + "'"});
      continue;
    }
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& g : m.gens) {
      if (g.degree < 1)
        errs.push_back({g.loc, "model " + m.name + ": generator " + g.name +
                                   " must have degree >= 1"});
      gens.emplace_back(g.name, static_cast<int>(g.degree));
    }
    auto alg = std::make_shared<FreeDGAlgebra>(m.name, gens);
    std::set<std::string> have_d;
    for (const auto& d : m.diffs) {
      auto gi = alg->gen_index(d.gen);
      if (!gi) {
        errs.push_back({d.loc, "model " + m.name + ": d of unknown generator '" +
                                   d.gen + "'"});
        continue;
      }
      if (!have_d.insert(d.gen).second) {
        errs.push_back({d.loc, "model " + m.name + ": duplicate differential for " +
                                   d.gen});
        continue;
      }
      std::vector<std::string> polyErrs;
      Element v = element_from_poly(*alg, d.value, &polyErrs,
                                    "model " + m.name + ", d " + d.gen);
      for (auto& e : polyErrs) errs.push_back({d.loc, e});
      alg->set_differential(*gi, std::move(v));
    }
    alg->freeze();
    for (const auto& issue : alg->validation().issues)
      errs.push_back({m.loc, "model " + m.name + ": " + issue.where + ": " +
                                 issue.message});
    ws.models.emplace(m.name, std::move(alg));
  }

  for (const auto& mo : ast.morphisms) {
    if (ws.morphisms.count(mo.name)) {
      errs.push_back({mo.loc, "duplicate map name '" + mo.name + "'"});
      continue;
    }
    auto src = ws.resolve_model(mo.source);
    auto tgt = ws.resolve_model(mo.target);
    if (!src)
      errs.push_back({mo.loc, "map " + mo.name + ": unknown source model '" +
                                  mo.source + "'"});
    if (!tgt)
      errs.push_back({mo.loc, "map " + mo.name + ": unknown target model '" +
                                  mo.target + "'"});
    if (!src || !tgt) continue;
    std::vector<Element> images(src->gen_count(), Element(tgt.get()));
    std::set<std::string> seen;
    bool broken = false;
    for (const auto& im : mo.images) {
      auto gi = src->gen_index(im.gen);
      if (!gi) {
        errs.push_back({im.loc, "map " + mo.name + ": '" + im.gen +
                                    "' is not a generator of " + mo.source});
        broken = true;
        continue;
      }
      if (!seen.insert(im.gen).second) {
        errs.push_back({im.loc, "map " + mo.name + ": duplicate image for " +
                                    im.gen});
        continue;
      }
      std::vector<std::string> polyErrs;
      images[*gi] = element_from_poly(*tgt, im.value, &polyErrs,
                                      "map " + mo.name + ", " + im.gen);
      for (auto& e : polyErrs) errs.push_back({im.loc, e});
    }
    auto mor = std::make_shared<DGMorphism>(mo.name, src.get(), tgt.get(),
                                            std::move(images));
    if (!broken) {
      for (const auto& issue : mor->validate().issues)
        errs.push_back({mo.loc, "map " + mo.name + ": " + issue.where + ": " +
                                    issue.message});
    }
    ws.morphisms.emplace(mo.name, std::move(mor));
  }

  for (const auto& t : ast.tasks) {
    Task task;
    task.kind = t.kind;
    task.loc = t.loc;
    for (const auto& p : t.params) {
      if (task.params.count(p.key)) {
        errs.push_back({p.loc, "task " + t.kind + ": duplicate parameter '" +
                                   p.key + "'"});
        continue;
      }
      task.params.emplace(p.key, p.value);
      task.param_locs.emplace(p.key, p.loc);
    }
    validate_task(task, ws, errs);
    ws.tasks.push_back(std::move(task));
  }
  return out;
}

Workspace parse_workspace(const std::string& text) {
  auto ast = parse_workspace_text(text);
  auto built = build_workspace(ast);
  if (!built.errors.empty()) {
    std::ostringstream os;
    os << built.errors.size() << " semantic error(s)";
    throw SemanticError(os.str(), std::move(built.errors));
  }
  return std::move(built.workspace);
}

std::string render_workspace(const Workspace& w) {
  std::ostringstream os;
  for (const auto& [name, alg] : w.models) {
    os << "model " << name << " {\n";
    for (const auto& g : alg->generators())
      os << "  gen " << g.name << " : " << g.degree << ";\n";
    for (const auto& g : alg->generators()) {
      const Element& d = alg->differential_of(g.index);
      if (!d.is_zero()) os << "  d " << g.name << " = " << d.str() << ";\n";
    }
    os << "}\n";
  }
  for (const auto& [name, mor] : w.morphisms) {
    os << "map " << name << " : " << mor->source().name() << " -> "
       << mor->target().name() << " {\n";
    for (const auto& g : mor->source().generators())
      os << "  " << g.name << " |-> " << mor->image_of(g.index).str() << ";\n";
    os << "}\n";
  }
  for (const auto& t : w.tasks) {
    os << "task " << t.kind << " {";
    for (const auto& [k, v] : t.params) os << " " << k << " = " << v << ";";
    os << " }\n";
  }
  return os.str();
}

}  // namespace gseq
