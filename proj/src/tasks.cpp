#include "gseq/tasks.hpp"

#include <chrono>
#include <set>

#include "gseq/analysis.hpp"
#include "gseq/version.hpp"

namespace gseq {

namespace {

constexpr int kMaxWindow = 64;

struct IdentityEntry {
  std::shared_ptr<FreeDGAlgebra> alg;
  std::shared_ptr<DGMorphism> id;
};

struct RunContext {
  Workspace& ws;
  std::set<std::string> assumptions;
  std::map<const FreeDGAlgebra*, IdentityEntry> identities;
  std::map<std::pair<const DGMorphism*, int>, std::unique_ptr<DerivationLadder>>
      ladders;
  int max_degree_override = 0;

  std::shared_ptr<DGMorphism> identity_of(std::shared_ptr<FreeDGAlgebra> a) {
    auto it = identities.find(a.get());
    if (it != identities.end()) return it->second.id;
    auto id = std::make_shared<DGMorphism>(DGMorphism::identity(a.get()));
    identities.emplace(a.get(), IdentityEntry{a, id});
    return id;
  }

  const DerivationLadder& ladder(const std::shared_ptr<DGMorphism>& phi,
                                 int window) {
    auto key = std::make_pair(static_cast<const DGMorphism*>(phi.get()), window);
    auto it = ladders.find(key);
    if (it != ladders.end()) return *it->second;
    return *ladders.emplace(key, build_ladder(*phi, window)).first->second;
  }
};

// map= or model= (identity); the morphism for the task
std::shared_ptr<DGMorphism> morphism_for(RunContext& ctx, const Task& t) {
  if (auto p = t.params.find("map"); p != t.params.end()) {
    auto m = ctx.ws.resolve_morphism(p->second);
    if (!m) throw Error("map '" + p->second + "' not declared");
    return m;
  }
  auto p = t.params.find("model");
  auto alg = ctx.ws.resolve_model(p->second);
  if (!alg) throw Error("model '" + p->second + "' unknown");
  return ctx.identity_of(alg);
}

int window_for(RunContext& ctx, const Task& t, const DGMorphism& phi) {
  int n = default_window(phi);
  if (auto p = t.params.find("max-degree"); p != t.params.end())
    n = std::stoi(p->second);
  if (ctx.max_degree_override > 0) n = ctx.max_degree_override;
  if (n < 2) n = 2;
  if (n > kMaxWindow)
    throw Error("degree window " + std::to_string(n) +
                " exceeds the resource bound " + std::to_string(kMaxWindow) +
                "; lower max-degree");
  return n;
}

TaskSection run_homotopy_groups(RunContext& ctx, const Task& t) {
  TaskSection s{"homotopy-groups", "homotopy-groups", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  const auto& L = ctx.ladder(phi, N);
  const std::string key = "dim H(Der(" + phi->source().name() + "," +
                          phi->target().name() + ";" + phi->name() + "))";
  for (int n = 1; n <= N; ++n) s.tables[n].dims[key] = L.cxAB->homology(n).dim;
  s.notes.push_back(
      "for n >= 2 the column is the rational homotopy group of the mapping "
      "space component; degree 1 carries no homotopy interpretation");
  return s;
}

TaskSection run_gottlieb(RunContext& ctx, const Task& t) {
  TaskSection s{"gottlieb", "gottlieb", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  const auto& L = ctx.ladder(phi, N);
  for (int n = 2; n <= N; ++n) {
    auto g = gottlieb_subgroup(L, n);
    s.tables[n].dims["G"] = g.dim();
    s.tables[n].witnesses = g.witness_strings();
  }
  return s;
}

TaskSection run_evaluation_subgroups(RunContext& ctx, const Task& t) {
  TaskSection s{"evaluation-subgroups", "evaluation-subgroups", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  const auto& L = ctx.ladder(phi, N);
  const std::string a = phi->source().name(), b = phi->target().name();
  for (int n = 2; n <= N; ++n) {
    auto gb = gottlieb_subgroup(L, n);
    auto gab = evaluation_subgroup(L, n);
    auto grel = relative_evaluation_subgroup(L, n);
    auto& row = s.tables[n];
    row.dims["G(" + b + ")"] = gb.dim();
    row.dims["G(" + a + "," + b + ";" + phi->name() + ")"] = gab.dim();
    row.dims["G^rel(" + a + "," + b + ";" + phi->name() + ")"] = grel.dim();
    row.witnesses = gab.witness_strings();
  }
  s.notes.push_back("witness column lists generators of the evaluation subgroup");
  return s;
}

void fill_exactness(TaskSection& s, const GSequence& g) {
  auto rep = exactness_report(g);
  for (const auto& v : rep.terms) {
    auto& row = s.tables[v.degree];
    TermDetail d;
    d.dim = v.dim;
    d.exact = v.exact;
    d.witnesses = v.witnesses;
    row.terms.emplace(v.label, std::move(d));
    row.exact = row.exact.value_or(true) && v.exact;
    if (!v.exact)
      for (const auto& w : v.witnesses) row.witnesses.push_back(w);
  }
  s.notes.push_back(rep.all_exact
                        ? "G-sequence exact at every term in the window"
                        : "G-sequence NOT exact; non-exact terms listed");
}

TaskSection run_g_sequence(RunContext& ctx, const Task& t) {
  TaskSection s{"g-sequence", "g-sequence", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  const auto& L = ctx.ladder(phi, N);
  auto g = build_g_sequence(L);
  const std::string a = phi->source().name(), b = phi->target().name();
  for (int n = 2; n <= N; ++n) {
    auto& row = s.tables[n];
    row.dims["G(" + b + ")"] = g.GB.at(n).sub.dim();
    row.dims["G(" + a + "," + b + ";" + phi->name() + ")"] = g.GAB.at(n).sub.dim();
    row.dims["G^rel(" + a + "," + b + ";" + phi->name() + ")"] =
        g.GREL.at(n).sub.dim();
  }
  s.notes.push_back("chain-complex law verified: consecutive composites vanish");
  fill_exactness(s, g);
  return s;
}

TaskSection run_exactness(RunContext& ctx, const Task& t) {
  TaskSection s{"exactness", "exactness", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  auto g = build_g_sequence(ctx.ladder(phi, N));
  fill_exactness(s, g);
  return s;
}

TaskSection run_omega(RunContext& ctx, const Task& t) {
  TaskSection s{"omega-homology", "omega-homology", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  auto g = build_g_sequence(ctx.ladder(phi, N));
  for (int n = 2; n <= N; ++n) {
    auto w = omega_homology(g, n);
    s.tables[n].dims["H_aw"] = w.dim;
    s.tables[n].witnesses = w.witnesses;
  }
  s.notes.push_back(
      "H_aw = homology of the G-sequence at the Gottlieb terms: "
      "ker(G_n -> G_n(A,B)) / im(G^rel_{n+1} -> G_n)");
  return s;
}

void les_section(TaskSection& s, const LESReport& rep) {
  for (const auto& [n, d] : rep.dims) {
    auto& row = s.tables[n];
    for (int i = 0; i < 3; ++i) row.dims[rep.labels[i]] = d[i];
    row.exact = true;  // a failed audit throws InternalError
  }
  for (const auto& n : rep.notes) s.notes.push_back(n);
}

std::vector<TaskSection> run_les(RunContext& ctx, const Task& t) {
  std::vector<TaskSection> out;
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  const auto& L = ctx.ladder(phi, N);
  std::string which = "all";
  if (auto p = t.params.find("which"); p != t.params.end()) which = p->second;
  if (which == "all" || which == "fstar") {
    TaskSection s{"les (fstar)", "les", {}, {}, true};
    les_section(s, les_of_fstar(L));
    out.push_back(std::move(s));
  }
  if (which == "all" || which == "f") {
    TaskSection s{"les (f)", "les", {}, {}, true};
    les_section(s, les_of_f(L));
    out.push_back(std::move(s));
  }
  if (which == "all" || which == "fibration") {
    TaskSection s{"les (eval-fibration)", "les", {}, {}, true};
    les_section(s, les_of_eval_fibration(L));
    out.push_back(std::move(s));
  }
  return out;
}

TaskSection run_based_groups(RunContext& ctx, const Task& t) {
  TaskSection s{"based-groups", "based-groups", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  const auto& L = ctx.ladder(phi, N);
  for (int n = 2; n <= N; ++n)
    s.tables[n].dims["dim"] = L.cxABt->homology(n).dim;
  s.notes.push_back(
      "rational homotopy groups of the based mapping space component, "
      "computed from the augmentation-ideal complex");
  return s;
}

TaskSection run_thom(RunContext& ctx, const Task& t) {
  TaskSection s{"thom", "thom", {}, {}, true};
  ThomTable table;
  if (t.params.count("model")) {
    auto x = ctx.ws.resolve_model(t.params.at("model"));
    const int m = std::stoi(t.params.at("m"));
    table = thom_check(*x, m);
  } else {
    auto phi = morphism_for(ctx, t);
    if (phi->source().gen_count() != 1 || !phi->source().zero_differential())
      throw Error(
          "thom: the map's source must be a single-generator model with zero "
          "differential (an Eilenberg-Mac Lane model)");
    const Element img = phi->image_of(0);
    table = thom_check(phi->target(), phi->source().generator(0).degree, &img);
  }
  for (const auto& r : table.rows) {
    auto& row = s.tables[r.n];
    row.dims["dim H(Der)"] = r.der_dim;
    row.dims["dim H^(m-n)"] = r.cohom_dim;
    row.exact = r.der_dim == r.cohom_dim;
  }
  if (!table.all_match)
    throw InternalError("thom: derivation homology disagrees with cohomology");
  s.notes.push_back("both computation paths agree at every degree");
  return s;
}

TaskSection run_grivel(RunContext& ctx, const Task& t) {
  TaskSection s{"grivel", "grivel", {}, {}, true};
  if (t.params.at("assume-f0") != "true")
    throw Error("grivel: requires assume-f0 = true (F0 hypothesis)");
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  auto rep = grivel_check(*phi, N - (N % 2));
  for (const auto& a : rep.assumptions) ctx.assumptions.insert(a);
  for (const auto& r : rep.rows) {
    auto& row = s.tables[r.degree];
    row.dims["dim H(Der)"] = r.der_dim;
    row.dims["dim Der(H,H)"] = r.cohom_der_dim;
    row.exact = r.der_dim == r.cohom_der_dim;
  }
  if (!rep.all_match)
    throw InternalError(
        "grivel: derivation homology disagrees with cohomology derivations");
  s.notes.push_back("both computation paths agree at every even degree");
  return s;
}

TaskSection run_splitting(RunContext& ctx, const Task& t) {
  TaskSection s{"splitting", "splitting", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const int N = window_for(ctx, t, *phi);
  auto rep = splitting_check(*phi, N, t.params.at("assume-f0") == "true");
  if (rep.refused) {
    s.notes.push_back("refused: " + rep.refusal);
    return s;
  }
  for (const auto& a : rep.assumptions) ctx.assumptions.insert(a);
  for (const auto& r : rep.rows) {
    auto& row = s.tables[r.n];
    row.dims["G_{n+1}(A,B)"] = r.dim_gab;
    row.dims["G^rel_{n+1}"] = r.dim_grel;
    row.dims["G_n(B)"] = r.dim_gb;
    row.exact = r.ok();
  }
  s.notes.push_back(rep.all_ok
                        ? "short exact sequences verified at every degree"
                        : "splitting FAILED at some degree");
  if (!rep.all_ok)
    throw InternalError("splitting: hypotheses hold but a sequence fails");
  return s;
}

TaskSection run_tncz(RunContext& ctx, const Task& t) {
  TaskSection s{"tncz", "tncz", {}, {}, true};
  auto total = ctx.ws.resolve_model(t.params.at("total"));
  auto fiber = ctx.ws.resolve_model(t.params.at("fiber"));
  auto analysis = tncz_analyze(total, fiber, t.params.at("base"));
  const auto& v = analysis.verdict();
  const int deg = total->generator(*total->gen_index(t.params.at("base"))).degree;
  auto& row = s.tables[deg];
  row.dims["trivializable"] = v.trivializable ? 1 : 0;
  if (v.trivializable) {
    s.notes.push_back("rationally TNCZ: trivialization Phi constructed");
    row.witnesses.push_back("psi = " + v.psi->str());
    for (const auto& a : v.audit) row.details.push_back(a);
    for (const auto& [g, img] : v.phi_images)
      row.details.push_back("Phi(" + g + ") = " + img);
    for (const auto& [g, img] : v.phi_inverse_images)
      row.details.push_back("Phi^-1(" + g + ") = " + img);
  } else {
    s.notes.push_back(
        "no trivialization: the degree-" + std::to_string(deg) +
        " cocycle psi with psi(base) = 1 does not exist");
    for (const auto& ob : v.obstructions) {
      row.witnesses.push_back("delta(psi)(" + ob.generator + ") = " +
                              ob.residual + " != 0, since " + ob.equation);
      row.details.push_back("obstruction at " + ob.generator + ": " +
                            ob.equation);
    }
    for (const auto& a : v.audit) row.details.push_back(a);
  }
  return s;
}

TaskSection run_complex(RunContext& ctx, const Task& t) {
  TaskSection s{"complex", "complex", {}, {}, true};
  auto phi = morphism_for(ctx, t);
  const bool is_identity = !t.params.count("map");
  const int N = window_for(ctx, t, *phi);
  const auto& L = ctx.ladder(phi, N);
  const std::string a = phi->source().name(), b = phi->target().name();
  for (int n = 1; n <= N; ++n) {
    const int dbb = L.cxBB->dim(n);
    const int dab = L.cxAB->dim(n);
    if (dbb == 0 && dab == 0) continue;
    auto& row = s.tables[n];
    row.dims["Der(" + b + "," + b + ";1)"] = dbb;
    if (!is_identity)
      row.dims["Der(" + a + "," + b + ";" + phi->name() + ")"] = dab;
    for (int j = 0; j < dbb; ++j) {
      Vec e = zero_vec(dbb);
      e[j] = 1;
      Derivation th = L.cxBB->from_coords(n, e);
      row.details.push_back("delta(" + th.str() + ") = " +
                            L.cxBB->render_chain(n - 1, L.cxBB->delta(n).apply(e)));
      if (!is_identity)
        row.details.push_back(
            phi->name() + "*(" + th.str() + ") = " +
            L.cxAB->render_chain(n, L.phiStar.at(n).apply(e)));
    }
    if (!is_identity) {
      for (int j = 0; j < dab; ++j) {
        Vec e = zero_vec(dab);
        e[j] = 1;
        Derivation th = L.cxAB->from_coords(n, e);
        row.details.push_back("delta(" + th.str() + ") = " +
                              L.cxAB->render_chain(n - 1, L.cxAB->delta(n).apply(e)));
      }
    }
  }
  s.notes.push_back("elementary bases with the action of delta" +
                    std::string(is_identity ? "" : " and of " + phi->name() + "*"));
  return s;
}

}  // namespace

Report run_tasks(Workspace& ws, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.tool_version = kToolVersion;
  RunContext ctx{ws};
  ctx.max_degree_override = opts.max_degree_override;
  if (opts.max_degree_override > 0)
    ctx.assumptions.insert("max-degree override " +
                           std::to_string(opts.max_degree_override) +
                           " applied to every task");
  for (const auto& task : ws.tasks) {
    if (!opts.task_filter.empty() && opts.task_filter != "all" &&
        task.kind != opts.task_filter)
      continue;
    try {
      if (task.kind == "les") {
        for (auto& s : run_les(ctx, task)) report.tasks.push_back(std::move(s));
        continue;
      }
      TaskSection s;
      if (task.kind == "homotopy-groups")
        s = run_homotopy_groups(ctx, task);
      else if (task.kind == "gottlieb")
        s = run_gottlieb(ctx, task);
      else if (task.kind == "evaluation-subgroups")
        s = run_evaluation_subgroups(ctx, task);
      else if (task.kind == "g-sequence")
        s = run_g_sequence(ctx, task);
      else if (task.kind == "exactness")
        s = run_exactness(ctx, task);
      else if (task.kind == "omega-homology")
        s = run_omega(ctx, task);
      else if (task.kind == "based-groups")
        s = run_based_groups(ctx, task);
      else if (task.kind == "thom")
        s = run_thom(ctx, task);
      else if (task.kind == "grivel")
        s = run_grivel(ctx, task);
      else if (task.kind == "splitting")
        s = run_splitting(ctx, task);
      else if (task.kind == "tncz")
        s = run_tncz(ctx, task);
      else if (task.kind == "complex")
        s = run_complex(ctx, task);
      else
        throw Error("unknown task kind '" + task.kind + "'");
      report.tasks.push_back(std::move(s));
    } catch (const InternalError&) {
      throw;
    } catch (const Error& e) {
      TaskSection s;
      s.name = task.kind;
      s.kind = task.kind;
      s.ok = false;
      s.notes.push_back(std::string("error: ") + e.what());
      report.tasks.push_back(std::move(s));
    }
  }
  report.assumptions.assign(ctx.assumptions.begin(), ctx.assumptions.end());
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace gseq
