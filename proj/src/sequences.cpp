#include "gseq/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace gseq {

namespace {

std::string term_label(GTermType t, int n, const DerivationLadder& L) {
  const std::string& a = L.phi.source().name();
  const std::string& b = L.phi.target().name();
  const std::string& f = L.phi.name();
  switch (t) {
    case GTermType::Gottlieb:
      return "G_" + std::to_string(n) + "(" + b + ")";
    case GTermType::Evaluation:
      return "G_" + std::to_string(n) + "(" + a + "," + b + ";" + f + ")";
    case GTermType::Relative:
      return "G^rel_" + std::to_string(n) + "(" + a + "," + b + ";" + f + ")";
  }
  return "";
}

SubgroupInHomology image_subgroup(const ChainMap& vertical, int n,
                                  std::string provenance, std::string label) {
  SubgroupInHomology s;
  s.ambient = &vertical.dst->homology(n);
  QMatrix h = vertical.homology_matrix(n);
  std::vector<Vec> cols;
  for (int c = 0; c < h.cols(); ++c) cols.push_back(h.column(c));
  s.sub = Subspace::span(s.ambient->dim, std::move(cols));
  s.provenance = std::move(provenance);
  s.label = std::move(label);
  return s;
}

RestrictedMap restrict_map(const QMatrix& ambient, const SubgroupInHomology& from,
                           const SubgroupInHomology& to) {
  RestrictedMap r;
  r.from_dim = from.dim();
  r.to_dim = to.dim();
  QMatrix basis = QMatrix::from_columns(
      to.ambient->dim, std::vector<Vec>(to.sub.basis().begin(), to.sub.basis().end()));
  r.mat = QMatrix(r.to_dim, r.from_dim);
  for (int j = 0; j < r.from_dim; ++j) {
    Vec w = ambient.apply(from.sub.basis()[j]);
    auto x = solve_linear(basis, w);
    if (!x)
      throw InternalError("restricted ladder map leaves the subgroup " +
                          to.label);
    for (int i = 0; i < r.to_dim; ++i)
      if ((*x)[i] != 0) r.mat.set(i, j, (*x)[i]);
  }
  return r;
}

// kernel of a restricted map in subgroup coordinates (everything when the
// term has no outgoing map in range)
Subspace kernel_of(const RestrictedMap& m) {
  return rank_kernel_image(m.mat).kernel;
}

Subspace image_of(const RestrictedMap& m) {
  return rank_kernel_image(m.mat).image;
}

}  // namespace

int default_window(const DGMorphism& phi) {
  return 2 * std::max(phi.source().max_gen_degree(),
                      phi.target().max_gen_degree()) +
         2;
}

std::unique_ptr<DerivationLadder> build_ladder(const DGMorphism& phi, int window) {
  if (window < 2) throw Error("build_ladder: window must be >= 2");
  auto L = std::make_unique<DerivationLadder>(phi);
  L->window = window;
  const int top = window + 2;
  L->cxBB = std::make_unique<DerivationComplex>(&L->idB, top);
  L->cxAB = std::make_unique<DerivationComplex>(&L->phi, top);
  L->cxBQ = std::make_unique<DerivationComplex>(&L->epsB, top);
  L->cxAQ = std::make_unique<DerivationComplex>(&L->epsA, top);
  L->cxABt = std::make_unique<AugmentationIdealComplex>(*L->cxAB);
  L->phiStar = precompose_map(L->phi, *L->cxBB, *L->cxAB);
  L->phiHatStar = precompose_map(L->phi, *L->cxBQ, *L->cxAQ);
  L->epsStarBB = augment_map(*L->cxBB, *L->cxBQ);
  L->epsStarAB = augment_map(*L->cxAB, *L->cxAQ);
  L->inclABt = inclusion_map(*L->cxABt, *L->cxAB);
  L->relTop = std::make_unique<RelativeComplex>(L->phiStar);
  L->relHat = std::make_unique<RelativeComplex>(L->phiHatStar);
  L->epsRel = cone_map(*L->relTop, *L->relHat, L->epsStarBB, L->epsStarAB,
                       "(eps*,eps*)");
  L->epsRel.verify_chain_map();
  return L;
}

std::string SubgroupInHomology::render(const Vec& subcoords) const {
  Vec amb = zero_vec(ambient->dim);
  for (int i = 0; i < dim(); ++i)
    if (subcoords[i] != 0) amb = vec_add(amb, vec_scale(subcoords[i], sub.basis()[i]));
  return ambient->render_class(amb);
}

std::vector<std::string> SubgroupInHomology::witness_strings() const {
  std::vector<std::string> out;
  for (int i = 0; i < dim(); ++i) {
    Vec e = zero_vec(dim());
    e[i] = 1;
    out.push_back(render(e));
  }
  return out;
}

SubgroupInHomology evaluation_subgroup(const DerivationLadder& L, int n) {
  if (n < 2) throw Error("evaluation_subgroup: degree must be >= 2");
  return image_subgroup(L.epsStarAB, n, "image of H(eps_*)",
                        term_label(GTermType::Evaluation, n, L));
}

SubgroupInHomology gottlieb_subgroup(const DerivationLadder& L, int n) {
  if (n < 2) throw Error("gottlieb_subgroup: degree must be >= 2");
  return image_subgroup(L.epsStarBB, n, "image of H(eps_*)",
                        term_label(GTermType::Gottlieb, n, L));
}

SubgroupInHomology relative_evaluation_subgroup(const DerivationLadder& L, int n) {
  if (n < 2) throw Error("relative_evaluation_subgroup: degree must be >= 2");
  return image_subgroup(L.epsRel, n, "image of H(eps_*, eps_*)",
                        term_label(GTermType::Relative, n, L));
}

GSequence build_g_sequence(const DerivationLadder& L) {
  GSequence g;
  g.ladder = &L;
  g.N = L.window;
  const int top = L.window + 1;
  for (int n = 2; n <= top; ++n) {
    g.GB.emplace(n, GSequenceTerm{gottlieb_subgroup(L, n)});
    g.GAB.emplace(n, GSequenceTerm{evaluation_subgroup(L, n)});
    g.GREL.emplace(n, GSequenceTerm{relative_evaluation_subgroup(L, n)});
  }
  for (int n = 2; n <= top; ++n) {
    g.f_hat.emplace(n, restrict_map(L.phiHatStar.homology_matrix(n),
                                    g.GB.at(n).sub, g.GAB.at(n).sub));
    g.j_hat.emplace(n, restrict_map(L.relHat->homology_J(n), g.GAB.at(n).sub,
                                    g.GREL.at(n).sub));
    if (n >= 3)
      g.p_hat.emplace(n, restrict_map(L.relHat->homology_P(n),
                                      g.GREL.at(n).sub, g.GB.at(n - 1).sub));
  }
  // the G-sequence is a chain complex: consecutive composites vanish
  for (int n = 2; n <= top; ++n) {
    if (!g.j_hat.at(n).mat.multiply(g.f_hat.at(n).mat).is_zero())
      throw InternalError("G-sequence composite J o f_# nonzero in degree " +
                          std::to_string(n));
    if (n >= 3) {
      if (!g.p_hat.at(n).mat.multiply(g.j_hat.at(n).mat).is_zero())
        throw InternalError("G-sequence composite P o J nonzero in degree " +
                            std::to_string(n));
      if (!g.f_hat.at(n - 1).mat.multiply(g.p_hat.at(n).mat).is_zero())
        throw InternalError("G-sequence composite f_# o P nonzero in degree " +
                            std::to_string(n));
    }
  }
  return g;
}

namespace {

TermVerdict make_verdict(GTermType type, int degree, const DerivationLadder& L,
                         const SubgroupInHomology& sub, const Subspace& kernel,
                         const Subspace& image) {
  TermVerdict v;
  v.type = type;
  v.degree = degree;
  v.label = term_label(type, degree, L);
  v.dim = sub.dim();
  QuotientSpace defect(kernel, image);
  v.defect_dim = defect.dim();
  v.exact = v.defect_dim == 0;
  for (int i = 0; i < defect.dim(); ++i)
    v.witnesses.push_back(sub.render(defect.representative(i)));
  return v;
}

}  // namespace

ExactnessReport exactness_report(const GSequence& g) {
  ExactnessReport rep;
  const DerivationLadder& L = *g.ladder;
  for (int n = 2; n <= g.N; ++n) {
    // Gottlieb term: Grel_{n+1} -> G_n(B) -> G_n(A,B)
    rep.terms.push_back(make_verdict(GTermType::Gottlieb, n, L, g.GB.at(n).sub,
                                     kernel_of(g.f_hat.at(n)),
                                     image_of(g.p_hat.at(n + 1))));
    if (n >= 3) {
      // evaluation term: G_n(B) -> G_n(A,B) -> Grel_n
      rep.terms.push_back(make_verdict(GTermType::Evaluation, n, L,
                                       g.GAB.at(n).sub,
                                       kernel_of(g.j_hat.at(n)),
                                       image_of(g.f_hat.at(n))));
      // relative term: G_n(A,B) -> Grel_n -> G_{n-1}(B)
      rep.terms.push_back(make_verdict(GTermType::Relative, n, L,
                                       g.GREL.at(n).sub,
                                       kernel_of(g.p_hat.at(n)),
                                       image_of(g.j_hat.at(n))));
    }
  }
  std::sort(rep.terms.begin(), rep.terms.end(),
            [](const TermVerdict& a, const TermVerdict& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return static_cast<int>(a.type) < static_cast<int>(b.type);
            });
  for (const auto& t : rep.terms) rep.all_exact = rep.all_exact && t.exact;
  return rep;
}

OmegaHomology omega_homology(const GSequence& g, int n) {
  if (n < 2 || n > g.N) throw Error("omega_homology: degree out of window");
  OmegaHomology out;
  out.degree = n;
  QuotientSpace q(kernel_of(g.f_hat.at(n)), image_of(g.p_hat.at(n + 1)));
  out.dim = q.dim();
  for (int i = 0; i < q.dim(); ++i)
    out.witnesses.push_back(g.GB.at(n).sub.render(q.representative(i)));
  return out;
}

namespace {

void audit_cone_les(const std::string& kind, const ChainMap& f,
                    const RelativeComplex& rel, int N) {
  const ChainComplex& A = *f.src;
  const ChainComplex& B = *f.dst;
  for (int n = 2; n <= N; ++n) {
    // at H_n(A): im H(P) == ker H(f)
    {
      auto im = rank_kernel_image(rel.homology_P(n + 1)).image;
      auto ker = rank_kernel_image(f.homology_matrix(n)).kernel;
      if (!(im == ker))
        throw InternalError(kind + ": exactness fails at H_" +
                            std::to_string(n) + " (first column)");
    }
    // at H_n(B): im H(f) == ker H(J)
    {
      auto im = rank_kernel_image(f.homology_matrix(n)).image;
      auto ker = rank_kernel_image(rel.homology_J(n)).kernel;
      if (!(im == ker))
        throw InternalError(kind + ": exactness fails at H_" +
                            std::to_string(n) + " (second column)");
    }
    // at H_n(Rel): im H(J) == ker H(P), meaningful from n = 3 down to 2
    if (n >= 3) {
      auto im = rank_kernel_image(rel.homology_J(n)).image;
      auto ker = rank_kernel_image(rel.homology_P(n)).kernel;
      if (!(im == ker))
        throw InternalError(kind + ": exactness fails at H_" +
                            std::to_string(n) + " (relative column)");
    }
  }
}

}  // namespace

LESReport les_of_fstar(const DerivationLadder& L) {
  LESReport rep;
  rep.kind = "fstar";
  const std::string a = L.phi.source().name(), b = L.phi.target().name(),
                    f = L.phi.name();
  rep.labels = {"H(Der(" + b + "," + b + ";1))",
                "H(Der(" + a + "," + b + ";" + f + "))",
                "H(Rel(" + f + "*))"};
  audit_cone_les("les_of_fstar", L.phiStar, *L.relTop, L.window);
  for (int n = 2; n <= L.window; ++n)
    rep.dims[n] = {L.cxBB->homology(n).dim, L.cxAB->homology(n).dim,
                   L.relTop->homology(n).dim};
  rep.notes.push_back(
      "exact at every audited term; columns 1 and 2 compute the rational "
      "homotopy groups of the corresponding mapping spaces for n >= 2");
  return rep;
}

LESReport les_of_f(const DerivationLadder& L) {
  LESReport rep;
  rep.kind = "f";
  const std::string a = L.phi.source().name(), b = L.phi.target().name(),
                    f = L.phi.name();
  rep.labels = {"H(Der(" + b + ",Q;eps))", "H(Der(" + a + ",Q;eps))",
                "H(Rel(" + f + "^*))"};
  audit_cone_les("les_of_f", L.phiHatStar, *L.relHat, L.window);
  for (int n = 2; n <= L.window; ++n)
    rep.dims[n] = {L.cxBQ->homology(n).dim, L.cxAQ->homology(n).dim,
                   L.relHat->homology(n).dim};
  rep.notes.push_back(
      "columns 1 and 2 are the rational homotopy groups of the two models; "
      "column 3 in degree n+1 is the relative group of the map (n >= 2)");
  return rep;
}

LESReport les_of_eval_fibration(const DerivationLadder& L) {
  LESReport rep;
  rep.kind = "eval-fibration";
  const std::string a = L.phi.source().name(), b = L.phi.target().name(),
                    f = L.phi.name();
  rep.labels = {"H(Der(" + a + "," + b + "~;" + f + "~))",
                "H(Der(" + a + "," + b + ";" + f + "))",
                "H(Der(" + a + ",Q;eps))"};
  const int N = L.window;
  for (int n = 2; n <= N; ++n) {
    // at H_n(ideal): im Delta_{n+1} == ker H(i)
    {
      auto im = rank_kernel_image(snake_delta(*L.cxAB, *L.cxABt, *L.cxAQ, n + 1)).image;
      auto ker = rank_kernel_image(L.inclABt.homology_matrix(n)).kernel;
      if (!(im == ker))
        throw InternalError("les_of_eval_fibration: exactness fails at H_" +
                            std::to_string(n) + " (based column)");
    }
    // at H_n(full): im H(i) == ker H(eps)
    {
      auto im = rank_kernel_image(L.inclABt.homology_matrix(n)).image;
      auto ker = rank_kernel_image(L.epsStarAB.homology_matrix(n)).kernel;
      if (!(im == ker))
        throw InternalError("les_of_eval_fibration: exactness fails at H_" +
                            std::to_string(n) + " (free column)");
    }
    // at H_n(Q): im H(eps) == ker Delta_n
    {
      auto im = rank_kernel_image(L.epsStarAB.homology_matrix(n)).image;
      auto ker = rank_kernel_image(snake_delta(*L.cxAB, *L.cxABt, *L.cxAQ, n)).kernel;
      if (!(im == ker))
        throw InternalError("les_of_eval_fibration: exactness fails at H_" +
                            std::to_string(n) + " (pi column)");
    }
    rep.dims[n] = {L.cxABt->homology(n).dim, L.cxAB->homology(n).dim,
                   L.cxAQ->homology(n).dim};
  }
  rep.notes.push_back(
      "column 1 computes the rational homotopy groups of the based mapping "
      "space for n >= 2");
  return rep;
}

}  // namespace gseq
