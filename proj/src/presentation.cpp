#include "gseq/presentation.hpp"

#include <algorithm>

#include "gseq/derivation.hpp"

namespace gseq {

PresentedAlgebra::PresentedAlgebra(std::shared_ptr<FreeDGAlgebra> free_alg,
                                   std::vector<Element> relations,
                                   int truncation)
    : free_(std::move(free_alg)),
      relations_(std::move(relations)),
      truncation_(truncation) {
  if (!free_->zero_differential())
    throw Error("PresentedAlgebra: presentation generators carry no differential");
  for (const auto& r : relations_) {
    if (r.is_zero() || !r.is_homogeneous())
      throw Error("PresentedAlgebra: relations must be nonzero homogeneous");
  }
}

const QuotientSpace& PresentedAlgebra::slice(int k) const {
  auto it = slices_.find(k);
  if (it != slices_.end()) return it->second;
  if (k < 0 || k > truncation_)
    throw Error("PresentedAlgebra: degree " + std::to_string(k) +
                " beyond truncation " + std::to_string(truncation_));
  const int n = free_->dim(k);
  std::vector<Vec> ideal;
  for (const auto& r : relations_) {
    const int dr = *r.homogeneous_degree();
    if (dr > k) continue;
    for (const auto& m : free_->monomial_basis(k - dr)) {
      Element p = free_->monomial_elem(m) * r;
      if (!p.is_zero()) ideal.push_back(free_->coords(p, k));
    }
  }
  QuotientSpace q(Subspace::full(n), Subspace::span(n, std::move(ideal)));
  return slices_.emplace(k, std::move(q)).first->second;
}

int PresentedAlgebra::dim(int k) const { return slice(k).dim(); }

Vec PresentedAlgebra::project(const Element& e, int k) const {
  return slice(k).project(free_->coords(e, k));
}

Element PresentedAlgebra::lift(int k, const Vec& qcoords) const {
  const auto& q = slice(k);
  Vec v = zero_vec(free_->dim(k));
  for (int i = 0; i < q.dim(); ++i)
    if (qcoords[i] != 0) v = vec_add(v, vec_scale(qcoords[i], q.representative(i)));
  return free_->from_coords(k, v);
}

bool PresentedAlgebra::in_ideal(const Element& e) const {
  if (e.is_zero()) return true;
  auto deg = e.homogeneous_degree();
  if (!deg) throw Error("PresentedAlgebra::in_ideal: mixed degrees");
  return is_zero_vec(project(e, *deg));
}

CohomologyPresentation::CohomologyPresentation(
    const FreeDGAlgebra* model, std::shared_ptr<PresentedAlgebra> alg,
    std::vector<Element> gen_reps, int truncation)
    : model_(model),
      alg_(std::move(alg)),
      gen_reps_(std::move(gen_reps)),
      truncation_(truncation) {
  eval_ = std::make_unique<DGMorphism>("ev", alg_->free_ptr().get(), model_,
                                       gen_reps_);
  auto rep = eval_->validate();
  if (!rep.valid())
    throw InternalError("cohomology presentation evaluation map invalid:\n" +
                        rep.summary());
}

const CohomologySpace& CohomologyPresentation::H(int k) const {
  auto it = h_cache_.find(k);
  if (it != h_cache_.end()) return it->second;
  return h_cache_.emplace(k, cohomology_space(*model_, k)).first->second;
}

const QMatrix& CohomologyPresentation::eval_matrix(int k) const {
  auto it = eval_cache_.find(k);
  if (it != eval_cache_.end()) return it->second;
  const auto& hk = H(k);
  QMatrix m(hk.dimension, alg_->dim(k));
  for (int j = 0; j < alg_->dim(k); ++j) {
    Vec e = zero_vec(alg_->dim(k));
    e[j] = 1;
    Vec cls = hk.class_of(eval_->apply(alg_->lift(k, e)));
    for (int r = 0; r < hk.dimension; ++r)
      if (cls[r] != 0) m.set(r, j, cls[r]);
  }
  return eval_cache_.emplace(k, std::move(m)).first->second;
}

Vec CohomologyPresentation::class_to_presented(int k, const Vec& hcoords) const {
  auto x = solve_linear(eval_matrix(k), hcoords);
  if (!x)
    throw InternalError(
        "cohomology presentation: evaluation not surjective in degree " +
        std::to_string(k));
  return *x;
}

CohomologyPresentation cohomology_presentation(const FreeDGAlgebra& a,
                                               int maxdeg) {
  if (maxdeg < 0) throw Error("cohomology_presentation: negative bound");
  std::vector<std::pair<std::string, int>> gens;
  std::vector<Element> reps;
  std::map<int, CohomologySpace> hs;
  for (int k = 1; k <= maxdeg; ++k) hs.emplace(k, cohomology_space(a, k));

  for (int k = 1; k <= maxdeg; ++k) {
    const auto& hk = hs.at(k);
    if (hk.dimension == 0) continue;
    // span of products of the generators chosen so far, in H^k coordinates
    FreeDGAlgebra probe("probe", gens);
    probe.freeze();
    DGMorphism ev("ev", &probe, &a, reps);
    std::vector<Vec> spanned;
    for (const auto& m : probe.monomial_basis(k)) {
      Element val = ev.apply_monomial(m);
      if (!a.d(val).is_zero())
        throw InternalError("cohomology_presentation: product of cocycles not closed");
      spanned.push_back(hk.class_of(val));
    }
    Subspace span = Subspace::span(hk.dimension, spanned);
    int suffix = 0;
    for (int i = 0; i < hk.dimension && span.dim() < hk.dimension; ++i) {
      Vec cls = zero_vec(hk.dimension);
      cls[i] = 1;
      if (span.contains(cls)) continue;
      std::string name = "h" + std::to_string(k);
      if (suffix > 0) name += std::string(1, static_cast<char>('a' + suffix));
      ++suffix;
      gens.emplace_back(name, k);
      reps.push_back(hk.representatives[i]);
      std::vector<Vec> more = span.basis();
      more.push_back(cls);
      span = Subspace::span(hk.dimension, std::move(more));
    }
  }

  auto freeAlg = std::make_shared<FreeDGAlgebra>(a.name() + ".H", gens);
  freeAlg->freeze();
  DGMorphism ev("ev", freeAlg.get(), &a, reps);

  // relations: kernel of evaluation, modulo the ideal of earlier relations
  std::vector<Element> relations;
  for (int k = 1; k <= maxdeg; ++k) {
    const auto& hk = hs.at(k);
    const int n = freeAlg->dim(k);
    if (n == 0) continue;
    QMatrix evk(hk.dimension, n);
    for (int j = 0; j < n; ++j) {
      Vec cls = hk.class_of(ev.apply_monomial(freeAlg->monomial_basis(k)[j]));
      for (int r = 0; r < hk.dimension; ++r)
        if (cls[r] != 0) evk.set(r, j, cls[r]);
    }
    Subspace kernel = rank_kernel_image(evk).kernel;
    if (kernel.dim() == 0) continue;
    std::vector<Vec> ideal;
    for (const auto& r : relations) {
      const int dr = *r.homogeneous_degree();
      if (dr > k) continue;
      for (const auto& m : freeAlg->monomial_basis(k - dr)) {
        Element p = freeAlg->monomial_elem(m) * r;
        if (!p.is_zero()) ideal.push_back(freeAlg->coords(p, k));
      }
    }
    Subspace covered = Subspace::span(n, std::move(ideal));
    for (const auto& v : kernel.basis()) {
      if (covered.contains(v)) continue;
      relations.push_back(freeAlg->from_coords(k, v));
      std::vector<Vec> more = covered.basis();
      more.push_back(v);
      covered = Subspace::span(n, std::move(more));
    }
  }

  auto presented =
      std::make_shared<PresentedAlgebra>(freeAlg, relations, maxdeg);
  // presented dimensions must reproduce the cohomology degreewise
  for (int k = 1; k <= maxdeg; ++k) {
    if (presented->dim(k) != hs.at(k).dimension)
      throw InternalError(
          "cohomology_presentation: presented dimension mismatch in degree " +
          std::to_string(k));
  }
  return CohomologyPresentation(&a, presented, reps, maxdeg);
}

ValidationReport PresentedMap::validate() const {
  ValidationReport rep = mor->validate();
  if (!rep.valid()) return rep;
  for (const auto& r : src->relations()) {
    Element img = mor->apply(r);
    if (!dst->in_ideal(img))
      rep.issues.push_back(
          {"relation " + r.str(),
           "image " + img.str() + " does not vanish in the target"});
  }
  return rep;
}

PresentedMap identity_presented_map(const PresentedAlgebra& p) {
  PresentedMap m;
  m.src = &p;
  m.dst = &p;
  m.mor = std::make_unique<DGMorphism>(
      DGMorphism::identity(p.free_ptr().get()));
  return m;
}

PresentedMap induced_presented_map(const CohomologyPresentation& srcP,
                                   const CohomologyPresentation& dstP,
                                   const DGMorphism& phi) {
  if (&phi.source() != &srcP.model() || &phi.target() != &dstP.model())
    throw Error("induced_presented_map: morphism does not match presentations");
  std::vector<Element> images;
  for (int i = 0; i < srcP.algebra().free_algebra().gen_count(); ++i) {
    const int k = srcP.algebra().free_algebra().generator(i).degree;
    Element img = phi.apply(srcP.gen_rep(i));
    Vec cls = dstP.H(k).class_of(img);
    images.push_back(dstP.algebra().lift(k, dstP.class_to_presented(k, cls)));
  }
  PresentedMap m;
  m.src = &srcP.algebra();
  m.dst = &dstP.algebra();
  m.mor = std::make_unique<DGMorphism>("H(" + phi.name() + ")",
                                       srcP.algebra().free_ptr().get(),
                                       dstP.algebra().free_ptr().get(),
                                       std::move(images));
  auto rep = m.validate();
  if (!rep.valid())
    throw Error("induced map does not respect the presentation:\n" +
                rep.summary());
  return m;
}

std::vector<Element> CohomologyDerivationSpace::values_of(const Vec& sol) const {
  std::vector<Element> out(src->free_algebra().gen_count(),
                           Element(&dst->free_algebra()));
  for (const auto& s : slots) {
    Vec q = zero_vec(s.width);
    for (int i = 0; i < s.width; ++i) q[i] = sol[s.offset + i];
    if (!is_zero_vec(q)) out[s.gen] = dst->lift(s.value_degree, q);
  }
  return out;
}

CohomologyDerivationSpace cohomology_derivation_space(
    const PresentedAlgebra& src, const PresentedAlgebra& dst,
    const PresentedMap& h, int n) {
  if (n < 1) throw Error("cohomology_derivation_space: degree must be >= 1");
  if (h.src != &src || h.dst != &dst)
    throw Error("cohomology_derivation_space: map endpoints mismatch");
  CohomologyDerivationSpace out;
  out.degree = n;
  out.src = &src;
  out.dst = &dst;
  int offset = 0;
  for (const auto& g : src.free_algebra().generators()) {
    const int vd = g.degree - n;
    if (vd < 0) continue;
    const int w = dst.dim(vd);
    if (w == 0) continue;
    out.slots.push_back({g.index, vd, offset, w});
    offset += w;
  }
  const int unknowns = offset;

  // rows: every relation must map to the ideal
  std::vector<std::pair<int, int>> row_layout;  // (relation idx, width)
  int rows = 0;
  for (size_t ri = 0; ri < src.relations().size(); ++ri) {
    const int dr = *src.relations()[ri].homogeneous_degree();
    if (dr - n < 0) {
      row_layout.emplace_back(static_cast<int>(ri), 0);
      continue;
    }
    const int w = dst.dim(dr - n);
    row_layout.emplace_back(static_cast<int>(ri), w);
    rows += w;
  }

  QMatrix M(rows, unknowns);
  for (const auto& s : out.slots) {
    for (int i = 0; i < s.width; ++i) {
      std::vector<Element> values(src.free_algebra().gen_count(),
                                  Element(&dst.free_algebra()));
      Vec q = zero_vec(s.width);
      q[i] = 1;
      values[s.gen] = dst.lift(s.value_degree, q);
      Derivation th(h.mor.get(), n, std::move(values));
      int r0 = 0;
      for (const auto& [ri, w] : row_layout) {
        if (w == 0) continue;
        const auto& rel = src.relations()[ri];
        const int dr = *rel.homogeneous_degree();
        Element img = th.evaluate(rel);
        Vec cls = img.is_zero() ? zero_vec(w) : dst.project(img, dr - n);
        for (int r = 0; r < w; ++r)
          if (cls[r] != 0) M.set(r0 + r, s.offset + i, cls[r]);
        r0 += w;
      }
    }
  }
  out.solutions = rank_kernel_image(M).kernel;
  out.dimension = out.solutions.dim();
  return out;
}

}  // namespace gseq
