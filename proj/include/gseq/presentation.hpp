#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gseq/morphism.hpp"

namespace gseq {

// A graded-commutative algebra presented as free generators modulo
// homogeneous relations, computed degreewise up to a truncation bound.
class PresentedAlgebra {
 public:
  PresentedAlgebra(std::shared_ptr<FreeDGAlgebra> free_alg,
                   std::vector<Element> relations, int truncation);

  const FreeDGAlgebra& free_algebra() const { return *free_; }
  const std::shared_ptr<FreeDGAlgebra>& free_ptr() const { return free_; }
  const std::vector<Element>& relations() const { return relations_; }
  int truncation() const { return truncation_; }

  int dim(int k) const;
  const QuotientSpace& slice(int k) const;  // full space over the ideal
  Vec project(const Element& e, int k) const;
  Element lift(int k, const Vec& qcoords) const;
  bool in_ideal(const Element& e) const;

 private:
  std::shared_ptr<FreeDGAlgebra> free_;
  std::vector<Element> relations_;
  int truncation_;
  mutable std::map<int, QuotientSpace> slices_;
};

// Presentation of the cohomology algebra of a model, with the chosen
// cocycle representatives and the degreewise evaluation isomorphism.
class CohomologyPresentation {
 public:
  CohomologyPresentation(const FreeDGAlgebra* model,
                         std::shared_ptr<PresentedAlgebra> alg,
                         std::vector<Element> gen_reps, int truncation);

  const FreeDGAlgebra& model() const { return *model_; }
  const PresentedAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<PresentedAlgebra>& algebra_ptr() const { return alg_; }
  int truncation() const { return truncation_; }
  const Element& gen_rep(int i) const { return gen_reps_[i]; }
  // Substitution map from the presentation's free algebra into the model.
  const DGMorphism& eval_morphism() const { return *eval_; }

  const CohomologySpace& H(int k) const;
  // Inverse of the evaluation isomorphism in degree k.
  Vec class_to_presented(int k, const Vec& hcoords) const;

 private:
  const QMatrix& eval_matrix(int k) const;

  const FreeDGAlgebra* model_;
  std::shared_ptr<PresentedAlgebra> alg_;
  std::vector<Element> gen_reps_;
  int truncation_;
  std::unique_ptr<DGMorphism> eval_;
  mutable std::map<int, CohomologySpace> h_cache_;
  mutable std::map<int, QMatrix> eval_cache_;
};

// Degreewise greedy extraction: generators are cohomology classes not in
// the subalgebra generated so far, relations a kernel basis of evaluation.
CohomologyPresentation cohomology_presentation(const FreeDGAlgebra& a,
                                               int maxdeg);

// Map of presented algebras, given on presentation generators.
struct PresentedMap {
  const PresentedAlgebra* src = nullptr;
  const PresentedAlgebra* dst = nullptr;
  std::unique_ptr<DGMorphism> mor;  // between the free presentation algebras

  ValidationReport validate() const;  // degrees + relations land in the ideal
  Element apply(const Element& e) const { return mor->apply(e); }
};

PresentedMap identity_presented_map(const PresentedAlgebra& p);
// The map H(phi) in presented coordinates, for phi: srcP.model -> dstP.model.
PresentedMap induced_presented_map(const CohomologyPresentation& srcP,
                                   const CohomologyPresentation& dstP,
                                   const DGMorphism& phi);

// Der_n(src, dst; h) for presented (graded, differential-free) algebras:
// assignments of generator values killing every relation.
struct CohomologyDerivationSpace {
  int degree = 0;
  int dimension = 0;
  struct Slot {
    int gen = 0;
    int value_degree = 0;
    int offset = 0;
    int width = 0;
  };
  std::vector<Slot> slots;
  Subspace solutions;  // kernel inside the unknown coordinates
  const PresentedAlgebra* src = nullptr;
  const PresentedAlgebra* dst = nullptr;

  // generator values (lifted to the dst free algebra) of one solution
  std::vector<Element> values_of(const Vec& solution) const;
};

CohomologyDerivationSpace cohomology_derivation_space(
    const PresentedAlgebra& src, const PresentedAlgebra& dst,
    const PresentedMap& h, int n);

}  // namespace gseq
