#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gseq/derivation.hpp"

namespace gseq {

// Everything derived from one DG algebra map phi: A -> B: the four
// derivation complexes of the ladder, the induced chain maps, both relative
// complexes, and the augmentation-ideal complex of the A-side.
struct DerivationLadder {
  DGMorphism phi;   // A -> B
  DGMorphism idB;   // 1_B
  DGMorphism epsA;  // A -> Q
  DGMorphism epsB;  // B -> Q
  int window = 0;   // reporting window N; complexes built to N + 2

  std::unique_ptr<DerivationComplex> cxBB;  // Der(B, B; 1)
  std::unique_ptr<DerivationComplex> cxAB;  // Der(A, B; phi)
  std::unique_ptr<DerivationComplex> cxBQ;  // Der(B, Q; eps)
  std::unique_ptr<DerivationComplex> cxAQ;  // Der(A, Q; eps)
  std::unique_ptr<AugmentationIdealComplex> cxABt;  // Der(A, B~; phi~)

  ChainMap phiStar;     // Der(B,B;1)   -> Der(A,B;phi)
  ChainMap phiHatStar;  // Der(B,Q;eps) -> Der(A,Q;eps)
  ChainMap epsStarBB;   // Der(B,B;1)   -> Der(B,Q;eps)
  ChainMap epsStarAB;   // Der(A,B;phi) -> Der(A,Q;eps)
  ChainMap inclABt;     // Der(A,B~)    -> Der(A,B;phi)

  std::unique_ptr<RelativeComplex> relTop;  // Rel(phi*)
  std::unique_ptr<RelativeComplex> relHat;  // Rel(phi-hat*)
  ChainMap epsRel;                          // (eps*, eps*)

  DerivationLadder(const DerivationLadder&) = delete;
  DerivationLadder& operator=(const DerivationLadder&) = delete;
  explicit DerivationLadder(const DGMorphism& phi_)
      : phi(phi_), idB(DGMorphism::identity(&phi_.target())),
        epsA(DGMorphism::augmentation(&phi_.source())),
        epsB(DGMorphism::augmentation(&phi_.target())) {}
};

// Default window: 2 * (largest generator degree of either algebra) + 2.
int default_window(const DGMorphism& phi);
std::unique_ptr<DerivationLadder> build_ladder(const DGMorphism& phi, int window);

// A subgroup of a homology space, given as the image of an induced map.
struct SubgroupInHomology {
  const HomologySpace* ambient = nullptr;
  Subspace sub;  // in ambient homology coordinates
  std::string provenance;
  std::string label;

  int dim() const { return sub.dim(); }
  // Renders one subgroup-coordinate vector as a class of the ambient space.
  std::string render(const Vec& subcoords) const;
  std::vector<std::string> witness_strings() const;
};

// evaluation_subgroup / Gottlieb: image of H(eps_*); with A = B, phi = 1
// this is G_n(B).
SubgroupInHomology evaluation_subgroup(const DerivationLadder& L, int n);
SubgroupInHomology gottlieb_subgroup(const DerivationLadder& L, int n);
SubgroupInHomology relative_evaluation_subgroup(const DerivationLadder& L, int n);

// Map between two subgroups obtained by restricting an ambient homology
// map; columns/rows are in the subgroup bases.
struct RestrictedMap {
  int from_dim = 0, to_dim = 0;
  QMatrix mat;
};

struct GSequenceTerm {
  SubgroupInHomology sub;
};

// The G-sequence of phi: terms for degrees 2..N+1 and the restricted maps
// between them. Composite-zero is asserted at construction.
struct GSequence {
  const DerivationLadder* ladder = nullptr;
  int N = 0;
  std::map<int, GSequenceTerm> GB;    // G_n(B)
  std::map<int, GSequenceTerm> GAB;   // G_n(A, B; phi)
  std::map<int, GSequenceTerm> GREL;  // G^rel_n(A, B; phi)
  std::map<int, RestrictedMap> f_hat;  // G_n(B)    -> G_n(A,B)
  std::map<int, RestrictedMap> j_hat;  // G_n(A,B)  -> Grel_n
  std::map<int, RestrictedMap> p_hat;  // Grel_n    -> G_{n-1}(B)
};

GSequence build_g_sequence(const DerivationLadder& L);

enum class GTermType { Gottlieb, Evaluation, Relative };

struct TermVerdict {
  GTermType type = GTermType::Gottlieb;
  int degree = 0;
  std::string label;
  int dim = 0;
  bool exact = true;
  int defect_dim = 0;
  std::vector<std::string> witnesses;
};

struct ExactnessReport {
  std::vector<TermVerdict> terms;
  bool all_exact = true;
};

ExactnessReport exactness_report(const GSequence& g);

struct OmegaHomology {
  int degree = 0;
  int dim = 0;
  std::vector<std::string> witnesses;
};

// Homology of the G-sequence at the G_n(B) term:
// ker(G_n(B) -> G_n(A,B)) / im(Grel_{n+1} -> G_n(B)).
OmegaHomology omega_homology(const GSequence& g, int n);

struct LESReport {
  std::string kind;                  // fstar | f | eval-fibration
  std::array<std::string, 3> labels;
  std::map<int, std::array<int, 3>> dims;  // per degree
  std::vector<std::string> notes;
};

// Theorem-backed long exact sequences; exactness is audited at every
// covered term and a failure throws InternalError.
LESReport les_of_fstar(const DerivationLadder& L);
LESReport les_of_f(const DerivationLadder& L);
LESReport les_of_eval_fibration(const DerivationLadder& L);

}  // namespace gseq
