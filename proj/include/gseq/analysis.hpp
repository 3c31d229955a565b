#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gseq/presentation.hpp"
#include "gseq/sequences.hpp"

namespace gseq {

// phi_X: H_n(Der(A, A; 1)) -> Der_n(H(A), H(A); 1),
// [theta] |-> ([chi] |-> [theta(chi)]).
struct PhiXMap {
  int degree = 0;
  int domain_dim = 0;
  int codomain_dim = 0;
  QMatrix matrix;  // codomain x domain, in the two solution bases
};

PhiXMap phi_x_map(const DerivationComplex& self_complex,
                  const CohomologyPresentation& hp, int n);

// Eilenberg-Mac Lane comparison: dim H_n(Der(Lambda(z_m), X; phi)) against
// dim H^{m-n}(X) for 2 <= n <= m.
struct ThomRow {
  int n = 0;
  int der_dim = 0;
  int cohom_dim = 0;
};
struct ThomTable {
  int m = 0;
  std::string model;
  std::vector<ThomRow> rows;
  bool all_match = true;
};

ThomTable thom_check(const FreeDGAlgebra& x, int m,
                     const Element* image = nullptr);

// F0-space comparison: dim H_{2r}(Der(M_Y, M_X; phi)) against
// dim Der_{2r}(H(Y), H(X); H(phi)) for even degrees in the window.
struct GrivelRow {
  int degree = 0;
  int der_dim = 0;
  int cohom_der_dim = 0;
};
struct GrivelReport {
  std::vector<GrivelRow> rows;
  bool all_match = true;
  std::vector<std::string> assumptions;
};

GrivelReport grivel_check(const DGMorphism& phi, int max_even);

// Split short exact sequences 0 -> G_{n+1}(A,B) -> Grel_{n+1} -> G_n(B) -> 0
// under the zero-linear-part / H0-source / F0-target hypotheses.
struct SplittingRow {
  int n = 0;
  int dim_gab = 0, dim_grel = 0, dim_gb = 0;
  bool injective = false, surjective = false, middle_exact = false;
  bool ok() const { return injective && surjective && middle_exact; }
};
struct SplittingReport {
  bool refused = false;
  std::string refusal;
  std::vector<SplittingRow> rows;
  bool all_ok = true;
  std::vector<std::string> assumptions;
};

SplittingReport splitting_check(const DGMorphism& phi, int window,
                                bool assume_f0);

// Necessary F0 conditions a truncated presentation can check; returns a
// failure description or nullopt.
std::optional<std::string> f0_obstruction(const FreeDGAlgebra& a);

// Trivialization search for a relative model Lambda(u) (x) Lambda(V):
// a pi-derivation cocycle psi with psi(u) = 1 yields the DG isomorphism
// Phi(a + ub) = a + ub + u psi(a) onto the product differential.
struct TnczObstruction {
  std::string generator;
  std::string equation;  // e.g. "psi(u3*y3) = y3"
  std::string residual;
};
struct TnczVerdict {
  bool trivializable = false;
  std::optional<Derivation> psi;
  std::vector<std::pair<std::string, std::string>> phi_images;  // gen -> image
  std::vector<std::pair<std::string, std::string>> phi_inverse_images;
  std::vector<TnczObstruction> obstructions;
  std::vector<std::string> audit;
};

// Owns the projection morphism and product model the verdict's derivation
// and image strings refer to; movable, not copyable.
class TnczAnalysis {
 public:
  TnczAnalysis(std::shared_ptr<FreeDGAlgebra> total,
               std::shared_ptr<FreeDGAlgebra> fiber,
               const std::string& base_gen);
  TnczAnalysis(TnczAnalysis&&) = default;
  TnczAnalysis& operator=(TnczAnalysis&&) = default;
  const TnczVerdict& verdict() const { return verdict_; }

 private:
  std::shared_ptr<FreeDGAlgebra> total_, fiber_, product_;
  std::unique_ptr<DGMorphism> pi_;
  TnczVerdict verdict_;
};

TnczAnalysis tncz_analyze(std::shared_ptr<FreeDGAlgebra> total,
                          std::shared_ptr<FreeDGAlgebra> fiber,
                          const std::string& base_gen);

}  // namespace gseq
