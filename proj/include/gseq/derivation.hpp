#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gseq/chain.hpp"
#include "gseq/morphism.hpp"

namespace gseq {

// phi-derivation of degree n: theta lowers degree by n, is given on source
// generators, and extends over products by
//   theta(xy) = theta(x) phi(y) + (-1)^{n|x|} phi(x) theta(y).
class Derivation {
 public:
  Derivation(const DGMorphism* phi, int degree);
  Derivation(const DGMorphism* phi, int degree, std::vector<Element> values);

  int degree() const { return degree_; }
  const DGMorphism& base() const { return *phi_; }
  const Element& value(int gen) const { return values_[gen]; }
  void set_value(int gen, Element v);

  // Leibniz extension over an arbitrary source element.
  Element evaluate(const Element& e) const;

  // delta(theta) = d_B o theta - (-1)^{|theta|} theta o d_A, degree n-1.
  Derivation delta() const;

  bool is_zero() const;
  std::string str() const;  // P|w notation, e.g. "x4*" or "-3*x4^2|x11"

 private:
  Element evaluate_monomial(const Monomial& m) const;

  const DGMorphism* phi_;
  int degree_;
  std::vector<Element> values_;
  mutable std::map<Monomial, Element> eval_cache_;
};

// Elementary derivation P|w: carries generator w to monomial P.
struct ElemDeriv {
  int gen = 0;
  Monomial mono;
};

// The chain complex Der_*(A, B; phi). Coordinates at level n are the
// elementary derivations P|w with |P| = |w| - n, ordered by generator then
// monomial. Level 1 restricts its chain group to the delta-cycles; level 0
// exists only as a coordinate target for delta_1.
class DerivationComplex : public ChainComplex {
 public:
  DerivationComplex(const DGMorphism* phi, int max_level);

  const DGMorphism& base() const { return *phi_; }
  const FreeDGAlgebra& source() const { return phi_->source(); }
  const FreeDGAlgebra& target() const { return phi_->target(); }

  const std::vector<ElemDeriv>& elementary_basis(int n) const;
  int elem_index(int n, int gen, const Monomial& m) const;

  Derivation from_coords(int n, const Vec& v) const;
  Vec coords(const Derivation& th) const;
  // Spec operation: elementary derivations for n >= 2; a basis of the cycle
  // subspace for n = 1.
  std::vector<Derivation> derivation_basis(int n) const;

  std::string render_chain(int n, const Vec& v) const override;

 private:
  Vec value_coords(int level, const Derivation& th) const;

  const DGMorphism* phi_;
  std::vector<std::vector<ElemDeriv>> bases_;
  std::vector<std::map<std::pair<int, Monomial>, int>> index_;
};

// Der_*(A, B~; phi~): the subcomplex of derivations whose values lie in the
// augmentation ideal of B. Coordinates are the non-unit elementary
// derivations of the parent complex.
class AugmentationIdealComplex : public ChainComplex {
 public:
  explicit AugmentationIdealComplex(const DerivationComplex& full);

  const DerivationComplex& full() const { return *full_; }
  const std::vector<int>& positions(int n) const { return positions_[n]; }

  std::string render_chain(int n, const Vec& v) const override;

 private:
  const DerivationComplex* full_;
  std::vector<std::vector<int>> positions_;  // full-coordinate index per coord
};

// Pre-composition theta |-> theta o phi as a chain map
// Der(B, C; psi) -> Der(A, C; psi o phi), for phi: A -> B.
ChainMap precompose_map(const DGMorphism& phi, const DerivationComplex& src,
                        const DerivationComplex& dst);

// Post-composition with the augmentation: Der(A, B; phi) -> Der(A, Q; eps),
// keeping the unit-monomial component of every value.
ChainMap augment_map(const DerivationComplex& src, const DerivationComplex& dst);

// Coordinate inclusion Der(A, B~; phi~) -> Der(A, B; phi).
ChainMap inclusion_map(const AugmentationIdealComplex& src,
                       const DerivationComplex& dst);

// Snake-lemma connecting map for the short exact sequence
// 0 -> Der(A,B~) -> Der(A,B) -> Der(A,Q) -> 0:  H_n(Q-complex) ->
// H_{n-1}(ideal complex).
QMatrix snake_delta(const DerivationComplex& full,
                    const AugmentationIdealComplex& ideal,
                    const DerivationComplex& qcx, int n);

}  // namespace gseq
