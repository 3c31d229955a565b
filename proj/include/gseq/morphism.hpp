#pragma once

#include <map>
#include <string>
#include <vector>

#include "gseq/algebra.hpp"

namespace gseq {

// Degree-0 chain-algebra map between free DG algebras, given by generator
// images and extended multiplicatively.
class DGMorphism {
 public:
  DGMorphism(std::string name, const FreeDGAlgebra* src,
             const FreeDGAlgebra* tgt, std::vector<Element> images);
  static DGMorphism identity(const FreeDGAlgebra* a,
                             const std::string& name = "1");
  // Augmentation A -> Q, zero on every generator.
  static DGMorphism augmentation(const FreeDGAlgebra* a);

  const std::string& name() const { return name_; }
  const FreeDGAlgebra& source() const { return *src_; }
  const FreeDGAlgebra& target() const { return *tgt_; }
  const Element& image_of(int gen) const { return images_[gen]; }

  ValidationReport validate() const;

  Element apply(const Element& e) const;
  Element apply_monomial(const Monomial& m) const;

  // Matrix of Q(phi) on indecomposables in degree n (targets x sources).
  // Requires both algebras minimal.
  QMatrix linear_part(int n) const;
  bool linear_part_vanishes() const;

  DGMorphism compose_after(const DGMorphism& inner) const;  // this o inner

 private:
  std::string name_;
  const FreeDGAlgebra* src_;
  const FreeDGAlgebra* tgt_;
  std::vector<Element> images_;
  mutable std::map<Monomial, Element> apply_cache_;
};

// Convenience: validate and throw gseq::Error when invalid.
DGMorphism checked(DGMorphism m);

}  // namespace gseq
