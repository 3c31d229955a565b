#include "gseq/morphism.hpp"

namespace gseq {

DGMorphism::DGMorphism(std::string name, const FreeDGAlgebra* src,
                       const FreeDGAlgebra* tgt, std::vector<Element> images)
    : name_(std::move(name)), src_(src), tgt_(tgt), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_->gen_count())
    throw Error("DGMorphism: one image per source generator required");
}

DGMorphism DGMorphism::identity(const FreeDGAlgebra* a, const std::string& name) {
  std::vector<Element> images;
  for (int i = 0; i < a->gen_count(); ++i) images.push_back(a->gen_elem(i));
  return DGMorphism(name, a, a, std::move(images));
}

DGMorphism DGMorphism::augmentation(const FreeDGAlgebra* a) {
  std::vector<Element> images(a->gen_count(), Element(&trivial_algebra()));
  return DGMorphism("eps", a, &trivial_algebra(), std::move(images));
}

ValidationReport DGMorphism::validate() const {
  ValidationReport rep;
  rep.minimal = true;
  for (int i = 0; i < src_->gen_count(); ++i) {
    const Generator& g = src_->generator(i);
    if (images_[i].algebra() && images_[i].algebra() != tgt_) {
      rep.issues.push_back({name_ + "(" + g.name + ")",
                            "image lives in the wrong algebra"});
      continue;
    }
    if (!images_[i].homogeneous_of(g.degree)) {
      rep.issues.push_back(
          {name_ + "(" + g.name + ")",
           "image is not homogeneous of degree " + std::to_string(g.degree)});
    }
  }
  if (!rep.issues.empty()) return rep;
  for (int i = 0; i < src_->gen_count(); ++i) {
    const Generator& g = src_->generator(i);
    Element lhs = apply(src_->differential_of(i));
    Element rhs = tgt_->d(images_[i]);
    if (!(lhs == rhs)) {
      rep.issues.push_back(
          {name_ + "(" + g.name + ")",
           "chain condition fails: phi(d " + g.name + ") = " + lhs.str() +
               " but d(phi " + g.name + ") = " + rhs.str()});
    }
  }
  return rep;
}

Element DGMorphism::apply_monomial(const Monomial& m) const {
  auto it = apply_cache_.find(m);
  if (it != apply_cache_.end()) return it->second;
  Element out(tgt_);
  if (m.is_unit()) {
    out = tgt_->unit();
  } else {
    int g = -1;
    for (size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] > 0) {
        g = static_cast<int>(i);
        break;
      }
    Monomial rest = m;
    rest.exps[g] -= 1;
    out = images_[g] * apply_monomial(rest);
  }
  apply_cache_.emplace(m, out);
  return out;
}

Element DGMorphism::apply(const Element& e) const {
  if (e.algebra() && e.algebra() != src_)
    throw Error("DGMorphism::apply: element of another algebra");
  Element out(tgt_);
  for (const auto& [m, c] : e.terms())
    out = out + apply_monomial(m).scaled(c);
  return out;
}

QMatrix DGMorphism::linear_part(int n) const {
  if (!src_->minimal() || !tgt_->minimal())
    throw Error("linear_part: both algebras must be minimal");
  std::vector<int> srcs, tgts;
  for (const auto& g : src_->generators())
    if (g.degree == n) srcs.push_back(g.index);
  for (const auto& g : tgt_->generators())
    if (g.degree == n) tgts.push_back(g.index);
  QMatrix m(static_cast<int>(tgts.size()), static_cast<int>(srcs.size()));
  for (size_t j = 0; j < srcs.size(); ++j) {
    const Element& img = images_[srcs[j]];
    for (size_t r = 0; r < tgts.size(); ++r) {
      Monomial mono;
      mono.exps.assign(tgt_->gen_count(), 0);
      mono.exps[tgts[r]] = 1;
      const Rational c = img.coefficient(mono);
      if (c != 0) m.set(static_cast<int>(r), static_cast<int>(j), c);
    }
  }
  return m;
}

bool DGMorphism::linear_part_vanishes() const {
  for (int i = 0; i < src_->gen_count(); ++i) {
    for (const auto& [m, c] : images_[i].terms())
      if (m.total_exponent() < 2) return false;
  }
  return true;
}

DGMorphism DGMorphism::compose_after(const DGMorphism& inner) const {
  if (&inner.target() != src_)
    throw Error("DGMorphism::compose_after: targets do not match");
  std::vector<Element> images;
  for (int i = 0; i < inner.source().gen_count(); ++i)
    images.push_back(apply(inner.image_of(i)));
  return DGMorphism(name_ + "." + inner.name_, &inner.source(), tgt_,
                    std::move(images));
}

DGMorphism checked(DGMorphism m) {
  auto rep = m.validate();
  if (!rep.valid())
    throw Error("invalid DG morphism " + m.name() + ":\n" + rep.summary());
  return m;
}

}  // namespace gseq
