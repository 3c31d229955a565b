#include "gseq/derivation.hpp"

#include <algorithm>
#include <sstream>

namespace gseq {

namespace {
constexpr long long kLevelDimCap = 200000;
}

Derivation::Derivation(const DGMorphism* phi, int degree)
    : phi_(phi), degree_(degree),
      values_(phi->source().gen_count(), Element(&phi->target())) {
  if (degree < 0) throw Error("Derivation: negative degree");
}

Derivation::Derivation(const DGMorphism* phi, int degree,
                       std::vector<Element> values)
    : phi_(phi), degree_(degree), values_(std::move(values)) {
  if (degree < 0) throw Error("Derivation: negative degree");
  if (static_cast<int>(values_.size()) != phi->source().gen_count())
    throw Error("Derivation: one value per source generator required");
  for (int i = 0; i < phi->source().gen_count(); ++i) set_value(i, values_[i]);
}

void Derivation::set_value(int gen, Element v) {
  const int want = phi_->source().generator(gen).degree - degree_;
  if (!v.is_zero() && (want < 0 || !v.homogeneous_of(want)))
    throw Error("Derivation: value on " + phi_->source().generator(gen).name +
                " must be homogeneous of degree " + std::to_string(want));
  values_[gen] = std::move(v);
  eval_cache_.clear();
}

Element Derivation::evaluate_monomial(const Monomial& m) const {
  auto it = eval_cache_.find(m);
  if (it != eval_cache_.end()) return it->second;
  Element out(&phi_->target());
  if (!m.is_unit()) {
    int g = -1;
    for (size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] > 0) {
        g = static_cast<int>(i);
        break;
      }
    Monomial rest = m;
    rest.exps[g] -= 1;
    // theta(g * rest) = theta(g) phi(rest) + (-1)^{n|g|} phi(g) theta(rest)
    const int sign = pow_sign(static_cast<long long>(degree_) *
                              phi_->source().generator(g).degree);
    out = values_[g] * phi_->apply_monomial(rest) +
          (phi_->apply_monomial(Monomial{[&] {
             std::vector<int> e(m.exps.size(), 0);
             e[g] = 1;
             return e;
           }()}) *
           evaluate_monomial(rest))
              .scaled(sign);
  }
  eval_cache_.emplace(m, out);
  return out;
}

Element Derivation::evaluate(const Element& e) const {
  if (e.algebra() && e.algebra() != &phi_->source())
    throw Error("Derivation::evaluate: element of another algebra");
  Element out(&phi_->target());
  for (const auto& [m, c] : e.terms())
    out = out + evaluate_monomial(m).scaled(c);
  return out;
}

Derivation Derivation::delta() const {
  if (degree_ < 1) throw Error("Derivation::delta: degree must be >= 1");
  const FreeDGAlgebra& A = phi_->source();
  const FreeDGAlgebra& B = phi_->target();
  Derivation out(phi_, degree_ - 1);
  const int sgn = pow_sign(degree_);
  for (int i = 0; i < A.gen_count(); ++i) {
    Element v = B.d(values_[i]) - evaluate(A.differential_of(i)).scaled(sgn);
    out.set_value(i, std::move(v));
  }
  return out;
}

bool Derivation::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

std::string Derivation::str() const {
  const FreeDGAlgebra& A = phi_->source();
  const FreeDGAlgebra& B = phi_->target();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < A.gen_count(); ++i) {
    for (const auto& [m, c] : values_[i].terms()) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      const std::string piece = m.is_unit()
                                    ? A.generator(i).name + "*"
                                    : B.monomial_str(m) + "∂" +
                                          A.generator(i).name;
      if (a == 1)
        os << piece;
      else
        os << rat_str(a) << "*" << piece;
    }
  }
  if (first) return "0";
  return os.str();
}

DerivationComplex::DerivationComplex(const DGMorphism* phi, int max_level)
    : phi_(phi) {
  if (max_level < 1) throw Error("DerivationComplex: window too small");
  const FreeDGAlgebra& A = phi_->source();
  const FreeDGAlgebra& B = phi_->target();
  bases_.resize(max_level + 1);
  index_.resize(max_level + 1);
  levels_.resize(max_level + 1);
  long long total = 0;
  for (int n = 0; n <= max_level; ++n) {
    for (const auto& w : A.generators()) {
      const int pdeg = w.degree - n;
      if (pdeg < 0) continue;
      for (const auto& m : B.monomial_basis(pdeg)) {
        index_[n][{w.index, m}] = static_cast<int>(bases_[n].size());
        bases_[n].push_back(ElemDeriv{w.index, m});
      }
    }
    levels_[n].dim = static_cast<int>(bases_[n].size());
    total += levels_[n].dim;
    if (total > kLevelDimCap)
      throw Error("degree window too large: derivation basis exceeds " +
                  std::to_string(kLevelDimCap) + " elements");
  }
  for (int n = 1; n <= max_level; ++n) {
    QMatrix d(levels_[n - 1].dim, levels_[n].dim);
    for (int j = 0; j < levels_[n].dim; ++j) {
      Vec e = zero_vec(levels_[n].dim);
      e[j] = 1;
      Derivation th = from_coords(n, e);
      Vec col = coords(th.delta());
      for (int r = 0; r < d.rows(); ++r)
        if (col[r] != 0) d.set(r, j, col[r]);
    }
    levels_[n].delta = std::move(d);
  }
  levels_[0].chain = Subspace::zero(levels_[0].dim);
  if (max_level >= 1)
    levels_[1].chain = rank_kernel_image(levels_[1].delta).kernel;
  for (int n = 2; n <= max_level; ++n)
    levels_[n].chain = Subspace::full(levels_[n].dim);
  verify_delta_squared();
}

const std::vector<ElemDeriv>& DerivationComplex::elementary_basis(int n) const {
  static const std::vector<ElemDeriv> kEmpty;
  if (n < 0 || n > max_level()) return kEmpty;
  return bases_[n];
}

int DerivationComplex::elem_index(int n, int gen, const Monomial& m) const {
  if (n < 0 || n > max_level()) return -1;
  auto it = index_[n].find({gen, m});
  return it == index_[n].end() ? -1 : it->second;
}

Derivation DerivationComplex::from_coords(int n, const Vec& v) const {
  if (static_cast<int>(v.size()) != dim(n))
    throw Error("DerivationComplex::from_coords: length mismatch");
  Derivation th(phi_, n);
  const FreeDGAlgebra& B = phi_->target();
  std::vector<Element> values(phi_->source().gen_count(), Element(&B));
  for (size_t i = 0; i < bases_[n].size(); ++i) {
    if (v[i] == 0) continue;
    values[bases_[n][i].gen].add_term(bases_[n][i].mono, v[i]);
  }
  for (int g = 0; g < phi_->source().gen_count(); ++g)
    th.set_value(g, std::move(values[g]));
  return th;
}

Vec DerivationComplex::coords(const Derivation& th) const {
  const int n = th.degree();
  if (n < 0 || n > max_level())
    throw Error("DerivationComplex::coords: degree out of window");
  Vec v = zero_vec(dim(n));
  for (int g = 0; g < phi_->source().gen_count(); ++g) {
    for (const auto& [m, c] : th.value(g).terms()) {
      const int i = elem_index(n, g, m);
      if (i < 0)
        throw Error("DerivationComplex::coords: value outside basis");
      v[i] = c;
    }
  }
  return v;
}

std::vector<Derivation> DerivationComplex::derivation_basis(int n) const {
  if (n < 1) throw Error("derivation_basis: degree must be >= 1");
  std::vector<Derivation> out;
  if (n > max_level()) return out;
  if (n == 1) {
    for (const auto& v : chain_group(1).basis()) out.push_back(from_coords(1, v));
  } else {
    for (int j = 0; j < dim(n); ++j) {
      Vec e = zero_vec(dim(n));
      e[j] = 1;
      out.push_back(from_coords(n, e));
    }
  }
  return out;
}

std::string DerivationComplex::render_chain(int n, const Vec& v) const {
  if (is_zero_vec(v)) return "0";
  return from_coords(n, v).str();
}

AugmentationIdealComplex::AugmentationIdealComplex(const DerivationComplex& full)
    : full_(&full) {
  const int top = full.max_level();
  positions_.resize(top + 1);
  levels_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    const auto& basis = full.elementary_basis(n);
    for (size_t i = 0; i < basis.size(); ++i)
      if (!basis[i].mono.is_unit())
        positions_[n].push_back(static_cast<int>(i));
    levels_[n].dim = static_cast<int>(positions_[n].size());
  }
  for (int n = 1; n <= top; ++n) {
    QMatrix d(levels_[n - 1].dim, levels_[n].dim);
    for (size_t j = 0; j < positions_[n].size(); ++j) {
      Vec col = full.delta(n).column(positions_[n][j]);
      // values of delta on ideal-valued derivations stay in the ideal
      for (size_t k = 0; k < col.size(); ++k) {
        bool kept = std::binary_search(positions_[n - 1].begin(),
                                       positions_[n - 1].end(),
                                       static_cast<int>(k));
        if (!kept && col[k] != 0)
          throw InternalError(
              "augmentation-ideal complex: delta leaves the ideal at level " +
              std::to_string(n));
      }
      for (size_t r = 0; r < positions_[n - 1].size(); ++r) {
        const Rational& c = col[positions_[n - 1][r]];
        if (c != 0) d.set(static_cast<int>(r), static_cast<int>(j), c);
      }
    }
    levels_[n].delta = std::move(d);
  }
  levels_[0].chain = Subspace::zero(levels_[0].dim);
  if (top >= 1) levels_[1].chain = rank_kernel_image(levels_[1].delta).kernel;
  for (int n = 2; n <= top; ++n)
    levels_[n].chain = Subspace::full(levels_[n].dim);
  verify_delta_squared();
}

std::string AugmentationIdealComplex::render_chain(int n, const Vec& v) const {
  Vec w = zero_vec(full_->dim(n));
  for (size_t i = 0; i < positions_[n].size(); ++i) w[positions_[n][i]] = v[i];
  return full_->render_chain(n, w);
}

ChainMap precompose_map(const DGMorphism& phi, const DerivationComplex& src,
                        const DerivationComplex& dst) {
  if (&src.source() != &phi.target() || &dst.source() != &phi.source() ||
      &src.target() != &dst.target())
    throw Error("precompose_map: incompatible complexes");
  ChainMap out;
  out.src = &src;
  out.dst = &dst;
  out.name = phi.name() + "*";
  const int top = std::min(src.max_level(), dst.max_level());
  for (int n = 0; n <= top; ++n) {
    QMatrix m(dst.dim(n), src.dim(n));
    for (int j = 0; j < src.dim(n); ++j) {
      Vec e = zero_vec(src.dim(n));
      e[j] = 1;
      Derivation th = src.from_coords(n, e);
      Derivation composite(&dst.base(), n);
      for (int g = 0; g < phi.source().gen_count(); ++g)
        composite.set_value(g, th.evaluate(phi.image_of(g)));
      Vec col = dst.coords(composite);
      for (int r = 0; r < m.rows(); ++r)
        if (col[r] != 0) m.set(r, j, col[r]);
    }
    out.mats.push_back(std::move(m));
  }
  out.verify_chain_map();
  return out;
}

ChainMap augment_map(const DerivationComplex& src, const DerivationComplex& dst) {
  if (&src.source() != &dst.source() || &dst.target() != &trivial_algebra())
    throw Error("augment_map: incompatible complexes");
  ChainMap out;
  out.src = &src;
  out.dst = &dst;
  out.name = "eps*";
  Monomial unitQ;  // unit of the trivial algebra: empty exponent vector
  const int top = std::min(src.max_level(), dst.max_level());
  for (int n = 0; n <= top; ++n) {
    QMatrix m(dst.dim(n), src.dim(n));
    const auto& basis = src.elementary_basis(n);
    for (size_t j = 0; j < basis.size(); ++j) {
      if (!basis[j].mono.is_unit()) continue;
      const int r = dst.elem_index(n, basis[j].gen, unitQ);
      if (r >= 0) m.set(r, static_cast<int>(j), 1);
    }
    out.mats.push_back(std::move(m));
  }
  out.verify_chain_map();
  return out;
}

ChainMap inclusion_map(const AugmentationIdealComplex& src,
                       const DerivationComplex& dst) {
  if (&src.full() != &dst) throw Error("inclusion_map: wrong parent complex");
  ChainMap out;
  out.src = &src;
  out.dst = &dst;
  out.name = "i*";
  for (int n = 0; n <= src.max_level(); ++n) {
    QMatrix m(dst.dim(n), src.dim(n));
    for (size_t j = 0; j < src.positions(n).size(); ++j)
      m.set(src.positions(n)[j], static_cast<int>(j), 1);
    out.mats.push_back(std::move(m));
  }
  out.verify_chain_map();
  return out;
}

QMatrix snake_delta(const DerivationComplex& full,
                    const AugmentationIdealComplex& ideal,
                    const DerivationComplex& qcx, int n) {
  if (n < 2) throw Error("snake_delta: level must be >= 2");
  const HomologySpace& hq = qcx.homology(n);
  const HomologySpace& hi = ideal.homology(n - 1);
  Monomial unitB;
  unitB.exps.assign(full.target().gen_count(), 0);
  Monomial unitQ;
  QMatrix out(hi.dim, hq.dim);
  for (int j = 0; j < hq.dim; ++j) {
    const Vec& z = hq.representative(j);
    Vec lift = zero_vec(full.dim(n));
    const auto& qbasis = qcx.elementary_basis(n);
    for (size_t i = 0; i < qbasis.size(); ++i) {
      if (z[i] == 0) continue;
      const int fi = full.elem_index(n, qbasis[i].gen, unitB);
      if (fi < 0) throw InternalError("snake_delta: missing unit coordinate");
      lift[fi] = z[i];
    }
    Vec dm = full.delta(n).apply(lift);
    // unit components of delta(lift) must reproduce delta_Q(z) = 0
    Vec u = zero_vec(ideal.dim(n - 1));
    for (size_t k = 0; k < dm.size(); ++k) {
      const auto& e = full.elementary_basis(n - 1)[k];
      if (e.mono.is_unit()) {
        if (dm[k] != 0)
          throw InternalError("snake_delta: lifted boundary has unit part");
      }
    }
    const auto& pos = ideal.positions(n - 1);
    for (size_t r = 0; r < pos.size(); ++r) u[r] = dm[pos[r]];
    Vec cls = hi.class_of(u);
    for (int r = 0; r < hi.dim; ++r)
      if (cls[r] != 0) out.set(r, j, cls[r]);
  }
  return out;
}

}  // namespace gseq
