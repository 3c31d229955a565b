#include "gseq/chain.hpp"

#include <sstream>

namespace gseq {

Vec HomologySpace::chain_of_class(const Vec& hcoords) const {
  Vec out = zero_vec(owner->dim(degree));
  for (int i = 0; i < dim; ++i)
    if (hcoords[i] != 0) out = vec_add(out, vec_scale(hcoords[i], representative(i)));
  return out;
}

std::string HomologySpace::render_class(const Vec& hcoords) const {
  return owner->render_chain(degree, chain_of_class(hcoords));
}

int ChainComplex::dim(int n) const {
  if (n < 0 || n > max_level()) return 0;
  return levels_[n].dim;
}

const QMatrix& ChainComplex::delta(int n) const {
  if (n < 1 || n > max_level()) throw Error("ChainComplex::delta: level out of range");
  return levels_[n].delta;
}

const Subspace& ChainComplex::chain_group(int n) const {
  static const Subspace kEmpty;
  if (n < 0 || n > max_level()) return kEmpty;
  return levels_[n].chain;
}

const HomologySpace& ChainComplex::homology(int n) const {
  auto it = hcache_.find(n);
  if (it != hcache_.end()) return it->second;
  if (n < 1 || n > max_level() - 1)
    throw Error("ChainComplex::homology: level " + std::to_string(n) +
                " outside computable window");
  Subspace cycles = subspace_intersection(
      rank_kernel_image(levels_[n].delta).kernel, levels_[n].chain);
  // boundaries: image of delta restricted to the chain group one level up
  std::vector<Vec> imgs;
  for (const auto& v : levels_[n + 1].chain.basis())
    imgs.push_back(levels_[n + 1].delta.apply(v));
  Subspace boundaries = Subspace::span(levels_[n].dim, std::move(imgs));
  HomologySpace h;
  h.owner = this;
  h.degree = n;
  h.quotient = QuotientSpace(std::move(cycles), std::move(boundaries));
  h.dim = h.quotient.dim();
  return hcache_.emplace(n, std::move(h)).first->second;
}

void ChainComplex::verify_delta_squared() const {
  for (int n = 2; n <= max_level(); ++n) {
    if (!levels_[n - 1].delta.multiply(levels_[n].delta).is_zero())
      throw InternalError("delta^2 != 0 between levels " + std::to_string(n) +
                          " and " + std::to_string(n - 2));
  }
}

const QMatrix& ChainMap::at(int n) const {
  static const QMatrix kEmpty;
  if (n < 0 || n >= static_cast<int>(mats.size())) return kEmpty;
  return mats[n];
}

void ChainMap::verify_chain_map() const {
  const int top = std::min(src->max_level(), dst->max_level());
  for (int n = 1; n <= top; ++n) {
    QMatrix lhs = dst->delta(n).multiply(mats[n]);
    QMatrix rhs = mats[n - 1].multiply(src->delta(n));
    if (!(lhs == rhs))
      throw InternalError("chain map " + name + " fails to commute with delta at level " +
                          std::to_string(n));
  }
}

QMatrix ChainMap::homology_matrix(int n) const {
  const HomologySpace& hs = src->homology(n);
  const HomologySpace& hd = dst->homology(n);
  QMatrix out(hd.dim, hs.dim);
  for (int j = 0; j < hs.dim; ++j) {
    Vec img = mats[n].apply(hs.representative(j));
    Vec cls = hd.class_of(img);
    for (int r = 0; r < hd.dim; ++r)
      if (cls[r] != 0) out.set(r, j, cls[r]);
  }
  return out;
}

RelativeComplex::RelativeComplex(const ChainMap& f) : f_(f) {
  f_.verify_chain_map();
  const ChainComplex& A = *f_.src;
  const ChainComplex& B = *f_.dst;
  const int top = std::min(A.max_level() + 1, B.max_level());
  levels_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    Level& L = levels_[n];
    const int da = A.dim(n - 1);
    const int db = B.dim(n);
    L.dim = da + db;
    // chain group: product of the two chain groups, block-embedded
    std::vector<Vec> rows;
    if (n - 1 >= 0)
      for (const auto& v : A.chain_group(n - 1).basis()) {
        Vec w = zero_vec(L.dim);
        for (int i = 0; i < da; ++i) w[i] = v[i];
        rows.push_back(std::move(w));
      }
    for (const auto& v : B.chain_group(n).basis()) {
      Vec w = zero_vec(L.dim);
      for (int i = 0; i < db; ++i) w[da + i] = v[i];
      rows.push_back(std::move(w));
    }
    L.chain = Subspace::span(L.dim, std::move(rows));
    if (n >= 1) {
      const int da1 = A.dim(n - 2);
      const int db1 = B.dim(n - 1);
      QMatrix d(da1 + db1, L.dim);
      // the upstream summand carries the suspension sign, so that
      // delta(a, b) = (-delta a, delta b - f(a)) squares to zero
      if (n - 1 >= 1) {
        const QMatrix& dA = A.delta(n - 1);
        for (int r = 0; r < dA.rows(); ++r)
          for (const auto& [c, v] : dA.row(r)) d.set(r, c, -v);
      }
      // - f_{n-1} block
      const QMatrix& F = f_.at(n - 1);
      for (int r = 0; r < db1 && F.rows() > 0; ++r)
        for (const auto& [c, v] : F.row(r)) d.set(da1 + r, c, -v);
      if (n >= 1 && B.dim(n) > 0 && n <= B.max_level()) {
        const QMatrix& dB = B.delta(n);
        for (int r = 0; r < dB.rows(); ++r)
          for (const auto& [c, v] : dB.row(r)) d.set(da1 + r, da + c, v);
      }
      L.delta = std::move(d);
    }
  }
  verify_delta_squared();
}

QMatrix RelativeComplex::J_matrix(int n) const {
  const int da = upstream().dim(n - 1);
  const int db = downstream().dim(n);
  QMatrix m(da + db, db);
  for (int i = 0; i < db; ++i) m.set(da + i, i, 1);
  return m;
}

QMatrix RelativeComplex::P_matrix(int n) const {
  const int da = upstream().dim(n - 1);
  const int db = downstream().dim(n);
  QMatrix m(upstream().dim(n - 1), da + db);
  for (int i = 0; i < da; ++i) m.set(i, i, 1);
  return m;
}

QMatrix RelativeComplex::homology_J(int n) const {
  const HomologySpace& hb = downstream().homology(n);
  const HomologySpace& hr = homology(n);
  QMatrix J = J_matrix(n);
  QMatrix out(hr.dim, hb.dim);
  for (int j = 0; j < hb.dim; ++j) {
    Vec cls = hr.class_of(J.apply(hb.representative(j)));
    for (int r = 0; r < hr.dim; ++r)
      if (cls[r] != 0) out.set(r, j, cls[r]);
  }
  return out;
}

QMatrix RelativeComplex::homology_P(int n) const {
  const HomologySpace& hr = homology(n);
  const HomologySpace& ha = upstream().homology(n - 1);
  QMatrix P = P_matrix(n);
  QMatrix out(ha.dim, hr.dim);
  for (int j = 0; j < hr.dim; ++j) {
    Vec cls = ha.class_of(P.apply(hr.representative(j)));
    for (int r = 0; r < ha.dim; ++r)
      if (cls[r] != 0) out.set(r, j, cls[r]);
  }
  return out;
}

std::string RelativeComplex::render_chain(int n, const Vec& v) const {
  const int da = upstream().dim(n - 1);
  Vec a(v.begin(), v.begin() + da);
  Vec b(v.begin() + da, v.end());
  std::ostringstream os;
  os << "(" << upstream().render_chain(n - 1, a) << ", "
     << downstream().render_chain(n, b) << ")";
  return os.str();
}

ChainMap cone_map(const RelativeComplex& a, const RelativeComplex& b,
                  const ChainMap& alpha, const ChainMap& beta,
                  const std::string& name) {
  ChainMap out;
  out.src = &a;
  out.dst = &b;
  out.name = name;
  const int top = std::min(a.max_level(), b.max_level());
  for (int n = 0; n <= top; ++n) {
    const int daUp = a.upstream().dim(n - 1);
    const int dbUp = b.upstream().dim(n - 1);
    QMatrix m(b.dim(n), a.dim(n));
    const QMatrix& A = alpha.at(n - 1);
    for (int r = 0; r < A.rows(); ++r)
      for (const auto& [c, v] : A.row(r)) m.set(r, c, v);
    const QMatrix& B = beta.at(n);
    for (int r = 0; r < B.rows(); ++r)
      for (const auto& [c, v] : B.row(r)) m.set(dbUp + r, daUp + c, v);
    out.mats.push_back(std::move(m));
  }
  return out;
}

}  // namespace gseq
