#include "gseq/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gseq {

Element Element::operator+(const Element& o) const {
  if (alg_ && o.alg_ && alg_ != o.alg_)
    throw Error("Element: mixed-algebra operands");
  Element out = *this;
  if (!out.alg_) out.alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Element Element::operator-(const Element& o) const {
  return *this + o.scaled(Rational(-1));
}

Element Element::operator-() const { return scaled(Rational(-1)); }

Element Element::scaled(const Rational& c) const {
  Element out(alg_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
  return out;
}

Element Element::operator*(const Element& o) const {
  if (!alg_ || !o.alg_) {
    if (is_zero() || o.is_zero()) return Element(alg_ ? alg_ : o.alg_);
    throw Error("Element: product of unattached elements");
  }
  if (alg_ != o.alg_) throw Error("Element: mixed-algebra operands");
  Element out(alg_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      auto prod = alg_->multiply_monomials(ma, mb);
      if (!prod) continue;  // odd square
      out.add_term(prod->first, ca * cb * prod->second);
    }
  }
  return out;
}

bool Element::operator==(const Element& o) const {
  if (alg_ == o.alg_) return terms_ == o.terms_;
  return is_zero() && o.is_zero();
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  return homogeneous_degree().has_value();
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty() || !alg_) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int k = alg_->monomial_degree(m);
    if (!deg)
      deg = k;
    else if (*deg != k)
      return std::nullopt;
  }
  return deg;
}

bool Element::homogeneous_of(int k) const {
  if (terms_.empty()) return true;
  auto deg = homogeneous_degree();
  return deg && *deg == k;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
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
    const std::string ms = alg_ ? alg_->monomial_str(m) : std::string("?");
    if (m.is_unit()) {
      os << rat_str(a);
    } else if (a == 1) {
      os << ms;
    } else {
      os << rat_str(a) << "*" << ms;
    }
  }
  return os.str();
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) os << i.where << ": " << i.message << "\n";
  return os.str();
}

FreeDGAlgebra::FreeDGAlgebra(
    std::string name, const std::vector<std::pair<std::string, int>>& gens)
    : name_(std::move(name)) {
  std::set<std::string> seen;
  for (const auto& [gname, deg] : gens) {
    Generator g;
    g.name = gname;
    g.degree = deg;
    g.index = static_cast<int>(gens_.size());
    if (deg < 1)
      report_.issues.push_back({gname, "generator degree must be >= 1"});
    if (!seen.insert(gname).second)
      report_.issues.push_back({gname, "duplicate generator name"});
    gens_.push_back(std::move(g));
  }
  diffs_.assign(gens_.size(), Element(this));
}

std::optional<int> FreeDGAlgebra::gen_index(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g.index;
  return std::nullopt;
}

int FreeDGAlgebra::max_gen_degree() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.degree);
  return m;
}

void FreeDGAlgebra::set_differential(int gen, Element value) {
  if (frozen_) throw Error("FreeDGAlgebra: frozen");
  if (value.algebra() && value.algebra() != this)
    throw Error("FreeDGAlgebra: differential from another algebra");
  diffs_[gen] = std::move(value);
}

void FreeDGAlgebra::freeze() {
  if (frozen_) return;
  frozen_ = true;
  report_.minimal = true;
  for (const auto& g : gens_) {
    const Element& dg = diffs_[g.index];
    if (!dg.homogeneous_of(g.degree + 1)) {
      report_.issues.push_back(
          {"d " + g.name,
           "differential is not homogeneous of degree " +
               std::to_string(g.degree + 1)});
      report_.minimal = false;
      continue;
    }
    for (const auto& [m, c] : dg.terms()) {
      if (m.total_exponent() < 2) report_.minimal = false;
    }
  }
  // d^2 = 0 checked only when degrees are consistent
  bool degrees_ok = true;
  for (const auto& i : report_.issues)
    if (i.message.find("homogeneous") != std::string::npos) degrees_ok = false;
  if (degrees_ok) {
    for (const auto& g : gens_) {
      Element dd = d(diffs_[g.index]);
      if (!dd.is_zero()) {
        report_.issues.push_back(
            {"d " + g.name, "d(d(" + g.name + ")) = " + dd.str() + " != 0"});
      }
    }
  }
}

const ValidationReport& FreeDGAlgebra::validation() const {
  if (!frozen_) throw Error("FreeDGAlgebra: validation before freeze");
  return report_;
}

bool FreeDGAlgebra::zero_differential() const {
  for (const auto& e : diffs_)
    if (!e.is_zero()) return false;
  return true;
}

Element FreeDGAlgebra::unit() const {
  Element e(this);
  Monomial m;
  m.exps.assign(gens_.size(), 0);
  e.add_term(m, Rational(1));
  return e;
}

Element FreeDGAlgebra::gen_elem(int i) const {
  Element e(this);
  Monomial m;
  m.exps.assign(gens_.size(), 0);
  m.exps[i] = 1;
  e.add_term(m, Rational(1));
  return e;
}

Element FreeDGAlgebra::monomial_elem(const Monomial& m, const Rational& c) const {
  Element e(this);
  e.add_term(m, c);
  return e;
}

int FreeDGAlgebra::monomial_degree(const Monomial& m) const {
  int d = 0;
  for (size_t i = 0; i < m.exps.size(); ++i)
    d += m.exps[i] * gens_[i].degree;
  return d;
}

std::optional<std::pair<Monomial, int>> FreeDGAlgebra::multiply_monomials(
    const Monomial& a, const Monomial& b) const {
  Monomial out;
  out.exps.assign(gens_.size(), 0);
  for (size_t i = 0; i < gens_.size(); ++i) {
    const int e = a.exps[i] + b.exps[i];
    if (gens_[i].odd() && e > 1) return std::nullopt;
    out.exps[i] = e;
  }
  // Koszul sign: inversions between the odd factors of a and of b
  long long inversions = 0;
  for (size_t j = 0; j < gens_.size(); ++j) {
    if (!gens_[j].odd() || b.exps[j] == 0) continue;
    for (size_t i = j + 1; i < gens_.size(); ++i) {
      if (gens_[i].odd() && a.exps[i] != 0) ++inversions;
    }
  }
  return std::make_pair(std::move(out), pow_sign(inversions));
}

Element FreeDGAlgebra::d(const Element& e) const {
  if (e.algebra() && e.algebra() != this)
    throw Error("FreeDGAlgebra::d: element of another algebra");
  Element out(this);
  for (const auto& [m, c] : e.terms()) out = out + d_monomial(m).scaled(c);
  return out;
}

Element FreeDGAlgebra::d_monomial(const Monomial& m) const {
  auto it = dmono_cache_.find(m);
  if (it != dmono_cache_.end()) return it->second;
  Element out(this);
  if (!m.is_unit()) {
    int g = -1;
    for (size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] > 0) {
        g = static_cast<int>(i);
        break;
      }
    Monomial rest = m;
    rest.exps[g] -= 1;
    // d(g * rest) = d(g)*rest + (-1)^{|g|} g * d(rest)
    out = diffs_[g] * monomial_elem(rest) +
          (gen_elem(g) * d_monomial(rest)).scaled(pow_sign(gens_[g].degree));
  }
  dmono_cache_.emplace(m, out);
  return out;
}

void FreeDGAlgebra::enumerate_basis(int k, int gen, Monomial& acc,
                                    std::vector<Monomial>& out) const {
  if (k == 0) {
    Monomial m = acc;
    for (int i = gen; i < gen_count(); ++i) m.exps[i] = 0;
    out.push_back(std::move(m));
    return;
  }
  if (gen >= gen_count()) return;
  const int deg = gens_[gen].degree;
  const int emax = gens_[gen].odd() ? std::min(1, k / deg) : k / deg;
  for (int e = 0; e <= emax; ++e) {
    acc.exps[gen] = e;
    enumerate_basis(k - e * deg, gen + 1, acc, out);
  }
  acc.exps[gen] = 0;
}

const std::vector<Monomial>& FreeDGAlgebra::monomial_basis(int k) const {
  auto it = basis_cache_.find(k);
  if (it != basis_cache_.end()) return it->second;
  std::vector<Monomial> out;
  if (k == 0) {
    Monomial unit;
    unit.exps.assign(gens_.size(), 0);
    out.push_back(std::move(unit));
  } else if (k > 0) {
    Monomial acc;
    acc.exps.assign(gens_.size(), 0);
    enumerate_basis(k, 0, acc, out);
    std::sort(out.begin(), out.end());
  }
  auto [pos, ok] = basis_cache_.emplace(k, std::move(out));
  auto& idx = index_cache_[k];
  for (size_t i = 0; i < pos->second.size(); ++i)
    idx[pos->second[i]] = static_cast<int>(i);
  return pos->second;
}

int FreeDGAlgebra::monomial_index(int k, const Monomial& m) const {
  monomial_basis(k);
  const auto& idx = index_cache_[k];
  auto it = idx.find(m);
  return it == idx.end() ? -1 : it->second;
}

Vec FreeDGAlgebra::coords(const Element& e, int k) const {
  if (!e.homogeneous_of(k))
    throw Error("FreeDGAlgebra::coords: element not homogeneous of degree " +
                std::to_string(k));
  Vec v = zero_vec(dim(k));
  for (const auto& [m, c] : e.terms()) {
    const int i = monomial_index(k, m);
    if (i < 0) throw Error("FreeDGAlgebra::coords: monomial out of basis");
    v[i] = c;
  }
  return v;
}

Element FreeDGAlgebra::from_coords(int k, const Vec& v) const {
  const auto& basis = monomial_basis(k);
  if (v.size() != basis.size())
    throw Error("FreeDGAlgebra::from_coords: length mismatch");
  Element e(this);
  for (size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], v[i]);
  return e;
}

const QMatrix& FreeDGAlgebra::d_matrix(int k) const {
  auto it = dmat_cache_.find(k);
  if (it != dmat_cache_.end()) return it->second;
  const auto& src = monomial_basis(k);
  QMatrix m(dim(k + 1), dim(k));
  for (size_t j = 0; j < src.size(); ++j) {
    Element dm = d(monomial_elem(src[j]));
    if (dm.is_zero()) continue;
    Vec col = coords(dm, k + 1);
    for (int r = 0; r < m.rows(); ++r)
      if (col[r] != 0) m.set(r, static_cast<int>(j), col[r]);
  }
  return dmat_cache_.emplace(k, std::move(m)).first->second;
}

std::string FreeDGAlgebra::monomial_str(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << gens_[i].name;
    if (m.exps[i] > 1) os << "^" << m.exps[i];
  }
  return os.str();
}

const FreeDGAlgebra& trivial_algebra() {
  static FreeDGAlgebra* q = [] {
    auto* a = new FreeDGAlgebra("Q", {});
    a->freeze();
    return a;
  }();
  return *q;
}

Vec CohomologySpace::class_of(const Element& cocycle) const {
  if (!cocycle.homogeneous_of(degree))
    throw Error("CohomologySpace::class_of: wrong degree");
  if (!algebra->d(cocycle).is_zero())
    throw Error("CohomologySpace::class_of: element is not closed");
  return quotient.project(algebra->coords(cocycle, degree));
}

CohomologySpace cohomology_space(const FreeDGAlgebra& a, int k) {
  if (k < 0) throw Error("cohomology_space: negative degree");
  CohomologySpace out;
  out.algebra = &a;
  out.degree = k;
  auto kernel = rank_kernel_image(a.d_matrix(k)).kernel;
  Subspace image = (k == 0) ? Subspace::zero(a.dim(0))
                            : rank_kernel_image(a.d_matrix(k - 1)).image;
  out.quotient = QuotientSpace(std::move(kernel), std::move(image));
  out.dimension = out.quotient.dim();
  for (int i = 0; i < out.dimension; ++i)
    out.representatives.push_back(
        a.from_coords(k, out.quotient.representative(i)));
  return out;
}

}  // namespace gseq
