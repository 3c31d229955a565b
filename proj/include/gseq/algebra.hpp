#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gseq/linalg.hpp"

namespace gseq {

struct Generator {
  std::string name;
  int degree = 0;
  int index = 0;
  bool odd() const { return degree % 2 != 0; }
};

// Exponent vector over the algebra's generators, in declaration order.
// Within one degree, map order (lexicographic on exponents) is the
// graded-lex order used everywhere for bases and rendering.
struct Monomial {
  std::vector<int> exps;
  bool is_unit() const {
    for (int e : exps)
      if (e) return false;
    return true;
  }
  int total_exponent() const {
    int t = 0;
    for (int e : exps) t += e;
    return t;
  }
  auto operator<=>(const Monomial&) const = default;
};

class FreeDGAlgebra;

// Finite Q-linear combination of monomials; the universal value type.
class Element {
 public:
  Element() = default;
  explicit Element(const FreeDGAlgebra* alg) : alg_(alg) {}

  const FreeDGAlgebra* algebra() const { return alg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element scaled(const Rational& c) const;
  bool operator==(const Element& o) const;

  bool is_homogeneous() const;
  // Common degree of all terms; nullopt when zero or mixed.
  std::optional<int> homogeneous_degree() const;
  // Zero counts as homogeneous of every degree.
  bool homogeneous_of(int k) const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  std::string str() const;

 private:
  const FreeDGAlgebra* alg_ = nullptr;
  std::map<Monomial, Rational> terms_;
};

struct ValidationIssue {
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool minimal = false;
  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

// Free graded-commutative DG algebra over Q on finitely many generators,
// immutable once frozen.
class FreeDGAlgebra {
 public:
  FreeDGAlgebra(std::string name,
                const std::vector<std::pair<std::string, int>>& gens);
  FreeDGAlgebra(const FreeDGAlgebra&) = delete;
  FreeDGAlgebra& operator=(const FreeDGAlgebra&) = delete;

  const std::string& name() const { return name_; }
  int gen_count() const { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(int i) const { return gens_[i]; }
  std::optional<int> gen_index(const std::string& name) const;
  int max_gen_degree() const;

  void set_differential(int gen, Element value);
  void freeze();
  bool frozen() const { return frozen_; }
  const ValidationReport& validation() const;
  bool minimal() const { return validation().minimal; }
  bool zero_differential() const;

  Element zero() const { return Element(this); }
  Element unit() const;
  Element gen_elem(int i) const;
  Element monomial_elem(const Monomial& m, const Rational& c = Rational(1)) const;
  int monomial_degree(const Monomial& m) const;
  // Product with the Koszul sign; nullopt when an odd generator squares.
  std::optional<std::pair<Monomial, int>> multiply_monomials(
      const Monomial& a, const Monomial& b) const;

  const Element& differential_of(int gen) const { return diffs_[gen]; }
  Element d(const Element& e) const;

  const std::vector<Monomial>& monomial_basis(int k) const;
  int dim(int k) const { return static_cast<int>(monomial_basis(k).size()); }
  int monomial_index(int k, const Monomial& m) const;  // -1 when absent
  Vec coords(const Element& e, int k) const;
  Element from_coords(int k, const Vec& v) const;
  const QMatrix& d_matrix(int k) const;  // dim(k+1) x dim(k)

  std::string monomial_str(const Monomial& m) const;

 private:
  Element d_monomial(const Monomial& m) const;
  void enumerate_basis(int k, int gen, Monomial& acc,
                       std::vector<Monomial>& out) const;

  std::string name_;
  std::vector<Generator> gens_;
  std::vector<Element> diffs_;
  bool frozen_ = false;
  ValidationReport report_;

  mutable std::map<int, std::vector<Monomial>> basis_cache_;
  mutable std::map<int, std::map<Monomial, int>> index_cache_;
  mutable std::map<Monomial, Element> dmono_cache_;
  mutable std::map<int, QMatrix> dmat_cache_;
};

// The trivial DG algebra Q, shared target of every augmentation.
const FreeDGAlgebra& trivial_algebra();

// Cohomology of one graded piece, with representatives and class projection.
struct CohomologySpace {
  const FreeDGAlgebra* algebra = nullptr;
  int degree = 0;
  int dimension = 0;
  QuotientSpace quotient;  // over monomial coordinates in this degree
  std::vector<Element> representatives;
  Vec class_of(const Element& cocycle) const;
};

CohomologySpace cohomology_space(const FreeDGAlgebra& a, int k);

}  // namespace gseq
