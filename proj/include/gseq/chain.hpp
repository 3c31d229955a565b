#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gseq/linalg.hpp"

namespace gseq {

class ChainComplex;

// Homology of one level: quotient of delta-cycles by delta-boundaries in
// the complex's chain coordinates.
struct HomologySpace {
  const ChainComplex* owner = nullptr;
  int degree = 0;
  int dim = 0;
  QuotientSpace quotient;

  Vec class_of(const Vec& cycle) const { return quotient.project(cycle); }
  const Vec& representative(int i) const { return quotient.representative(i); }
  Vec chain_of_class(const Vec& hcoords) const;
  std::string render_class(const Vec& hcoords) const;
};

// A nonnegatively graded chain complex with degree -1 differential, held as
// coordinate spaces. chain_group(n) is the actual chain group inside the
// coordinate space (proper exactly at the degree-1 cycle-subspace slot).
class ChainComplex {
 public:
  virtual ~ChainComplex() = default;

  int max_level() const { return static_cast<int>(levels_.size()) - 1; }
  int dim(int n) const;
  const QMatrix& delta(int n) const;  // level n -> n-1, valid for 1 <= n <= max
  const Subspace& chain_group(int n) const;
  const HomologySpace& homology(int n) const;  // 1 <= n <= max-1

  // delta o delta == 0 on every pair of consecutive levels; throws
  // InternalError otherwise.
  void verify_delta_squared() const;

  virtual std::string render_chain(int n, const Vec& v) const = 0;

 protected:
  struct Level {
    int dim = 0;
    QMatrix delta;   // to level n-1 coordinates
    Subspace chain;  // chain group within the coordinate space
  };
  std::vector<Level> levels_;
  mutable std::map<int, HomologySpace> hcache_;
};

// Chain map held as one matrix per level in the two coordinate systems.
struct ChainMap {
  const ChainComplex* src = nullptr;
  const ChainComplex* dst = nullptr;
  std::string name;
  std::vector<QMatrix> mats;  // level n matrix, 0..src->max_level()

  const QMatrix& at(int n) const;
  void verify_chain_map() const;           // commutes with delta; InternalError
  QMatrix homology_matrix(int n) const;    // H_n(src) -> H_n(dst)
};

// Algebraic mapping cone: Rel_n = src_{n-1} (+) dst_n with
// delta(a, b) = (delta a, delta b - f(a)).
class RelativeComplex : public ChainComplex {
 public:
  explicit RelativeComplex(const ChainMap& f);

  const ChainComplex& upstream() const { return *f_.src; }
  const ChainComplex& downstream() const { return *f_.dst; }

  int up_dim(int n) const { return upstream().dim(n - 1); }
  QMatrix J_matrix(int n) const;  // dst_n -> rel_n, b |-> (0, b)
  QMatrix P_matrix(int n) const;  // rel_n -> src_{n-1}, (a, b) |-> a

  QMatrix homology_J(int n) const;  // H_n(dst) -> H_n(rel)
  QMatrix homology_P(int n) const;  // H_n(rel) -> H_{n-1}(src)

  std::string render_chain(int n, const Vec& v) const override;

 private:
  ChainMap f_;
};

// Map of cones induced by a commuting square (alpha, beta).
ChainMap cone_map(const RelativeComplex& a, const RelativeComplex& b,
                  const ChainMap& alpha, const ChainMap& beta,
                  const std::string& name);

}  // namespace gseq
