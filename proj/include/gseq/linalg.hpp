#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gseq/error.hpp"
#include "gseq/rational.hpp"

namespace gseq {

using Vec = std::vector<Rational>;

Vec zero_vec(int n);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
std::string vec_str(const Vec& v);

// Sparse rational matrix with dimensions fixed at creation. Rows are maps
// column -> nonzero entry; elimination runs on dense copies.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);
  static QMatrix from_columns(int rows, const std::vector<Vec>& cols);
  static QMatrix from_rows(int cols, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int r, int c) const;
  void set(int r, int c, Rational v);
  void add_at(int r, int c, const Rational& v);
  const std::map<int, Rational>& row(int r) const { return data_[r]; }

  Vec apply(const Vec& x) const;  // this * x
  QMatrix multiply(const QMatrix& rhs) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const QMatrix& o) const;

  Vec column(int c) const;
  std::vector<Vec> dense_rows() const;
  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, Rational>> data_;
};

// In-place reduced row echelon form; pivoting by position, not magnitude.
// Zero rows are dropped. Returns the pivot column of each remaining row.
std::vector<int> rref_inplace(std::vector<Vec>& rows);

// Subspace of Q^ambient held in reduced echelon form, so equality of
// subspaces is structural comparison of the stored bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(int ambient, std::vector<Vec> vectors);
  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Vec reduce(const Vec& v) const;  // remainder after elimination
  bool operator==(const Subspace& o) const;

 private:
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

struct RankKernelImage {
  int rank = 0;
  Subspace kernel;  // in Q^cols
  Subspace image;   // in Q^rows
};
RankKernelImage rank_kernel_image(const QMatrix& m);

// One exact solution of m * x = b, free variables set to zero; nullopt when
// the system is inconsistent (a normal outcome, not an error).
std::optional<Vec> solve_linear(const QMatrix& m, const Vec& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // b subset of a
};
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

// Quotient cycles/boundaries with a chosen representative basis. project()
// is linear, surjective and kills exactly the boundaries.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(Subspace cycles, Subspace boundaries);

  int ambient() const { return cycles_.ambient(); }
  int dim() const { return static_cast<int>(reps_.size()); }
  const Subspace& cycles() const { return cycles_; }
  const Subspace& boundaries() const { return boundaries_; }
  const std::vector<Vec>& representatives() const { return reps_; }
  const Vec& representative(int i) const { return reps_[i]; }

  Vec project(const Vec& cycle) const;

 private:
  Subspace cycles_;
  Subspace boundaries_;
  std::vector<Vec> reps_;
  QMatrix solver_;  // columns: boundary basis, then representatives
};

}  // namespace gseq
