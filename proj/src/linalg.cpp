#include "gseq/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gseq {

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Rational(0)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw Error("QMatrix: negative dimension");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

QMatrix QMatrix::from_columns(int rows, const std::vector<Vec>& cols) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw Error("QMatrix::from_columns: column length mismatch");
    for (int r = 0; r < rows; ++r)
      if (cols[c][r] != 0) m.set(r, static_cast<int>(c), cols[c][r]);
  }
  return m;
}

QMatrix QMatrix::from_rows(int cols, const std::vector<Vec>& rows) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error("QMatrix::from_rows: row length mismatch");
    for (int c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.set(static_cast<int>(r), c, rows[r][c]);
  }
  return m;
}

const Rational& QMatrix::at(int r, int c) const {
  static const Rational kZero(0);
  const auto& row = data_[r];
  auto it = row.find(c);
  return it == row.end() ? kZero : it->second;
}

void QMatrix::set(int r, int c, Rational v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error("QMatrix::set: index out of range");
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = std::move(v);
}

void QMatrix::add_at(int r, int c, const Rational& v) {
  if (v == 0) return;
  Rational nv = at(r, c) + v;
  set(r, c, std::move(nv));
}

Vec QMatrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error("QMatrix::apply: length mismatch");
  Vec y = zero_vec(rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

QMatrix QMatrix::multiply(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("QMatrix::multiply: shape mismatch");
  QMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, v] : data_[r])
      for (const auto& [c, w] : rhs.data_[k]) out.add_at(r, c, v * w);
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.set(c, r, v);
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Vec QMatrix::column(int c) const {
  Vec v = zero_vec(rows_);
  for (int r = 0; r < rows_; ++r) {
    auto it = data_[r].find(c);
    if (it != data_[r].end()) v[r] = it->second;
  }
  return v;
}

std::vector<Vec> QMatrix::dense_rows() const {
  std::vector<Vec> out(rows_, zero_vec(cols_));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) os << " ";
      os << at(r, c);
    }
    os << "]\n";
  }
  return os.str();
}

std::vector<int> rref_inplace(std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  const int nrows = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int sel = -1;
    for (int i = r; i < nrows; ++i) {
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    if (rows[r][c] != 1) {
      const Rational inv = rows[r][c];
      for (int j = c; j < ncols; ++j) rows[r][j] /= inv;
    }
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const Rational f = rows[i][c];
      if (f == 0) continue;
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size(), zero_vec(ncols));
  return pivots;
}

Subspace Subspace::span(int ambient, std::vector<Vec> vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw Error("Subspace::span: vector length mismatch");
  Subspace s(ambient);
  if (ambient == 0 || vectors.empty()) return s;
  s.pivots_ = rref_inplace(vectors);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> rows;
  rows.reserve(ambient);
  for (int i = 0; i < ambient; ++i) {
    Vec v = zero_vec(ambient);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return span(ambient, std::move(rows));
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw Error("Subspace::reduce: length mismatch");
  Vec w = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const int p = pivots_[i];
    if (w[p] == 0) continue;
    const Rational f = w[p];
    for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_[i][j];
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("Subspace: ambient mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

RankKernelImage rank_kernel_image(const QMatrix& m) {
  RankKernelImage out;
  auto rows = m.dense_rows();
  std::vector<int> pivots;
  if (!rows.empty()) pivots = rref_inplace(rows);
  out.rank = static_cast<int>(pivots.size());

  // kernel basis: one vector per free column
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> kernel;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec x = zero_vec(m.cols());
    x[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][c];
    kernel.push_back(std::move(x));
  }
  out.kernel = Subspace::span(m.cols(), std::move(kernel));

  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  out.image = Subspace::span(m.rows(), std::move(cols));
  return out;
}

std::optional<Vec> solve_linear(const QMatrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw Error("solve_linear: rhs length mismatch");
  auto rows = m.dense_rows();
  for (int r = 0; r < m.rows(); ++r) rows[r].push_back(b[r]);
  if (rows.empty()) return is_zero_vec(b) ? std::optional<Vec>(zero_vec(m.cols())) : std::nullopt;
  auto pivots = rref_inplace(rows);
  Vec x = zero_vec(m.cols());
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;  // pivot in augmented column
    x[pivots[r]] = rows[r][m.cols()];
  }
  return x;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("subspace_sum: ambient mismatch");
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), std::move(rows));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw Error("subspace_intersection: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
  // columns a_1..a_k, -b_1..-b_l; kernel vectors give intersection elements
  std::vector<Vec> cols;
  for (const auto& v : a.basis()) cols.push_back(v);
  for (const auto& v : b.basis()) cols.push_back(vec_scale(Rational(-1), v));
  QMatrix m = QMatrix::from_columns(a.ambient(), cols);
  auto rki = rank_kernel_image(m);
  std::vector<Vec> vectors;
  for (const auto& k : rki.kernel.basis()) {
    Vec v = zero_vec(a.ambient());
    for (int i = 0; i < a.dim(); ++i)
      if (k[i] != 0) v = vec_add(v, vec_scale(k[i], a.basis()[i]));
    vectors.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), std::move(vectors));
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  SubspaceOps out;
  out.sum = subspace_sum(a, b);
  out.intersection = subspace_intersection(a, b);
  out.contains = a.contains(b);
  return out;
}

QuotientSpace::QuotientSpace(Subspace cycles, Subspace boundaries)
    : cycles_(std::move(cycles)), boundaries_(std::move(boundaries)) {
  if (cycles_.ambient() != boundaries_.ambient())
    throw Error("QuotientSpace: ambient mismatch");
  for (const auto& v : boundaries_.basis()) {
    if (!cycles_.contains(v))
      throw Error(
          "QuotientSpace: boundary vector not contained in the cycle space "
          "(delta^2 != 0 upstream?): " +
          vec_str(v));
  }
  // incremental echelon over the boundaries; cycle vectors that add new
  // pivots become quotient representatives
  std::vector<Vec> echelon = boundaries_.basis();
  std::vector<int> pivots = boundaries_.pivots();
  auto reduce_against = [&](Vec w) {
    for (size_t i = 0; i < echelon.size(); ++i) {
      const Rational f = w[pivots[i]];
      if (f == 0) continue;
      for (int j = 0; j < cycles_.ambient(); ++j) w[j] -= f * echelon[i][j];
    }
    return w;
  };
  for (const auto& v : cycles_.basis()) {
    Vec w = reduce_against(v);
    int p = -1;
    for (int j = 0; j < cycles_.ambient(); ++j)
      if (w[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    const Rational inv = w[p];
    for (auto& x : w) x /= inv;
    echelon.push_back(std::move(w));
    pivots.push_back(p);
    reps_.push_back(v);
  }
  std::vector<Vec> cols = boundaries_.basis();
  cols.insert(cols.end(), reps_.begin(), reps_.end());
  solver_ = QMatrix::from_columns(cycles_.ambient(), cols);
}

Vec QuotientSpace::project(const Vec& cycle) const {
  if (static_cast<int>(cycle.size()) != cycles_.ambient())
    throw Error("QuotientSpace::project: length mismatch");
  if (dim() == 0 && boundaries_.dim() == 0) {
    if (!is_zero_vec(cycle) && !cycles_.contains(cycle))
      throw Error("QuotientSpace::project: vector is not a cycle");
    return zero_vec(0);
  }
  auto y = solve_linear(solver_, cycle);
  if (!y) throw Error("QuotientSpace::project: vector is not a cycle");
  Vec out = zero_vec(dim());
  const int nb = boundaries_.dim();
  for (int i = 0; i < dim(); ++i) out[i] = (*y)[nb + i];
  return out;
}

}  // namespace gseq
