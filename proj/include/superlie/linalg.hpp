#ifndef SUPERLIE_LINALG_HPP
#define SUPERLIE_LINALG_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "superlie/errors.hpp"
#include "superlie/field.hpp"

namespace superlie {

using Index = Eigen::Index;

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
Vec<S> unit_vector(Index n, Index k) {
  Vec<S> v = Vec<S>::Zero(n);
  v(k) = S(1);
  return v;
}

template <class Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v.derived().coeff(i))) return false;
  return true;
}

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// y += c * x on the entries from `from` on, skipping zeros of x.
template <class S>
void axpy(Vec<S>& y, const S& c, const Vec<S>& x, Index from = 0) {
  if (is_zero(c)) return;
  for (Index j = from; j < x.size(); ++j)
    if (!is_zero(x(j))) y(j) += c * x(j);
}

/// Kronecker product of two coordinate vectors, row-major on (a, b).
template <class S>
Vec<S> kron(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> out = Vec<S>::Zero(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < b.size(); ++j)
      if (!is_zero(b(j))) out(i * b.size() + j) = a(i) * b(j);
  }
  return out;
}

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out = Mat<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <class S>
class Subspace;

/// Incremental reduced row echelon form.
///
/// Rows are kept fully reduced and sorted by pivot column, so the basis it
/// produces is the canonical RREF of the span regardless of insertion order.
template <class S>
class EchelonBuilder {
public:
  explicit EchelonBuilder(Index ambient) : n_(ambient) {}

  Index ambient() const { return n_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  bool full() const { return rank() == n_; }

  /// Residual of v after eliminating every pivot column.
  Vec<S> reduce(Vec<S> v) const {
    check(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      S c = v(pivots_[k]);
      if (!is_zero(c)) axpy(v, S(-c), rows_[k], pivots_[k]);
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v to the span; returns true when it was independent.
  bool add(const Vec<S>& v) {
    if (full()) {
      check(v);
      return false;
    }
    Vec<S> r = reduce(v);
    Index piv = 0;
    while (piv < n_ && is_zero(r(piv))) ++piv;
    if (piv == n_) return false;
    S inv = inverse(r(piv));
    for (Index j = piv; j < n_; ++j)
      if (!is_zero(r(j))) r(j) *= inv;
    for (auto& row : rows_) {
      S c = row(piv);
      if (!is_zero(c)) axpy(row, S(-c), r, piv);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  template <class Range>
  void add_all(const Range& vectors) {
    for (const auto& v : vectors) add(v);
  }

  const std::vector<Vec<S>>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  Subspace<S> subspace() const;

private:
  void check(const Vec<S>& v) const {
    if (v.size() != n_) throw AmbientMismatch("vector of length " + std::to_string(v.size()) + " in ambient " + std::to_string(n_));
  }

  Index n_;
  std::vector<Vec<S>> rows_;
  std::vector<Index> pivots_;
};

/// A subspace of S^n, stored as its canonical reduced row echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
template <class S>
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(Index ambient) : n_(ambient) {}

  static Subspace zero(Index n) { return Subspace(n); }
  static Subspace full(Index n) {
    Subspace s(n);
    for (Index k = 0; k < n; ++k) {
      s.rows_.push_back(unit_vector<S>(n, k));
      s.pivots_.push_back(k);
    }
    return s;
  }
  template <class Range>
  static Subspace span(Index n, const Range& vectors) {
    EchelonBuilder<S> e(n);
    e.add_all(vectors);
    return e.subspace();
  }
  /// Column space of m.
  static Subspace image(const Mat<S>& m);

  Index ambient() const { return n_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Vec<S>>& basis() const { return rows_; }
  const Vec<S>& basis(Index k) const { return rows_[static_cast<std::size_t>(k)]; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Basis vectors as the columns of an (ambient x dim) matrix.
  Mat<S> basis_matrix() const {
    Mat<S> m(n_, dim());
    for (Index k = 0; k < dim(); ++k) m.col(k) = rows_[static_cast<std::size_t>(k)];
    return m;
  }

  Vec<S> reduce(Vec<S> v) const {
    if (v.size() != n_) throw AmbientMismatch("vector length does not match subspace ambient");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      S c = v(pivots_[k]);
      if (!is_zero(c)) axpy(v, S(-c), rows_[k]);
    }
    return v;
  }
  bool contains(const Vec<S>& v) const { return is_zero_vector(reduce(v)); }

  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vec<S> coordinates(const Vec<S>& v) const {
    if (!contains(v)) throw ContainmentError("vector is not in the subspace");
    Vec<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<std::size_t>(k)]);
    return c;
  }
  Vec<S> combine(const Vec<S>& coords) const {
    Vec<S> v = Vec<S>::Zero(n_);
    for (Index k = 0; k < dim(); ++k) axpy(v, coords(k), rows_[static_cast<std::size_t>(k)]);
    return v;
  }

  bool contains(const Subspace& other) const {
    if (other.n_ != n_) throw AmbientMismatch("subspaces live in different ambient spaces");
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  friend class EchelonBuilder<S>;
  Index n_ = 0;
  std::vector<Vec<S>> rows_;
  std::vector<Index> pivots_;
};

template <class S>
Subspace<S> EchelonBuilder<S>::subspace() const {
  Subspace<S> s(n_);
  s.rows_ = rows_;
  s.pivots_ = pivots_;
  return s;
}

template <class S>
Subspace<S> Subspace<S>::image(const Mat<S>& m) {
  EchelonBuilder<S> e(m.rows());
  for (Index j = 0; j < m.cols(); ++j) {
    Vec<S> c = m.col(j);
    if (!is_zero_vector(c)) e.add(c);
    if (e.full()) break;
  }
  return e.subspace();
}

/// Row echelon data of a matrix: the RREF rows and their pivot columns.
template <class S>
struct RowEchelon {
  std::vector<Vec<S>> rows;
  std::vector<Index> pivots;
};

template <class S>
RowEchelon<S> rref(const Mat<S>& m) {
  EchelonBuilder<S> e(m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Vec<S> r = m.row(i).transpose();
    if (!is_zero_vector(r)) e.add(r);
    if (e.full()) break;
  }
  return {e.rows(), e.pivots()};
}

template <class S>
Index rank(const Mat<S>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<Index>(rref(m).rows.size());
}

/// Canonical basis of {v : m v = 0}.
template <class S>
Subspace<S> kernel(const Mat<S>& m) {
  const Index n = m.cols();
  RowEchelon<S> r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  EchelonBuilder<S> e(n);
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<S> v = Vec<S>::Zero(n);
    v(f) = S(1);
    for (std::size_t k = 0; k < r.rows.size(); ++k) v(r.pivots[k]) = -r.rows[k](f);
    e.add(v);
  }
  return e.subspace();
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("sum of subspaces in different ambients");
  EchelonBuilder<S> e(a.ambient());
  e.add_all(a.basis());
  e.add_all(b.basis());
  return e.subspace();
}

template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("intersection of subspaces in different ambients");
  const Index n = a.ambient(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace<S>::zero(n);
  Mat<S> stacked(n, da + db);
  for (Index k = 0; k < da; ++k) stacked.col(k) = a.basis(k);
  for (Index k = 0; k < db; ++k) stacked.col(da + k) = -b.basis(k);
  Subspace<S> ker = kernel(stacked);
  EchelonBuilder<S> e(n);
  for (const auto& v : ker.basis()) {
    Vec<S> x = Vec<S>::Zero(n);
    for (Index k = 0; k < da; ++k) axpy(x, v(k), a.basis(k));
    e.add(x);
  }
  return e.subspace();
}

/// Image of a subspace under a linear map.
template <class S>
Subspace<S> map_subspace(const Mat<S>& m, const Subspace<S>& s) {
  if (m.cols() != s.ambient()) throw AmbientMismatch("map domain does not match subspace ambient");
  EchelonBuilder<S> e(m.rows());
  for (const auto& v : s.basis()) {
    Vec<S> w = m * v;
    if (!is_zero_vector(w)) e.add(w);
  }
  return e.subspace();
}

/// Preimage of a subspace under a linear map.
template <class S>
Subspace<S> preimage(const Mat<S>& m, const Subspace<S>& target) {
  if (m.rows() != target.ambient()) throw AmbientMismatch("map codomain does not match subspace ambient");
  // v maps into target iff the residual of m v modulo target vanishes.
  Mat<S> residual(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) residual.col(j) = target.reduce(m.col(j));
  return kernel(residual);
}

/// Some x with m x = b, or nothing when b is outside the image.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  if (m.rows() != b.size()) throw AmbientMismatch("right-hand side length does not match matrix rows");
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RowEchelon<S> r = rref(aug);
  Vec<S> x = Vec<S>::Zero(m.cols());
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    if (r.pivots[k] == m.cols()) return std::nullopt;
    x(r.pivots[k]) = r.rows[k](m.cols());
  }
  return x;
}

/// A subspace modulo a smaller one, top / bottom, with a fixed section.
///
/// The section is the canonical RREF of the residues of `top` modulo
/// `bottom`, so its vectors vanish on the pivot columns of `bottom` and are
/// homogeneous whenever both subspaces are spanned by homogeneous vectors.
template <class S>
class Subquotient {
public:
  Subquotient() = default;
  Subquotient(Subspace<S> top, Subspace<S> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.ambient() != bottom_.ambient()) throw AmbientMismatch("subquotient of subspaces in different ambients");
    if (!top_.contains(bottom_)) throw ContainmentError("bottom subspace is not contained in top");
    EchelonBuilder<S> e(top_.ambient());
    for (const auto& t : top_.basis()) e.add(bottom_.reduce(t));
    section_ = e.subspace();
  }
  /// Quotient of the whole ambient space by `bottom`.
  static Subquotient quotient(const Subspace<S>& bottom) {
    return Subquotient(Subspace<S>::full(bottom.ambient()), bottom);
  }

  Index ambient() const { return top_.ambient(); }
  Index dim() const { return section_.dim(); }
  const Subspace<S>& top() const { return top_; }
  const Subspace<S>& bottom() const { return bottom_; }
  const Subspace<S>& section() const { return section_; }
  const Vec<S>& section(Index k) const { return section_.basis(k); }

  /// Coordinates of the class of v; v must lie in top.
  Vec<S> reduce(const Vec<S>& v) const {
    Vec<S> r = bottom_.reduce(v);
    if (!section_.contains(r)) throw ContainmentError("vector is not in the top subspace");
    Vec<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = r(section_.pivots()[static_cast<std::size_t>(k)]);
    return c;
  }
  /// The representative sum_k coords_k * section_k.
  Vec<S> lift(const Vec<S>& coords) const { return section_.combine(coords); }

  /// Matrix of the map X -> top/bottom given the images of X's basis in the ambient.
  Mat<S> reduce_columns(const Mat<S>& images) const {
    Mat<S> out(dim(), images.cols());
    for (Index j = 0; j < images.cols(); ++j) out.col(j) = reduce(images.col(j));
    return out;
  }

private:
  Subspace<S> top_, bottom_, section_;
};

}  // namespace superlie

#endif
