#ifndef SUPERLIE_LIE_HPP
#define SUPERLIE_LIE_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superlie/certificate.hpp"
#include "superlie/superspace.hpp"

namespace superlie {

/// Human-readable linear combination of basis labels, e.g. "E11(1)-E22(1)".
template <class S>
std::string describe_vector(const SuperSpace& space, const Vec<S>& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    std::string c = ScalarTraits<S>::format(v(i));
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (c != "1") out += c + "*";
    out += space.label(i);
  }
  return out.empty() ? "0" : out;
}

/// Structure constants c_ij^k on a homogeneous basis; entry (i, j) is the
/// coordinate vector of [e_i, e_j].
template <class S>
class LieSuperAlgebra {
public:
  struct Entry {
    Index left;
    Index right;
    Vec<S> value;
  };

  LieSuperAlgebra() = default;
  LieSuperAlgebra(SuperSpace space, std::vector<Vec<S>> table, std::string name = "")
      : space_(std::move(space)), table_(std::move(table)), name_(std::move(name)) {
    if (static_cast<Index>(table_.size()) != dim() * dim()) throw std::invalid_argument("bracket table has the wrong size");
    for (const auto& v : table_)
      if (v.size() != dim()) throw std::invalid_argument("bracket value has the wrong length");
  }

  static LieSuperAlgebra abelian(SuperSpace space, std::string name = "") {
    Index d = space.dim();
    return LieSuperAlgebra(std::move(space), std::vector<Vec<S>>(static_cast<std::size_t>(d * d), Vec<S>::Zero(d)),
                           std::move(name));
  }

  /// Builds the table from entries with left <= right; the entries with
  /// left > right follow from graded antisymmetry. An entry given with
  /// left > right is stored through the same rule.
  static LieSuperAlgebra from_upper(SuperSpace space, const std::vector<Entry>& entries, std::string name = "") {
    LieSuperAlgebra L = abelian(std::move(space), std::move(name));
    std::vector<bool> seen(static_cast<std::size_t>(L.dim() * L.dim()), false);
    for (const auto& e : entries) {
      Index i = std::min(e.left, e.right), j = std::max(e.left, e.right);
      if (seen[static_cast<std::size_t>(i * L.dim() + j)])
        throw std::invalid_argument("bracket of (" + L.space_.label(i) + ", " + L.space_.label(j) + ") given twice");
      seen[static_cast<std::size_t>(i * L.dim() + j)] = true;
      Vec<S> v = e.value;
      if (e.left > e.right) v = (-sign_power<S>(L.p(i) * L.p(j))) * v;
      L.table_[static_cast<std::size_t>(i * L.dim() + j)] = v;
      if (i != j) L.table_[static_cast<std::size_t>(j * L.dim() + i)] = (-sign_power<S>(L.p(i) * L.p(j))) * v;
    }
    return L;
  }

  Index dim() const { return space_.dim(); }
  const SuperSpace& space() const { return space_; }
  Parity parity(Index i) const { return space_.parity(i); }
  int p(Index i) const { return space_.p(i); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Vec<S>& bracket(Index i, Index j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }
  Vec<S>& bracket_mut(Index i, Index j) { return table_[static_cast<std::size_t>(i * dim() + j)]; }

  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out = Vec<S>::Zero(dim());
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      for (Index j = 0; j < dim(); ++j)
        if (!is_zero(y(j))) axpy(out, S(x(i) * y(j)), bracket(i, j));
    }
    return out;
  }

  /// Matrix of ad(e_i).
  Mat<S> ad(Index i) const {
    Mat<S> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.col(j) = bracket(i, j);
    return m;
  }
  Mat<S> ad(const Vec<S>& x) const {
    Mat<S> m = Mat<S>::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * ad(i);
    return m;
  }

  bool is_abelian() const {
    for (const auto& v : table_)
      if (!is_zero_vector(v)) return false;
    return true;
  }

private:
  SuperSpace space_;
  std::vector<Vec<S>> table_;
  std::string name_;
};

/// Graded antisymmetry, parity consistency, [x0, x0] = 0 for every even
/// element (bilinear expansion over even basis pairs) and graded Jacobi on
/// all basis triples.
template <class S>
Certificate check_lie_axioms(const LieSuperAlgebra<S>& L) {
  Certificate cert;
  const Index d = L.dim();
  const auto& sp = L.space();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Vec<S>& v = L.bracket(i, j);
      for (Index k = 0; k < d; ++k)
        if (!is_zero(v(k)) && L.parity(k) != L.parity(i) + L.parity(j)) {
          cert.fail("parity: [" + sp.label(i) + ", " + sp.label(j) + "] has a component on " + sp.label(k));
          break;
        }
      if (j >= i) {
        Vec<S> sym = v + sign_power<S>(L.p(i) * L.p(j)) * L.bracket(j, i);
        if (!is_zero_vector(sym)) cert.fail("antisymmetry: (" + sp.label(i) + ", " + sp.label(j) + ")");
        if (L.parity(i) == Parity::Even && L.parity(j) == Parity::Even) {
          Vec<S> s2 = (i == j) ? Vec<S>(v) : Vec<S>(v + L.bracket(j, i));
          if (!is_zero_vector(s2)) cert.fail("even square: [x0, x0] != 0 along (" + sp.label(i) + ", " + sp.label(j) + ")");
        }
      }
    }
  if (cert.saturated()) return cert;
  std::vector<Mat<S>> left(static_cast<std::size_t>(d)), right(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) {
    left[static_cast<std::size_t>(i)] = L.ad(i);
    Mat<S> r(d, d);
    for (Index k = 0; k < d; ++k) r.col(k) = L.bracket(k, i);
    right[static_cast<std::size_t>(i)] = r;
  }
  for (Index x = 0; x < d; ++x)
    for (Index y = 0; y < d; ++y)
      for (Index z = 0; z < d; ++z) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        Vec<S> lhs = left[static_cast<std::size_t>(x)] * L.bracket(y, z);
        Vec<S> rhs = right[static_cast<std::size_t>(z)] * L.bracket(x, y) +
                     sign_power<S>(L.p(x) * L.p(y)) * (left[static_cast<std::size_t>(y)] * L.bracket(x, z));
        if (lhs != rhs) {
          cert.fail("Jacobi: (" + sp.label(x) + ", " + sp.label(y) + ", " + sp.label(z) + ")");
          if (cert.saturated()) return cert;
        }
      }
  return cert;
}

/// Product table of an associative superalgebra, with an optional unit.
template <class S>
class AssocSuperAlgebra {
public:
  AssocSuperAlgebra() = default;
  AssocSuperAlgebra(SuperSpace space, std::vector<Vec<S>> table, std::optional<Vec<S>> unit, std::string name = "")
      : space_(std::move(space)), table_(std::move(table)), unit_(std::move(unit)), name_(std::move(name)) {
    if (static_cast<Index>(table_.size()) != dim() * dim()) throw std::invalid_argument("product table has the wrong size");
  }

  Index dim() const { return space_.dim(); }
  const SuperSpace& space() const { return space_; }
  Parity parity(Index i) const { return space_.parity(i); }
  int p(Index i) const { return space_.p(i); }
  const std::string& name() const { return name_; }
  const std::optional<Vec<S>>& unit() const { return unit_; }

  const Vec<S>& product(Index i, Index j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }
  Vec<S> product(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out = Vec<S>::Zero(dim());
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      for (Index j = 0; j < dim(); ++j)
        if (!is_zero(y(j))) axpy(out, S(x(i) * y(j)), product(i, j));
    }
    return out;
  }
  /// Graded commutator ab - (-1)^{|a||b|} ba of basis elements.
  Vec<S> commutator(Index i, Index j) const {
    return product(i, j) - sign_power<S>(p(i) * p(j)) * product(j, i);
  }

private:
  SuperSpace space_;
  std::vector<Vec<S>> table_;
  std::optional<Vec<S>> unit_;
  std::string name_;
};

template <class S>
Certificate check_assoc_axioms(const AssocSuperAlgebra<S>& A) {
  Certificate cert;
  const Index d = A.dim();
  const auto& sp = A.space();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Vec<S>& v = A.product(i, j);
      for (Index k = 0; k < d; ++k)
        if (!is_zero(v(k)) && A.parity(k) != A.parity(i) + A.parity(j)) {
          cert.fail("parity: " + sp.label(i) + "*" + sp.label(j) + " has a component on " + sp.label(k));
          break;
        }
    }
  for (Index a = 0; a < d && !cert.saturated(); ++a)
    for (Index b = 0; b < d; ++b)
      for (Index c = 0; c < d; ++c)
        if (A.product(A.product(a, b), unit_vector<S>(d, c)) != A.product(unit_vector<S>(d, a), A.product(b, c)))
          cert.fail("associativity: (" + sp.label(a) + ", " + sp.label(b) + ", " + sp.label(c) + ")");
  if (A.unit()) {
    const Vec<S>& u = *A.unit();
    if (!homogeneous_parity(sp, u) || *homogeneous_parity(sp, u) != Parity::Even) cert.fail("unit is not even");
    for (Index a = 0; a < d; ++a) {
      Vec<S> e = unit_vector<S>(d, a);
      if (A.product(u, e) != e || A.product(e, u) != e) cert.fail("unit law fails on " + sp.label(a));
    }
  }
  return cert;
}

template <class S>
bool is_supercommutative(const AssocSuperAlgebra<S>& A) {
  for (Index i = 0; i < A.dim(); ++i)
    for (Index j = 0; j < A.dim(); ++j)
      if (!is_zero_vector(A.commutator(i, j))) return false;
  return true;
}

/// A viewed as a Lie superalgebra with the graded commutator.
template <class S>
LieSuperAlgebra<S> as_lie(const AssocSuperAlgebra<S>& A) {
  std::vector<Vec<S>> t;
  for (Index i = 0; i < A.dim(); ++i)
    for (Index j = 0; j < A.dim(); ++j) t.push_back(A.commutator(i, j));
  return LieSuperAlgebra<S>(A.space(), std::move(t), A.name());
}

/// [X, Y] = span{[x, y]} for subspaces of L.
template <class S>
Subspace<S> bracket_span(const LieSuperAlgebra<S>& L, const Subspace<S>& X, const Subspace<S>& Y) {
  EchelonBuilder<S> e(L.dim());
  for (const auto& x : X.basis())
    for (const auto& y : Y.basis()) {
      e.add(L.bracket(x, y));
      if (e.full()) return e.subspace();
    }
  return e.subspace();
}

template <class S>
Subspace<S> derived_subalgebra(const LieSuperAlgebra<S>& L) {
  auto all = Subspace<S>::full(L.dim());
  return bracket_span(L, all, all);
}

template <class S>
Subspace<S> centre(const LieSuperAlgebra<S>& L) {
  const Index d = L.dim();
  Mat<S> stacked(d * d, d);
  for (Index j = 0; j < d; ++j)       // column j: e_j
    for (Index k = 0; k < d; ++k)     // block k: [e_j, e_k]
      stacked.block(k * d, j, d, 1) = L.bracket(j, k);
  return kernel(stacked);
}

/// Smallest subalgebra containing the given vectors.
template <class S>
Subspace<S> subalgebra_closure(const LieSuperAlgebra<S>& L, const std::vector<Vec<S>>& gens) {
  EchelonBuilder<S> e(L.dim());
  std::vector<Vec<S>> added;
  for (const auto& g : gens)
    if (e.add(g)) added.push_back(g);
  // Bracket every new vector with everything found so far.
  for (std::size_t n = 0; n < added.size() && !e.full(); ++n)
    for (std::size_t m = 0; m <= n && !e.full(); ++m) {
      Vec<S> v = L.bracket(added[m], added[n]);
      if (e.add(v)) added.push_back(v);
    }
  return e.subspace();
}

/// Smallest ideal containing the given vectors.
template <class S>
Subspace<S> ideal_closure(const LieSuperAlgebra<S>& L, const std::vector<Vec<S>>& gens) {
  EchelonBuilder<S> e(L.dim());
  std::vector<Vec<S>> added;
  for (const auto& g : gens)
    if (e.add(g)) added.push_back(g);
  for (std::size_t n = 0; n < added.size() && !e.full(); ++n)
    for (Index i = 0; i < L.dim() && !e.full(); ++i) {
      Vec<S> v = L.bracket(unit_vector<S>(L.dim(), i), added[n]);
      if (e.add(v)) added.push_back(v);
    }
  return e.subspace();
}

template <class S>
bool is_subalgebra(const LieSuperAlgebra<S>& L, const Subspace<S>& sub) {
  return sub.contains(bracket_span(L, sub, sub));
}

/// Graded ideal: parity-split and [L, I] in I.
template <class S>
bool is_graded_ideal(const LieSuperAlgebra<S>& L, const Subspace<S>& I) {
  if (!is_parity_split(L.space(), I)) return false;
  return I.contains(bracket_span(L, Subspace<S>::full(L.dim()), I));
}

/// A parity-split subalgebra as an algebra in its own right, together with
/// the inclusion (L.dim x sub.dim).
template <class S>
struct Subalgebra {
  LieSuperAlgebra<S> algebra;
  Subspace<S> subspace;
  Mat<S> inclusion;
};

template <class S>
Subalgebra<S> subalgebra(const LieSuperAlgebra<S>& L, const Subspace<S>& sub, std::string name = "") {
  if (!is_parity_split(L.space(), sub)) throw NotAnIdeal("subspace is not spanned by homogeneous vectors");
  std::vector<BasisElement> basis;
  for (const auto& v : sub.basis()) {
    Parity par = *homogeneous_parity(L.space(), v);
    basis.push_back({describe_vector(L.space(), v), par});
  }
  std::vector<Vec<S>> table;
  for (const auto& x : sub.basis())
    for (const auto& y : sub.basis()) {
      Vec<S> b = L.bracket(x, y);
      if (!sub.contains(b)) throw ContainmentError("subspace is not closed under the bracket");
      table.push_back(sub.coordinates(b));
    }
  return {LieSuperAlgebra<S>(SuperSpace(std::move(basis)), std::move(table), std::move(name)), sub, sub.basis_matrix()};
}

/// L / I with its projection (a Lie homomorphism).
template <class S>
struct QuotientAlgebra {
  LieSuperAlgebra<S> algebra;
  Subquotient<S> classes;
  GradedMap<S> projection;
};

template <class S>
QuotientAlgebra<S> quotient_algebra(const LieSuperAlgebra<S>& L, const Subspace<S>& I, std::string name = "") {
  if (I.ambient() != L.dim()) throw AmbientMismatch("ideal lives in a different space");
  if (!is_parity_split(L.space(), I)) throw NotAnIdeal("subspace is not spanned by homogeneous vectors");
  if (!I.contains(bracket_span(L, Subspace<S>::full(L.dim()), I))) throw NotAnIdeal("[L, I] is not contained in I");
  auto sq = Subquotient<S>::quotient(I);
  std::vector<BasisElement> basis;
  for (Index k = 0; k < sq.dim(); ++k)
    basis.push_back({describe_vector(L.space(), sq.section(k)), *homogeneous_parity(L.space(), sq.section(k))});
  std::vector<Vec<S>> table;
  for (Index a = 0; a < sq.dim(); ++a)
    for (Index b = 0; b < sq.dim(); ++b) table.push_back(sq.reduce(L.bracket(sq.section(a), sq.section(b))));
  SuperSpace qs(std::move(basis));
  Mat<S> proj = sq.reduce_columns(Mat<S>::Identity(L.dim(), L.dim()));
  LieSuperAlgebra<S> Q(qs, std::move(table), std::move(name));
  return {std::move(Q), sq, GradedMap<S>(L.space(), qs, proj)};
}

template <class S>
LieSuperAlgebra<S> abelianization(const LieSuperAlgebra<S>& L) {
  return quotient_algebra(L, derived_subalgebra(L)).algebra;
}

/// Checks that f: L1 -> L2 (matrix L2.dim x L1.dim) is even and preserves brackets.
template <class S>
Certificate check_homomorphism(const LieSuperAlgebra<S>& L1, const LieSuperAlgebra<S>& L2, const Mat<S>& f) {
  Certificate cert;
  if (f.rows() != L2.dim() || f.cols() != L1.dim()) {
    cert.fail("homomorphism matrix has the wrong shape");
    return cert;
  }
  for (Index j = 0; j < f.cols(); ++j)
    for (Index i = 0; i < f.rows(); ++i)
      if (!is_zero(f(i, j)) && L1.parity(j) != L2.parity(i)) cert.fail("map is not even at " + L1.space().label(j));
  for (Index a = 0; a < L1.dim() && !cert.saturated(); ++a)
    for (Index b = 0; b < L1.dim(); ++b) {
      Vec<S> lhs = f * L1.bracket(a, b);
      Vec<S> rhs = L2.bracket(Vec<S>(f.col(a)), Vec<S>(f.col(b)));
      if (lhs != rhs) cert.fail("bracket not preserved on (" + L1.space().label(a) + ", " + L1.space().label(b) + ")");
    }
  return cert;
}

/// Lower central and derived series, centre, and the invariants read off them.
template <class S>
struct SeriesReport {
  std::vector<Subspace<S>> lower_central;  // gamma_1 = L, gamma_{k+1} = [L, gamma_k], until stable
  std::vector<Subspace<S>> derived;        // L^(0) = L, L^(k+1) = [L^(k), L^(k)], until stable
  Subspace<S> centre;
  std::optional<int> nilpotency_class;     // smallest c with gamma_{c+1} = 0
  std::optional<int> derived_length;       // smallest k with L^(k) = 0
  bool perfect = false;
};

template <class S>
SeriesReport<S> series(const LieSuperAlgebra<S>& L) {
  SeriesReport<S> r;
  auto all = Subspace<S>::full(L.dim());
  r.lower_central.push_back(all);
  while (true) {
    auto next = bracket_span(L, all, r.lower_central.back());
    if (next.dim() == r.lower_central.back().dim()) break;
    r.lower_central.push_back(next);
  }
  if (r.lower_central.back().dim() == 0) r.nilpotency_class = static_cast<int>(r.lower_central.size()) - 1;
  r.derived.push_back(all);
  while (true) {
    const auto& cur = r.derived.back();
    auto next = bracket_span(L, cur, cur);
    if (next.dim() == cur.dim()) break;
    r.derived.push_back(next);
  }
  if (r.derived.back().dim() == 0) r.derived_length = static_cast<int>(r.derived.size()) - 1;
  r.centre = centre(L);
  r.perfect = derived_subalgebra(L).dim() == L.dim();
  return r;
}

/// ad(x)^n = 0 for every x (not only homogeneous ones). Checked through the
/// polarised identity: for each multiset of n basis indices, the sum over its
/// distinct orderings of ad(e_i1)...ad(e_in) vanishes. Exact over Q; over F_p
/// this is a sufficient condition only.
template <class S>
bool is_engel(const LieSuperAlgebra<S>& L, int n) {
  if (n < 1) throw std::invalid_argument("Engel degree must be positive");
  const Index d = L.dim();
  if (d == 0) return true;
  std::vector<Mat<S>> ads;
  for (Index i = 0; i < d; ++i) ads.push_back(L.ad(i));
  std::vector<Index> multiset(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Index> order = multiset;
    Mat<S> total = Mat<S>::Zero(d, d);
    do {
      Mat<S> prod = ads[static_cast<std::size_t>(order[0])];
      for (int k = 1; k < n; ++k) prod = prod * ads[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
      total += prod;
    } while (std::next_permutation(order.begin(), order.end()));
    if (!is_zero_matrix(total)) return false;
    // next weakly increasing sequence
    int k = n - 1;
    while (k >= 0 && multiset[static_cast<std::size_t>(k)] == d - 1) --k;
    if (k < 0) break;
    Index v = multiset[static_cast<std::size_t>(k)] + 1;
    for (int t = k; t < n; ++t) multiset[static_cast<std::size_t>(t)] = v;
  }
  return true;
}

/// Smallest n with is_engel(L, n). A finite-dimensional Lie superalgebra
/// is Engel iff it is nilpotent, and then n <= class, so the search stops there.
template <class S>
std::optional<int> engel_degree(const LieSuperAlgebra<S>& L) {
  auto cls = series(L).nilpotency_class;
  if (!cls) return std::nullopt;
  for (int n = 1; n <= std::max(*cls, 1); ++n)
    if (is_engel(L, n)) return n;
  return std::nullopt;
}

}  // namespace superlie

#endif
