// Independent reference computations used only by the tests.
#ifndef SUPERLIE_TESTS_ORACLES_HPP
#define SUPERLIE_TESTS_ORACLES_HPP

#include <map>
#include <tuple>
#include <random>
#include <vector>

#include "superlie/action.hpp"

namespace oracle {

using superlie::Index;
using Q = superlie::Rational;
using QMat = superlie::Mat<Q>;

/// gl(m, n, Q) from explicit (m+n)x(m+n) matrices: the supercommutator of
/// every pair of matrix units, read back as coordinates, must equal the
/// structure constants of L (basis order E11, E12, ..., row-major).
inline bool gl_table_matches(const superlie::LieSuperAlgebra<Q>& L, int m, int n) {
  const Index N = m + n;
  if (L.dim() != N * N) return false;
  auto unit = [&](Index k) {
    QMat e = QMat::Zero(N, N);
    e(k / N, k % N) = Q(1);
    return e;
  };
  auto par = [&](Index k) { return ((k / N >= m) + (k % N >= m)) % 2; };
  for (Index a = 0; a < N * N; ++a)
    for (Index b = 0; b < N * N; ++b) {
      QMat c = unit(a) * unit(b) - ((par(a) & par(b)) ? Q(-1) : Q(1)) * (unit(b) * unit(a));
      for (Index k = 0; k < N * N; ++k)
        if (c(k / N, k % N) != L.bracket(a, b)(k)) return false;
    }
  return true;
}

/// D(M, N) from the defining generators without compression: families
/// (i), (ii), (iv), (v) over every tuple of basis elements, family (iii) over
/// random homogeneous elements m, n of equal parity.
inline superlie::Subspace<Q> d_bruteforce(const superlie::LieSuperAlgebra<Q>& M, const superlie::LieSuperAlgebra<Q>& N,
                                           const superlie::Action<Q>& mn, const superlie::Action<Q>& nm, int samples = 40) {
  using superlie::kron;
  using V = superlie::Vec<Q>;
  const Index dm = M.dim(), dn = N.dim();
  std::vector<V> gens;
  auto sg = [](int e) { return (e & 1) ? Q(-1) : Q(1); };
  auto em = [&](Index i) { return superlie::unit_vector<Q>(dm, i); };
  auto en = [&](Index j) { return superlie::unit_vector<Q>(dn, j); };
  auto pm = [&](Index i) { return M.p(i); };
  auto pn = [&](Index j) { return N.p(j); };
  for (Index i = 0; i < dm; ++i)
    for (Index k = 0; k < dm; ++k)
      for (Index j = 0; j < dn; ++j)
        gens.push_back(kron(M.bracket(i, k), en(j)) - kron(em(i), mn.act(k, j)) + sg(pm(i) * pm(k)) * kron(em(k), mn.act(i, j)));
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index l = 0; l < dn; ++l)
        gens.push_back(kron(em(i), N.bracket(j, l)) - sg(pn(l) * (pm(i) + pn(j))) * kron(nm.act(l, i), en(j)) +
                       sg(pm(i) * pn(j)) * kron(nm.act(j, i), en(l)));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int par = 0; par < 2; ++par)
    for (int s = 0; s < samples; ++s) {
      V m = V::Zero(dm), n = V::Zero(dn);
      for (Index i = 0; i < dm; ++i)
        if (pm(i) == par) m(i) = Q(coef(rng));
      for (Index j = 0; j < dn; ++j)
        if (pn(j) == par) n(j) = Q(coef(rng));
      gens.push_back(kron(nm.act(n, m), mn.act(m, n)));
    }
  struct Pair {
    Index m, n;
  };
  std::vector<Pair> pairs;
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) pairs.push_back({i, j});
  auto nmv = [&](const Pair& x) { return nm.act(x.n, x.m); };
  auto mnv = [&](const Pair& x) { return mn.act(x.m, x.n); };
  auto par = [&](const Pair& x) { return pm(x.m) + pn(x.n); };
  for (const auto& x : pairs)
    for (const auto& y : pairs)
      gens.push_back(sg(pm(x.m) * pn(x.n)) * kron(nmv(x), mnv(y)) +
                     sg(par(x) * par(y) + pm(y.m) * pn(y.n)) * kron(nmv(y), mnv(x)));
  auto term = [&](const Pair& x, const Pair& y, const Pair& z) {
    return V(sg(par(x) * par(z) + pm(x.m) * pn(x.n) + pm(y.m) * pn(y.n)) * kron(V(M.bracket(nmv(x), nmv(y))), mnv(z)));
  };
  for (const auto& x : pairs)
    for (const auto& y : pairs)
      for (const auto& z : pairs) gens.push_back(term(x, y, z) + term(y, z, x) + term(z, x, y));
  return superlie::Subspace<Q>::span(dm * dn, gens);
}

/// Per-degree (even, odd) dimensions of the free Lie superalgebra on
/// generators of the given parities, as the free magma algebra modulo the
/// ideal of super antisymmetry, super Jacobi and squares of even elements,
/// computed degree by degree up to `d`.
inline std::vector<std::pair<Index, Index>> magma_free_dims(const std::vector<int>& gen_parity, int d) {
  struct Word {
    int left = -1, right = -1;  // indices into the previous degree tables, or a generator
    int gen = -1;
    int a = 0;                  // degree of the left factor
    int parity = 0;
  };
  std::vector<std::vector<Word>> words(static_cast<std::size_t>(d + 1));
  // index of (a, i, j) -> word of degree a + b
  std::vector<std::map<std::tuple<int, int, int>, int>> index(static_cast<std::size_t>(d + 1));
  for (std::size_t g = 0; g < gen_parity.size(); ++g) words[1].push_back({-1, -1, static_cast<int>(g), 0, gen_parity[g]});
  for (int k = 2; k <= d; ++k)
    for (int a = 1; a < k; ++a)
      for (std::size_t i = 0; i < words[static_cast<std::size_t>(a)].size(); ++i)
        for (std::size_t j = 0; j < words[static_cast<std::size_t>(k - a)].size(); ++j) {
          int p = (words[static_cast<std::size_t>(a)][i].parity + words[static_cast<std::size_t>(k - a)][j].parity) & 1;
          index[static_cast<std::size_t>(k)][{a, static_cast<int>(i), static_cast<int>(j)}] =
              static_cast<int>(words[static_cast<std::size_t>(k)].size());
          words[static_cast<std::size_t>(k)].push_back({static_cast<int>(i), static_cast<int>(j), -1, a, p});
        }
  auto sg = [](int e) { return (e & 1) ? Q(-1) : Q(1); };
  using V = superlie::Vec<Q>;
  // product of a degree-a vector and a degree-b vector
  auto mult = [&](int a, const V& u, int b, const V& v) {
    V out = V::Zero(static_cast<Index>(words[static_cast<std::size_t>(a + b)].size()));
    for (Index i = 0; i < u.size(); ++i) {
      if (u(i) == Q(0)) continue;
      for (Index j = 0; j < v.size(); ++j)
        if (v(j) != Q(0)) out(index[static_cast<std::size_t>(a + b)].at({a, static_cast<int>(i), static_cast<int>(j)})) += u(i) * v(j);
    }
    return out;
  };
  auto unit = [&](int k, Index i) { return superlie::unit_vector<Q>(static_cast<Index>(words[static_cast<std::size_t>(k)].size()), i); };
  std::vector<superlie::Subspace<Q>> ideal(static_cast<std::size_t>(d + 1), superlie::Subspace<Q>(0));
  std::vector<std::pair<Index, Index>> dims;
  for (int k = 1; k <= d; ++k) {
    const Index n = static_cast<Index>(words[static_cast<std::size_t>(k)].size());
    std::vector<V> gens;
    for (int a = 1; a < k; ++a) {
      const int b = k - a;
      const Index na = static_cast<Index>(words[static_cast<std::size_t>(a)].size());
      const Index nb = static_cast<Index>(words[static_cast<std::size_t>(b)].size());
      for (const auto& r : ideal[static_cast<std::size_t>(a)].basis())
        for (Index j = 0; j < nb; ++j) gens.push_back(mult(a, r, b, unit(b, j)));
      for (const auto& r : ideal[static_cast<std::size_t>(b)].basis())
        for (Index i = 0; i < na; ++i) gens.push_back(mult(a, unit(a, i), b, r));
      for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j) {
          int pi = words[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)].parity;
          int pj = words[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)].parity;
          gens.push_back(mult(a, unit(a, i), b, unit(b, j)) + sg(pi * pj) * mult(b, unit(b, j), a, unit(a, i)));
          if (a == b && i == j && pi == 0) gens.push_back(mult(a, unit(a, i), a, unit(a, i)));
        }
    }
    for (int a = 1; a < k; ++a)
      for (int b = 1; a + b < k; ++b) {
        const int c = k - a - b;
        for (Index i = 0; i < static_cast<Index>(words[static_cast<std::size_t>(a)].size()); ++i)
          for (Index j = 0; j < static_cast<Index>(words[static_cast<std::size_t>(b)].size()); ++j)
            for (Index l = 0; l < static_cast<Index>(words[static_cast<std::size_t>(c)].size()); ++l) {
              int pu = words[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)].parity;
              int pv = words[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)].parity;
              int pw = words[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)].parity;
              V u = unit(a, i), v = unit(b, j), w = unit(c, l);
              gens.push_back(sg(pu * pw) * mult(a, u, b + c, mult(b, v, c, w)) + sg(pv * pu) * mult(b, v, c + a, mult(c, w, a, u)) +
                             sg(pw * pv) * mult(c, w, a + b, mult(a, u, b, v)));
            }
      }
    ideal[static_cast<std::size_t>(k)] = superlie::Subspace<Q>::span(n, gens);
    // the ideal is spanned by homogeneous vectors, so its echelon basis is homogeneous
    Index even = 0, odd = 0;
    for (const auto& w : words[static_cast<std::size_t>(k)]) (w.parity ? odd : even) += 1;
    for (const auto& r : ideal[static_cast<std::size_t>(k)].basis()) {
      Index piv = 0;
      while (r(piv) == Q(0)) ++piv;
      (words[static_cast<std::size_t>(k)][static_cast<std::size_t>(piv)].parity ? odd : even) -= 1;
    }
    dims.push_back({even, odd});
  }
  return dims;
}

/// Axioms restated through structure matrices: ad (resp. the action map)
/// must be an even homomorphism into the supercommutator algebra of
/// matrices and act by superderivations. Written independently of the
/// library checkers so that fuzzing compares two implementations.
namespace axioms {

inline int sg_int(int e) { return e % 2 ? -1 : 1; }

inline QMat table_op(const std::vector<superlie::Vec<Q>>& cols, Index first, Index n) {
  QMat m(n, n);
  for (Index j = 0; j < n; ++j) m.col(j) = cols[static_cast<std::size_t>(first + j)];
  return m;
}

inline bool lie_valid(const superlie::LieSuperAlgebra<Q>& L) {
  const Index d = L.dim();
  std::vector<superlie::Vec<Q>> t;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) t.push_back(L.bracket(i, j));
  std::vector<QMat> ad;
  for (Index i = 0; i < d; ++i) ad.push_back(table_op(t, i * d, d));
  auto ad_of = [&](const superlie::Vec<Q>& v) {
    QMat m = QMat::Zero(d, d);
    for (Index k = 0; k < d; ++k)
      if (v(k) != Q(0)) m += v(k) * ad[static_cast<std::size_t>(k)];
    return m;
  };
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const auto& v = t[static_cast<std::size_t>(i * d + j)];
      for (Index k = 0; k < d; ++k)
        if (v(k) != Q(0) && (L.p(k) + L.p(i) + L.p(j)) % 2) return false;
      if (v != superlie::Vec<Q>(Q(-sg_int(L.p(i) * L.p(j))) * t[static_cast<std::size_t>(j * d + i)])) return false;
      QMat comm = ad[static_cast<std::size_t>(i)] * ad[static_cast<std::size_t>(j)] -
                  Q(sg_int(L.p(i) * L.p(j))) * (ad[static_cast<std::size_t>(j)] * ad[static_cast<std::size_t>(i)]);
      if (ad_of(v) != comm) return false;
    }
  return true;
}

inline bool action_valid(const superlie::Action<Q>& a) {
  const auto& P = a.actor();
  const auto& M = a.target();
  const Index dp = P.dim(), dm = M.dim();
  std::vector<superlie::Vec<Q>> t;
  for (Index i = 0; i < dp; ++i)
    for (Index j = 0; j < dm; ++j) t.push_back(a.act(i, j));
  std::vector<QMat> rho;
  for (Index i = 0; i < dp; ++i) rho.push_back(table_op(t, i * dm, dm));
  auto rho_of = [&](const superlie::Vec<Q>& v) {
    QMat m = QMat::Zero(dm, dm);
    for (Index k = 0; k < dp; ++k)
      if (v(k) != Q(0)) m += v(k) * rho[static_cast<std::size_t>(k)];
    return m;
  };
  for (Index i = 0; i < dp; ++i) {
    for (Index j = 0; j < dm; ++j)
      for (Index k = 0; k < dm; ++k)
        if (rho[static_cast<std::size_t>(i)](k, j) != Q(0) && (P.p(i) + M.p(j) + M.p(k)) % 2) return false;
    for (Index j = 0; j < dp; ++j) {
      QMat comm = rho[static_cast<std::size_t>(i)] * rho[static_cast<std::size_t>(j)] -
                  Q(sg_int(P.p(i) * P.p(j))) * (rho[static_cast<std::size_t>(j)] * rho[static_cast<std::size_t>(i)]);
      if (rho_of(P.bracket(i, j)) != comm) return false;
    }
    for (Index m = 0; m < dm; ++m) {
      QMat lhs = rho[static_cast<std::size_t>(i)] * M.ad(m) - Q(sg_int(P.p(i) * M.p(m))) * (M.ad(m) * rho[static_cast<std::size_t>(i)]);
      if (lhs != M.ad(superlie::Vec<Q>(rho[static_cast<std::size_t>(i)].col(m)))) return false;
    }
  }
  return true;
}

inline bool crossed_valid(const superlie::CrossedModule<Q>& c) {
  if (!action_valid(c.action)) return false;
  const auto& d = c.boundary;
  for (Index r = 0; r < d.rows(); ++r)
    for (Index k = 0; k < d.cols(); ++k)
      if (d(r, k) != Q(0) && c.p.p(r) != c.m.p(k)) return false;
  for (Index i = 0; i < c.p.dim(); ++i)
    if (QMat(d * c.action.op(i)) != QMat(c.p.ad(i) * d)) return false;
  for (Index k = 0; k < c.m.dim(); ++k)
    if (c.action.op(superlie::Vec<Q>(d.col(k))) != c.m.ad(k)) return false;
  return true;
}

inline bool assoc_valid(const superlie::AssocSuperAlgebra<Q>& A) {
  const Index d = A.dim();
  auto left = [&](const superlie::Vec<Q>& x) {
    QMat m(d, d);
    for (Index j = 0; j < d; ++j) m.col(j) = A.product(x, superlie::unit_vector<Q>(d, j));
    return m;
  };
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const auto& v = A.product(i, j);
      for (Index k = 0; k < d; ++k)
        if (v(k) != Q(0) && (A.p(i) + A.p(j) + A.p(k)) % 2) return false;
      if (left(v) != QMat(left(superlie::unit_vector<Q>(d, i)) * left(superlie::unit_vector<Q>(d, j)))) return false;
    }
  if (A.unit()) {
    const auto& u = *A.unit();
    for (Index k = 0; k < d; ++k)
      if (u(k) != Q(0) && A.p(k)) return false;
    if (left(u) != QMat(QMat::Identity(d, d))) return false;
    for (Index j = 0; j < d; ++j)
      if (A.product(superlie::unit_vector<Q>(d, j), u) != superlie::unit_vector<Q>(d, j)) return false;
  }
  return true;
}

}  // namespace axioms

}  // namespace oracle

#endif
