#ifndef SUPERLIE_CONSTRUCTORS_HPP
#define SUPERLIE_CONSTRUCTORS_HPP

#include <string>
#include <vector>

#include "superlie/lie.hpp"

namespace superlie {

/// Abelian Lie superalgebra of dimension (even | odd).
template <class S>
LieSuperAlgebra<S> abelian_algebra(Index even, Index odd, const std::string& prefix = "a") {
  return LieSuperAlgebra<S>::abelian(SuperSpace::make(even, odd, prefix),
                                     "abelian(" + std::to_string(even) + "|" + std::to_string(odd) + ")");
}

/// heis(1|0): basis x, y, z with [x, y] = z.
template <class S>
LieSuperAlgebra<S> heisenberg() {
  SuperSpace sp({{"x", Parity::Even}, {"y", Parity::Even}, {"z", Parity::Even}});
  return LieSuperAlgebra<S>::from_upper(sp, {{0, 1, unit_vector<S>(3, 2)}}, "heis");
}

/// Two-dimensional non-abelian Lie algebra: [x, y] = y.
template <class S>
LieSuperAlgebra<S> solvable2() {
  SuperSpace sp({{"x", Parity::Even}, {"y", Parity::Even}});
  return LieSuperAlgebra<S>::from_upper(sp, {{0, 1, unit_vector<S>(2, 1)}}, "solv2");
}

/// The ground field as a one-dimensional unital algebra.
template <class S>
AssocSuperAlgebra<S> ground_field() {
  return AssocSuperAlgebra<S>(SuperSpace({{"1", Parity::Even}}), {unit_vector<S>(1, 0)}, unit_vector<S>(1, 0), "q");
}

/// Even dual numbers K[e]/(e^2).
template <class S>
AssocSuperAlgebra<S> dual_numbers() {
  SuperSpace sp({{"1", Parity::Even}, {"e", Parity::Even}});
  Vec<S> one = unit_vector<S>(2, 0), eps = unit_vector<S>(2, 1), zero = Vec<S>::Zero(2);
  return AssocSuperAlgebra<S>(sp, {one, eps, eps, zero}, one, "dual");
}

/// Grassmann algebra on one odd generator t: basis 1, t with t^2 = 0.
template <class S>
AssocSuperAlgebra<S> grassmann1() {
  SuperSpace sp({{"1", Parity::Even}, {"t", Parity::Odd}});
  Vec<S> one = unit_vector<S>(2, 0), t = unit_vector<S>(2, 1), zero = Vec<S>::Zero(2);
  return AssocSuperAlgebra<S>(sp, {one, t, t, zero}, one, "grassmann");
}

/// M(m, n, A): (m+n)x(m+n) matrices over A with basis E_ij(a_t), ordered by
/// (i, j, t), |E_ij(a)| = |i| + |j| + |a| and the ordinary matrix product.
template <class S>
AssocSuperAlgebra<S> matrix_assoc(int m, int n, const AssocSuperAlgebra<S>& A) {
  if (m < 0 || n < 0 || m + n < 1) throw SizeError("matrix size m + n must be at least 1");
  if (!A.unit()) throw NotUnital("matrix algebra over a non-unital algebra");
  const Index N = m + n, da = A.dim(), d = N * N * da;
  auto row_parity = [m](Index i) { return i < m ? 0 : 1; };
  auto idx = [&](Index i, Index j, Index t) { return (i * N + j) * da + t; };
  std::vector<BasisElement> basis;
  for (Index i = 0; i < N; ++i)
    for (Index j = 0; j < N; ++j)
      for (Index t = 0; t < da; ++t)
        basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + A.space().label(t) + ")",
                         parity_of(row_parity(i) + row_parity(j) + A.p(t))});
  std::vector<Vec<S>> table(static_cast<std::size_t>(d * d), Vec<S>::Zero(d));
  for (Index i = 0; i < N; ++i)
    for (Index j = 0; j < N; ++j)
      for (Index t = 0; t < da; ++t)
        for (Index l = 0; l < N; ++l)
          for (Index u = 0; u < da; ++u) {
            // E_ij(a) E_jl(b) = E_il(ab); products with mismatched inner index vanish
            const Vec<S>& ab = A.product(t, u);
            Vec<S>& out = table[static_cast<std::size_t>(idx(i, j, t) * d + idx(j, l, u))];
            for (Index w = 0; w < da; ++w)
              if (!is_zero(ab(w))) out(idx(i, l, w)) = ab(w);
          }
  Vec<S> unit = Vec<S>::Zero(d);
  for (Index i = 0; i < N; ++i)
    for (Index t = 0; t < da; ++t) unit(idx(i, i, t)) = (*A.unit())(t);
  std::string name = "M(" + std::to_string(m) + "," + std::to_string(n) + "," + A.name() + ")";
  return AssocSuperAlgebra<S>(SuperSpace(std::move(basis)), std::move(table), unit, name);
}

/// gl(m, n, A): M(m, n, A) with the graded commutator.
template <class S>
LieSuperAlgebra<S> matrix_gl(int m, int n, const AssocSuperAlgebra<S>& A) {
  auto L = as_lie(matrix_assoc(m, n, A));
  L.set_name("gl(" + std::to_string(m) + "," + std::to_string(n) + "," + A.name() + ")");
  return L;
}

/// Subalgebra of gl(m, n, A) generated by the off-diagonal E_ij(a), with the inclusion.
template <class S>
Subalgebra<S> matrix_sl_embedded(int m, int n, const AssocSuperAlgebra<S>& A) {
  if (m < 0 || n < 0 || m + n < 3) throw SizeError("sl(m, n, A) needs m + n >= 3");
  auto gl = matrix_gl(m, n, A);
  const Index N = m + n, da = A.dim();
  std::vector<Vec<S>> gens;
  for (Index i = 0; i < N; ++i)
    for (Index j = 0; j < N; ++j)
      if (i != j)
        for (Index t = 0; t < da; ++t) gens.push_back(unit_vector<S>(gl.dim(), (i * N + j) * da + t));
  auto closure = subalgebra_closure(gl, gens);
  return subalgebra(gl, closure, "sl(" + std::to_string(m) + "," + std::to_string(n) + "," + A.name() + ")");
}

template <class S>
LieSuperAlgebra<S> matrix_sl(int m, int n, const AssocSuperAlgebra<S>& A) {
  return matrix_sl_embedded(m, n, A).algebra;
}

}  // namespace superlie

#endif
