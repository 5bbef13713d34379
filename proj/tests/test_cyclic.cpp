#include <doctest.h>

#include "superlie/constructors.hpp"
#include "superlie/cyclic.hpp"

using namespace superlie;
using Q = Rational;

namespace {

std::vector<AssocSuperAlgebra<Q>> corpus() {
  return {ground_field<Q>(), dual_numbers<Q>(), grassmann1<Q>(), matrix_assoc(1, 1, ground_field<Q>()),
          matrix_assoc(2, 0, ground_field<Q>())};
}

}  // namespace

TEST_CASE("Connes complex examples") {
  auto q = connes(ground_field<Q>(), 2);
  CHECK(q.classes[0].dim() == 1);
  CHECK(hc(ground_field<Q>(), 0).dim == SuperDim{1, 0});
  CHECK(hc(ground_field<Q>(), 1).dim == SuperDim{0, 0});
  auto dn = connes(dual_numbers<Q>(), 2);
  CHECK(dn.tensor_spaces[1].dim() == 4);
  CHECK(dn.tensor_spaces[2].dim() == 8);
  // t_n^{n+1} = 1 on every tensor power
  for (const auto& A : corpus()) {
    auto c = connes(A, 2);
    for (int n = 0; n <= 2; ++n) {
      Mat<Q> p = Mat<Q>::Identity(c.t[static_cast<std::size_t>(n)].rows(), c.t[static_cast<std::size_t>(n)].cols());
      for (int k = 0; k <= n; ++k) p = p * c.t[static_cast<std::size_t>(n)];
      CHECK(p == Mat<Q>::Identity(p.rows(), p.cols()));
    }
  }
  // odd generator: t_1(θ ⊗ θ) = -(-1)^1 θ ⊗ θ = θ ⊗ θ
  auto g = connes(grassmann1<Q>(), 1);
  CHECK(g.t[1](3, 3) == Q(1));
}

TEST_CASE("HC0 is A/[A,A]") {
  for (const auto& A : corpus()) CHECK(hc(A, 0).dim.total() == A.dim() - commutator_subspace(A).dim());
  CHECK(hc(dual_numbers<Q>(), 0).dim.total() == 2);
}

TEST_CASE("two constructions of HC1 agree") {
  for (const auto& A : corpus()) CHECK(hc1_kernel_model(A).dim == hc(A, 1).dim);
  CHECK(hc1_kernel_model(ground_field<Q>()).dim == SuperDim{0, 0});
}

TEST_CASE("Milnor HC1") {
  CHECK(milnor_hc1(ground_field<Q>()).dim == SuperDim{0, 0});
  for (const auto& A : {dual_numbers<Q>(), grassmann1<Q>()}) {
    REQUIRE(is_supercommutative(A));
    CHECK(milnor_hc1(A).dim == hc1_kernel_model(A).dim);
  }
}

TEST_CASE("V(A)") {
  auto v0 = v_algebra(ground_field<Q>());
  CHECK(v0.algebra.dim() == 0);
  for (const auto& A : corpus()) {
    auto v = v_algebra(A);
    for (const auto& x : v.cert.violations) MESSAGE(x);
    CHECK(v.cert.ok());
    CHECK(v.algebra.dim() == hc1_kernel_model(A).dim.total() + commutator_subspace(A).dim());
  }
}

TEST_CASE("cyclic six-term sequence") {
  for (const auto& A : corpus()) {
    auto r = cyclic_sixterm(A);
    for (const auto& x : r.cert().violations) MESSAGE(x);
    CHECK(r.cert().ok());
  }
  auto q = cyclic_sixterm(ground_field<Q>());
  for (const auto& [name, d] : q.table) CHECK(d.total() == 0);
}
