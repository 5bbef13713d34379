#include <doctest.h>

#include <random>

#include "superlie/action.hpp"
#include "superlie/constructors.hpp"

using namespace superlie;
using Q = Rational;

TEST_CASE("trivial and adjoint actions certify") {
  for (const auto& L : {heisenberg<Q>(), matrix_gl(1, 1, ground_field<Q>()), matrix_sl(2, 1, ground_field<Q>())}) {
    CHECK(check_action(Action<Q>::adjoint(L)).ok());
    CHECK(check_action(Action<Q>::trivial(L, abelian_algebra<Q>(1, 1))).ok());
    CHECK(check_action(adjoint_module(L)).ok());
  }
}

TEST_CASE("random action tables are rejected") {
  auto P = heisenberg<Q>();
  auto M = abelian_algebra<Q>(2, 0);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-2, 2);
  int rejected = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec<Q>> tab;
    for (Index i = 0; i < P.dim() * M.dim(); ++i) {
      Vec<Q> v(2);
      v << Q(c(rng)), Q(c(rng));
      tab.push_back(v);
    }
    Action<Q> a(P, M, tab);
    if (!check_action(a).ok()) ++rejected;
  }
  CHECK(rejected >= 18);
}

TEST_CASE("compatibility of bracket actions between ideals") {
  auto gl = matrix_gl(1, 1, ground_field<Q>());
  auto sl = derived_subalgebra(gl);
  auto cs = ideal_inclusion(gl, sl, "sl");
  auto cg = identity_crossed(gl);
  auto [a, b] = induced_actions(cs, cg);
  CHECK(check_compatible(a, b).ok());
  auto h = heisenberg<Q>();
  CHECK(check_compatible(Action<Q>::trivial(h, h), Action<Q>::trivial(h, h)).ok());
  // the adjoint action paired with the trivial one is not compatible
  auto s = solvable2<Q>();
  CHECK_FALSE(check_compatible(Action<Q>::adjoint(s), Action<Q>::trivial(s, s)).ok());
}

TEST_CASE("crossed modules certify") {
  auto gl = matrix_gl(1, 1, ground_field<Q>());
  CHECK(check_crossed(identity_crossed(gl)).ok());
  CHECK(check_crossed(ideal_inclusion(gl, derived_subalgebra(gl))).ok());
  CHECK(check_crossed(module_crossed(adjoint_module(heisenberg<Q>()))).ok());
  CHECK(check_crossed(module_crossed(trivial_module(gl, SuperSpace::make(1, 2)))).ok());
  // the adjoint module of a non-abelian algebra paired with the identity boundary fails Peiffer
  auto h = heisenberg<Q>();
  CrossedModule<Q> bad(LieSuperAlgebra<Q>::abelian(h.space()), h, Mat<Q>::Identity(3, 3), adjoint_module(h));
  CHECK_FALSE(check_crossed(bad).ok());
  CHECK_THROWS_AS(ideal_inclusion(h, Subspace<Q>::span(3, std::vector<Vec<Q>>{unit_vector<Q>(3, 0)})), NotAnIdeal);
}

TEST_CASE("semidirect products") {
  // K acting on K by scalars gives the two-dimensional solvable algebra
  auto K = abelian_algebra<Q>(1, 0, "x");
  Action<Q> scal(K, abelian_algebra<Q>(1, 0, "y"), {unit_vector<Q>(1, 0)});
  auto sd = semidirect(scal);
  CHECK(check_lie_axioms(sd).ok());
  CHECK(series(sd).derived_length == 2);
  CHECK_FALSE(series(sd).nilpotency_class);

  auto gl = matrix_gl(1, 1, ground_field<Q>());
  auto sd2 = semidirect(adjoint_module(gl));
  CHECK(check_lie_axioms(sd2).ok());
  CHECK(sd2.space().dims() == SuperDim{4, 4});
  CHECK(sd2.space().label(0) == "m:E11(1)");

  // an even element may not send an even vector to an odd one
  Vec<Q> odd(2);
  odd << Q(0), Q(1);
  Action<Q> bad(K, abelian_algebra<Q>(1, 1, "y"), {odd, Vec<Q>::Zero(2)});
  CHECK_THROWS_AS(semidirect(bad), ActionInvalid);
}

TEST_CASE("induced actions require a common base") {
  auto h = heisenberg<Q>();
  auto g = matrix_gl(1, 1, ground_field<Q>());
  CHECK_THROWS_AS(induced_actions(identity_crossed(h), identity_crossed(g)), CrossedModuleMismatch);
}
