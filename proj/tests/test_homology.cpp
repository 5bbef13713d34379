#include <doctest.h>

#include "superlie/constructors.hpp"
#include "superlie/homology.hpp"

using namespace superlie;
using Q = Rational;

namespace {

std::vector<LieSuperAlgebra<Q>> corpus() {
  return {abelian_algebra<Q>(2, 0), abelian_algebra<Q>(1, 1), abelian_algebra<Q>(0, 1), heisenberg<Q>(), solvable2<Q>(),
          matrix_gl(1, 1, ground_field<Q>())};
}

GradedGenSet xy() { return GradedGenSet({{"x", Parity::Even}, {"y", Parity::Even}}); }

}  // namespace

TEST_CASE("Chevalley-Eilenberg complex examples") {
  auto ab = abelian_algebra<Q>(2, 1);
  auto c = ce_complex(ab, ground_module(ab), 3);
  for (int n = 1; n <= 3; ++n) CHECK(is_zero_matrix(c.d(n)));
  auto h = heisenberg<Q>();
  CHECK(rank(ce_complex(h, ground_module(h), 2).d(2)) == 1);
  CHECK_THROWS_AS(ce_complex(h, ground_module(h), 5), SizeError);
}

TEST_CASE("homology examples") {
  auto h = heisenberg<Q>();
  CHECK(homology(h, 1).dim == SuperDim{2, 0});
  CHECK(homology(h, 2).dim == SuperDim{2, 0});
  CHECK(homology(abelian_algebra<Q>(0, 1), 2).dim == SuperDim{1, 0});
  CHECK(homology(abelian_algebra<Q>(2, 0), 2).dim == SuperDim{1, 0});
  CHECK(homology(h, 0).dim == SuperDim{1, 0});
}

TEST_CASE("d o d = 0 with coefficients in adjoint modules") {
  for (const auto& P : corpus()) CHECK_NOTHROW(ce_complex(P, adjoint_module(P), 3));
  auto sl = matrix_sl(2, 1, ground_field<Q>());
  CHECK_NOTHROW(ce_complex(sl, ground_module(sl), 3));
}

TEST_CASE("H1 is the abelianization") {
  for (const auto& P : corpus()) CHECK(homology(P, 1).dim.total() == P.dim() - derived_subalgebra(P).dim());
}

TEST_CASE("H2 through the exterior square agrees with the complex") {
  for (const auto& P : corpus()) CHECK(h2_via_exterior(P).dim == homology(P, 2).dim);
  auto sl = matrix_sl(2, 1, ground_field<Q>());
  auto h2 = homology(sl, 2).dim;
  CHECK(h2_via_exterior(sl).dim == h2);
  CHECK(uce(sl).kernel_dim == h2);
  auto sl3 = matrix_sl(3, 0, ground_field<Q>());
  CHECK(homology(sl3, 2).dim == SuperDim{0, 0});
  CHECK(uce(sl3).kernel_dim == SuperDim{0, 0});
}

TEST_CASE("the d3 lemma") {
  for (const auto& P : corpus()) {
    auto r = d3_lemma_check(P);
    for (const auto& v : r.cert.violations) MESSAGE(v);
    CHECK(r.cert.ok());
  }
  auto ab = abelian_algebra<Q>(1, 2);
  CHECK(d3_lemma_check(ab).left.dim() == exterior_power(ab.space(), 2).space.dim());
  auto h = heisenberg<Q>();
  auto c = ce_complex(h, ground_module(h), 3);
  CHECK(d3_lemma_check(h).left.dim() == 3 - rank(c.d(3)));
  auto sl = matrix_sl(2, 1, ground_field<Q>());
  auto r = d3_lemma_check(sl);
  CHECK(r.cert.ok());
  CHECK(r.left.dim() == tensor_square(sl).algebra.dim());
}

TEST_CASE("Hopf formula") {
  Presentation<Q> free2{xy(), {}};
  CHECK(hopf_formula(free2, 2).dim == SuperDim{2, 0});
  CHECK(hopf_formula(free2, 3).dim == SuperDim{3, 0});
  CHECK(homology(presented_algebra(free2, 3), 2).dim == SuperDim{3, 0});
  CHECK_THROWS_AS(hopf_formula(free2, 2, false), ClassExceeded);

  auto x = BracketWord::gen("x"), y = BracketWord::gen("y");
  auto xy_ = BracketWord::bracket(x, y);
  Presentation<Q> heis{xy(), {Relator<Q>{{{Q(1), BracketWord::bracket(xy_, x)}}}, Relator<Q>{{{Q(1), BracketWord::bracket(xy_, y)}}}}};
  CHECK(hopf_formula(heis, 2, false).dim == SuperDim{2, 0});
  CHECK(homology(presented_algebra(heis, 2), 2).dim == homology(heisenberg<Q>(), 2).dim);

  Presentation<Q> line{GradedGenSet({{"x", Parity::Even}}), {}};
  CHECK(hopf_formula(line, 1).dim == SuperDim{0, 0});

  // abelian (1|1): [x, t] = 0, [t, t] = 0
  auto t = BracketWord::gen("t");
  Presentation<Q> a11{GradedGenSet({{"x", Parity::Even}, {"t", Parity::Odd}}),
                      {Relator<Q>{{{Q(1), BracketWord::bracket(x, t)}}}, Relator<Q>{{{Q(1), BracketWord::bracket(t, t)}}}}};
  CHECK(hopf_formula(a11, 1, false).dim == homology(abelian_algebra<Q>(1, 1), 2).dim);
}

TEST_CASE("non-abelian homology") {
  for (const auto& P : corpus()) {
    auto r = nh(P, identity_crossed(P));
    CHECK(r.dim0 == homology(P, 1).dim);
  }
  auto sl = matrix_sl(2, 1, ground_field<Q>());
  CHECK(nh(sl, identity_crossed(sl)).dim1 == homology(sl, 2).dim);
  // (M, 0) for a supermodule: nh_i = H_i
  for (const auto& P : {heisenberg<Q>(), matrix_gl(1, 1, ground_field<Q>()), solvable2<Q>()}) {
    auto M = adjoint_module(P);
    auto r = nh(P, module_crossed(M));
    CHECK(r.dim0 == homology(P, M, 0).dim);
    CHECK(r.dim1 == homology(P, M, 1).dim);
    auto T = trivial_module(P, SuperSpace::make(1, 1));
    auto rt = nh(P, module_crossed(T));
    CHECK(rt.dim0 == homology(P, T, 0).dim);
    CHECK(rt.dim1 == homology(P, T, 1).dim);
  }
}

TEST_CASE("exactness_check") {
  auto v = SuperSpace::make(1, 1);
  Mat<Q> id = Mat<Q>::Identity(2, 2);
  CHECK(exactness_check<Q>({from_zero<Q>(v), GradedMap<Q>(v, v, id), to_zero<Q>(v)}).ok());
  // the same sequence cut at the identity: 0 -> V -> 0 fails at V
  CHECK_FALSE(exactness_check<Q>({from_zero<Q>(v), to_zero<Q>(v)}).ok());
  auto cert = exactness_check<Q>({GradedMap<Q>(v, v, id), GradedMap<Q>(v, v, id)});
  REQUIRE_FALSE(cert.ok());
  CHECK(cert.violations.front().find("node 1") != std::string::npos);
}

TEST_CASE("snake sequences of short exact sequences of crossed modules") {
  auto h = heisenberg<Q>();
  auto s1 = nh_sequence(h, submodule_sequence(adjoint_module(h), series(h).centre));
  CHECK(s1.diagram.ok());
  CHECK(s1.exact.ok());
  for (const auto& P : {h, matrix_gl(1, 1, ground_field<Q>()), solvable2<Q>()}) {
    auto t = tensor_square(P);
    auto s = nh_sequence(P, kernel_image_sequence(nu_crossed(t)));
    for (const auto& v : s.diagram.violations) MESSAGE(v);
    for (const auto& v : s.exact.violations) MESSAGE(v);
    CHECK(s.diagram.ok());
    CHECK(s.exact.ok());
  }
}

TEST_CASE("final six-term sequence") {
  auto h = heisenberg<Q>();
  auto r = final_sixterm(h, series(h).centre);
  CHECK(r.sequence.diagram.ok());
  CHECK(r.sequence.exact.ok());
  CHECK(r.identified.ok());
  auto gl = matrix_gl(1, 1, ground_field<Q>());
  auto r2 = final_sixterm(gl, derived_subalgebra(gl));
  for (const auto& v : r2.sequence.diagram.violations) MESSAGE(v);
  CHECK(r2.sequence.exact.ok());
  CHECK(r2.identified.ok());
}
