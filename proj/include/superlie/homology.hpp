#ifndef SUPERLIE_HOMOLOGY_HPP
#define SUPERLIE_HOMOLOGY_HPP

#include <atomic>
#include <string>
#include <utility>
#include <vector>

#include "superlie/freelie.hpp"
#include "superlie/tensor.hpp"

namespace superlie {

inline constexpr int kDefaultExteriorLimit = 4;

/// C_0 .. C_N with d_n: C_n -> C_{n-1}; boundaries[n - 1] holds d_n.
template <class S>
struct ChainComplex {
  std::vector<SuperSpace> spaces;
  std::vector<GradedMap<S>> boundaries;

  int top() const { return static_cast<int>(spaces.size()) - 1; }
  /// d_n as a matrix; d_0 is the zero map to the zero space.
  Mat<S> d(int n) const {
    if (n == 0) return Mat<S>::Zero(0, spaces[0].dim());
    return boundaries[static_cast<std::size_t>(n - 1)].matrix;
  }
};

template <class S>
struct HomologyResult {
  int n = 0;
  SuperDim dim;
  SuperSpace space;                  // the chain space C_n
  std::vector<Vec<S>> representatives;  // section of Ker d_n / Im d_{n+1}
};

/// Process-wide record of every d o d = 0 check; a single failure is fatal
/// to the sign conventions.
struct ComplexAudit {
  std::atomic<long> closed{0};
  std::atomic<long> failed{0};
};

inline ComplexAudit& complex_audit() {
  static ComplexAudit audit;
  return audit;
}

template <class S>
void require_closed(const ChainComplex<S>& c) {
  for (int n = 2; n <= c.top(); ++n)
    if (!is_zero_matrix(Mat<S>(c.d(n - 1) * c.d(n)))) {
      ++complex_audit().failed;
      throw ComplexInconsistent("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " is not zero");
    }
  ++complex_audit().closed;
}

/// H_n of a complex; needs d_{n+1} unless n is the top degree of a complex
/// that is known to stop there.
template <class S>
HomologyResult<S> homology_of(const ChainComplex<S>& c, int n) {
  if (n < 0 || n + 1 > c.top()) throw SizeError("homology in degree " + std::to_string(n) + " needs d_" + std::to_string(n + 1));
  Subquotient<S> h(kernel(c.d(n)), Subspace<S>::image(c.d(n + 1)));
  HomologyResult<S> r;
  r.n = n;
  r.space = c.spaces[static_cast<std::size_t>(n)];
  r.representatives = h.section().basis();
  r.dim = super_dim(r.space, h.section());
  return r;
}

/// C_n = Lambda^n P (x) M on canonical wedge monomials, with
/// d(x1..xn (x) y) = sum_i (-1)^{i + |x_i| sum_{k>i} |x_k|} (..^x_i.. (x) x_i y)
///   + sum_{i<j} (-1)^{i+j + |x_i| sum_{k<i} |x_k| + |x_j| sum_{l<j} |x_l| + |x_i||x_j|} ([x_i,x_j] ^ ..^x_i..^x_j.. (x) y).
template <class S>
ChainComplex<S> ce_complex(const LieSuperAlgebra<S>& P, const Supermodule<S>& M, int maxN, int limit = kDefaultExteriorLimit) {
  if (maxN < 0 || maxN > limit) throw SizeError("exterior degree " + std::to_string(maxN) + " exceeds the limit " + std::to_string(limit));
  if (!(M.actor().space() == P.space())) throw AmbientMismatch("module is not over P");
  if (!M.target().is_abelian()) throw ActionInvalid("coefficients must form a supermodule");
  const Index dm = M.target().dim();
  const auto& mspace = M.target().space();
  std::vector<ExteriorPower> ext;
  ChainComplex<S> c;
  for (int n = 0; n <= maxN; ++n) {
    ext.push_back(exterior_power(P.space(), n));
    c.spaces.push_back(tensor_space(ext.back().space, mspace));
  }
  for (int n = 1; n <= maxN; ++n) {
    const auto& src = ext[static_cast<std::size_t>(n)];
    const auto& dst = ext[static_cast<std::size_t>(n - 1)];
    Mat<S> d = Mat<S>::Zero(dst.space.dim() * dm, src.space.dim() * dm);
    for (std::size_t mi = 0; mi < src.monomials.size(); ++mi) {
      const auto& x = src.monomials[mi];
      std::vector<int> par;
      for (Index f : x) par.push_back(P.p(f));
      for (Index y = 0; y < dm; ++y) {
        const Index col = static_cast<Index>(mi) * dm + y;
        for (int i = 1; i <= n; ++i) {
          int e = i;
          for (int k = i + 1; k <= n; ++k) e += par[static_cast<std::size_t>(i - 1)] * par[static_cast<std::size_t>(k - 1)];
          std::vector<Index> rest;
          for (int k = 1; k <= n; ++k)
            if (k != i) rest.push_back(x[static_cast<std::size_t>(k - 1)]);
          Index row0 = dst.lookup(rest) * dm;
          const Vec<S>& act = M.act(x[static_cast<std::size_t>(i - 1)], y);
          for (Index z = 0; z < dm; ++z)
            if (!is_zero(act(z))) d(row0 + z, col) += sign_power<S>(e) * act(z);
        }
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            int pi = par[static_cast<std::size_t>(i - 1)], pj = par[static_cast<std::size_t>(j - 1)];
            int e = i + j + pi * pj;
            for (int k = 1; k < i; ++k) e += pi * par[static_cast<std::size_t>(k - 1)];
            for (int l = 1; l < j; ++l) e += pj * par[static_cast<std::size_t>(l - 1)];
            Vec<S> br = P.bracket(x[static_cast<std::size_t>(i - 1)], x[static_cast<std::size_t>(j - 1)]);
            for (Index k = 0; k < P.dim(); ++k) {
              if (is_zero(br(k))) continue;
              std::vector<Index> f{k};
              for (int l = 1; l <= n; ++l)
                if (l != i && l != j) f.push_back(x[static_cast<std::size_t>(l - 1)]);
              auto w = wedge_normalize(f, P.space());
              if (!w) continue;
              d(dst.lookup(w->factors) * dm + y, col) += S(w->sign) * sign_power<S>(e) * br(k);
            }
          }
      }
    }
    c.boundaries.emplace_back(c.spaces[static_cast<std::size_t>(n)], c.spaces[static_cast<std::size_t>(n - 1)], std::move(d));
  }
  require_closed(c);
  return c;
}

/// Trivial coefficients K.
template <class S>
Supermodule<S> ground_module(const LieSuperAlgebra<S>& P) {
  return trivial_module(P, SuperSpace({{"1", Parity::Even}}));
}

template <class S>
HomologyResult<S> homology(const LieSuperAlgebra<S>& P, const Supermodule<S>& M, int n) {
  return homology_of(ce_complex(P, M, n + 1), n);
}

template <class S>
HomologyResult<S> homology(const LieSuperAlgebra<S>& P, int n) {
  return homology(P, ground_module(P), n);
}

/// Lambda^2 P / Im d_3 with [x ^ y, x' ^ y'] = [x,y] ^ [x',y'], compared
/// with P ^ P through x ^ y -> x ^ y.
template <class S>
struct D3Lemma {
  LieSuperAlgebra<S> left;
  ExteriorProduct<S> right;
  Mat<S> map;
  Certificate cert;
};

template <class S>
D3Lemma<S> d3_lemma_check(const LieSuperAlgebra<S>& P) {
  D3Lemma<S> out;
  auto cx = ce_complex(P, ground_module(P), 3);
  auto l2 = exterior_power(P.space(), 2);
  const Index d2 = l2.space.dim();
  Subquotient<S> q = Subquotient<S>::quotient(Subspace<S>::image(cx.d(3)));
  // b(x ^ y) = [x, y]
  Mat<S> b(P.dim(), d2);
  for (std::size_t m = 0; m < l2.monomials.size(); ++m)
    b.col(static_cast<Index>(m)) = P.bracket(l2.monomials[m][0], l2.monomials[m][1]);
  auto wedge = [&](const Vec<S>& u, const Vec<S>& v) {
    Vec<S> out2 = Vec<S>::Zero(d2);
    for (Index k = 0; k < u.size(); ++k) {
      if (is_zero(u(k))) continue;
      for (Index l = 0; l < v.size(); ++l) {
        if (is_zero(v(l))) continue;
        auto w = wedge_normalize({k, l}, P.space());
        if (w) out2(l2.lookup(w->factors)) += S(w->sign) * u(k) * v(l);
      }
    }
    return out2;
  };
  const Index dq = q.dim();
  std::vector<BasisElement> basis;
  for (Index k = 0; k < dq; ++k) basis.push_back({describe_vector(l2.space, q.section(k)), *homogeneous_parity(l2.space, q.section(k))});
  std::vector<Vec<S>> table;
  for (Index a = 0; a < dq; ++a)
    for (Index c = 0; c < dq; ++c)
      table.push_back(q.reduce(wedge(Vec<S>(b * q.section(a)), Vec<S>(b * q.section(c)))));
  out.left = LieSuperAlgebra<S>(SuperSpace(std::move(basis)), std::move(table), "Λ²" + P.name() + "/Im d3");
  out.right = exterior_square(P);
  Mat<S> lam(out.right.algebra().dim(), d2);
  for (std::size_t m = 0; m < l2.monomials.size(); ++m)
    lam.col(static_cast<Index>(m)) = out.right.element(l2.monomials[m][0], l2.monomials[m][1]);
  out.cert.require(is_zero_matrix(Mat<S>(lam * cx.d(3))), "Im d3 does not vanish in P ^ P");
  out.map = lam * q.section().basis_matrix();
  out.cert.merge(check_lie_axioms(out.left), "left side: ");
  out.cert.require(out.left.dim() == out.right.algebra().dim() && rank(out.map) == out.left.dim(),
                   "canonical map is not bijective: dims " + std::to_string(out.left.dim()) + " and " +
                       std::to_string(out.right.algebra().dim()) + ", rank " + std::to_string(rank(out.map)));
  out.cert.merge(check_homomorphism(out.left, out.right.algebra(), out.map), "canonical map: ");
  return out;
}

/// Ker(P ^ P -> P, x ^ y -> [x, y]).
template <class S>
HomologyResult<S> h2_via_exterior(const LieSuperAlgebra<S>& P) {
  auto x = exterior_square(P);
  auto ker = kernel(x.mu());
  HomologyResult<S> r;
  r.n = 2;
  r.space = x.algebra().space();
  r.representatives = ker.basis();
  r.dim = super_dim(r.space, ker);
  return r;
}

/// H_2(P) = (R ∩ [F,F]) / [F,R] computed in F / gamma_{c+2} F. For a
/// class-<= c quotient R contains gamma_{c+1} F, so gamma_{c+2} F lies in
/// [F,R] and both sides survive the truncation. With `truncate` the
/// degree-(c+1) words join the relators and P is the class-c quotient of
/// the presentation; otherwise ClassExceeded signals that the relators do
/// not force class <= c.
template <class S>
HomologyResult<S> hopf_formula(const Presentation<S>& pres, int c, bool truncate = true) {
  if (c < 1) throw SizeError("class bound must be at least 1");
  auto F = free_truncated<S>(pres.gens, c + 1);
  const auto& L = F.algebra;
  std::vector<Vec<S>> rel;
  for (const auto& r : pres.relators) rel.push_back(evaluate_relator(F, r));
  if (truncate)
    for (const auto& w : truncation_words(pres.gens, c)) rel.push_back(evaluate_relator(F, w));
  auto R = ideal_closure(L, rel);
  std::vector<Vec<S>> top;
  for (Index i = F.offsets.back(); i < L.dim(); ++i) top.push_back(unit_vector<S>(L.dim(), i));
  if (!R.contains(Subspace<S>::span(L.dim(), top)))
    throw ClassExceeded("the presented algebra is not nilpotent of class <= " + std::to_string(c));
  auto FF = derived_subalgebra(L);
  auto FR = bracket_span(L, Subspace<S>::full(L.dim()), R);
  Subquotient<S> h(intersect(R, FF), FR);
  HomologyResult<S> res;
  res.n = 2;
  res.space = L.space();
  res.representatives = h.section().basis();
  res.dim = super_dim(L.space(), h.section());
  return res;
}

/// The algebra presented by `pres`, truncated to class c.
template <class S>
LieSuperAlgebra<S> presented_algebra(const Presentation<S>& pres, int c) {
  auto F = free_truncated<S>(pres.gens, c + 1);
  std::vector<Vec<S>> rel;
  for (const auto& r : pres.relators) rel.push_back(evaluate_relator(F, r));
  for (const auto& w : truncation_words(pres.gens, c)) rel.push_back(evaluate_relator(F, w));
  return quotient_algebra(F.algebra, ideal_closure(F.algebra, rel), "P").algebra;
}

/// nh_0 = Coker nu and nh_1 = Ker nu for nu: P (x) M -> M, p (x) m -> ^p m.
template <class S>
struct NonAbelianHomology {
  TensorProduct<S> tensor;  // P (x) M
  Subquotient<S> h0;        // in M
  Subspace<S> h1;           // in P (x) M
  SuperDim dim0, dim1;
};

template <class S>
NonAbelianHomology<S> nh(const LieSuperAlgebra<S>& P, const CrossedModule<S>& cm) {
  if (!(cm.p.space() == P.space())) throw CrossedModuleMismatch("crossed module is not over P");
  NonAbelianHomology<S> r;
  r.tensor = tensor_of_crossed(identity_crossed(P), cm);
  r.h0 = Subquotient<S>(Subspace<S>::full(cm.m.dim()), Subspace<S>::image(r.tensor.nu.matrix));
  r.h1 = kernel(r.tensor.nu.matrix);
  r.dim0 = super_dim(cm.m.space(), r.h0.section());
  r.dim1 = super_dim(r.tensor.algebra.space(), r.h1);
  return r;
}

/// The zero maps 0 -> V and V -> 0.
template <class S>
GradedMap<S> from_zero(const SuperSpace& v) {
  return GradedMap<S>(SuperSpace(), v, Mat<S>::Zero(v.dim(), 0));
}
template <class S>
GradedMap<S> to_zero(const SuperSpace& v) {
  return GradedMap<S>(v, SuperSpace(), Mat<S>::Zero(0, v.dim()));
}

/// Im f_k = Ker f_{k+1} at every interior node; a terminal "-> 0" is a
/// final map to the zero space.
template <class S>
Certificate exactness_check(const std::vector<GradedMap<S>>& seq, const std::vector<std::string>& names = {}) {
  Certificate cert;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const auto& f = seq[k];
    const auto& g = seq[k + 1];
    std::string node = k + 1 < names.size() ? names[k + 1] : "node " + std::to_string(k + 1);
    if (!(f.target == g.source) || f.matrix.rows() != g.matrix.cols()) {
      cert.fail(node + ": maps are not composable");
      continue;
    }
    auto im = Subspace<S>::image(f.matrix);
    auto ker = kernel(g.matrix);
    if (im != ker) {
      auto both = intersect(im, ker);
      cert.fail(node + ": not exact, dim Im = " + std::to_string(im.dim()) + ", dim Ker = " + std::to_string(ker.dim()) +
                ", Im outside Ker " + std::to_string(im.dim() - both.dim()) + ", Ker outside Im " +
                std::to_string(ker.dim() - both.dim()));
    }
  }
  return cert;
}

/// Labels for a subspace basis, parities from homogeneity.
template <class S>
SuperSpace subspace_space(const SuperSpace& ambient, const std::vector<Vec<S>>& basis, const std::string& prefix) {
  std::vector<BasisElement> b;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto p = homogeneous_parity(ambient, basis[k]);
    if (!p) throw std::invalid_argument("basis vector is not homogeneous");
    b.push_back({prefix + std::to_string(k), *p});
  }
  return SuperSpace(std::move(b));
}

/// Snake sequence of a diagram with rows A1 -> A2 -> A3 -> 0 and
/// 0 -> B1 -> B2 -> B3, verticals v_i: A_i -> B_i:
/// Ker v1 -> Ker v2 -> Ker v3 -> Coker v1 -> Coker v2 -> Coker v3 -> 0.
template <class S>
struct SnakeSequence {
  std::vector<SuperSpace> spaces;  // the six terms
  std::vector<GradedMap<S>> maps;  // five maps plus the final map to 0
  std::vector<SuperDim> dims;
  Certificate diagram;  // commutativity and exactness of the rows
  Certificate exact;    // exactness of the snake sequence

  std::vector<std::string> names = {"Ker v1", "Ker v2", "Ker v3", "Coker v1", "Coker v2", "Coker v3"};
};

template <class S>
SnakeSequence<S> snake(const GradedMap<S>& a1, const GradedMap<S>& a2, const GradedMap<S>& b1, const GradedMap<S>& b2,
                       const GradedMap<S>& v1, const GradedMap<S>& v2, const GradedMap<S>& v3) {
  SnakeSequence<S> s;
  auto& dg = s.diagram;
  dg.require(v2.matrix * a1.matrix == b1.matrix * v1.matrix, "left square does not commute");
  dg.require(v3.matrix * a2.matrix == b2.matrix * v2.matrix, "right square does not commute");
  dg.merge(exactness_check<S>({a1, a2, to_zero<S>(a2.target)}), "top row: ");
  dg.merge(exactness_check<S>({from_zero<S>(b1.source), b1, b2}), "bottom row: ");
  if (!dg.ok()) return s;

  auto k1 = kernel(v1.matrix), k2 = kernel(v2.matrix), k3 = kernel(v3.matrix);
  Subquotient<S> c1(Subspace<S>::full(v1.target.dim()), Subspace<S>::image(v1.matrix));
  Subquotient<S> c2(Subspace<S>::full(v2.target.dim()), Subspace<S>::image(v2.matrix));
  Subquotient<S> c3(Subspace<S>::full(v3.target.dim()), Subspace<S>::image(v3.matrix));
  s.spaces = {subspace_space(v1.source, k1.basis(), "k1_"), subspace_space(v2.source, k2.basis(), "k2_"),
              subspace_space(v3.source, k3.basis(), "k3_"), subspace_space(v1.target, c1.section().basis(), "c1_"),
              subspace_space(v2.target, c2.section().basis(), "c2_"), subspace_space(v3.target, c3.section().basis(), "c3_")};
  auto on_kernels = [](const Subspace<S>& from, const Subspace<S>& to, const Mat<S>& f) {
    Mat<S> m(to.dim(), from.dim());
    for (Index j = 0; j < from.dim(); ++j) m.col(j) = to.coordinates(Vec<S>(f * from.basis(j)));
    return m;
  };
  auto on_cokernels = [](const Subquotient<S>& from, const Subquotient<S>& to, const Mat<S>& f) {
    return to.reduce_columns(Mat<S>(f * from.section().basis_matrix()));
  };
  Mat<S> delta(c1.dim(), k3.dim());
  for (Index j = 0; j < k3.dim(); ++j) {
    auto a = solve(a2.matrix, k3.basis(j));
    if (!a) throw std::logic_error("top row is not surjective");
    auto b = solve(b1.matrix, Vec<S>(v2.matrix * *a));
    if (!b) throw std::logic_error("connecting element does not lift to B1");
    delta.col(j) = c1.reduce(*b);
  }
  std::vector<Mat<S>> mats{on_kernels(k1, k2, a1.matrix), on_kernels(k2, k3, a2.matrix), delta,
                           on_cokernels(c1, c2, b1.matrix), on_cokernels(c2, c3, b2.matrix)};
  for (std::size_t k = 0; k < mats.size(); ++k) s.maps.emplace_back(s.spaces[k], s.spaces[k + 1], mats[k]);
  s.maps.push_back(to_zero<S>(s.spaces[5]));
  for (const auto& sp : s.spaces) s.dims.push_back(sp.dims());
  s.exact = exactness_check(s.maps, s.names);
  return s;
}

/// Snake sequence of nh for 0 -> (L,0) -> (M,d) -> (N,d') -> 0 in crossed
/// P-modules, f: L -> M and g: M -> N:
/// nh1(P,L) -> nh1(P,M) -> nh1(P,N) -> nh0(P,L) -> nh0(P,M) -> nh0(P,N) -> 0.
template <class S>
SnakeSequence<S> nh_sequence(const LieSuperAlgebra<S>& P, const CrossedModule<S>& L, const CrossedModule<S>& M,
                             const CrossedModule<S>& N, const Mat<S>& f, const Mat<S>& g) {
  auto tl = tensor_of_crossed(identity_crossed(P), L);
  auto tm = tensor_of_crossed(identity_crossed(P), M);
  auto tn = tensor_of_crossed(identity_crossed(P), N);
  Mat<S> id = Mat<S>::Identity(P.dim(), P.dim());
  GradedMap<S> a1(tl.algebra.space(), tm.algebra.space(), tensor_map(tl, tm, id, f));
  GradedMap<S> a2(tm.algebra.space(), tn.algebra.space(), tensor_map(tm, tn, id, g));
  GradedMap<S> b1(L.m.space(), M.m.space(), f), b2(M.m.space(), N.m.space(), g);
  auto s = snake(a1, a2, b1, b2, tl.nu, tm.nu, tn.nu);
  s.names = {"nh1(P,L)", "nh1(P,M)", "nh1(P,N)", "nh0(P,L)", "nh0(P,M)", "nh0(P,N)"};
  return s;
}

/// 0 -> (Ker d, 0) -> (M, d) -> (Im d, i) -> 0 for a crossed module.
template <class S>
struct CrossedShortExact {
  CrossedModule<S> l, m, n;
  Mat<S> f, g;
};

template <class S>
CrossedShortExact<S> kernel_image_sequence(const CrossedModule<S>& cm) {
  CrossedShortExact<S> e;
  e.m = cm;
  auto ker = kernel(cm.boundary);
  auto im = Subspace<S>::image(cm.boundary);
  auto ksub = subalgebra(cm.m, ker, "Ker");
  std::vector<Vec<S>> act;
  for (Index i = 0; i < cm.p.dim(); ++i)
    for (const auto& k : ker.basis()) act.push_back(ker.coordinates(Vec<S>(cm.action.op(i) * k)));
  e.l = module_crossed(Supermodule<S>(cm.p, ksub.algebra, std::move(act)));
  e.n = ideal_inclusion(cm.p, im, "Im");
  e.f = ksub.inclusion;
  e.g = Mat<S>(im.dim(), cm.m.dim());
  for (Index j = 0; j < cm.m.dim(); ++j) e.g.col(j) = im.coordinates(Vec<S>(cm.boundary.col(j)));
  return e;
}

/// 0 -> (L,0) -> (M,0) -> (M/L,0) -> 0 for a submodule L of a supermodule M.
template <class S>
CrossedShortExact<S> submodule_sequence(const Supermodule<S>& M, const Subspace<S>& L) {
  const auto& P = M.actor();
  const auto& V = M.target();
  for (Index i = 0; i < P.dim(); ++i)
    for (const auto& l : L.basis())
      if (!L.contains(Vec<S>(M.op(i) * l))) throw NotAnIdeal("subspace is not a submodule");
  CrossedShortExact<S> e;
  auto lsub = subalgebra(V, L, "L");
  auto q = quotient_algebra(V, L, "M/L");
  std::vector<Vec<S>> al, aq;
  for (Index i = 0; i < P.dim(); ++i) {
    for (const auto& l : L.basis()) al.push_back(L.coordinates(Vec<S>(M.op(i) * l)));
    for (Index k = 0; k < q.classes.dim(); ++k) aq.push_back(q.classes.reduce(Vec<S>(M.op(i) * q.classes.section(k))));
  }
  e.l = module_crossed(Supermodule<S>(P, lsub.algebra, std::move(al)));
  e.m = module_crossed(M);
  e.n = module_crossed(Supermodule<S>(P, q.algebra, std::move(aq)));
  e.f = lsub.inclusion;
  e.g = q.projection.matrix;
  return e;
}

template <class S>
SnakeSequence<S> nh_sequence(const LieSuperAlgebra<S>& P, const CrossedShortExact<S>& e) {
  return nh_sequence(P, e.l, e.m, e.n, e.f, e.g);
}

/// For a graded ideal M of P:
/// Ker(M ^ P -> P) -> H2(P) -> H2(P/M) -> M/[P,M] -> H1(P) -> H1(P/M) -> 0,
/// as the snake of M ^ P -> P ^ P -> (P/M) ^ (P/M) -> 0 over 0 -> M -> P -> P/M.
/// `identified` certifies each term against the homology module.
template <class S>
struct FinalSixTerm {
  SnakeSequence<S> sequence;
  Certificate identified;
};

template <class S>
FinalSixTerm<S> final_sixterm(const LieSuperAlgebra<S>& P, const Subspace<S>& M) {
  auto cmM = ideal_inclusion(P, M, "M");
  auto cmP = identity_crossed(P);
  auto q = quotient_algebra(P, M, "P/M");
  auto xMP = nonabelian_exterior(tensor_of_crossed(cmM, cmP), cmM, cmP);
  auto xPP = exterior_square(P);
  auto xQQ = exterior_square(q.algebra);
  const Mat<S>& incl = cmM.boundary;
  Mat<S> id = Mat<S>::Identity(P.dim(), P.dim());
  const Mat<S>& proj = q.projection.matrix;
  GradedMap<S> a1(xMP.algebra().space(), xPP.algebra().space(), exterior_map(xMP, xPP, incl, id));
  GradedMap<S> a2(xPP.algebra().space(), xQQ.algebra().space(), exterior_map(xPP, xQQ, proj, proj));
  GradedMap<S> b1(cmM.m.space(), P.space(), incl), b2(P.space(), q.algebra.space(), proj);
  GradedMap<S> v1(xMP.algebra().space(), cmM.m.space(), xMP.mu());
  GradedMap<S> v2(xPP.algebra().space(), P.space(), xPP.mu());
  GradedMap<S> v3(xQQ.algebra().space(), q.algebra.space(), xQQ.mu());
  FinalSixTerm<S> out;
  out.sequence = snake(a1, a2, b1, b2, v1, v2, v3);
  out.sequence.names = {"Ker(M∧P→P)", "H2(P)", "H2(P/M)", "M/[P,M]", "H1(P)", "H1(P/M)"};
  if (!out.sequence.diagram.ok()) return out;
  const auto& d = out.sequence.dims;
  auto& c = out.identified;
  c.require(d[1] == homology(P, 2).dim, "Ker(P ^ P -> P) differs from H2(P)");
  c.require(d[2] == homology(q.algebra, 2).dim, "Ker(Q ^ Q -> Q) differs from H2(P/M)");
  auto pm = bracket_span(P, Subspace<S>::full(P.dim()), M);
  SuperDim mpm{super_dim(P.space(), M).even - super_dim(P.space(), pm).even, super_dim(P.space(), M).odd - super_dim(P.space(), pm).odd};
  c.require(d[3] == mpm, "Coker(M ^ P -> M) differs from M/[P,M]");
  c.require(d[4] == homology(P, 1).dim, "Coker(P ^ P -> P) differs from H1(P)");
  c.require(d[5] == homology(q.algebra, 1).dim, "Coker(Q ^ Q -> Q) differs from H1(P/M)");
  return out;
}

}  // namespace superlie

#endif
