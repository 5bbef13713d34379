#ifndef SUPERLIE_CYCLIC_HPP
#define SUPERLIE_CYCLIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "superlie/homology.hpp"

namespace superlie {

/// A^{(x)(n+1)} for n = 0..maxN, the cyclic operators t_n, the coinvariants
/// C_n = A^{(x)(n+1)} / Im(1 - t_n) and the induced boundaries.
template <class S>
struct ConnesComplex {
  std::vector<SuperSpace> tensor_spaces;
  std::vector<Mat<S>> t;      // t_n on A^{(x)(n+1)}
  std::vector<Mat<S>> b;      // Hochschild boundary A^{(x)(n+1)} -> A^{(x)n}, b[0] empty
  std::vector<Subquotient<S>> classes;
  ChainComplex<S> complex;    // on the coinvariants
};

namespace detail {

inline std::vector<Index> digits(Index idx, Index base, int len) {
  std::vector<Index> out(static_cast<std::size_t>(len));
  for (int k = len - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = idx % base;
    idx /= base;
  }
  return out;
}

inline Index undigits(const std::vector<Index>& d, Index base) {
  Index idx = 0;
  for (Index x : d) idx = idx * base + x;
  return idx;
}

}  // namespace detail

/// t_n(a0 (x) .. (x) an) = (-1)^{n + |an| sum_{k<n} |ak|} an (x) a0 (x) .. (x) a_{n-1}.
template <class S>
Mat<S> cyclic_operator(const AssocSuperAlgebra<S>& A, int n) {
  const Index d = A.dim();
  const Index N = detail::ipow(d, n + 1);
  Mat<S> t = Mat<S>::Zero(N, N);
  for (Index idx = 0; idx < N; ++idx) {
    auto a = detail::digits(idx, d, n + 1);
    int e = n, rest = 0;
    for (int k = 0; k < n; ++k) rest += A.p(a[static_cast<std::size_t>(k)]);
    e += A.p(a[static_cast<std::size_t>(n)]) * rest;
    std::vector<Index> r{a[static_cast<std::size_t>(n)]};
    for (int k = 0; k < n; ++k) r.push_back(a[static_cast<std::size_t>(k)]);
    t(detail::undigits(r, d), idx) += sign_power<S>(e);
  }
  return t;
}

/// b(a0 (x) .. (x) an) = sum_{i<n} (-1)^i (.. (x) a_i a_{i+1} (x) ..)
///   + (-1)^{n + |an|(|a0| + .. + |a_{n-1}|)} an a0 (x) a1 (x) .. (x) a_{n-1}.
template <class S>
Mat<S> hochschild_boundary(const AssocSuperAlgebra<S>& A, int n) {
  const Index d = A.dim();
  const Index N = detail::ipow(d, n + 1), M = detail::ipow(d, n);
  Mat<S> b = Mat<S>::Zero(M, N);
  for (Index idx = 0; idx < N; ++idx) {
    auto a = detail::digits(idx, d, n + 1);
    auto put = [&](std::vector<Index> f, std::size_t slot, const Vec<S>& prod, const S& sign) {
      for (Index k = 0; k < d; ++k) {
        if (is_zero(prod(k))) continue;
        f[slot] = k;
        b(detail::undigits(f, d), idx) += sign * prod(k);
      }
    };
    for (int i = 0; i < n; ++i) {
      std::vector<Index> f;
      for (int k = 0; k < i; ++k) f.push_back(a[static_cast<std::size_t>(k)]);
      f.push_back(0);
      for (int k = i + 2; k <= n; ++k) f.push_back(a[static_cast<std::size_t>(k)]);
      put(f, static_cast<std::size_t>(i), A.product(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i + 1)]), sign_power<S>(i));
    }
    int e = n, rest = 0;
    for (int k = 0; k < n; ++k) rest += A.p(a[static_cast<std::size_t>(k)]);
    e += A.p(a[static_cast<std::size_t>(n)]) * rest;
    std::vector<Index> f{0};
    for (int k = 1; k < n; ++k) f.push_back(a[static_cast<std::size_t>(k)]);
    put(f, 0, A.product(a[static_cast<std::size_t>(n)], a[0]), sign_power<S>(e));
  }
  return b;
}

template <class S>
ConnesComplex<S> connes(const AssocSuperAlgebra<S>& A, int maxN = 2) {
  if (maxN < 1) throw SizeError("the Connes complex needs maxN >= 1");
  ConnesComplex<S> c;
  SuperSpace tp = A.space();
  for (int n = 0; n <= maxN; ++n) {
    if (n > 0) tp = tensor_space(tp, A.space());
    c.tensor_spaces.push_back(tp);
    c.t.push_back(cyclic_operator(A, n));
    c.b.push_back(n == 0 ? Mat<S>() : hochschild_boundary(A, n));
    const Index N = tp.dim();
    c.classes.push_back(Subquotient<S>::quotient(Subspace<S>::image(Mat<S>(Mat<S>::Identity(N, N) - c.t.back()))));
    std::vector<BasisElement> basis;
    const auto& q = c.classes.back();
    for (Index k = 0; k < q.dim(); ++k) basis.push_back({describe_vector(tp, q.section(k)), *homogeneous_parity(tp, q.section(k))});
    c.complex.spaces.emplace_back(std::move(basis));
  }
  for (int n = 1; n <= maxN; ++n) {
    const auto& src = c.classes[static_cast<std::size_t>(n)];
    const auto& dst = c.classes[static_cast<std::size_t>(n - 1)];
    const Mat<S>& b = c.b[static_cast<std::size_t>(n)];
    for (const auto& v : src.bottom().basis())
      if (!dst.bottom().contains(Vec<S>(b * v)))
        throw ComplexInconsistent("boundary d_" + std::to_string(n) + " does not descend to coinvariants");
    c.complex.boundaries.emplace_back(c.complex.spaces[static_cast<std::size_t>(n)], c.complex.spaces[static_cast<std::size_t>(n - 1)],
                                      dst.reduce_columns(Mat<S>(b * src.section().basis_matrix())));
  }
  require_closed(c.complex);
  return c;
}

/// HC_n(A).
template <class S>
HomologyResult<S> hc(const AssocSuperAlgebra<S>& A, int n) {
  return homology_of(connes(A, std::max(2, n + 1)).complex, n);
}

/// [A, A] = span{ab - (-1)^{|a||b|} ba}.
template <class S>
Subspace<S> commutator_subspace(const AssocSuperAlgebra<S>& A) {
  EchelonBuilder<S> e(A.dim());
  for (Index i = 0; i < A.dim(); ++i)
    for (Index j = 0; j < A.dim(); ++j) {
      Vec<S> c = A.commutator(i, j);
      if (!is_zero_vector(c)) e.add(c);
    }
  return e.subspace();
}

/// I(A) in A (x)_K A: a (x) b + (-1)^{|a||b|} b (x) a and
/// ab (x) c - a (x) bc + (-1)^{|c|(|a|+|b|)} ca (x) b.
template <class S>
Subspace<S> cyclic_relations(const AssocSuperAlgebra<S>& A) {
  const Index d = A.dim();
  EchelonBuilder<S> e(d * d);
  auto u = [&](Index i) { return unit_vector<S>(d, i); };
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      Vec<S> v = kron(u(a), u(b)) + sign_power<S>(A.p(a) * A.p(b)) * kron(u(b), u(a));
      if (!is_zero_vector(v)) e.add(v);
    }
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index c = 0; c < d; ++c) {
        Vec<S> v = kron(A.product(a, b), u(c)) - kron(u(a), A.product(b, c)) +
                   sign_power<S>(A.p(c) * (A.p(a) + A.p(b))) * kron(A.product(c, a), u(b));
        if (!is_zero_vector(v)) e.add(v);
      }
  return e.subspace();
}

/// a (x) b -> ab - (-1)^{|a||b|} ba on A (x)_K A.
template <class S>
Mat<S> commutator_map(const AssocSuperAlgebra<S>& A) {
  const Index d = A.dim();
  Mat<S> m(d, d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) m.col(a * d + b) = A.commutator(a, b);
  return m;
}

/// HC_1(A) = Ker((A (x)_K A)/I(A) -> [A, A]).
template <class S>
struct HC1Model {
  Subspace<S> relations;  // I(A)
  Mat<S> commutator;      // A (x)_K A -> A
  Subquotient<S> hc1;     // Ker / I(A)
  SuperDim dim;
};

template <class S>
HC1Model<S> hc1_kernel_model(const AssocSuperAlgebra<S>& A) {
  HC1Model<S> m;
  m.relations = cyclic_relations(A);
  m.commutator = commutator_map(A);
  for (const auto& r : m.relations.basis())
    if (!is_zero_vector(Vec<S>(m.commutator * r))) throw ComplexInconsistent("commutator map does not vanish on I(A)");
  m.hc1 = Subquotient<S>(kernel(m.commutator), m.relations);
  m.dim = super_dim(tensor_space(A.space(), A.space()), m.hc1.section());
  return m;
}

/// HC_1^M(A) = (A (x)_K A) / (I(A) + span{a (x) bc - (-1)^{|b||c|} a (x) cb}).
template <class S>
struct MilnorHC1 {
  Subspace<S> relations;
  Subquotient<S> space;
  SuperDim dim;
};

template <class S>
MilnorHC1<S> milnor_hc1(const AssocSuperAlgebra<S>& A) {
  const Index d = A.dim();
  EchelonBuilder<S> e(d * d);
  auto base = cyclic_relations(A);
  for (const auto& r : base.basis()) e.add(r);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index c = 0; c < d; ++c) {
        Vec<S> v = kron(unit_vector<S>(d, a), A.commutator(b, c));
        if (!is_zero_vector(v)) e.add(v);
      }
  MilnorHC1<S> m;
  m.relations = e.subspace();
  m.space = Subquotient<S>::quotient(m.relations);
  m.dim = super_dim(tensor_space(A.space(), A.space()), m.space.section());
  return m;
}

/// V(A) = (A (x) A) / <I(A)> with [a (x) b, a' (x) b'] = [a,b] (x) [a',b'],
/// crossed A-module through mu(x (x) y) = [x, y].
template <class S>
struct VAlgebra {
  TensorProduct<S> tensor;  // A (x) A for the adjoint actions of A as a Lie superalgebra
  QuotientAlgebra<S> quotient;
  LieSuperAlgebra<S> algebra;
  CrossedModule<S> crossed;
  Mat<S> to_a;             // mu: V(A) -> A
  Subspace<S> hc1;         // Ker mu in V(A) coordinates
  bool d_inside_i = false;  // D(A, A) already lies in I(A)
  Certificate cert;

  /// Class of x (x) y in V(A).
  Vec<S> element(const Vec<S>& x, const Vec<S>& y) const { return quotient.projection.matrix * tensor.element(x, y); }
};

template <class S>
VAlgebra<S> v_algebra(const AssocSuperAlgebra<S>& A) {
  if (!A.unit()) throw NotUnital(A.name() + " has no unit");
  VAlgebra<S> v;
  auto L = as_lie(A);
  v.tensor = tensor_square(L);
  auto I = cyclic_relations(A);
  v.d_inside_i = I.contains(v.tensor.d);
  EchelonBuilder<S> j(v.tensor.algebra.dim());
  for (const auto& r : I.basis()) j.add(v.tensor.classes.reduce(r));
  auto J = j.subspace();
  if (!is_graded_ideal(v.tensor.algebra, J)) throw ComplexInconsistent("I(A) does not generate a graded ideal of A (x) A");
  v.quotient = quotient_algebra(v.tensor.algebra, J, "V(" + A.name() + ")");
  v.algebra = v.quotient.algebra;
  Mat<S> sec = v.quotient.classes.section().basis_matrix();
  for (const auto& r : J.basis())
    v.cert.require(is_zero_vector(Vec<S>(v.tensor.mu.matrix * r)), "mu does not vanish on I(A)");
  v.to_a = v.tensor.nu.matrix * sec;
  std::vector<Vec<S>> act;
  for (Index a = 0; a < L.dim(); ++a) {
    Mat<S> op = v.tensor.n_action.op(a);
    for (const auto& r : J.basis())
      if (!J.contains(Vec<S>(op * r))) {
        v.cert.fail("action of " + L.space().label(a) + " does not preserve I(A)");
        break;
      }
    for (Index k = 0; k < v.algebra.dim(); ++k) act.push_back(v.quotient.classes.reduce(Vec<S>(op * sec.col(k))));
  }
  v.crossed = CrossedModule<S>(v.algebra, L, v.to_a, Action<S>(L, v.algebra, std::move(act)));
  v.cert.merge(check_crossed(v.crossed), "(V(A), mu): ");
  v.hc1 = kernel(v.to_a);
  bool trivial_on_hc1 = true;
  for (Index a = 0; a < L.dim(); ++a)
    for (const auto& h : v.hc1.basis()) trivial_on_hc1 &= is_zero_vector(v.crossed.action.act(unit_vector<S>(L.dim(), a), h));
  v.cert.require(trivial_on_hc1, "A acts non-trivially on HC1(A)");
  // ^a(x (x) y) = a (x) [x, y]
  const Index d = A.dim();
  for (Index a = 0; a < d && !v.cert.saturated(); ++a)
    for (Index x = 0; x < d; ++x)
      for (Index y = 0; y < d; ++y) {
        Vec<S> lhs = v.crossed.action.act(unit_vector<S>(d, a), v.element(unit_vector<S>(d, x), unit_vector<S>(d, y)));
        Vec<S> rhs = v.element(unit_vector<S>(d, a), A.commutator(x, y));
        if (lhs != rhs) v.cert.fail("action of A on V(A) differs from a (x) [x, y] at " + L.space().label(a));
      }
  auto comm = commutator_subspace(A);
  v.cert.require(Subspace<S>::image(v.to_a) == comm, "image of mu is not [A, A]");
  v.cert.require(v.algebra.dim() == v.hc1.dim() + comm.dim(), "dim V(A) differs from dim HC1 + dim [A, A]");
  return v;
}

/// A/[A,A] (x) HC1 -> nh1(A,V) -> nh1(A,[A,A]) -> HC1 -> HC1^M -> [A,A]/[A,[A,A]] -> 0.
template <class S>
struct CyclicSixTerm {
  SnakeSequence<S> sequence;
  std::vector<std::pair<std::string, SuperDim>> table;
  Certificate identified;  // terms agree with the Lemma and both HC1 constructions agree
  std::optional<bool> corollary;  // set when A is perfect as a Lie superalgebra
  Certificate cert() const {
    Certificate c;
    c.merge(sequence.diagram, "diagram: ");
    c.merge(sequence.exact, "sequence: ");
    c.merge(identified, "identification: ");
    if (corollary && !*corollary) c.fail("corollary: dim nh1(A,V) + dim HC1 differs from dim H2(A)");
    return c;
  }
};

template <class S>
CyclicSixTerm<S> cyclic_sixterm(const AssocSuperAlgebra<S>& A) {
  auto v = v_algebra(A);
  const auto& L = v.crossed.p;
  CyclicSixTerm<S> out;
  out.identified.merge(v.cert, "V(A): ");
  auto hc1_sub = subalgebra(v.algebra, v.hc1, "HC1");
  std::vector<Vec<S>> zero(static_cast<std::size_t>(L.dim() * hc1_sub.algebra.dim()), Vec<S>::Zero(hc1_sub.algebra.dim()));
  auto cl = module_crossed(Supermodule<S>(L, hc1_sub.algebra, std::move(zero)));
  auto comm = commutator_subspace(A);
  auto cn = ideal_inclusion(L, comm, "[A,A]");
  Mat<S> g(comm.dim(), v.algebra.dim());
  for (Index j = 0; j < v.algebra.dim(); ++j) g.col(j) = comm.coordinates(Vec<S>(v.to_a.col(j)));
  out.sequence = nh_sequence(L, cl, v.crossed, cn, hc1_sub.inclusion, g);
  out.sequence.names = {"A/[A,A]⊗HC1", "nh1(A,V(A))", "nh1(A,[A,A])", "HC1", "HC1^M", "[A,A]/[A,[A,A]]"};
  if (!out.sequence.diagram.ok()) return out;
  const auto& d = out.sequence.dims;
  for (std::size_t k = 0; k < d.size(); ++k) out.table.push_back({out.sequence.names[k], d[k]});

  auto& c = out.identified;
  auto model = hc1_kernel_model(A);
  auto connes_hc1 = hc(A, 1).dim;
  c.require(model.dim == connes_hc1, "kernel model HC1 " + model.dim.str() + " differs from Connes HC1 " + connes_hc1.str());
  SuperDim h = super_dim(v.algebra.space(), v.hc1);
  c.require(h == model.dim, "Ker mu in V(A) differs from the kernel model of HC1");
  SuperDim ab{super_dim(A.space(), Subspace<S>::full(A.dim())).even - super_dim(A.space(), comm).even,
              super_dim(A.space(), Subspace<S>::full(A.dim())).odd - super_dim(A.space(), comm).odd};
  SuperDim tensor{ab.even * h.even + ab.odd * h.odd, ab.even * h.odd + ab.odd * h.even};
  c.require(d[0] == tensor, "nh1(A, HC1) differs from A/[A,A] (x) HC1");
  c.require(d[3] == h, "nh0(A, HC1) differs from HC1");
  c.require(d[4] == milnor_hc1(A).dim, "nh0(A, V(A)) differs from HC1^M");
  auto acomm = bracket_span(L, Subspace<S>::full(L.dim()), comm);
  SuperDim q{super_dim(A.space(), comm).even - super_dim(A.space(), acomm).even,
             super_dim(A.space(), comm).odd - super_dim(A.space(), acomm).odd};
  c.require(d[5] == q, "nh0(A, [A,A]) differs from [A,A]/[A,[A,A]]");
  if (series(L).perfect) {
    auto h2 = homology(L, 2).dim;
    out.corollary = d[1].even + h.even == h2.even && d[1].odd + h.odd == h2.odd;
  }
  return out;
}

}  // namespace superlie

#endif
