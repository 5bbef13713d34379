#ifndef SUPERLIE_TENSOR_HPP
#define SUPERLIE_TENSOR_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/action.hpp"

namespace superlie {

/// M (x) N = (M (x)_K N) / D(M, N) for compatible actions.
template <class S>
struct TensorProduct {
  LieSuperAlgebra<S> m, n;
  Action<S> act_mn;  // M on N
  Action<S> act_nm;  // N on M
  SuperSpace full;   // M (x)_K N, basis m_i (x) n_j at index i * n.dim() + j
  Subspace<S> d;     // D(M, N)
  Subquotient<S> classes;
  LieSuperAlgebra<S> algebra;
  Mat<S> embed;   // algebra.dim x full.dim: e_i (x) e_j -> its class
  Mat<S> mu_full;  // M.dim x full.dim
  Mat<S> nu_full;  // N.dim x full.dim
  GradedMap<S> mu, nu;
  Action<S> m_action, n_action;  // M and N acting on the algebra
  std::vector<Mat<S>> m_ops_full, n_ops_full;

  Index index(Index i, Index j) const { return i * n.dim() + j; }
  /// Class of x (x) y for x in M, y in N.
  Vec<S> element(const Vec<S>& x, const Vec<S>& y) const { return embed * kron(x, y); }
  Vec<S> element(Index i, Index j) const { return embed.col(index(i, j)); }
  Mat<S> section_matrix() const { return classes.section().basis_matrix(); }
};

namespace detail {

template <class S>
bool parity_is(const SuperSpace& sp, const Vec<S>& v, int p) {
  auto h = homogeneous_parity(sp, v);
  return h && (is_zero_vector(v) || bit(*h) == p);
}

/// For a pair class (alpha, beta): a basis of span{(^n m, ^m n)} inside
/// M (+) N over basis elements m of parity alpha and n of parity beta. Every
/// generator of D(M, N) that involves a pair (m, n) depends on it linearly
/// through this vector, so these bases may replace the basis pairs.
template <class S>
struct PairClass {
  int alpha = 0, beta = 0;
  std::vector<Vec<S>> a;  // ^n m in M
  std::vector<Vec<S>> b;  // ^m n in N
};

template <class S>
std::array<PairClass<S>, 4> pair_classes(const LieSuperAlgebra<S>& M, const LieSuperAlgebra<S>& N, const Action<S>& mn,
                                         const Action<S>& nm) {
  std::array<PairClass<S>, 4> out;
  const Index dm = M.dim(), dn = N.dim();
  for (int c = 0; c < 4; ++c) {
    int al = c >> 1, be = c & 1;
    EchelonBuilder<S> e(dm + dn);
    for (Index i = 0; i < dm; ++i) {
      if (M.p(i) != al) continue;
      for (Index j = 0; j < dn; ++j) {
        if (N.p(j) != be) continue;
        Vec<S> w(dm + dn);
        w.head(dm) = nm.act(j, i);
        w.tail(dn) = mn.act(i, j);
        e.add(w);
      }
    }
    out[static_cast<std::size_t>(c)].alpha = al;
    out[static_cast<std::size_t>(c)].beta = be;
    for (const auto& w : e.rows()) {
      out[static_cast<std::size_t>(c)].a.push_back(w.head(dm));
      out[static_cast<std::size_t>(c)].b.push_back(w.tail(dn));
    }
  }
  return out;
}

}  // namespace detail

/// Spans D(M, N) from the generator families (i)-(v):
///  (i)   [m,m'] (x) n - m (x) ^{m'}n + (-1)^{|m||m'|} m' (x) ^m n
///  (ii)  m (x) [n,n'] - (-1)^{|n'|(|m|+|n|)} ^{n'}m (x) n + (-1)^{|m||n|} ^n m (x) n'
///  (iii) ^n m (x) ^m n with |m| = |n|
///  (iv)  (-1)^{|m||n|} ^n m (x) ^{m'}n' + (-1)^{(|m|+|n|)(|m'|+|n'|)+|m'||n'|} ^{n'}m' (x) ^m n
///  (v)   cyclic sum over the pairs of
///        (-1)^{(|m|+|n|)(|m''|+|n''|)+|m||n|+|m'||n'|} [^n m, ^{n'}m'] (x) ^{m''}n''
/// Family (iii) is quadratic in m and in n, so its span is that of the
/// polarised sums; families (iv), (v) are linear in each pair's (^n m, ^m n).
template <class S>
Subspace<S> d_subspace(const LieSuperAlgebra<S>& M, const LieSuperAlgebra<S>& N, const Action<S>& mn, const Action<S>& nm) {
  const Index dm = M.dim(), dn = N.dim(), df = dm * dn;
  EchelonBuilder<S> e(df);
  auto add = [&](const Vec<S>& v) {
    if (!e.full() && !is_zero_vector(v)) e.add(v);
  };
  auto um = [&](Index i) { return unit_vector<S>(dm, i); };
  auto un = [&](Index j) { return unit_vector<S>(dn, j); };

  for (Index i = 0; i < dm; ++i)
    for (Index k = 0; k < dm; ++k)
      for (Index j = 0; j < dn; ++j)
        add(Vec<S>(kron(M.bracket(i, k), un(j)) - kron(um(i), mn.act(k, j)) +
                   sign_power<S>(M.p(i) * M.p(k)) * kron(um(k), mn.act(i, j))));

  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index l = 0; l < dn; ++l)
        add(Vec<S>(kron(um(i), N.bracket(j, l)) - sign_power<S>(N.p(l) * (M.p(i) + N.p(j))) * kron(nm.act(l, i), un(j)) +
                   sign_power<S>(M.p(i) * N.p(j)) * kron(nm.act(j, i), un(l))));

  for (Index a = 0; a < dm; ++a)
    for (Index b = a; b < dm; ++b) {
      if (M.p(a) != M.p(b)) continue;
      for (Index c = 0; c < dn; ++c)
        for (Index d = c; d < dn; ++d) {
          if (N.p(c) != N.p(d) || N.p(c) != M.p(a)) continue;
          Vec<S> v = Vec<S>::Zero(df);
          std::vector<std::pair<Index, Index>> ms{{a, b}}, ns{{c, d}};
          if (a != b) ms.push_back({b, a});
          if (c != d) ns.push_back({d, c});
          for (auto [m1, m2] : ms)
            for (auto [n1, n2] : ns) v += kron(nm.act(n1, m1), mn.act(m2, n2));
          add(v);
        }
    }

  auto pcs = detail::pair_classes(M, N, mn, nm);
  for (const auto& c1 : pcs)
    for (const auto& c2 : pcs) {
      S s1 = sign_power<S>(c1.alpha * c1.beta);
      S s2 = sign_power<S>((c1.alpha + c1.beta) * (c2.alpha + c2.beta) + c2.alpha * c2.beta);
      for (std::size_t x = 0; x < c1.a.size(); ++x)
        for (std::size_t y = 0; y < c2.a.size(); ++y)
          add(Vec<S>(s1 * kron(c1.a[x], c2.b[y]) + s2 * kron(c2.a[y], c1.b[x])));
    }

  auto sgn5 = [](const detail::PairClass<S>& p, const detail::PairClass<S>& q, const detail::PairClass<S>& r) {
    return sign_power<S>((p.alpha + p.beta) * (r.alpha + r.beta) + p.alpha * p.beta + q.alpha * q.beta);
  };
  for (const auto& c1 : pcs)
    for (const auto& c2 : pcs)
      for (const auto& c3 : pcs) {
        if (c1.a.empty() || c2.a.empty() || c3.a.empty()) continue;
        S s123 = sgn5(c1, c2, c3), s231 = sgn5(c2, c3, c1), s312 = sgn5(c3, c1, c2);
        for (std::size_t x = 0; x < c1.a.size(); ++x)
          for (std::size_t y = 0; y < c2.a.size(); ++y) {
            Vec<S> b12 = M.bracket(c1.a[x], c2.a[y]);
            for (std::size_t z = 0; z < c3.a.size(); ++z) {
              if (e.full()) return e.subspace();
              Vec<S> v = s123 * kron(b12, c3.b[z]);
              v += s231 * kron(Vec<S>(M.bracket(c2.a[y], c3.a[z])), c1.b[x]);
              v += s312 * kron(Vec<S>(M.bracket(c3.a[z], c1.a[x])), c2.b[y]);
              add(v);
            }
          }
      }
  return e.subspace();
}

/// mu(m (x) n) = -(-1)^{|m||n|} ^n m on M (x)_K N.
template <class S>
Mat<S> mu_on_full(const LieSuperAlgebra<S>& M, const LieSuperAlgebra<S>& N, const Action<S>& nm) {
  Mat<S> out(M.dim(), M.dim() * N.dim());
  for (Index i = 0; i < M.dim(); ++i)
    for (Index j = 0; j < N.dim(); ++j) out.col(i * N.dim() + j) = (-sign_power<S>(M.p(i) * N.p(j))) * nm.act(j, i);
  return out;
}

/// nu(m (x) n) = ^m n on M (x)_K N.
template <class S>
Mat<S> nu_on_full(const LieSuperAlgebra<S>& M, const LieSuperAlgebra<S>& N, const Action<S>& mn) {
  Mat<S> out(N.dim(), M.dim() * N.dim());
  for (Index i = 0; i < M.dim(); ++i)
    for (Index j = 0; j < N.dim(); ++j) out.col(i * N.dim() + j) = mn.act(i, j);
  return out;
}

/// The bracket lifted to M (x)_K N: [m (x) n, m' (x) n'] = -(-1)^{|m||n|} ^n m (x) ^{m'}n',
/// i.e. [x, y] = mu(x) (x) nu(y).
template <class S>
Vec<S> full_bracket(const Mat<S>& mu_full, const Mat<S>& nu_full, const Vec<S>& x, const Vec<S>& y) {
  return kron(Vec<S>(mu_full * x), Vec<S>(nu_full * y));
}

/// Checks every certificate the construction relies on: the bracket, mu, nu
/// and both induced actions preserve or kill D(M, N) as they must.
template <class S>
Certificate well_definedness(const TensorProduct<S>& t) {
  Certificate cert;
  const Index df = t.full.dim();
  for (const auto& g : t.d.basis()) {
    if (!is_zero_vector(Vec<S>(t.mu_full * g))) cert.fail("mu does not vanish on D: " + describe_vector(t.full, g));
    if (!is_zero_vector(Vec<S>(t.nu_full * g))) cert.fail("nu does not vanish on D: " + describe_vector(t.full, g));
    for (Index k = 0; k < df && !cert.saturated(); ++k) {
      Vec<S> e = unit_vector<S>(df, k);
      if (!t.d.contains(full_bracket(t.mu_full, t.nu_full, g, e)) || !t.d.contains(full_bracket(t.mu_full, t.nu_full, e, g))) {
        cert.fail("bracket does not annihilate D at (" + describe_vector(t.full, g) + ", " + t.full.label(k) + ")");
        break;
      }
    }
    for (const auto& op : t.m_ops_full)
      if (!t.d.contains(Vec<S>(op * g))) {
        cert.fail("action of M does not preserve D at " + describe_vector(t.full, g));
        break;
      }
    for (const auto& op : t.n_ops_full)
      if (!t.d.contains(Vec<S>(op * g))) {
        cert.fail("action of N does not preserve D at " + describe_vector(t.full, g));
        break;
      }
    if (cert.saturated()) break;
  }
  return cert;
}

/// M (x) N for compatible actions act_mn (M on N) and act_nm (N on M).
template <class S>
TensorProduct<S> nonabelian_tensor(const LieSuperAlgebra<S>& M, const LieSuperAlgebra<S>& N, const Action<S>& act_mn,
                                   const Action<S>& act_nm) {
  for (const auto* a : {&act_mn, &act_nm}) {
    auto c = check_action(*a);
    if (!c.ok()) throw ActionInvalid(c.violations.front());
  }
  if (!(act_mn.actor().space() == M.space()) || !(act_mn.target().space() == N.space()))
    throw IncompatibleActions("first action must be M acting on N");
  auto comp = check_compatible(act_mn, act_nm);
  if (!comp.ok()) throw IncompatibleActions(comp.violations.front());

  TensorProduct<S> t;
  t.m = M;
  t.n = N;
  t.act_mn = act_mn;
  t.act_nm = act_nm;
  t.full = tensor_space(M.space(), N.space());
  t.d = d_subspace(M, N, act_mn, act_nm);
  t.mu_full = mu_on_full(M, N, act_nm);
  t.nu_full = nu_on_full(M, N, act_mn);
  const Index dm = M.dim(), dn = N.dim(), df = dm * dn;

  // ^{m'}(m (x) n) = [m', m] (x) n + (-1)^{|m||m'|} m (x) ^{m'}n
  for (Index k = 0; k < dm; ++k) {
    Mat<S> op(df, df);
    for (Index i = 0; i < dm; ++i)
      for (Index j = 0; j < dn; ++j)
        op.col(i * dn + j) = kron(M.bracket(k, i), unit_vector<S>(dn, j)) +
                             sign_power<S>(M.p(i) * M.p(k)) * kron(unit_vector<S>(dm, i), act_mn.act(k, j));
    t.m_ops_full.push_back(std::move(op));
  }
  // ^{n'}(m (x) n) = ^{n'}m (x) n + (-1)^{|m||n'|} m (x) [n', n]
  for (Index l = 0; l < dn; ++l) {
    Mat<S> op(df, df);
    for (Index i = 0; i < dm; ++i)
      for (Index j = 0; j < dn; ++j)
        op.col(i * dn + j) = kron(act_nm.act(l, i), unit_vector<S>(dn, j)) +
                             sign_power<S>(M.p(i) * N.p(l)) * kron(unit_vector<S>(dm, i), N.bracket(l, j));
    t.n_ops_full.push_back(std::move(op));
  }

  auto cert = well_definedness(t);
  if (!cert.ok()) throw BracketNotWellDefined(cert.violations.front());

  t.classes = Subquotient<S>::quotient(t.d);
  const Index dq = t.classes.dim();
  std::vector<BasisElement> basis;
  for (Index k = 0; k < dq; ++k)
    basis.push_back({describe_vector(t.full, t.classes.section(k)), *homogeneous_parity(t.full, t.classes.section(k))});
  SuperSpace qs(std::move(basis));
  std::vector<Vec<S>> table;
  for (Index a = 0; a < dq; ++a)
    for (Index b = 0; b < dq; ++b)
      table.push_back(t.classes.reduce(full_bracket(t.mu_full, t.nu_full, t.classes.section(a), t.classes.section(b))));
  t.algebra = LieSuperAlgebra<S>(qs, std::move(table), M.name() + "⊗" + N.name());
  t.embed = t.classes.reduce_columns(Mat<S>::Identity(df, df));
  Mat<S> sec = t.section_matrix();
  t.mu = GradedMap<S>(qs, M.space(), t.mu_full * sec);
  t.nu = GradedMap<S>(qs, N.space(), t.nu_full * sec);

  std::vector<Vec<S>> mt, nt;
  for (Index k = 0; k < dm; ++k)
    for (Index c = 0; c < dq; ++c) mt.push_back(t.classes.reduce(t.m_ops_full[static_cast<std::size_t>(k)] * t.classes.section(c)));
  for (Index l = 0; l < dn; ++l)
    for (Index c = 0; c < dq; ++c) nt.push_back(t.classes.reduce(t.n_ops_full[static_cast<std::size_t>(l)] * t.classes.section(c)));
  t.m_action = Action<S>(M, t.algebra, std::move(mt));
  t.n_action = Action<S>(N, t.algebra, std::move(nt));
  return t;
}

/// M (x) M for the adjoint actions.
template <class S>
TensorProduct<S> tensor_square(const LieSuperAlgebra<S>& M) {
  auto ad = Action<S>::adjoint(M);
  return nonabelian_tensor(M, M, ad, ad);
}

/// M (x) N for two crossed modules over a common P, with the actions via P.
template <class S>
TensorProduct<S> tensor_of_crossed(const CrossedModule<S>& cm, const CrossedModule<S>& cn) {
  auto [mn, nm] = induced_actions(cm, cn);
  return nonabelian_tensor(cm.m, cn.m, mn, nm);
}

/// The crossed modules (M (x) N, mu) over M and (M (x) N, nu) over N.
template <class S>
CrossedModule<S> mu_crossed(const TensorProduct<S>& t) {
  return CrossedModule<S>(t.algebra, t.m, t.mu.matrix, t.m_action);
}
template <class S>
CrossedModule<S> nu_crossed(const TensorProduct<S>& t) {
  return CrossedModule<S>(t.algebra, t.n, t.nu.matrix, t.n_action);
}

/// Full certificate of a constructed tensor product: well-definedness, the
/// Lie axioms, and the crossed modules (M (x) N, mu) and (M (x) N, nu).
template <class S>
Certificate certify_tensor(const TensorProduct<S>& t) {
  Certificate cert;
  cert.merge(well_definedness(t));
  cert.merge(check_lie_axioms(t.algebra), "tensor algebra: ");
  cert.merge(check_crossed(mu_crossed(t)), "mu: ");
  cert.merge(check_crossed(nu_crossed(t)), "nu: ");
  return cert;
}

/// Matrix of phi (x) psi: M (x) N -> M' (x) N' on classes. The pair must
/// preserve the actions; D must map into D'.
template <class S>
Mat<S> tensor_map(const TensorProduct<S>& src, const TensorProduct<S>& dst, const Mat<S>& phi, const Mat<S>& psi) {
  if (phi.rows() != dst.m.dim() || phi.cols() != src.m.dim() || psi.rows() != dst.n.dim() || psi.cols() != src.n.dim())
    throw AmbientMismatch("tensor_map factors have the wrong shape");
  Mat<S> f = kron(phi, psi);
  for (const auto& g : src.d.basis())
    if (!dst.d.contains(Vec<S>(f * g))) throw ActionInvalid("map pair does not carry D(M, N) into D(M', N')");
  return dst.classes.reduce_columns(f * src.section_matrix());
}

/// m (x) n -> -(-1)^{|m||n|} n (x) m from M (x) N to N (x) M.
template <class S>
GradedMap<S> tensor_symmetry_iso(const TensorProduct<S>& mn, const TensorProduct<S>& nm) {
  const Index dm = mn.m.dim(), dn = mn.n.dim();
  if (!(nm.m.space() == mn.n.space()) || !(nm.n.space() == mn.m.space()))
    throw AmbientMismatch("tensor products are not built on swapped factors");
  Mat<S> swap = Mat<S>::Zero(dm * dn, dm * dn);
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) swap(j * dm + i, i * dn + j) = -sign_power<S>(mn.m.p(i) * mn.n.p(j));
  for (const auto& g : mn.d.basis())
    if (!nm.d.contains(Vec<S>(swap * g))) throw BracketNotWellDefined("symmetry does not carry D(M, N) into D(N, M)");
  return GradedMap<S>(mn.algebra.space(), nm.algebra.space(), nm.classes.reduce_columns(swap * mn.section_matrix()));
}

/// M^ab (x)_K N^ab as a superspace.
template <class S>
SuperSpace trivial_action_tensor(const LieSuperAlgebra<S>& M, const LieSuperAlgebra<S>& N) {
  return tensor_space(abelianization(M).space(), abelianization(N).space());
}

/// M (x) N with trivial actions.
template <class S>
TensorProduct<S> trivial_tensor(const LieSuperAlgebra<S>& M, const LieSuperAlgebra<S>& N) {
  return nonabelian_tensor(M, N, Action<S>::trivial(M, N), Action<S>::trivial(N, M));
}

/// Exactness of (K (x) M) x| (M (x) K) -> M (x) M -> (M/K) (x) (M/K) -> 0 for
/// a graded ideal K of M, all actions by the bracket. Also certifies that
/// the semidirect product (M (x) K acting on K (x) M through nu) is a Lie
/// superalgebra and that alpha is a homomorphism.
template <class S>
Certificate right_exactness_check(const LieSuperAlgebra<S>& M, const Subspace<S>& K) {
  if (!is_graded_ideal(M, K)) throw NotAnIdeal("K is not a graded ideal of M");
  Certificate cert;
  auto ks = subalgebra(M, K, "K");
  Subalgebra<S> whole{M, Subspace<S>::full(M.dim()), Mat<S>::Identity(M.dim(), M.dim())};
  auto k_on_m = bracket_action(M, ks, whole);
  auto m_on_k = bracket_action(M, whole, ks);
  auto tKM = nonabelian_tensor(ks.algebra, M, k_on_m, m_on_k);
  auto tMK = nonabelian_tensor(M, ks.algebra, m_on_k, k_on_m);
  auto tMM = tensor_square(M);
  auto q = quotient_algebra(M, K, "M/K");
  auto tQQ = tensor_square(q.algebra);
  const Mat<S>& incl = ks.inclusion;
  Mat<S> id = Mat<S>::Identity(M.dim(), M.dim());
  Mat<S> a1 = tensor_map(tKM, tMM, incl, id);
  Mat<S> a2 = tensor_map(tMK, tMM, id, incl);
  Mat<S> pp = tensor_map(tMM, tQQ, q.projection.matrix, q.projection.matrix);

  // M (x) K acts on K (x) M through nu: M (x) K -> K and the action of the second factor.
  std::vector<Vec<S>> table;
  for (Index y = 0; y < tMK.algebra.dim(); ++y) {
    Vec<S> m = incl * tMK.nu.matrix.col(y);
    Mat<S> op = tKM.n_action.op(m);
    for (Index x = 0; x < tKM.algebra.dim(); ++x) table.push_back(op.col(x));
  }
  Action<S> act(tMK.algebra, tKM.algebra, std::move(table));
  auto ac = check_action(act);
  cert.merge(ac, "semidirect action: ");
  if (ac.ok()) {
    auto sd = semidirect(act);
    cert.merge(check_lie_axioms(sd), "semidirect product: ");
    Mat<S> alpha(tMM.algebra.dim(), sd.dim());
    alpha << a1, a2;
    cert.merge(check_homomorphism(sd, tMM.algebra, alpha), "alpha: ");
  }
  Mat<S> a(tMM.algebra.dim(), a1.cols() + a2.cols());
  a << a1, a2;
  auto im = Subspace<S>::image(a);
  auto ker = kernel(pp);
  if (im != ker)
    cert.fail("not exact at M (x) M: dim Im = " + std::to_string(im.dim()) + ", dim Ker = " + std::to_string(ker.dim()));
  if (rank(pp) != tQQ.algebra.dim()) cert.fail("M (x) M -> (M/K) (x) (M/K) is not surjective");
  cert.merge(check_homomorphism(tMM.algebra, tQQ.algebra, pp), "phi (x) phi: ");
  return cert;
}

/// Classes, derived lengths and Engel degrees of [M,N]^M, M (x) N, [M,N]^N
/// with the inequalities they must satisfy.
struct BoundsReport {
  std::optional<int> class_im_mu, class_tensor, class_im_nu;
  std::optional<int> length_im_mu, length_tensor, length_im_nu;
  std::optional<int> engel_im_mu;
  bool tensor_engel_ok = true, im_nu_engel_ok = true;
  Certificate cert;
};

template <class S>
BoundsReport nilpotency_bounds_check(const TensorProduct<S>& t) {
  BoundsReport r;
  auto im_mu = subalgebra(t.m, Subspace<S>::image(t.mu.matrix)).algebra;
  auto im_nu = subalgebra(t.n, Subspace<S>::image(t.nu.matrix)).algebra;
  auto s_mu = series(im_mu), s_t = series(t.algebra), s_nu = series(im_nu);
  r.class_im_mu = s_mu.nilpotency_class;
  r.class_tensor = s_t.nilpotency_class;
  r.class_im_nu = s_nu.nilpotency_class;
  r.length_im_mu = s_mu.derived_length;
  r.length_tensor = s_t.derived_length;
  r.length_im_nu = s_nu.derived_length;
  auto show = [](std::optional<int> x) { return x ? std::to_string(*x) : std::string("inf"); };
  if (r.class_im_mu) {
    int c = *r.class_im_mu;
    r.cert.require(r.class_tensor && c <= *r.class_tensor && *r.class_tensor <= c + 1,
                   "class bound fails: class([M,N]^M) = " + show(r.class_im_mu) + ", class(M (x) N) = " + show(r.class_tensor));
    r.cert.require(r.class_im_nu && *r.class_im_nu <= c + 1,
                   "class bound fails: class([M,N]^N) = " + show(r.class_im_nu));
  }
  if (r.length_im_mu) {
    int l = *r.length_im_mu;
    r.cert.require(r.length_tensor && l <= *r.length_tensor && *r.length_tensor <= l + 1,
                   "length bound fails: l([M,N]^M) = " + show(r.length_im_mu) + ", l(M (x) N) = " + show(r.length_tensor));
    r.cert.require(r.length_im_nu && *r.length_im_nu <= l + 1, "length bound fails: l([M,N]^N) = " + show(r.length_im_nu));
  }
  r.engel_im_mu = engel_degree(im_mu);
  if (r.engel_im_mu) {
    r.tensor_engel_ok = is_engel(t.algebra, *r.engel_im_mu + 1);
    r.im_nu_engel_ok = is_engel(im_nu, *r.engel_im_mu + 1);
    r.cert.require(r.tensor_engel_ok, "M (x) N is not (n+1)-Engel for n = " + std::to_string(*r.engel_im_mu));
    r.cert.require(r.im_nu_engel_ok, "[M,N]^N is not (n+1)-Engel for n = " + std::to_string(*r.engel_im_mu));
  }
  return r;
}

/// M ^ N = (M (x) N) / (M [] N) for crossed modules over a common P.
template <class S>
struct ExteriorProduct {
  TensorProduct<S> tensor;
  Subspace<S> square;     // M [] N inside the coordinates of tensor.algebra
  QuotientAlgebra<S> quotient;
  const LieSuperAlgebra<S>& algebra() const { return quotient.algebra; }
  /// Class of e_i (x) e_j in M ^ N.
  Vec<S> element(Index i, Index j) const { return quotient.projection.matrix * tensor.element(i, j); }
  /// Matrices of the maps M ^ N -> M and M ^ N -> N induced by mu and nu.
  Mat<S> mu() const { return tensor.mu.matrix * quotient.classes.section().basis_matrix(); }
  Mat<S> nu() const { return tensor.nu.matrix * quotient.classes.section().basis_matrix(); }
};

/// Generators of M [] N in M (x)_K N:
///  (a) m (x) n + (-1)^{|m'||n'|} m' (x) n' with d(m) = d'(n'), d(m') = d'(n),
///  (b) m0 (x) n0 with m0, n0 even and d(m0) = d'(n0), polarised.
template <class S>
Subspace<S> square_generators(const CrossedModule<S>& cm, const CrossedModule<S>& cn) {
  const auto& M = cm.m;
  const auto& N = cn.m;
  const Index dm = M.dim(), dn = N.dim();
  // X_{alpha,beta} = {(m, n) : m in M_alpha, n in N_beta, d m = d' n}
  std::array<std::vector<std::pair<Vec<S>, Vec<S>>>, 4> X;
  Mat<S> stacked(cm.p.dim(), dm + dn);
  stacked << cm.boundary, -cn.boundary;
  for (int c = 0; c < 4; ++c) {
    int al = c >> 1, be = c & 1;
    EchelonBuilder<S> e(dm + dn);
    Mat<S> restricted = stacked;
    for (Index i = 0; i < dm; ++i)
      if (M.p(i) != al) restricted.col(i).setZero();
    for (Index j = 0; j < dn; ++j)
      if (N.p(j) != be) restricted.col(dm + j).setZero();
    auto ker = kernel(restricted);
    for (const auto& v : ker.basis()) {
      Vec<S> w = v;
      for (Index i = 0; i < dm; ++i)
        if (M.p(i) != al) w(i) = S(0);
      for (Index j = 0; j < dn; ++j)
        if (N.p(j) != be) w(dm + j) = S(0);
      e.add(w);
    }
    for (const auto& w : e.rows()) X[static_cast<std::size_t>(c)].push_back({w.head(dm), w.tail(dn)});
  }
  EchelonBuilder<S> g(dm * dn);
  for (int c1 = 0; c1 < 4; ++c1)
    for (int c2 = 0; c2 < 4; ++c2)
      for (const auto& [m1, n1] : X[static_cast<std::size_t>(c1)])
        for (const auto& [m2, n2] : X[static_cast<std::size_t>(c2)]) {
          // x1 = (m, n'), x2 = (m', n): m (x) n + (-1)^{|m'||n'|} m' (x) n'
          Vec<S> v = kron(m1, n2) + sign_power<S>((c2 >> 1) * (c1 & 1)) * kron(m2, n1);
          if (!is_zero_vector(v)) g.add(v);
        }
  const auto& X00 = X[0];
  for (std::size_t a = 0; a < X00.size(); ++a)
    for (std::size_t b = a; b < X00.size(); ++b) {
      Vec<S> v = kron(X00[a].first, X00[b].second) + kron(X00[b].first, X00[a].second);
      if (!is_zero_vector(v)) g.add(v);
    }
  return g.subspace();
}

template <class S>
ExteriorProduct<S> nonabelian_exterior(const TensorProduct<S>& t, const CrossedModule<S>& cm, const CrossedModule<S>& cn) {
  if (!(cm.m.space() == t.m.space()) || !(cn.m.space() == t.n.space()))
    throw CrossedModuleMismatch("crossed modules do not match the tensor factors");
  auto [mn, nm] = induced_actions(cm, cn);
  for (Index i = 0; i < t.m.dim(); ++i)
    for (Index j = 0; j < t.n.dim(); ++j)
      if (mn.act(i, j) != t.act_mn.act(i, j) || nm.act(j, i) != t.act_nm.act(j, i))
        throw CrossedModuleMismatch("tensor product was not built from the actions via P");
  auto gens = square_generators(cm, cn);
  EchelonBuilder<S> e(t.algebra.dim());
  for (const auto& g : gens.basis()) e.add(t.classes.reduce(g));
  ExteriorProduct<S> x;
  x.tensor = t;
  x.square = e.subspace();
  if (bracket_span(t.algebra, Subspace<S>::full(t.algebra.dim()), x.square).dim() != 0)
    throw BracketNotWellDefined("M [] N is not central in M (x) N");
  std::string name = t.m.name() + "∧" + t.n.name();
  x.quotient = quotient_algebra(t.algebra, x.square, name);
  return x;
}

/// P ^ P for the identity crossed module.
template <class S>
ExteriorProduct<S> exterior_square(const LieSuperAlgebra<S>& P) {
  auto id = identity_crossed(P);
  return nonabelian_exterior(tensor_square(P), id, id);
}

/// Matrix of the map M ^ N -> M' ^ N' induced by (phi, psi).
template <class S>
Mat<S> exterior_map(const ExteriorProduct<S>& src, const ExteriorProduct<S>& dst, const Mat<S>& phi, const Mat<S>& psi) {
  Mat<S> f = tensor_map(src.tensor, dst.tensor, phi, psi);
  for (const auto& v : src.square.basis())
    if (!dst.square.contains(Vec<S>(f * v))) throw ActionInvalid("map pair does not carry M [] N into M' [] N'");
  return dst.quotient.projection.matrix * f * src.quotient.classes.section().basis_matrix();
}

/// u: U -> P with Ker u central.
template <class S>
struct CentralExtension {
  LieSuperAlgebra<S> total;
  LieSuperAlgebra<S> base;
  GradedMap<S> proj;
  SuperDim kernel_dim;
  Certificate cert;
};

/// u: P (x) P -> P, p (x) p' -> [p, p'], for perfect P.
template <class S>
CentralExtension<S> uce(const LieSuperAlgebra<S>& P) {
  if (!series(P).perfect) throw NotPerfect(P.name() + " is not perfect");
  auto t = tensor_square(P);
  CentralExtension<S> c;
  c.total = t.algebra;
  c.base = P;
  c.proj = t.nu;
  auto ker = kernel(t.nu.matrix);
  c.kernel_dim = super_dim(t.algebra.space(), ker);
  c.cert.require(rank(t.nu.matrix) == P.dim(), "u is not surjective");
  c.cert.require(centre(t.algebra).contains(ker), "kernel of u is not central");
  c.cert.require(series(t.algebra).perfect, "P (x) P is not perfect");
  c.cert.merge(check_homomorphism(t.algebra, P, t.nu.matrix), "u: ");
  return c;
}

}  // namespace superlie

#endif
