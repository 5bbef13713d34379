#ifndef SUPERLIE_ACTION_HPP
#define SUPERLIE_ACTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "superlie/lie.hpp"

namespace superlie {

/// Even bilinear action of `actor` P on `target` M; entry (i, j) holds the
/// coordinates of ^{p_i} m_j in M.
template <class S>
class Action {
public:
  Action() = default;
  Action(LieSuperAlgebra<S> actor, LieSuperAlgebra<S> target, std::vector<Vec<S>> table)
      : actor_(std::move(actor)), target_(std::move(target)), table_(std::move(table)) {
    if (static_cast<Index>(table_.size()) != actor_.dim() * target_.dim())
      throw std::invalid_argument("action table has the wrong size");
    for (const auto& v : table_)
      if (v.size() != target_.dim()) throw std::invalid_argument("action value has the wrong length");
  }

  static Action trivial(LieSuperAlgebra<S> actor, LieSuperAlgebra<S> target) {
    std::size_t n = static_cast<std::size_t>(actor.dim() * target.dim());
    Index d = target.dim();
    return Action(std::move(actor), std::move(target), std::vector<Vec<S>>(n, Vec<S>::Zero(d)));
  }
  /// L acting on itself by the bracket.
  static Action adjoint(const LieSuperAlgebra<S>& L) {
    std::vector<Vec<S>> t;
    for (Index i = 0; i < L.dim(); ++i)
      for (Index j = 0; j < L.dim(); ++j) t.push_back(L.bracket(i, j));
    return Action(L, L, std::move(t));
  }

  const LieSuperAlgebra<S>& actor() const { return actor_; }
  const LieSuperAlgebra<S>& target() const { return target_; }

  const Vec<S>& act(Index i, Index j) const { return table_[static_cast<std::size_t>(i * target_.dim() + j)]; }
  Vec<S> act(const Vec<S>& p, const Vec<S>& m) const {
    Vec<S> out = Vec<S>::Zero(target_.dim());
    for (Index i = 0; i < p.size(); ++i) {
      if (is_zero(p(i))) continue;
      for (Index j = 0; j < m.size(); ++j)
        if (!is_zero(m(j))) axpy(out, S(p(i) * m(j)), act(i, j));
    }
    return out;
  }
  /// Matrix of m -> ^{p_i} m.
  Mat<S> op(Index i) const {
    Mat<S> o(target_.dim(), target_.dim());
    for (Index j = 0; j < target_.dim(); ++j) o.col(j) = act(i, j);
    return o;
  }
  Mat<S> op(const Vec<S>& p) const {
    Mat<S> o = Mat<S>::Zero(target_.dim(), target_.dim());
    for (Index i = 0; i < p.size(); ++i)
      if (!is_zero(p(i))) o += p(i) * op(i);
    return o;
  }
  bool is_trivial() const {
    for (const auto& v : table_)
      if (!is_zero_vector(v)) return false;
    return true;
  }

private:
  LieSuperAlgebra<S> actor_, target_;
  std::vector<Vec<S>> table_;
};

/// The action of A on T induced by the bracket of an ambient L, where A
/// and T are subalgebras of L with [A, T] inside T.
template <class S>
Action<S> bracket_action(const LieSuperAlgebra<S>& L, const Subalgebra<S>& A, const Subalgebra<S>& T) {
  std::vector<Vec<S>> t;
  for (const auto& a : A.subspace.basis())
    for (const auto& x : T.subspace.basis()) {
      Vec<S> b = L.bracket(a, x);
      if (!T.subspace.contains(b)) throw ActionInvalid("bracket does not preserve the target subalgebra");
      t.push_back(T.subspace.coordinates(b));
    }
  return Action<S>(A.algebra, T.algebra, std::move(t));
}

/// Parity, ^{[p,p']}m = ^p(^{p'}m) - (-1)^{|p||p'|} ^{p'}(^p m) and
/// ^p[m,m'] = [^p m, m'] + (-1)^{|p||m|} [m, ^p m'] on basis triples.
template <class S>
Certificate check_action(const Action<S>& a) {
  Certificate cert;
  const auto& P = a.actor();
  const auto& M = a.target();
  for (Index i = 0; i < P.dim(); ++i)
    for (Index j = 0; j < M.dim(); ++j) {
      const Vec<S>& v = a.act(i, j);
      for (Index k = 0; k < M.dim(); ++k)
        if (!is_zero(v(k)) && M.parity(k) != P.parity(i) + M.parity(j)) {
          cert.fail("parity: ^" + P.space().label(i) + " " + M.space().label(j) + " has a component on " + M.space().label(k));
          break;
        }
    }
  std::vector<Mat<S>> ops;
  for (Index i = 0; i < P.dim(); ++i) ops.push_back(a.op(i));
  for (Index i = 0; i < P.dim() && !cert.saturated(); ++i)
    for (Index j = 0; j < P.dim(); ++j) {
      Mat<S> lhs = a.op(P.bracket(i, j));
      Mat<S> rhs = ops[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(j)] -
                   sign_power<S>(P.p(i) * P.p(j)) * (ops[static_cast<std::size_t>(j)] * ops[static_cast<std::size_t>(i)]);
      if (lhs != rhs) cert.fail("action axiom (i): (" + P.space().label(i) + ", " + P.space().label(j) + ")");
    }
  for (Index i = 0; i < P.dim() && !cert.saturated(); ++i)
    for (Index x = 0; x < M.dim(); ++x)
      for (Index y = 0; y < M.dim(); ++y) {
        Vec<S> lhs = ops[static_cast<std::size_t>(i)] * M.bracket(x, y);
        Vec<S> rhs = M.bracket(a.act(i, x), unit_vector<S>(M.dim(), y)) +
                     sign_power<S>(P.p(i) * M.p(x)) * M.bracket(unit_vector<S>(M.dim(), x), a.act(i, y));
        if (lhs != rhs)
          cert.fail("action axiom (ii): (" + P.space().label(i) + ", " + M.space().label(x) + ", " + M.space().label(y) + ")");
      }
  return cert;
}

/// aMN: M acting on N; aNM: N acting on M. Checks
/// ^{(^n m)} n' = -(-1)^{|m||n|} [^m n, n'] and ^{(^m n)} m' = -(-1)^{|m||n|} [^n m, m'].
template <class S>
Certificate check_compatible(const Action<S>& aMN, const Action<S>& aNM) {
  Certificate cert;
  const auto& M = aMN.actor();
  const auto& N = aMN.target();
  if (!(aNM.actor().space() == N.space()) || !(aNM.target().space() == M.space())) {
    cert.fail("actions do not run between the same pair of algebras");
    return cert;
  }
  for (Index m = 0; m < M.dim() && !cert.saturated(); ++m)
    for (Index n = 0; n < N.dim(); ++n) {
      S sg = -sign_power<S>(M.p(m) * N.p(n));
      const Vec<S>& nm = aNM.act(n, m);
      const Vec<S>& mn = aMN.act(m, n);
      Mat<S> l1 = aMN.op(nm), r1 = sg * N.ad(mn);
      if (l1 != r1) cert.fail("compatibility (i): (" + M.space().label(m) + ", " + N.space().label(n) + ")");
      Mat<S> l2 = aNM.op(mn), r2 = sg * M.ad(nm);
      if (l2 != r2) cert.fail("compatibility (ii): (" + M.space().label(m) + ", " + N.space().label(n) + ")");
    }
  return cert;
}

/// Boundary m -> P (matrix P.dim x M.dim) and an action of P on M.
template <class S>
struct CrossedModule {
  LieSuperAlgebra<S> m;
  LieSuperAlgebra<S> p;
  Mat<S> boundary;
  Action<S> action;

  CrossedModule() = default;
  CrossedModule(LieSuperAlgebra<S> m_, LieSuperAlgebra<S> p_, Mat<S> d, Action<S> a)
      : m(std::move(m_)), p(std::move(p_)), boundary(std::move(d)), action(std::move(a)) {
    if (boundary.rows() != p.dim() || boundary.cols() != m.dim()) throw AmbientMismatch("boundary matrix has the wrong shape");
    if (!(action.actor().space() == p.space()) || !(action.target().space() == m.space()))
      throw CrossedModuleMismatch("action does not run from P to M");
  }

  GradedMap<S> boundary_map() const { return GradedMap<S>(m.space(), p.space(), boundary); }
};

/// (P, id_P) with the adjoint action.
template <class S>
CrossedModule<S> identity_crossed(const LieSuperAlgebra<S>& P) {
  return CrossedModule<S>(P, P, Mat<S>::Identity(P.dim(), P.dim()), Action<S>::adjoint(P));
}

/// Inclusion of a graded ideal I of P, P acting by the bracket.
template <class S>
CrossedModule<S> ideal_inclusion(const LieSuperAlgebra<S>& P, const Subspace<S>& I, std::string name = "") {
  if (!is_graded_ideal(P, I)) throw NotAnIdeal("subspace is not a graded ideal");
  auto sub = subalgebra(P, I, std::move(name));
  Subalgebra<S> whole{P, Subspace<S>::full(P.dim()), Mat<S>::Identity(P.dim(), P.dim())};
  return CrossedModule<S>(sub.algebra, P, sub.inclusion, bracket_action(P, whole, sub));
}

/// A P-supermodule is an action of P on an abelian algebra.
template <class S>
using Supermodule = Action<S>;

template <class S>
Supermodule<S> trivial_module(const LieSuperAlgebra<S>& P, const SuperSpace& space) {
  return Action<S>::trivial(P, LieSuperAlgebra<S>::abelian(space));
}

/// The adjoint representation of P on its underlying superspace.
template <class S>
Supermodule<S> adjoint_module(const LieSuperAlgebra<S>& P) {
  std::vector<Vec<S>> t;
  for (Index i = 0; i < P.dim(); ++i)
    for (Index j = 0; j < P.dim(); ++j) t.push_back(P.bracket(i, j));
  return Action<S>(P, LieSuperAlgebra<S>::abelian(P.space()), std::move(t));
}

/// (M, 0) for a supermodule M over P.
template <class S>
CrossedModule<S> module_crossed(const Supermodule<S>& M) {
  if (!M.target().is_abelian()) throw ActionInvalid("a supermodule must act on an abelian algebra");
  return CrossedModule<S>(M.target(), M.actor(), Mat<S>::Zero(M.actor().dim(), M.target().dim()), M);
}

/// Axioms of a crossed module together with the consequences that hold for
/// every crossed module: Ker d is central and P-stable, Im d is a graded
/// ideal, and Im d acts trivially on Ker d, so Ker d is a P/Im d-supermodule.
template <class S>
Certificate check_crossed(const CrossedModule<S>& c) {
  Certificate cert;
  const auto& M = c.m;
  const auto& P = c.p;
  cert.merge(check_homomorphism(M, P, c.boundary), "boundary: ");
  cert.merge(check_action(c.action), "action: ");
  for (Index i = 0; i < P.dim() && !cert.saturated(); ++i)
    for (Index j = 0; j < M.dim(); ++j) {
      Vec<S> lhs = c.boundary * c.action.act(i, j);
      Vec<S> rhs = P.bracket(unit_vector<S>(P.dim(), i), Vec<S>(c.boundary.col(j)));
      if (lhs != rhs) cert.fail("equivariance: (" + P.space().label(i) + ", " + M.space().label(j) + ")");
    }
  for (Index j = 0; j < M.dim() && !cert.saturated(); ++j) {
    Mat<S> lhs = c.action.op(Vec<S>(c.boundary.col(j)));
    Mat<S> rhs = M.ad(j);
    if (lhs != rhs) cert.fail("Peiffer identity: " + M.space().label(j));
  }
  if (!cert.ok()) return cert;

  auto ker = kernel(c.boundary);
  auto im = Subspace<S>::image(c.boundary);
  auto z = centre(M);
  cert.require(z.contains(ker), "kernel of the boundary is not central");
  cert.require(is_graded_ideal(P, im), "image of the boundary is not a graded ideal");
  for (Index i = 0; i < P.dim(); ++i)
    for (const auto& k : ker.basis())
      if (!ker.contains(Vec<S>(c.action.op(i) * k))) {
        cert.fail("kernel of the boundary is not stable under " + P.space().label(i));
        break;
      }
  for (const auto& d : im.basis())
    for (const auto& k : ker.basis())
      if (!is_zero_vector(c.action.act(d, k))) {
        cert.fail("image of the boundary acts non-trivially on its kernel");
        return cert;
      }
  return cert;
}

/// M x| P on M (+) P with
/// [(m,p), (m',p')] = ([m,m'] + ^p m' - (-1)^{|m||p'|} ^{p'} m, [p,p']).
template <class S>
LieSuperAlgebra<S> semidirect(const Action<S>& a, std::string name = "") {
  auto cert = check_action(a);
  if (!cert.ok()) throw ActionInvalid(cert.violations.front());
  const auto& M = a.target();
  const auto& P = a.actor();
  const Index dm = M.dim(), dp = P.dim(), d = dm + dp;
  bool clash = false;
  for (Index i = 0; i < dp; ++i) clash |= M.space().index_of(P.space().label(i)).has_value();
  std::vector<BasisElement> basis;
  for (Index i = 0; i < dm; ++i) basis.push_back({(clash ? "m:" : "") + M.space().label(i), M.parity(i)});
  for (Index i = 0; i < dp; ++i) basis.push_back({(clash ? "p:" : "") + P.space().label(i), P.parity(i)});
  std::vector<Vec<S>> t(static_cast<std::size_t>(d * d), Vec<S>::Zero(d));
  auto at = [&](Index i, Index j) -> Vec<S>& { return t[static_cast<std::size_t>(i * d + j)]; };
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dm; ++j) at(i, j).head(dm) = M.bracket(i, j);
  for (Index a_ = 0; a_ < dp; ++a_)
    for (Index j = 0; j < dm; ++j) {
      at(dm + a_, j).head(dm) = a.act(a_, j);
      at(j, dm + a_).head(dm) = (-sign_power<S>(M.p(j) * P.p(a_))) * a.act(a_, j);
    }
  for (Index a_ = 0; a_ < dp; ++a_)
    for (Index b = 0; b < dp; ++b) at(dm + a_, dm + b).tail(dp) = P.bracket(a_, b);
  return LieSuperAlgebra<S>(SuperSpace(std::move(basis)), std::move(t), std::move(name));
}

/// For crossed P-modules (M, d) and (N, d'), the compatible actions
/// ^m n = ^{d m} n and ^n m = ^{d' n} m. Returns (M on N, N on M).
template <class S>
std::pair<Action<S>, Action<S>> induced_actions(const CrossedModule<S>& cm, const CrossedModule<S>& cn) {
  if (!(cm.p.space() == cn.p.space())) throw CrossedModuleMismatch("crossed modules live over different algebras");
  std::vector<Vec<S>> mn, nm;
  for (Index i = 0; i < cm.m.dim(); ++i)
    for (Index j = 0; j < cn.m.dim(); ++j) mn.push_back(cn.action.act(Vec<S>(cm.boundary.col(i)), unit_vector<S>(cn.m.dim(), j)));
  for (Index j = 0; j < cn.m.dim(); ++j)
    for (Index i = 0; i < cm.m.dim(); ++i) nm.push_back(cm.action.act(Vec<S>(cn.boundary.col(j)), unit_vector<S>(cm.m.dim(), i)));
  return {Action<S>(cm.m, cn.m, std::move(mn)), Action<S>(cn.m, cm.m, std::move(nm))};
}

}  // namespace superlie

#endif
