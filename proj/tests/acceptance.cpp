// Acceptance gate: one line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "superlie/constructors.hpp"
#include "superlie/cyclic.hpp"
#include "superlie/io.hpp"

using namespace superlie;
using Q = Rational;
namespace fs = std::filesystem;

namespace {

const fs::path kData = SUPERLIE_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

std::string msg(const Certificate& c) { return c.ok() ? "" : c.violations.front(); }

class Rng {
public:
  explicit Rng(unsigned seed) : g_(seed) {}
  int uniform(int a, int b) { return std::uniform_int_distribution<int>(a, b)(g_); }
  Q small_nonzero() {
    static const std::vector<Q> vals = {Q(1), Q(-1), Q(2), Q(-2), Q(3), Q(1) / Q(2), Q(-2) / Q(3)};
    return vals[static_cast<std::size_t>(uniform(0, static_cast<int>(vals.size()) - 1))];
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

private:
  std::mt19937 g_;
};

/// Random nonzero vector supported on basis elements of parity `par`;
/// nullopt when the space has no such elements.
std::optional<Vec<Q>> random_homogeneous(const SuperSpace& sp, int par, Rng& rng) {
  std::vector<Index> idx;
  for (Index i = 0; i < sp.dim(); ++i)
    if (sp.p(i) == par) idx.push_back(i);
  if (idx.empty()) return std::nullopt;
  Vec<Q> v = Vec<Q>::Zero(sp.dim());
  while (is_zero_vector(v))
    for (Index i : idx)
      if (rng.uniform(0, 1)) v(i) = Q(rng.uniform(-2, 2));
  return v;
}

std::vector<LieSuperAlgebra<Q>> corpus_lie() {
  io::Loader<Q> L(FieldSpec::rationals());
  std::vector<LieSuperAlgebra<Q>> out;
  for (const std::string n : {"abelian10", "abelian01", "abelian11", "abelian21", "heis", "solv2", "gl11", "sl11", "sl21", "sl30",
                              "heis_centre_alg"})
    out.push_back(L.lie(kData / (n + ".json")));
  return out;
}

std::vector<AssocSuperAlgebra<Q>> corpus_assoc() {
  io::Loader<Q> L(FieldSpec::rationals());
  std::vector<AssocSuperAlgebra<Q>> out;
  for (const std::string n : {"q", "dual", "grassmann", "m11", "m20"}) out.push_back(L.assoc(kData / (n + ".json")));
  return out;
}

LieSuperAlgebra<Q> corpus_one(const std::string& name) {
  io::Loader<Q> L(FieldSpec::rationals());
  return L.lie(kData / (name + ".json"));
}

CrossedModule<Q> corpus_crossed(const std::string& name) {
  io::Loader<Q> L(FieldSpec::rationals());
  return L.crossed(kData / (name + ".json"));
}

/// Random Lie superalgebra of dimension 1..maxdim emitted by the constructors.
LieSuperAlgebra<Q> random_algebra(Rng& rng, Index maxdim) {
  auto k = ground_field<Q>();
  static const std::vector<LieSuperAlgebra<Q>> ambients = {matrix_gl(2, 1, k), matrix_gl(1, 1, k), matrix_gl(1, 2, k),
                                                           heisenberg<Q>(), matrix_gl(1, 1, grassmann1<Q>())};
  while (true) {
    int kind = rng.uniform(0, 2);
    if (kind == 0) {
      Index e = rng.uniform(0, static_cast<int>(maxdim)), o = rng.uniform(0, static_cast<int>(maxdim - e));
      if (e + o == 0) continue;
      return abelian_algebra<Q>(e, o);
    }
    const auto& A = rng.pick(ambients);
    std::vector<Vec<Q>> gens;
    for (int g = rng.uniform(1, 2); g > 0; --g)
      if (auto v = random_homogeneous(A.space(), rng.uniform(0, 1), rng)) gens.push_back(*v);
    if (gens.empty()) continue;
    if (kind == 1) {
      auto sub = subalgebra_closure(A, gens);
      if (sub.dim() < 1 || sub.dim() > maxdim) continue;
      return subalgebra(A, sub, "random subalgebra").algebra;
    }
    auto I = ideal_closure(A, gens);
    if (I.dim() == A.dim() || A.dim() - I.dim() > maxdim) continue;
    return quotient_algebra(A, I, "random quotient").algebra;
  }
}

Action<Q> with_entry(const Action<Q>& a, Index p, Index m, Index k, const Q& delta) {
  std::vector<Vec<Q>> t;
  for (Index i = 0; i < a.actor().dim(); ++i)
    for (Index j = 0; j < a.target().dim(); ++j) t.push_back(a.act(i, j));
  t[static_cast<std::size_t>(p * a.target().dim() + m)](k) += delta;
  return Action<Q>(a.actor(), a.target(), std::move(t));
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  Rng rng(1601);
  long certified = 0;
  auto need = [&](const Certificate& c, const std::string& what) {
    o.require(c.ok(), what + ": " + msg(c));
    ++certified;
  };
  io::Loader<Q> L(FieldSpec::rationals());
  for (const auto& f : fs::directory_iterator(kData)) {
    if (f.path().extension() != ".json") continue;
    switch (L.kind(f.path())) {
      case io::FileKind::Lie: need(check_lie_axioms(L.lie(f.path())), f.path().filename().string()); break;
      case io::FileKind::Assoc: need(check_assoc_axioms(L.assoc(f.path())), f.path().filename().string()); break;
      case io::FileKind::Action: need(check_action(L.action(f.path())), f.path().filename().string()); break;
      case io::FileKind::Crossed: need(check_crossed(L.crossed(f.path())), f.path().filename().string()); break;
      case io::FileKind::Presentation: break;
    }
  }
  for (const auto& P : corpus_lie()) {
    auto t = tensor_square(P);
    need(check_lie_axioms(t.algebra), "tensor square of " + P.name());
    need(check_crossed(mu_crossed(t)), "mu of " + P.name());
    need(check_crossed(nu_crossed(t)), "nu of " + P.name());
    need(check_action(t.m_action), "action on tensor square of " + P.name());
    need(check_lie_axioms(exterior_square(P).algebra()), "exterior square of " + P.name());
    need(check_lie_axioms(abelianization(P)), "abelianization of " + P.name());
    need(check_crossed(identity_crossed(P)), "identity of " + P.name());
    need(check_lie_axioms(semidirect(Action<Q>::adjoint(P))), "semidirect of " + P.name());
  }
  for (const auto& A : corpus_assoc()) {
    need(check_assoc_axioms(matrix_assoc(1, 1, A)), "M(1,1) over " + A.name());
    need(check_lie_axioms(as_lie(A)), "commutator algebra of " + A.name());
    auto v = v_algebra(A);
    need(check_lie_axioms(v.algebra), "V of " + A.name());
    need(check_crossed(v.crossed), "V crossed module of " + A.name());
  }
  need(check_lie_axioms(free_nilpotent<Q>(GradedGenSet({{"x", Parity::Even}, {"t", Parity::Odd}}), 3)), "free nilpotent");
  for (int r = 0; r < 30; ++r) {
    auto P = random_algebra(rng, 6);
    need(check_lie_axioms(P), "random algebra");
    need(check_action(Action<Q>::adjoint(P)), "random adjoint action");
    if (auto v = random_homogeneous(P.space(), rng.uniform(0, 1), rng)) {
      auto I = ideal_closure(P, {*v});
      need(check_crossed(ideal_inclusion(P, I)), "random ideal inclusion");
      if (I.dim() < P.dim()) need(check_lie_axioms(quotient_algebra(P, I).algebra), "random quotient");
    }
  }

  // Fuzz: single-entry corruptions. The independent oracle decides whether a
  // corruption breaks an axiom; the checker must agree on every case.
  auto k = ground_field<Q>();
  auto gl11 = matrix_gl(1, 1, k);
  std::vector<LieSuperAlgebra<Q>> lies = {heisenberg<Q>(), gl11, matrix_sl(2, 1, k), solvable2<Q>(), abelian_algebra<Q>(1, 1),
                                          tensor_square(heisenberg<Q>()).algebra};
  for (int r = 0; r < 4; ++r) lies.push_back(random_algebra(rng, 5));
  std::vector<Action<Q>> actions = {Action<Q>::adjoint(heisenberg<Q>()), Action<Q>::adjoint(gl11),
                                    Action<Q>::trivial(heisenberg<Q>(), abelian_algebra<Q>(1, 1)),
                                    corpus_crossed("gl11_sl").action, tensor_square(gl11).m_action};
  std::vector<CrossedModule<Q>> crossed = {corpus_crossed("heis_centre"), corpus_crossed("gl11_sl"), identity_crossed(gl11),
                                           mu_crossed(tensor_square(heisenberg<Q>()))};
  std::vector<AssocSuperAlgebra<Q>> assocs = {dual_numbers<Q>(), grassmann1<Q>(), matrix_assoc(1, 1, k), matrix_assoc(2, 0, k)};
  int caught = 0, invalid = 0, benign = 0, trials = 0;
  while (invalid < 200 && trials < 20000) {
    ++trials;
    bool oracle_ok = true, checker_ok = true;
    Q delta = rng.small_nonzero();
    switch (rng.uniform(0, 3)) {
      case 0: {
        auto Lc = rng.pick(lies);
        Index i = rng.uniform(0, static_cast<int>(Lc.dim()) - 1), j = rng.uniform(0, static_cast<int>(Lc.dim()) - 1);
        Lc.bracket_mut(i, j)(rng.uniform(0, static_cast<int>(Lc.dim()) - 1)) += delta;
        oracle_ok = oracle::axioms::lie_valid(Lc);
        checker_ok = check_lie_axioms(Lc).ok();
        break;
      }
      case 1: {
        const auto& a = rng.pick(actions);
        auto c = with_entry(a, rng.uniform(0, static_cast<int>(a.actor().dim()) - 1), rng.uniform(0, static_cast<int>(a.target().dim()) - 1),
                            rng.uniform(0, static_cast<int>(a.target().dim()) - 1), delta);
        oracle_ok = oracle::axioms::action_valid(c);
        checker_ok = check_action(c).ok();
        break;
      }
      case 2: {
        auto c = rng.pick(crossed);
        if (rng.uniform(0, 1))
          c.boundary(rng.uniform(0, static_cast<int>(c.p.dim()) - 1), rng.uniform(0, static_cast<int>(c.m.dim()) - 1)) += delta;
        else
          c.action = with_entry(c.action, rng.uniform(0, static_cast<int>(c.p.dim()) - 1), rng.uniform(0, static_cast<int>(c.m.dim()) - 1),
                                rng.uniform(0, static_cast<int>(c.m.dim()) - 1), delta);
        oracle_ok = oracle::axioms::crossed_valid(c);
        checker_ok = check_crossed(c).ok();
        break;
      }
      default: {
        const auto& A = rng.pick(assocs);
        const Index d = A.dim();
        std::vector<Vec<Q>> t;
        for (Index i = 0; i < d; ++i)
          for (Index j = 0; j < d; ++j) t.push_back(A.product(i, j));
        auto unit = A.unit();
        if (rng.uniform(0, 9) == 0)
          (*unit)(rng.uniform(0, static_cast<int>(d) - 1)) += delta;
        else
          t[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(d * d) - 1))](rng.uniform(0, static_cast<int>(d) - 1)) += delta;
        AssocSuperAlgebra<Q> c(A.space(), std::move(t), unit, A.name());
        oracle_ok = oracle::axioms::assoc_valid(c);
        checker_ok = check_assoc_axioms(c).ok();
        break;
      }
    }
    if (oracle_ok) {
      ++benign;
      o.require(checker_ok, "checker rejects a corruption the oracle accepts");
    } else {
      ++invalid;
      if (!checker_ok) ++caught;
    }
  }
  o.require(invalid == 200, "only " + std::to_string(invalid) + " invalid corruptions generated");
  o.require(caught == invalid, std::to_string(invalid - caught) + " corruptions missed");
  o.detail = std::to_string(certified) + " objects certified, " + std::to_string(caught) + "/" + std::to_string(invalid) +
             " corruptions caught, " + std::to_string(benign) + " benign agreed" + (o.pass ? "" : "; " + o.detail);
  return o;
}

/// Every compatible action pair of the corpus, with a name.
struct Pair {
  std::string name;
  std::function<TensorProduct<Q>()> build;
};

std::vector<Pair> corpus_pairs(int& incompatible_rejected, Outcome& o) {
  std::vector<Pair> pairs;
  auto lies = corpus_lie();
  for (const auto& M : lies)
    for (const auto& N : lies) pairs.push_back({M.name() + " (x) " + N.name() + " trivial", [M, N] { return trivial_tensor(M, N); }});
  for (const auto& P : lies) pairs.push_back({P.name() + " adjoint", [P] { return tensor_square(P); }});
  io::Loader<Q> L(FieldSpec::rationals());
  std::vector<Action<Q>> solv = {L.action(kData / "solv2_adjoint.json"), L.action(kData / "solv2_trivial.json")};
  for (const auto& a : solv)
    for (const auto& b : solv) {
      if (check_compatible(a, b).ok()) {
        pairs.push_back({"solv2 action files", [a, b] { return nonabelian_tensor(a.actor(), a.target(), a, b); }});
      } else {
        try {
          nonabelian_tensor(a.actor(), a.target(), a, b);
          o.require(false, "incompatible solv2 actions accepted");
        } catch (const IncompatibleActions&) {
          ++incompatible_rejected;
        }
      }
    }
  for (const auto& [file, base] : {std::pair<std::string, std::string>{"heis_centre", "heis"}, {"gl11_sl", "gl11"}}) {
    std::vector<CrossedModule<Q>> cms = {corpus_crossed(file), identity_crossed(corpus_one(base))};
    for (std::size_t i = 0; i < cms.size(); ++i)
      for (std::size_t j = 0; j < cms.size(); ++j) {
        auto a = cms[i], b = cms[j];
        pairs.push_back({a.m.name() + " (x) " + b.m.name() + " over " + base, [a, b] { return tensor_of_crossed(a, b); }});
      }
  }
  return pairs;
}

Outcome criterion2() {
  Outcome o;
  int rejected = 0;
  auto pairs = corpus_pairs(rejected, o);
  for (const auto& p : pairs) {
    auto t = p.build();
    o.require(well_definedness(t).ok(), p.name + ": bracket does not kill D: " + msg(well_definedness(t)));
    o.require(check_crossed(mu_crossed(t)).ok(), p.name + ": mu is not a crossed module");
    o.require(check_crossed(nu_crossed(t)).ok(), p.name + ": nu is not a crossed module");
    o.require(check_lie_axioms(t.algebra).ok(), p.name + ": tensor product is not a Lie superalgebra");
  }
  // D must also match the brute-force span of the defining relations
  for (const auto& P : {heisenberg<Q>(), matrix_gl(1, 1, ground_field<Q>()), solvable2<Q>()}) {
    auto t = tensor_square(P);
    auto a = Action<Q>::adjoint(P);
    o.require(oracle::d_bruteforce(P, P, a, a) == t.d, P.name() + ": D differs from the brute-force span");
  }
  o.require(rejected > 0, "no incompatible pair exercised");
  if (o.pass) o.detail = std::to_string(pairs.size()) + " compatible pairs certified, " + std::to_string(rejected) + " incompatible rejected";
  return o;
}

SuperDim ab_dims(const LieSuperAlgebra<Q>& L) {
  const Index d = L.dim();
  Mat<Q> even = Mat<Q>::Zero(d, d * d), odd = Mat<Q>::Zero(d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) (L.p(k) ? odd : even)(k, i * d + j) = L.bracket(i, j)(k);
  SuperDim all = L.space().dims();
  return {all.even - rank(even), all.odd - rank(odd)};
}

Outcome criterion3() {
  Outcome o;
  Rng rng(3003);
  int nonabelian = 0;
  for (int r = 0; r < 50; ++r) {
    auto M = random_algebra(rng, 5), N = random_algebra(rng, 5);
    if (!M.is_abelian() || !N.is_abelian()) ++nonabelian;
    auto t = trivial_tensor(M, N);
    auto a = ab_dims(M), b = ab_dims(N);
    SuperDim expect{a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
    o.require(t.algebra.space().dims() == expect, "pair " + std::to_string(r) + ": dim " + t.algebra.space().dims().str() +
                                                      " expected " + expect.str());
    o.require(t.algebra.is_abelian(), "pair " + std::to_string(r) + ": product not abelian");
  }
  if (o.pass) o.detail = "50 random pairs, " + std::to_string(nonabelian) + " with a non-abelian factor";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::string rows;
  for (const std::string name : {"sl21", "sl30"}) {
    auto P = corpus_one(name);
    auto u = uce(P);
    auto h2 = homology(P, 2).dim;
    auto x = exterior_square(P);
    auto kx = super_dim(x.algebra().space(), kernel(x.mu()));
    o.require(u.cert.ok(), name + ": " + msg(u.cert));
    o.require(u.kernel_dim == h2 && h2 == kx, name + ": " + u.kernel_dim.str() + " / " + h2.str() + " / " + kx.str());
    rows += (rows.empty() ? "" : ", ") + name + " " + h2.str();
  }
  if (o.pass) o.detail = "Ker u = H2 = Ker(P^P->P): " + rows;
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const std::string name : {"abelian21", "heis", "gl11", "sl21"}) {
    auto r = d3_lemma_check(corpus_one(name));
    o.require(r.cert.ok(), name + ": " + msg(r.cert));
    o.require(r.left.dim() == r.right.algebra().dim(), name + ": dimensions differ");
  }
  if (o.pass) o.detail = "abelian(2|1), heis, gl(1,1), sl(2,1)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  io::Loader<Q> L(FieldSpec::rationals());
  auto heis = L.presentation(kData / "heis_pres.json");
  auto free2 = L.presentation(kData / "free2.json");
  auto h = hopf_formula(heis, 2, false).dim;
  o.require(h == homology(heisenberg<Q>(), 2).dim, "heis: Hopf " + h.str());
  o.require(presented_algebra(heis, 2).space().dims() == SuperDim{3, 0}, "heis presentation does not give dim 3");
  std::string rows = "heis " + h.str();
  for (int c : {2, 3}) {
    auto hc = hopf_formula(free2, c).dim;
    auto fc = free_nilpotent<Q>(free2.gens, c);
    auto h2 = homology(fc, 2).dim;
    o.require(hc == h2, "free2 class " + std::to_string(c) + ": Hopf " + hc.str() + " vs H2 " + h2.str());
    rows += ", free2 c=" + std::to_string(c) + " " + hc.str();
  }
  if (o.pass) o.detail = rows;
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto seq = [&](const std::string& name, const SnakeSequence<Q>& s) {
    o.require(s.diagram.ok(), name + " diagram: " + msg(s.diagram));
    o.require(s.exact.ok(), name + ": " + msg(s.exact));
    // every node rechecked from the maps: out o in = 0 and rank(in) + rank(out) = dim
    for (std::size_t k = 0; k + 1 < s.maps.size(); ++k) {
      o.require(is_zero_matrix(Mat<Q>(s.maps[k + 1].matrix * s.maps[k].matrix)), name + ": composite " + std::to_string(k + 1) + " is nonzero");
      o.require(rank(s.maps[k].matrix) + rank(s.maps[k + 1].matrix) == s.maps[k].target.dim(),
                name + ": node " + std::to_string(k + 1) + " is not exact");
    }
  };
  auto heis = corpus_one("heis");
  auto centre = corpus_crossed("heis_centre");
  seq("heis adjoint / centre", nh_sequence(heis, submodule_sequence(adjoint_module(heis), Subspace<Q>::image(centre.boundary))));
  for (const std::string name : {"gl11", "solv2"}) {
    auto P = corpus_one(name);
    seq(name + " Ker nu", nh_sequence(P, kernel_image_sequence(nu_crossed(tensor_square(P)))));
  }
  io::Loader<Q> L(FieldSpec::rationals());
  for (const std::string name : {"q", "dual", "grassmann", "m11"}) {
    auto s = cyclic_sixterm(L.assoc(kData / (name + ".json")));
    o.require(s.cert().ok(), name + ": " + msg(s.cert()));
    seq(name + " cyclic", s.sequence);
  }
  for (const auto& [file, base] : {std::pair<std::string, std::string>{"heis_centre", "heis"}, {"gl11_sl", "gl11"}}) {
    auto f = final_sixterm(corpus_one(base), Subspace<Q>::image(corpus_crossed(file).boundary));
    o.require(f.identified.ok(), file + ": " + msg(f.identified));
    seq(file + " final", f.sequence);
  }
  if (o.pass) o.detail = "3 snake, 4 cyclic, 2 final sequences exact at every node";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int rejected = 0, bounded = 0;
  auto pairs = corpus_pairs(rejected, o);
  for (const auto& p : pairs) {
    auto t = p.build();
    auto b = nilpotency_bounds_check(t);
    o.require(b.cert.ok(), p.name + ": " + msg(b.cert));
    if (b.class_im_mu) {
      int c = *b.class_im_mu;
      o.require(b.class_tensor && c <= *b.class_tensor && *b.class_tensor <= c + 1, p.name + ": tensor class out of range");
      o.require(b.class_im_nu && *b.class_im_nu <= c + 1, p.name + ": [M,N]^N class out of range");
    }
    if (b.length_im_mu) {
      int l = *b.length_im_mu;
      o.require(b.length_tensor && l <= *b.length_tensor && *b.length_tensor <= l + 1, p.name + ": tensor length out of range");
      o.require(b.length_im_nu && *b.length_im_nu <= l + 1, p.name + ": [M,N]^N length out of range");
    }
    if (b.engel_im_mu) {
      o.require(is_engel(t.algebra, *b.engel_im_mu + 1), p.name + ": tensor not (n+1)-Engel");
      ++bounded;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(bounded) + " with nilpotent [M,N]^M";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int super = 0;
  for (const auto& A : corpus_assoc()) {
    auto h = hc(A, 1).dim;
    auto m = hc1_kernel_model(A).dim;
    o.require(h == m, A.name() + ": HC1 " + h.str() + " vs kernel model " + m.str());
    if (is_supercommutative(A)) {
      ++super;
      auto mi = milnor_hc1(A).dim;
      o.require(mi == h, A.name() + ": HC1^M " + mi.str() + " vs HC1 " + h.str());
    }
  }
  if (o.pass) o.detail = "5 algebras, " + std::to_string(super) + " supercommutative";
  return o;
}

Outcome criterion10() {
  Outcome o;
  int sets = 0;
  for (int n = 1; n <= 3; ++n)
    for (int odd = 0; odd <= n; ++odd) {
      std::vector<int> par(static_cast<std::size_t>(n), 0);
      std::vector<BasisElement> gens;
      for (int g = 0; g < n; ++g) {
        par[static_cast<std::size_t>(g)] = g < odd ? 1 : 0;
        gens.push_back({"g" + std::to_string(g), parity_of(par[static_cast<std::size_t>(g)])});
      }
      auto F = free_truncated<Q>(GradedGenSet(gens), 4);
      auto magma = oracle::magma_free_dims(par, 4);
      for (int k = 1; k <= 4; ++k) {
        Index e = 0, od = 0;
        for (Index i = F.offsets[static_cast<std::size_t>(k - 1)]; i < F.offsets[static_cast<std::size_t>(k - 1)] + F.component_dim(k); ++i)
          (F.algebra.space().p(i) ? od : e) += 1;
        auto [me, mo] = magma[static_cast<std::size_t>(k - 1)];
        o.require(e == me && od == mo, std::to_string(n) + " gens, " + std::to_string(odd) + " odd, degree " + std::to_string(k));
      }
      ++sets;
    }
  int miller = 0;
  for (int n = 1; n <= 2; ++n)
    for (int odd = 0; odd <= n; ++odd)
      for (int c = 1; c <= 3; ++c) {
        std::vector<BasisElement> gens;
        for (int g = 0; g < n; ++g) gens.push_back({"g" + std::to_string(g), g < odd ? Parity::Odd : Parity::Even});
        auto cert = miller_truncated_check<Q>(GradedGenSet(gens), c);
        o.require(cert.ok(), "miller: " + msg(cert));
        ++miller;
      }
  if (o.pass) o.detail = std::to_string(sets) + " parity mixes to degree 4, " + std::to_string(miller) + " Miller checks";
  return o;
}

Outcome criterion11() {
  Outcome o;
  // an explicit sweep on top of everything the other criteria built
  long rechecked = 0;
  auto recheck = [&](const ChainComplex<Q>& c, const std::string& name) {
    for (int n = 2; n <= c.top(); ++n) {
      o.require(is_zero_matrix(Mat<Q>(c.d(n - 1) * c.d(n))), name + ": d" + std::to_string(n - 1) + " d" + std::to_string(n) + " != 0");
      ++rechecked;
    }
  };
  try {
    for (const auto& P : corpus_lie()) {
      int top = P.dim() > 6 ? 3 : 4;
      recheck(ce_complex(P, ground_module(P), top), P.name() + " trivial");
      recheck(ce_complex(P, adjoint_module(P), std::min(top, 3)), P.name() + " adjoint");
    }
    for (const auto& A : corpus_assoc()) recheck(connes(A, A.dim() > 2 ? 2 : 3).complex, A.name() + " Connes");
  } catch (const ComplexInconsistent& e) {
    o.require(false, e.what());
  }
  const auto& audit = complex_audit();
  o.require(audit.failed == 0, std::to_string(audit.failed.load()) + " complexes failed d o d = 0");
  o.require(audit.closed > 0, "no complex was checked");
  if (o.pass)
    o.detail = std::to_string(audit.closed.load()) + " complexes closed, " + std::to_string(rechecked) +
               " compositions rechecked, 0 failures";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0: no budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axiom battery and corruption fuzz", 10, criterion1},
      {2, "tensor well-definedness", 30, criterion2},
      {3, "trivial actions give M^ab (x) N^ab", 30, criterion3},
      {4, "universal central extension triangle", 60, criterion4},
      {5, "d3 lemma", 60, criterion5},
      {6, "Hopf formula", 60, criterion6},
      {7, "six-term sequences", 120, criterion7},
      {8, "nilpotency, solvability and Engel bounds", 60, criterion8},
      {9, "cyclic cross-path", 30, criterion9},
      {10, "free-object oracle and Miller check", 120, criterion10},
      {11, "d o d = 0 sentinel", 0, criterion11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.require(false, "over the time budget");
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
