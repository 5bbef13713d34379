#include "superlie/verify.hpp"

#include <functional>
#include <map>

#include "superlie/cyclic.hpp"
#include "superlie/io.hpp"

namespace superlie::verify {

namespace {

using Q = Rational;
using Load = io::Loader<Q>;
namespace fs = std::filesystem;

std::string show(std::optional<int> x) { return x ? std::to_string(*x) : std::string("-"); }

Certificate failure(const std::string& what) {
  Certificate c;
  c.fail(what);
  return c;
}

/// Runs `body`; a library error becomes a failed check instead of aborting the suite.
void guarded(Report& r, const std::string& name, const std::function<Certificate()>& body) {
  try {
    r.check(name, body());
  } catch (const Error& e) {
    r.check(name, failure(e.what()));
  }
}

const std::vector<std::string> kSelfTensors = {"abelian10", "abelian01", "abelian11", "abelian21",
                                               "heis",      "solv2",     "gl11",      "sl21"};

void tensor_props(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("tensor squares with the adjoint actions");
  for (const auto& name : kSelfTensors) {
    auto P = L.lie(dir / (name + ".json"));
    guarded(r, "tensor-props " + name, [&] {
      auto t = tensor_square(P);
      tab.add(name, "dim " + t.algebra.space().dims().str());
      return certify_tensor(t);
    });
  }
  guarded(r, "tensor-props solv2 with the action files", [&] {
    auto a = L.action(dir / "solv2_adjoint.json");
    return certify_tensor(nonabelian_tensor(a.actor(), a.target(), a, a));
  });
  auto& cr = r.section("tensor products of crossed modules");
  for (const auto& [file, base] : {std::pair<std::string, std::string>{"heis_centre", "heis"}, {"gl11_sl", "gl11"}}) {
    auto cm = L.crossed(dir / (file + ".json"));
    auto id = identity_crossed(L.lie(dir / (base + ".json")));
    guarded(r, "tensor-props " + file + " with " + base, [&] {
      auto t = tensor_of_crossed(cm, id);
      cr.add(file + " (x) " + base, "dim " + t.algebra.space().dims().str());
      auto c = certify_tensor(t);
      c.merge(right_exactness_check(cm.p, Subspace<Q>::image(cm.boundary)), "right exactness: ");
      return c;
    });
  }
  auto& ab = r.section("trivial actions");
  for (const auto& [a, b] : {std::pair<std::string, std::string>{"abelian21", "abelian11"}, {"heis", "gl11"}, {"solv2", "abelian01"}}) {
    auto M = L.lie(dir / (a + ".json")), N = L.lie(dir / (b + ".json"));
    guarded(r, "tensor-props " + a + " (x) " + b + " trivial", [&] {
      Certificate c;
      auto t = trivial_tensor(M, N);
      auto expect = trivial_action_tensor(M, N).dims();
      ab.add(a + " (x) " + b, "dim " + t.algebra.space().dims().str() + ", M^ab (x) N^ab " + expect.str());
      c.require(t.algebra.space().dims() == expect, "dimension differs from M^ab (x) N^ab");
      c.require(t.algebra.is_abelian(), "product is not abelian");
      c.merge(certify_tensor(t));
      return c;
    });
  }
}

void nil_bounds(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("classes: [M,N]^M <= M(x)N <= c+1, [M,N]^N <= c+1; lengths likewise");
  auto row = [&](const std::string& name, const BoundsReport& b) {
    tab.add(name, "class " + show(b.class_im_mu) + " / " + show(b.class_tensor) + " / " + show(b.class_im_nu) + ", length " +
                      show(b.length_im_mu) + " / " + show(b.length_tensor) + " / " + show(b.length_im_nu) + ", engel " +
                      show(b.engel_im_mu));
  };
  for (const auto& name : kSelfTensors) {
    auto P = L.lie(dir / (name + ".json"));
    guarded(r, "nil-bounds " + name, [&] {
      auto b = nilpotency_bounds_check(tensor_square(P));
      row(name, b);
      return b.cert;
    });
  }
  for (const auto& [file, base] : {std::pair<std::string, std::string>{"heis_centre", "heis"}, {"gl11_sl", "gl11"}}) {
    auto cm = L.crossed(dir / (file + ".json"));
    auto id = identity_crossed(L.lie(dir / (base + ".json")));
    guarded(r, "nil-bounds " + file, [&] {
      auto b = nilpotency_bounds_check(tensor_of_crossed(cm, id));
      row(file + " (x) " + base, b);
      return b.cert;
    });
  }
}

void uce_suite(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("Ker(uce) / H2 complex / Ker(P^P -> P)");
  for (const std::string name : {"sl21", "sl30"}) {
    auto P = L.lie(dir / (name + ".json"));
    guarded(r, "uce " + name, [&] {
      auto u = uce(P);
      auto h2 = homology(P, 2).dim;
      auto x = exterior_square(P);
      auto kx = super_dim(x.algebra().space(), kernel(x.mu()));
      tab.add(name, u.kernel_dim.str() + " / " + h2.str() + " / " + kx.str());
      Certificate c = u.cert;
      c.require(u.kernel_dim == h2, "Ker(uce) " + u.kernel_dim.str() + " differs from H2 " + h2.str());
      c.require(kx == h2, "Ker(P^P -> P) " + kx.str() + " differs from H2 " + h2.str());
      return c;
    });
  }
}

void d3_suite(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("(L^2 P)/Im d3 and P^P");
  for (const std::string name : {"abelian21", "heis", "gl11", "sl21"}) {
    auto P = L.lie(dir / (name + ".json"));
    guarded(r, "d3-lemma " + name, [&] {
      auto d = d3_lemma_check(P);
      tab.add(name, std::to_string(d.left.dim()) + " / " + std::to_string(d.right.algebra().dim()));
      return d.cert;
    });
  }
}

void hopf_suite(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("Hopf quotient / H2 from the complex");
  auto heis = L.lie(dir / "heis.json");
  auto hp = L.presentation(dir / "heis_pres.json");
  guarded(r, "hopf heis class 2", [&] {
    auto h = hopf_formula(hp, 2, false).dim;
    auto c = homology(heis, 2).dim;
    tab.add("heis, class 2", h.str() + " / " + c.str());
    Certificate cert;
    cert.require(h == c, "Hopf " + h.str() + " differs from H2 " + c.str());
    return cert;
  });
  auto free2 = L.presentation(dir / "free2.json");
  for (int cls : {2, 3}) {
    guarded(r, "hopf free2 class " + std::to_string(cls), [&] {
      auto h = hopf_formula(free2, cls).dim;
      auto c = homology(presented_algebra(free2, cls), 2).dim;
      tab.add("free2, class " + std::to_string(cls), h.str() + " / " + c.str());
      Certificate cert;
      cert.require(h == c, "Hopf " + h.str() + " differs from H2 " + c.str());
      return cert;
    });
  }
}

Certificate sequence_cert(const SnakeSequence<Q>& s) {
  Certificate c;
  c.merge(s.diagram, "diagram: ");
  c.merge(s.exact, "sequence: ");
  return c;
}

std::string dims_row(const std::vector<SuperDim>& d) {
  std::string out;
  for (const auto& x : d) out += (out.empty() ? "" : " ") + x.str();
  return out;
}

void snake_suite(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("six-term dimensions");
  auto heis = L.lie(dir / "heis.json");
  auto cm = L.crossed(dir / "heis_centre.json");
  guarded(r, "snake heis: centre -> heis -> heis/centre", [&] {
    auto s = nh_sequence(heis, submodule_sequence(adjoint_module(heis), Subspace<Q>::image(cm.boundary)));
    tab.add("heis adjoint, centre", dims_row(s.dims));
    return sequence_cert(s);
  });
  for (const std::string name : {"gl11", "solv2"}) {
    auto P = L.lie(dir / (name + ".json"));
    guarded(r, "snake " + name + ": Ker nu -> P(x)P -> Im nu", [&] {
      auto s = nh_sequence(P, kernel_image_sequence(nu_crossed(tensor_square(P))));
      tab.add(name + " tensor square", dims_row(s.dims));
      return sequence_cert(s);
    });
  }
}

void cyclic_suite(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("six-term dimensions");
  for (const std::string name : {"q", "dual", "grassmann", "m11"}) {
    auto A = L.assoc(dir / (name + ".json"));
    guarded(r, "cyclic-sixterm " + name, [&] {
      auto s = cyclic_sixterm(A);
      tab.add(name, dims_row(s.sequence.dims));
      return s.cert();
    });
  }
}

void final_suite(Report& r, Load& L, const fs::path& dir) {
  auto& tab = r.section("six-term dimensions");
  for (const auto& [file, base] : {std::pair<std::string, std::string>{"heis_centre", "heis"}, {"gl11_sl", "gl11"}}) {
    auto P = L.lie(dir / (base + ".json"));
    auto cm = L.crossed(dir / (file + ".json"));
    guarded(r, "final-sixterm " + file, [&] {
      auto f = final_sixterm(P, Subspace<Q>::image(cm.boundary));
      tab.add(file, dims_row(f.sequence.dims));
      Certificate c = sequence_cert(f.sequence);
      c.merge(f.identified, "identification: ");
      return c;
    });
  }
}

void miller_suite(Report& r, Load&, const fs::path&) {
  std::vector<std::pair<std::string, GradedGenSet>> sets = {
      {"x", GradedGenSet({{"x", Parity::Even}})},
      {"t", GradedGenSet({{"t", Parity::Odd}})},
      {"x,y", GradedGenSet({{"x", Parity::Even}, {"y", Parity::Even}})},
      {"x,t", GradedGenSet({{"x", Parity::Even}, {"t", Parity::Odd}})},
      {"s,t", GradedGenSet({{"s", Parity::Odd}, {"t", Parity::Odd}})}};
  for (const auto& [name, gens] : sets)
    for (int c = 1; c <= 3; ++c)
      guarded(r, "miller " + name + " class " + std::to_string(c), [&] { return miller_truncated_check<Q>(gens, c); });
}

using Suite = std::function<void(Report&, Load&, const fs::path&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> m = {
      {"tensor-props", tensor_props}, {"nil-bounds", nil_bounds},       {"uce", uce_suite},
      {"d3-lemma", d3_suite},         {"hopf", hopf_suite},             {"snake", snake_suite},
      {"cyclic-sixterm", cyclic_suite}, {"final-sixterm", final_suite}, {"miller", miller_suite}};
  return m;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"tensor-props", "nil-bounds",     "uce",           "d3-lemma", "hopf",
                                               "snake",        "cyclic-sixterm", "final-sixterm", "miller"};
  return ids;
}

Report run(const std::string& id, const fs::path& dir) {
  auto it = suites().find(id);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + id + "'");
  Report r;
  Load loader(FieldSpec::rationals());
  it->second(r, loader, dir);
  r.inputs = loader.digests();
  return r;
}

}  // namespace superlie::verify
