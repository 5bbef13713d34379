#ifndef SUPERLIE_FREELIE_HPP
#define SUPERLIE_FREELIE_HPP

#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "superlie/tensor.hpp"

namespace superlie {

inline constexpr int kMaxFreeGenerators = 4;
inline constexpr int kMaxFreeDegree = 5;

/// Graded generating set; labels unique.
struct GradedGenSet {
  std::vector<BasisElement> generators;

  GradedGenSet() = default;
  explicit GradedGenSet(std::vector<BasisElement> g) : generators(std::move(g)) {
    std::set<std::string> seen;
    for (const auto& b : generators)
      if (!seen.insert(b.label).second) throw std::invalid_argument("duplicate generator label " + b.label);
  }
  Index size() const { return static_cast<Index>(generators.size()); }
  std::optional<Index> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].label == label) return static_cast<Index>(i);
    return std::nullopt;
  }
  SuperSpace space() const { return SuperSpace(generators); }
};

/// A formal bracket word: a generator label, or [left, right].
struct BracketWord {
  std::string generator;
  std::vector<BracketWord> children;  // empty or exactly two

  static BracketWord gen(std::string g) { return BracketWord{std::move(g), {}}; }
  static BracketWord bracket(BracketWord a, BracketWord b) { return BracketWord{"", {std::move(a), std::move(b)}}; }
  bool is_generator() const { return children.empty(); }
  int degree() const { return is_generator() ? 1 : children[0].degree() + children[1].degree(); }
  std::string str() const {
    return is_generator() ? generator : "[" + children[0].str() + "," + children[1].str() + "]";
  }
};

/// Linear combination of bracket words.
template <class S>
struct Relator {
  std::vector<std::pair<S, BracketWord>> terms;
};

template <class S>
struct Presentation {
  GradedGenSet gens;
  std::vector<Relator<S>> relators;
};

/// F / gamma_{d+1} F realized inside the tensor algebra: component k is a
/// subspace of V^{(x)k}, coordinates big-endian in the generator indices.
template <class S>
struct FreeTruncation {
  GradedGenSet gens;
  int max_degree = 0;
  std::vector<Subspace<S>> components;       // degree k at index k - 1
  std::vector<std::vector<Vec<S>>> words;    // chosen left-normed brackets spanning each degree
  std::vector<Mat<S>> to_word_coords;        // echelon coordinates -> word coordinates per degree
  std::vector<Index> offsets;                // first algebra index of each degree
  LieSuperAlgebra<S> algebra;

  Index component_dim(int k) const { return components[static_cast<std::size_t>(k - 1)].dim(); }
  /// Coordinates in `algebra` of a degree-k tensor.
  Vec<S> embed(int k, const Vec<S>& t) const {
    const auto& c = components[static_cast<std::size_t>(k - 1)];
    if (!c.contains(t)) throw ContainmentError("tensor is not a Lie element of degree " + std::to_string(k));
    Vec<S> out = Vec<S>::Zero(algebra.dim());
    out.segment(offsets[static_cast<std::size_t>(k - 1)], c.dim()) =
        to_word_coords[static_cast<std::size_t>(k - 1)] * c.coordinates(t);
    return out;
  }
};

namespace detail {

inline Index ipow(Index b, int e) {
  Index r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// u (x) v - (-1)^{|u||v|} v (x) u for homogeneous u, v.
template <class S>
Vec<S> supercommutator(const Vec<S>& u, int pu, const Vec<S>& v, int pv) {
  return kron(u, v) - sign_power<S>(pu * pv) * kron(v, u);
}

}  // namespace detail

/// Components of degree 1..d of the free Lie superalgebra on `gens`, spanned
/// by left-normed supercommutators in the tensor algebra. Over Q the free
/// Lie superalgebra embeds in its tensor superalgebra.
template <class S>
FreeTruncation<S> free_truncated(const GradedGenSet& gens, int d) {
  if constexpr (!std::is_same_v<S, Rational>) throw FieldUnsupported("free Lie superalgebras need characteristic 0");
  if (d < 1) throw SizeError("truncation degree must be at least 1");
  if (gens.size() < 1 || gens.size() > kMaxFreeGenerators) throw SizeError("between 1 and 4 generators are supported");
  if (d > kMaxFreeDegree) throw SizeError("truncation degree is limited to 5");
  const Index n = gens.size();
  FreeTruncation<S> F;
  F.gens = gens;
  F.max_degree = d;
  std::vector<std::vector<int>> word_par;
  std::vector<std::vector<std::string>> word_label;
  for (int k = 1; k <= d; ++k) {
    const Index dim = detail::ipow(n, k);
    EchelonBuilder<S> e(dim);
    std::vector<Vec<S>> chosen;
    std::vector<int> par;
    std::vector<std::string> lab;
    if (k == 1) {
      for (Index g = 0; g < n; ++g) {
        e.add(unit_vector<S>(n, g));
        chosen.push_back(unit_vector<S>(n, g));
        par.push_back(bit(gens.generators[static_cast<std::size_t>(g)].parity));
        lab.push_back(gens.generators[static_cast<std::size_t>(g)].label);
      }
    } else {
      const auto& prev = F.words.back();
      for (std::size_t w = 0; w < prev.size(); ++w)
        for (Index g = 0; g < n; ++g) {
          int pg = bit(gens.generators[static_cast<std::size_t>(g)].parity);
          Vec<S> v = detail::supercommutator(prev[w], word_par.back()[w], unit_vector<S>(n, g), pg);
          if (e.add(v)) {
            chosen.push_back(v);
            par.push_back((word_par.back()[w] + pg) & 1);
            lab.push_back("[" + word_label.back()[w] + "," + gens.generators[static_cast<std::size_t>(g)].label + "]");
          }
        }
    }
    auto sub = e.subspace();
    Mat<S> T(sub.dim(), static_cast<Index>(chosen.size()));
    for (std::size_t c = 0; c < chosen.size(); ++c) T.col(static_cast<Index>(c)) = sub.coordinates(chosen[c]);
    Mat<S> Tinv(T.rows(), T.cols());
    for (Index c = 0; c < T.cols(); ++c) Tinv.col(c) = *solve(T, unit_vector<S>(T.rows(), c));
    F.to_word_coords.push_back(std::move(Tinv));
    F.components.push_back(std::move(sub));
    F.words.push_back(std::move(chosen));
    word_par.push_back(std::move(par));
    word_label.push_back(std::move(lab));
  }
  std::vector<BasisElement> basis;
  Index total = 0;
  for (int k = 1; k <= d; ++k) {
    F.offsets.push_back(total);
    total += F.component_dim(k);
    for (std::size_t w = 0; w < word_label[static_cast<std::size_t>(k - 1)].size(); ++w)
      basis.push_back({word_label[static_cast<std::size_t>(k - 1)][w], parity_of(word_par[static_cast<std::size_t>(k - 1)][w])});
  }
  SuperSpace sp(std::move(basis));
  std::vector<Vec<S>> table(static_cast<std::size_t>(total * total), Vec<S>::Zero(total));
  F.algebra = LieSuperAlgebra<S>(sp, table, "free");
  for (int a = 1; a <= d; ++a)
    for (int b = 1; a + b <= d; ++b)
      for (Index i = 0; i < F.component_dim(a); ++i)
        for (Index j = 0; j < F.component_dim(b); ++j) {
          Index gi = F.offsets[static_cast<std::size_t>(a - 1)] + i, gj = F.offsets[static_cast<std::size_t>(b - 1)] + j;
          Vec<S> v = detail::supercommutator(F.words[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i)], sp.p(gi),
                                             F.words[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(j)], sp.p(gj));
          F.algebra.bracket_mut(gi, gj) = F.embed(a + b, v);
        }
  return F;
}

/// F / gamma_{c+1} F.
template <class S>
LieSuperAlgebra<S> free_nilpotent(const GradedGenSet& gens, int c) {
  auto F = free_truncated<S>(gens, c);
  F.algebra.set_name("free" + std::to_string(c));
  return F.algebra;
}

namespace detail {

template <class S>
std::pair<Vec<S>, int> evaluate_word(const FreeTruncation<S>& F, const BracketWord& w) {
  if (w.is_generator()) {
    auto g = F.gens.index_of(w.generator);
    if (!g) throw std::invalid_argument("unknown generator " + w.generator);
    return {unit_vector<S>(F.gens.size(), *g), bit(F.gens.generators[static_cast<std::size_t>(*g)].parity)};
  }
  if (w.children.size() != 2) throw std::invalid_argument("bracket words have exactly two children");
  auto [u, pu] = evaluate_word(F, w.children[0]);
  auto [v, pv] = evaluate_word(F, w.children[1]);
  return {supercommutator(u, pu, v, pv), (pu + pv) & 1};
}

}  // namespace detail

/// Coordinates in F.algebra of a relator.
template <class S>
Vec<S> evaluate_relator(const FreeTruncation<S>& F, const Relator<S>& r) {
  Vec<S> out = Vec<S>::Zero(F.algebra.dim());
  for (const auto& [c, w] : r.terms) {
    int k = w.degree();
    if (k > F.max_degree)
      throw DegreeOverflow("word " + w.str() + " has degree " + std::to_string(k) + " beyond " + std::to_string(F.max_degree));
    out += c * F.embed(k, detail::evaluate_word(F, w).first);
  }
  if (!homogeneous_parity(F.algebra.space(), out)) throw std::invalid_argument("relator is not parity-homogeneous");
  return out;
}

template <class S>
Vec<S> evaluate_relator(const FreeTruncation<S>& F, const BracketWord& w) {
  return evaluate_relator(F, Relator<S>{{{S(1), w}}});
}

/// The degree-(c+1) left-normed words; as relators they present F / gamma_{c+1} F.
inline std::vector<BracketWord> truncation_words(const GradedGenSet& gens, int c) {
  std::vector<BracketWord> words;
  for (const auto& g : gens.generators) words.push_back(BracketWord::gen(g.label));
  for (int k = 2; k <= c + 1; ++k) {
    std::vector<BracketWord> next;
    for (const auto& w : words)
      for (const auto& g : gens.generators) next.push_back(BracketWord::bracket(w, BracketWord::gen(g.label)));
    words = std::move(next);
  }
  return words;
}

/// Ker(F_c ^ F_c -> F_c) for F_c = free_nilpotent(gens, c) must have the
/// dimension of the degree-(c+1) component: the bracket map x ^ y -> [x, y]
/// is injective on the free algebra and truncation destroys exactly that part.
template <class S>
Certificate miller_truncated_check(const GradedGenSet& gens, int c) {
  Certificate cert;
  auto Fc = free_nilpotent<S>(gens, c);
  auto F = free_truncated<S>(gens, c + 1);
  auto x = exterior_square(Fc);
  auto ker = kernel(x.mu());
  auto kd = super_dim(x.algebra().space(), ker);
  SuperDim top;
  for (Index i = F.offsets.back(); i < F.algebra.dim(); ++i) (F.algebra.space().parity(i) == Parity::Even ? top.even : top.odd) += 1;
  cert.require(kd == top, "Ker(F ^ F -> F) has dimension " + kd.str() + ", degree " + std::to_string(c + 1) +
                              " component has " + top.str());
  return cert;
}

}  // namespace superlie

#endif
