#ifndef SUPERLIE_SUPERSPACE_HPP
#define SUPERLIE_SUPERSPACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superlie/linalg.hpp"

namespace superlie {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_of(bit(a) ^ bit(b)); }

/// (-1)^e as a scalar.
template <class S>
S sign_power(int e) {
  return (e & 1) ? S(-1) : S(1);
}

/// Dimension pair (even | odd).
struct SuperDim {
  Index even = 0;
  Index odd = 0;
  Index total() const { return even + odd; }
  std::string str() const { return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")"; }
  friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

struct BasisElement {
  std::string label;
  Parity parity = Parity::Even;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A Z2-graded vector space with an ordered homogeneous basis.
class SuperSpace {
public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!index_.emplace(basis_[i].label, static_cast<Index>(i)).second)
        throw std::invalid_argument("duplicate basis label '" + basis_[i].label + "'");
  }
  /// Space of dimension (even | odd) with labels prefix0, prefix1, ...
  static SuperSpace make(Index even, Index odd, const std::string& prefix = "e") {
    std::vector<BasisElement> b;
    for (Index i = 0; i < even + odd; ++i) b.push_back({prefix + std::to_string(i), i < even ? Parity::Even : Parity::Odd});
    return SuperSpace(std::move(b));
  }

  Index dim() const { return static_cast<Index>(basis_.size()); }
  Parity parity(Index i) const { return basis_[static_cast<std::size_t>(i)].parity; }
  int p(Index i) const { return bit(parity(i)); }
  const std::string& label(Index i) const { return basis_[static_cast<std::size_t>(i)].label; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::optional<Index> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  SuperDim dims() const {
    SuperDim d;
    for (const auto& b : basis_) (b.parity == Parity::Even ? d.even : d.odd) += 1;
    return d;
  }

  friend bool operator==(const SuperSpace& a, const SuperSpace& b) { return a.basis_ == b.basis_; }

private:
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, Index> index_;
};

/// Parity of v when every nonzero coordinate sits on one parity; the zero
/// vector reports Even.
template <class S>
std::optional<Parity> homogeneous_parity(const SuperSpace& space, const Vec<S>& v) {
  std::optional<Parity> seen;
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    if (seen && *seen != space.parity(i)) return std::nullopt;
    seen = space.parity(i);
  }
  return seen ? seen : Parity::Even;
}

/// True when the subspace is spanned by homogeneous vectors. For such
/// subspaces the canonical echelon basis is itself homogeneous.
template <class S>
bool is_parity_split(const SuperSpace& space, const Subspace<S>& sub) {
  for (const auto& r : sub.basis())
    if (!homogeneous_parity(space, r)) return false;
  return true;
}

/// Dimension per parity of a parity-split subspace.
template <class S>
SuperDim super_dim(const SuperSpace& space, const Subspace<S>& sub) {
  SuperDim d;
  for (const auto& r : sub.basis()) {
    auto p = homogeneous_parity(space, r);
    if (!p) throw std::invalid_argument("subspace is not spanned by homogeneous vectors");
    (*p == Parity::Even ? d.even : d.odd) += 1;
  }
  return d;
}

/// Parity-homogeneous linear map, matrix of shape (target.dim x source.dim).
template <class S>
struct GradedMap {
  SuperSpace source;
  SuperSpace target;
  Parity degree = Parity::Even;
  Mat<S> matrix;

  GradedMap() = default;
  GradedMap(SuperSpace src, SuperSpace tgt, Mat<S> m, Parity deg = Parity::Even)
      : source(std::move(src)), target(std::move(tgt)), degree(deg), matrix(std::move(m)) {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
      throw AmbientMismatch("graded map matrix has shape " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + ", expected " + std::to_string(target.dim()) + "x" +
                            std::to_string(source.dim()));
    for (Index j = 0; j < matrix.cols(); ++j)
      for (Index i = 0; i < matrix.rows(); ++i)
        if (!is_zero(matrix(i, j)) && target.parity(i) != source.parity(j) + degree)
          throw std::invalid_argument("graded map entry (" + target.label(i) + ", " + source.label(j) +
                                      ") violates the degree");
  }

  Vec<S> operator()(const Vec<S>& v) const { return matrix * v; }
};

template <class S>
GradedMap<S> compose(const GradedMap<S>& g, const GradedMap<S>& f) {
  if (!(f.target == g.source)) throw AmbientMismatch("maps are not composable");
  return GradedMap<S>(f.source, g.target, g.matrix * f.matrix, f.degree + g.degree);
}

/// Sign of the reordering x_0 ... x_{n-1} -> x_perm[0] ... x_perm[n-1] in the
/// Grassmann algebra, where u^v = -(-1)^{|u||v|} v^u. Returns +1 or -1.
int koszul_sign(const std::vector<Index>& perm, const std::vector<Parity>& parities);

/// Tensor product basis (a_i (x) b_j) in row-major order.
SuperSpace tensor_space(const SuperSpace& a, const SuperSpace& b);

/// Canonical wedge monomial normal form: a sign and a weakly increasing
/// index list, or nothing when an even index repeats.
struct WedgeNormal {
  int sign = 1;
  std::vector<Index> factors;
};
std::optional<WedgeNormal> wedge_normalize(std::vector<Index> factors, const SuperSpace& space);

/// The n-th super exterior power of a space, on canonical monomials.
struct ExteriorPower {
  SuperSpace space;
  std::vector<std::vector<Index>> monomials;
  std::map<std::vector<Index>, Index> index;

  Index lookup(const std::vector<Index>& m) const { return index.at(m); }
};

ExteriorPower exterior_power(const SuperSpace& v, int n);

}  // namespace superlie

#endif
