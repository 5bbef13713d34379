#include "superlie/superspace.hpp"

#include <functional>

namespace superlie {

int koszul_sign(const std::vector<Index>& perm, const std::vector<Parity>& parities) {
  if (perm.size() != parities.size()) throw std::invalid_argument("permutation and parity list differ in length");
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) {
        int both_odd = bit(parities[static_cast<std::size_t>(perm[i])]) & bit(parities[static_cast<std::size_t>(perm[j])]);
        if (!both_odd) s = -s;
      }
  return s;
}

SuperSpace tensor_space(const SuperSpace& a, const SuperSpace& b) {
  std::vector<BasisElement> basis;
  basis.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) basis.push_back({a.label(i) + "⊗" + b.label(j), a.parity(i) + b.parity(j)});
  return SuperSpace(std::move(basis));
}

std::optional<WedgeNormal> wedge_normalize(std::vector<Index> factors, const SuperSpace& space) {
  WedgeNormal out;
  // Insertion sort; every adjacent swap contributes -(-1)^{|u||v|}.
  for (std::size_t i = 1; i < factors.size(); ++i)
    for (std::size_t j = i; j > 0 && factors[j - 1] > factors[j]; --j) {
      if (!(space.p(factors[j - 1]) & space.p(factors[j]))) out.sign = -out.sign;
      std::swap(factors[j - 1], factors[j]);
    }
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1] && space.parity(factors[i]) == Parity::Even) return std::nullopt;
  out.factors = std::move(factors);
  return out;
}

ExteriorPower exterior_power(const SuperSpace& v, int n) {
  if (n < 0) throw std::invalid_argument("negative exterior degree");
  ExteriorPower out;
  std::vector<BasisElement> basis;
  std::vector<Index> cur;
  std::function<void(Index)> rec = [&](Index start) {
    if (static_cast<int>(cur.size()) == n) {
      std::string label;
      int par = 0;
      for (std::size_t k = 0; k < cur.size(); ++k) {
        if (k) label += "∧";
        label += v.label(cur[k]);
        par ^= v.p(cur[k]);
      }
      if (cur.empty()) label = "1";
      out.index.emplace(cur, static_cast<Index>(out.monomials.size()));
      out.monomials.push_back(cur);
      basis.push_back({label, parity_of(par)});
      return;
    }
    for (Index i = start; i < v.dim(); ++i) {
      if (!cur.empty() && cur.back() == i && v.parity(i) == Parity::Even) continue;
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  out.space = SuperSpace(std::move(basis));
  return out;
}

}  // namespace superlie
