#ifndef SUPERLIE_CERTIFICATE_HPP
#define SUPERLIE_CERTIFICATE_HPP

#include <string>
#include <vector>

namespace superlie {

/// Outcome of a verification: empty when certified, otherwise the first few
/// violations, each naming its witness.
struct Certificate {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::vector<std::string> violations;
  std::size_t suppressed = 0;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
  /// True once enough witnesses are collected; checkers may stop early.
  bool saturated() const { return violations.size() >= kMaxWitnesses; }

  void fail(std::string witness) {
    if (saturated())
      ++suppressed;
    else
      violations.push_back(std::move(witness));
  }
  void require(bool cond, const std::string& witness) {
    if (!cond) fail(witness);
  }
  void merge(const Certificate& other, const std::string& prefix = "") {
    for (const auto& v : other.violations) fail(prefix + v);
    suppressed += other.suppressed;
  }
};

}  // namespace superlie

#endif
