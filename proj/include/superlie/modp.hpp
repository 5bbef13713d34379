#ifndef SUPERLIE_MODP_HPP
#define SUPERLIE_MODP_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superlie {

/// Element of the prime field F_p, p odd.
///
/// Each value carries its modulus. A modulus of 0 marks an integer literal
/// that has not met a field element yet (what `ModP(0)` or `ModP(-1)` produce
/// inside generic code); it binds to the modulus of the first bound operand.
class ModP {
public:
  ModP() = default;
  ModP(long long n) : v_(n), p_(0) {}
  ModP(long long n, std::uint32_t p) : p_(p) { v_ = reduce(n, p); }

  static ModP parse(std::string_view text, std::uint32_t p);
  std::string str() const;

  std::uint32_t modulus() const { return p_; }
  long long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return p_ == 0 ? v_ == 1 : v_ == 1 % static_cast<long long>(p_); }

  ModP inverse() const;

  friend ModP operator+(const ModP& a, const ModP& b) {
    auto p = bind(a, b);
    if (p == 0) return ModP(a.v_ + b.v_);
    return ModP(reduce(a.at(p) + b.at(p), p), p, Raw{});
  }
  friend ModP operator-(const ModP& a, const ModP& b) {
    auto p = bind(a, b);
    if (p == 0) return ModP(a.v_ - b.v_);
    return ModP(reduce(a.at(p) - b.at(p), p), p, Raw{});
  }
  friend ModP operator*(const ModP& a, const ModP& b) {
    auto p = bind(a, b);
    if (p == 0) return ModP(a.v_ * b.v_);
    return ModP(reduce(a.at(p) * b.at(p), p), p, Raw{});
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  friend ModP operator-(const ModP& a) {
    if (a.p_ == 0) return ModP(-a.v_);
    return ModP(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_, Raw{});
  }
  friend bool operator==(const ModP& a, const ModP& b) {
    auto p = bind(a, b);
    if (p == 0) return a.v_ == b.v_;
    return a.at(p) == b.at(p);
  }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

private:
  struct Raw {};
  ModP(long long v, std::uint32_t p, Raw) : v_(v), p_(p) {}

  static long long reduce(long long n, std::uint32_t p) {
    long long r = n % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }
  static std::uint32_t bind(const ModP& a, const ModP& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw std::domain_error("ModP: mixed moduli");
    return a.p_ != 0 ? a.p_ : b.p_;
  }
  long long at(std::uint32_t p) const { return p_ == 0 ? reduce(v_, p) : v_; }

  long long v_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ModP& x);

}  // namespace superlie

#endif
