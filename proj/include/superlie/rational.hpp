#ifndef SUPERLIE_RATIONAL_HPP
#define SUPERLIE_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace superlie {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline; anything larger spills into a shared immutable GMP rational.
/// The representation is always canonical: gcd(num, den) = 1 and den > 0,
/// and a value is stored big only if it does not fit the small form.
class Rational {
public:
  Rational() = default;
  Rational(long long n);
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  /// Parses "a", "-a" or "a/b" (b != 0); the result is reduced.
  static Rational parse(std::string_view text);
  /// "a/b" with b > 0, or "a" when b = 1.
  std::string str() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;
  bool is_small() const { return !big_; }
  mpq_class to_mpq() const;

  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace superlie

#endif
