#ifndef SUPERLIE_FIELD_HPP
#define SUPERLIE_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>

#include "superlie/modp.hpp"
#include "superlie/rational.hpp"

namespace superlie {

/// Ground field of an algebra: the rationals or F_p with p an odd prime.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws std::invalid_argument unless p is an odd prime.
  static FieldSpec prime(std::uint32_t p);
  /// "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Field-specific conversions used by generic code.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool characteristic_zero = true;
  static Rational parse(std::string_view text, const FieldSpec&) { return Rational::parse(text); }
  static std::string format(const Rational& x) { return x.str(); }
  static bool matches(const FieldSpec& f) { return f.kind == FieldSpec::Kind::Rationals; }
};

template <>
struct ScalarTraits<ModP> {
  static constexpr bool characteristic_zero = false;
  static ModP parse(std::string_view text, const FieldSpec& f) { return ModP::parse(text, f.p); }
  static std::string format(const ModP& x) { return x.str(); }
  static bool matches(const FieldSpec& f) { return f.kind == FieldSpec::Kind::PrimeField; }
};

template <class S>
bool is_zero(const S& x) {
  return x.is_zero();
}

template <class S>
S inverse(const S& x) {
  return x.inverse();
}

}  // namespace superlie

namespace Eigen {

template <>
struct NumTraits<superlie::Rational> : GenericNumTraits<superlie::Rational> {
  typedef superlie::Rational Real;
  typedef superlie::Rational NonInteger;
  typedef superlie::Rational Nested;
  typedef superlie::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<superlie::ModP> : GenericNumTraits<superlie::ModP> {
  typedef superlie::ModP Real;
  typedef superlie::ModP NonInteger;
  typedef superlie::ModP Nested;
  typedef superlie::ModP Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
