#include "superlie/modp.hpp"

#include <ostream>

#include "superlie/rational.hpp"

namespace superlie {

ModP ModP::parse(std::string_view text, std::uint32_t p) {
  // Fractions are accepted and mapped through the reduction Z_(p) -> F_p.
  Rational q = Rational::parse(text);
  mpq_class m = q.to_mpq();
  mpz_class num = m.get_num() % p, den = m.get_den() % p;
  if (den == 0) throw std::invalid_argument("denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(p));
  ModP n(num.get_si(), p), d(den.get_si(), p);
  return n / d;
}

std::string ModP::str() const { return std::to_string(v_); }

ModP ModP::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::domain_error("ModP: inverse of an unbound integer literal");
  }
  if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
  long long a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    long long q = a / b, t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ModP(x0, p_);
}

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

}  // namespace superlie
