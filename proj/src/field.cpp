#include "superlie/field.hpp"

#include <stdexcept>

namespace superlie {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::str() const { return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p); }

}  // namespace superlie
