#include "qseries/ntheory.hpp"

#include <array>
#include <string>

#include "qseries/errors.hpp"

namespace qseries::ntheory {

namespace {

constexpr std::array<FamilyShape, 3> kShapes{{
    {"thm3.3ii", 2, 3, 4, 2, -2, 3},
    {"thm3.3iii", 6, 19, 4, 6, -18, 5},
    {"thm4.3", 2, 11, 12, 2, -2, 5},
}};

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int legendre(std::int64_t w, std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("legendre symbol needs an odd prime, got " + std::to_string(p));
  Integer base = w;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), base.get_mpz_t(), Integer(p).get_mpz_t());
  if (r == 0) return 0;
  Integer power;
  mpz_powm_ui(power.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
  return power == 1 ? 1 : -1;
}

const FamilyShape& family_shape(FamilyId id) { return kShapes[static_cast<std::size_t>(id)]; }

FamilyId family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kShapes.size(); ++i) {
    if (kShapes[i].name == name) return static_cast<FamilyId>(i);
  }
  throw DomainError("unknown congruence family '" + std::string(name) + "'");
}

std::vector<FamilyIndex> family_indices(FamilyId id, std::int64_t p, std::int64_t alpha) {
  const FamilyShape& s = family_shape(id);
  if (alpha < 0) throw PreconditionError("alpha must be nonnegative");
  if (!is_prime(p) || p < s.min_prime) {
    throw PreconditionError(std::string(s.name) + " needs a prime p >= " + std::to_string(s.min_prime) + ", got " +
                            std::to_string(p));
  }
  if (legendre(s.legendre_arg, p) != -1) {
    throw PreconditionError("(" + std::to_string(s.legendre_arg) + "/" + std::to_string(p) + ") != -1");
  }
  Integer hi;  // p^{2 alpha + 2}
  Integer lo;  // p^{2 alpha + 1}
  mpz_ui_pow_ui(hi.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * alpha + 2));
  mpz_ui_pow_ui(lo.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * alpha + 1));
  const Integer numer = s.d * hi + 1;
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), static_cast<unsigned long>(s.e))) {
    throw PreconditionError("offset (" + numer.get_str() + ")/" + std::to_string(s.e) + " is not an integer");
  }
  const Integer base = numer / s.e;
  std::vector<FamilyIndex> out;
  out.reserve(static_cast<std::size_t>(p - 1));
  for (std::int64_t j = 1; j <= p - 1; ++j) {
    out.push_back({s.c * hi, s.c * lo * j + base, s.modulus});
  }
  return out;
}

std::vector<std::int64_t> qualifying_primes(FamilyId id, std::size_t count) {
  const FamilyShape& s = family_shape(id);
  std::vector<std::int64_t> out;
  for (std::int64_t p = s.min_prime; out.size() < count; ++p) {
    if (p > 2 && is_prime(p) && legendre(s.legendre_arg, p) == -1) out.push_back(p);
  }
  return out;
}

}  // namespace qseries::ntheory
