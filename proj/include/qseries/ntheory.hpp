#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qseries::ntheory {

using Integer = mpz_class;

// Trial division; the primes in play are tiny.
bool is_prime(std::int64_t n) noexcept;

// Legendre symbol (w/p) by Euler's criterion. Throws DomainError unless p is an odd prime.
int legendre(std::int64_t w, std::int64_t p);

// One arithmetic progression A*n + B of a congruence family, all of whose
// coefficients must vanish modulo M.
struct FamilyIndex {
  Integer step;    // A
  Integer offset;  // B
  Integer modulus; // M

  bool operator==(const FamilyIndex&) const = default;
};

enum class FamilyId {
  kVTwoAdic,     // P_v(2 p^{2a+2} n + 2 p^{2a+1} j + (3 p^{2a+2} + 1)/4) = 0 mod 2
  kVSixAdic,     // P_v(6 p^{2a+2} n + 6 p^{2a+1} j + (19 p^{2a+2} + 1)/4) = 0 mod 6
  kSigmaTwoAdic, // P_sigma(2 p^{2a+2} n + 2 p^{2a+1} j + (11 p^{2a+2} + 1)/12) = 0 mod 2
};

// Static description of a family: A = c p^{2a+2}, B = c p^{2a+1} j + (d p^{2a+2} + 1)/e,
// valid for primes p >= min_prime with (w/p) = -1.
struct FamilyShape {
  std::string_view name;  // registry spelling, e.g. "thm3.3ii"
  std::int64_t c, d, e;
  std::int64_t modulus;
  std::int64_t legendre_arg;
  std::int64_t min_prime;
};

const FamilyShape& family_shape(FamilyId id);
FamilyId family_from_name(std::string_view name);  // throws DomainError on unknown names

// Progressions for j = 1..p-1. Throws PreconditionError when p does not qualify
// or the offset is not an exact integer.
std::vector<FamilyIndex> family_indices(FamilyId id, std::int64_t p, std::int64_t alpha);

// The first `count` primes that satisfy the family's Legendre condition, found by scanning.
std::vector<std::int64_t> qualifying_primes(FamilyId id, std::size_t count);

}  // namespace qseries::ntheory
