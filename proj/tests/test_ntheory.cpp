#include "doctest.h"

#include "qseries/ntheory.hpp"
#include "qseries/errors.hpp"

using namespace qseries;
using namespace qseries::ntheory;

namespace {

int brute_legendre(long w, long p) {
  long r = ((w % p) + p) % p;
  if (r == 0) return 0;
  for (long x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(91));
  CHECK(!is_prime(-7));
}

TEST_CASE("legendre") {
  CHECK(legendre(-2, 5) == -1);
  CHECK(legendre(-18, 5) == -1);
  for (long p : {3, 5, 7, 11, 13, 41}) CHECK(legendre(1, p) == 1);
  CHECK(legendre(10, 5) == 0);
  CHECK_THROWS_AS(legendre(3, 2), DomainError);
  CHECK_THROWS_AS(legendre(3, 9), DomainError);
  for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (long w = -40; w <= 40; ++w) {
      CHECK(legendre(w, p) == brute_legendre(w, p));
      CHECK(legendre(w, p) == legendre(w + 3 * p, p));
      for (long u : {2L, 3L, -1L}) {
        if (w % p && u % p) CHECK(legendre(w * u, p) == legendre(w, p) * legendre(u, p));
      }
    }
  }
}

TEST_CASE("family_indices") {
  auto a = family_indices(FamilyId::kVTwoAdic, 5, 0);
  REQUIRE(a.size() == 4);
  for (int j = 1; j <= 4; ++j) CHECK(a[j - 1] == FamilyIndex{50, 10 * j + 19, 2});

  auto b = family_indices(FamilyId::kVSixAdic, 5, 0);
  REQUIRE(b.size() == 4);
  for (int j = 1; j <= 4; ++j) CHECK(b[j - 1] == FamilyIndex{150, 30 * j + 119, 6});

  auto c = family_indices(FamilyId::kSigmaTwoAdic, 5, 0);
  REQUIRE(c.size() == 4);
  for (int j = 1; j <= 4; ++j) CHECK(c[j - 1] == FamilyIndex{50, 10 * j + 23, 2});

  auto d = family_indices(FamilyId::kVTwoAdic, 5, 1);
  CHECK(d[0] == FamilyIndex{1250, 250 + (3 * 625 + 1) / 4, 2});

  CHECK_THROWS_AS(family_indices(FamilyId::kVTwoAdic, 3, 0), PreconditionError);
  CHECK_THROWS_AS(family_indices(FamilyId::kVTwoAdic, 9, 0), PreconditionError);
  CHECK_THROWS_AS(family_indices(FamilyId::kVTwoAdic, 5, -1), PreconditionError);
}

TEST_CASE("offsets are exact for every qualifying prime") {
  for (auto id : {FamilyId::kVTwoAdic, FamilyId::kVSixAdic, FamilyId::kSigmaTwoAdic}) {
    const auto& s = family_shape(id);
    for (long p = 3; p <= 50; ++p) {
      if (!is_prime(p) || p < s.min_prime || legendre(s.legendre_arg, p) != -1) continue;
      for (long alpha = 0; alpha <= 2; ++alpha) {
        auto idx = family_indices(id, p, alpha);
        CHECK(idx.size() == static_cast<std::size_t>(p - 1));
        Integer p2 = 1;
        for (long i = 0; i < 2 * alpha + 2; ++i) p2 *= p;
        CHECK((s.d * p2 + 1) % s.e == 0);
        CHECK(idx[0].step == s.c * p2);
      }
    }
  }
}

TEST_CASE("qualifying primes") {
  CHECK(qualifying_primes(FamilyId::kVTwoAdic, 3) == std::vector<std::int64_t>{5, 7, 13});
  CHECK(family_from_name(family_shape(FamilyId::kVSixAdic).name) == FamilyId::kVSixAdic);
  CHECK_THROWS_AS(family_from_name("nope"), DomainError);
}
