#include "doctest.h"

#include "oracles.hpp"
#include "qseries/expr.hpp"
#include "qseries/mocktheta.hpp"
#include "qseries/qproducts.hpp"

using namespace qseries;

namespace {

std::vector<long> head(MockThetaId id, std::size_t n) {
  auto s = mock_series(id, static_cast<std::int64_t>(n));
  std::vector<long> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.coeff(static_cast<std::int64_t>(i)).get_si());
  return out;
}

}  // namespace

TEST_CASE("frozen prefixes") {
  // from the non-incremental oracle
  CHECK(head(MockThetaId::MU, 12) == std::vector<long>{1, -1, 1, 2, -1, -4, 1, 5, -2, -5, 4, 7});
  CHECK(head(MockThetaId::SIGMA, 12) == std::vector<long>{0, 1, 1, 2, 3, 3, 5, 7, 8, 11, 14, 17});
  CHECK(head(MockThetaId::BETA, 12) == std::vector<long>{0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 7, 10});
  CHECK(head(MockThetaId::LAMBDA, 10) == std::vector<long>{1, -1, 3, -5, 6, -7, 11, -16, 18, -21});
  // P_v(5) = 3: q/(1-q) gives 1 and q^4(1+q)/((1-q)(1-q^3)) gives 2
  CHECK(head(MockThetaId::V, 12) == std::vector<long>{0, 1, 1, 1, 2, 3, 3, 4, 5, 6, 8, 9});
  CHECK(head(MockThetaId::NU, 9) == std::vector<long>{0, 1, 3, 5, 8, 14, 22, 33, 51});
  CHECK(head(MockThetaId::PHI6, 9) == std::vector<long>{1, -1, 2, -1, 1, -3, 3, -3, 4});
  CHECK(head(MockThetaId::PSI6, 9) == std::vector<long>{0, 1, -1, 1, -2, 3, -2, 2, -4});
}

TEST_CASE("incremental sum matches the direct oracle") {
  for (auto id : kAllMockThetaIds) {
    auto s = mock_series(id, 100);
    auto o = oracle::mock_direct(id, 100);
    for (std::int64_t n = 0; n < 100; ++n) {
      INFO(mock_name(id), " n=", n);
      CHECK(s.coeff(n) == o[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("valuation_schedule") {
  CHECK(valuation_schedule(MockThetaId::V, 3) == 16);
  CHECK(valuation_schedule(MockThetaId::BETA, 0) == 1);
  CHECK(valuation_schedule(MockThetaId::LAMBDA, 7) == 7);
  for (auto id : kAllMockThetaIds) {
    for (int n = 0; n < 30; ++n) CHECK(valuation_schedule(id, n) < valuation_schedule(id, n + 1));
  }
}

TEST_CASE("names") {
  for (auto id : kAllMockThetaIds) CHECK(mock_from_name(mock_name(id)) == id);
  CHECK_THROWS_AS(mock_from_name("chi"), DomainError);
}

TEST_CASE("truncation stability") {
  for (auto id : kAllMockThetaIds) {
    for (std::int64_t n : {50, 200}) {
      auto big = mock_series(id, n);
      for (std::int64_t lo : {0L, 1L, 17L, n - 1}) CHECK(big.truncate(lo) == mock_series(id, lo));
    }
  }
}

TEST_CASE("structural relations") {
  auto ev = [](const char* t, std::int64_t n) { return eval_expr(parse_expr(t), n); };
  CHECK(ev("SUB(mock(nu), 2) - SUB(mock(sigma), -1)", 400) == ev("q*l(4)^2*l(12)^2/(l(2)^2*l(6))", 400));
  CHECK(ev("SUB(mock(phi6), 3) + 2*q^-1*SUB(mock(psi6), 3) + 2*mock(beta)", 400) ==
        ev("l(2)*l(3)^5/(l(1)^2*l(6)^3)", 400));
}

TEST_CASE("sign substitution matches re-summation") {
  // sigma(-q) and mu(-q^2) re-summed with substituted arguments
  const std::size_t N = 120;
  auto sigma_neg = substitute(mock_series(MockThetaId::SIGMA, N), -1);
  oracle::Poly direct(N);
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t val = (k + 1) * (k + 2) / 2;
    if (val >= static_cast<std::int64_t>(N)) break;
    // q -> -q: (q;q)_k becomes prod (1 - (-1)^i q^i), (q;q^2)_{k+1} becomes (-q;q^2)_{k+1}
    oracle::Poly num = oracle::one(N), den = oracle::one(N);
    for (std::int64_t i = 1; i <= k; ++i) {
      oracle::Poly f = oracle::one(N);
      if (i < static_cast<std::int64_t>(N)) f[static_cast<std::size_t>(i)] = (i % 2) ? -1 : 1;
      num = oracle::mul(num, f);
    }
    for (std::int64_t i = 0; i <= k; ++i) {
      oracle::Poly f = oracle::one(N);
      const auto e = static_cast<std::size_t>(2 * i + 1);
      if (e < N) f[e] = 1;
      den = oracle::mul(den, f);
    }
    auto term = oracle::shifted(oracle::div(num, den), val, val % 2 ? -1 : 1);
    for (std::size_t i = 0; i < N; ++i) direct[i] += term[i];
  }
  for (std::size_t i = 0; i < N; ++i) CHECK(sigma_neg.coeff(static_cast<std::int64_t>(i)) == direct[i]);

  auto mu2 = substitute(mock_series(MockThetaId::MU, N / 2), -2);
  auto mu = mock_series(MockThetaId::MU, N / 2);
  for (std::int64_t e = 0; e < static_cast<std::int64_t>(N); ++e) {
    const Integer want = e % 2 ? Integer(0) : ((e / 2) % 2 ? -mu.coeff(e / 2) : mu.coeff(e / 2));
    CHECK(mu2.coeff(e) == want);
  }
}
