#include "doctest.h"

#include "oracles.hpp"
#include "qseries/qproducts.hpp"

using namespace qseries;

TEST_CASE("pochhammer") {
  auto two = pochhammer({1, 1, 1, 2}, 10);
  CHECK(two == TruncatedSeries::from_ints(0, {1, -1, -1, 1, 0, 0, 0, 0, 0, 0}, 10));
  auto inf = pochhammer({1, 1, 1, std::nullopt}, 16);
  CHECK(inf == TruncatedSeries::from_ints(0, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}, 16));
  CHECK(pochhammer({-1, 1, 1, 1}, 4) == TruncatedSeries::from_ints(0, {1, 1, 0, 0}, 4));
  CHECK_THROWS_AS(pochhammer({1, 0, 1, std::nullopt}, 4), DomainError);
}

TEST_CASE("eta") {
  CHECK(eta(1, 400) == pochhammer({1, 1, 1, std::nullopt}, 400));
  CHECK(eta(2, 300) == substitute(eta(1, 150), 2));
  CHECK(mul(eta(1, 200), invert(eta(1, 200))) == TruncatedSeries::constant(1, 200));
  CHECK(eta(5, 200) == pochhammer({1, 5, 5, std::nullopt}, 200));
}

TEST_CASE("eta_quotient") {
  auto p = eta_quotient({{1, -1}}, 7);
  for (int n = 0; n < 7; ++n) CHECK(p.coeff(n) == oracle::p(n));
  auto v = eta_quotient({{4, 3}, {1, -1}, {2, -1}}, 2);
  CHECK(v.coeff(0) == 1);
  CHECK(v.coeff(1) == 1);
  auto lam = eta_quotient({{2, 3}, {3, 2}, {1, -3}, {6, -1}}, 2);
  CHECK(lam.coeff(0) == 1);
  CHECK(lam.coeff(1) == 3);
}

TEST_CASE("theta_f") {
  auto phi = theta_f(1, 1, 1, 1, 400);
  auto psi = theta_f(1, 1, 1, 3, 400);
  for (std::int64_t e = 0; e < 400; ++e) {
    long sq = 0, tri = 0;
    for (long m = -30; m <= 30; ++m) sq += m * m == e;
    for (long m = 0; m * (m + 1) / 2 <= e; ++m) tri += m * (m + 1) / 2 == e;
    CHECK(phi.coeff(e) == sq);
    CHECK(psi.coeff(e) == tri);
  }
  CHECK(theta_f(-1, 1, -1, 2, 400) == eta(1, 400));
  CHECK(theta_phi(100) == phi.truncate(100));
  CHECK(theta_psi(100) == psi.truncate(100));
  CHECK_THROWS_AS(theta_f(1, 0, 1, 0, 10), DomainError);
}

TEST_CASE("triple product") {
  const std::int64_t N = 400;
  struct Case { int s1; long a; int s2; long b; };
  for (auto c : {Case{1, 1, 1, 1}, Case{1, 1, 1, 3}, Case{-1, 1, -1, 2}, Case{1, 1, 1, 5}}) {
    const long ab = c.a + c.b;
    auto prod = mul(mul(pochhammer({-c.s1, c.a, ab, std::nullopt}, N), pochhammer({-c.s2, c.b, ab, std::nullopt}, N)),
                    pochhammer({c.s1 * c.s2, ab, ab, std::nullopt}, N));
    CHECK(theta_f(c.s1, c.a, c.s2, c.b, N) == prod);
  }
}

TEST_CASE("product forms") {
  const std::int64_t N = 400;
  CHECK(substitute(theta_phi(N), -1) == eta_quotient({{1, 2}, {2, -1}}, N));
  CHECK(theta_psi(N) == eta_quotient({{2, 2}, {1, -1}}, N));
  CHECK(theta_phi(N) == eta_quotient({{2, 5}, {1, -2}, {4, -2}}, N));
}

TEST_CASE("jacobi_cube") {
  auto j = jacobi_cube(500);
  CHECK(j.coeff(0) == 1);
  CHECK(j.coeff(1) == -3);
  CHECK(j.coeff(2) == 0);
  CHECK(j.coeff(3) == 5);
  CHECK(j.coeff(6) == -7);
  CHECK(j.coeff(10) == 9);
  CHECK(j == pow(eta(1, 500), 3));
}

TEST_CASE("dissections") {
  const std::int64_t N = 300;
  for (long p : {3, 5, 7}) {
    CHECK(psi_p_dissection_rhs(p, N) == theta_psi(N));
    CHECK(f1cubed_p_dissection_rhs(p, N) == jacobi_cube(N));
  }
  for (long p : {5, 7, 11}) CHECK(f1_p_dissection_rhs(p, N) == eta(1, N));
  CHECK(dissection_residue(DissectionLemma::kPsi, 3) == 1);
  CHECK_THROWS_AS(psi_p_dissection_rhs(9, N), DomainError);
  CHECK_THROWS_AS(f1_p_dissection_rhs(3, N), DomainError);
  CHECK_THROWS_AS(f1cubed_p_dissection_rhs(2, N), DomainError);
}

TEST_CASE("dissection exclusions") {
  const std::int64_t N = 300;
  auto tail_matches = [&](DissectionLemma lemma, long p) {
    const long r = dissection_residue(lemma, p);
    return extract_ap(dissection_lhs(lemma, N), p, r) == extract_ap(dissection_tail(lemma, p, N), p, r);
  };
  for (long p : {3, 5, 7}) {
    CHECK(dissection_exclusion_holds(DissectionLemma::kPsi, p));
    CHECK(tail_matches(DissectionLemma::kPsi, p));
    CHECK(dissection_exclusion_holds(DissectionLemma::kEtaCubed, p));
    CHECK(tail_matches(DissectionLemma::kEtaCubed, p));
  }
  for (long p : {5, 7, 11}) {
    CHECK(dissection_exclusion_holds(DissectionLemma::kEta, p));
    CHECK(tail_matches(DissectionLemma::kEta, p));
  }
}

TEST_CASE("binomial congruences") {
  CHECK(verify_binomial_congruence(1, 1, 3, 200));
  CHECK(verify_binomial_congruence(2, 1, 5, 200));
  CHECK(verify_binomial_congruence(1, 2, 7, 200));
  CHECK(verify_dyadic_congruence(2, 200));
  CHECK(verify_dyadic_congruence(3, 200));
  CHECK(verify_binomial_congruence(1, 1, 2, 200));
}
