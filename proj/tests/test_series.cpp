#include "doctest.h"

#include "oracles.hpp"
#include "properties.hpp"
#include "qseries/partitions.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

// zero-padded up to the order
TruncatedSeries ints(std::int64_t v, std::vector<long> c, std::int64_t order) {
  c.resize(static_cast<std::size_t>(order - v));
  return TruncatedSeries::from_ints(v, c, order);
}

std::vector<long> prefix(const TruncatedSeries& s, std::int64_t from, std::int64_t to) {
  std::vector<long> out;
  for (auto e = from; e < to; ++e) out.push_back(s.coeff(e).get_si());
  return out;
}

}  // namespace

TEST_CASE("make") {
  auto one = TruncatedSeries::make(0, {Integer(1)}, 1);
  CHECK(one.valuation() == 0);
  CHECK(one.order() == 1);
  CHECK(one.coeff(0) == 1);

  auto s = ints(-1, {2, 0, 3}, 2);
  CHECK(s.coeff(-1) == 2);
  CHECK(s.coeff(0) == 0);
  CHECK(s.coeff(1) == 3);
  CHECK(s.coeff(-5) == 0);
  CHECK_THROWS_AS(s.coeff(2), std::out_of_range);

  auto unknown = TruncatedSeries::make(0, {}, 0);
  CHECK(unknown.order() == 0);
  CHECK(unknown.is_zero());
  CHECK(unknown == TruncatedSeries());

  CHECK_THROWS_AS(TruncatedSeries::make(0, {Integer(1), Integer(2)}, 1), SeriesError);
}

TEST_CASE("normalization drops leading zeros") {
  auto s = ints(-2, {0, 0, 5, 1}, 2);
  CHECK(s.valuation() == 0);
  CHECK(s == ints(0, {5, 1}, 2));
}

TEST_CASE("add") {
  CHECK(ints(0, {1, 1}, 2) + ints(0, {1, -1}, 2) == TruncatedSeries::constant(2, 2));
  auto s = ints(1, {3, -2, 7}, 4);
  CHECK(s + TruncatedSeries::zero(100) == s);
  auto laurent = ints(-1, {1, 1}, 1) + ints(-1, {-1}, 0);
  CHECK(laurent.order() == 0);
  auto sum = ints(-1, {1, 1, 0}, 2) + ints(-1, {-1, 0, 0}, 2);
  CHECK(sum == TruncatedSeries::constant(1, 2));
  // order is the smaller one
  CHECK((ints(0, {1, 1, 1}, 3) + ints(0, {1}, 1)).order() == 1);
}

TEST_CASE("mul") {
  const std::int64_t N = 30;
  auto geo = ints(0, std::vector<long>(N, 1), N);
  auto t = mul(geo, ints(0, {1, -1}, N));
  CHECK(t == TruncatedSeries::constant(1, N));

  auto s = ints(-1, {4, 0, -3}, 2);
  CHECK(mul(s, TruncatedSeries::constant(1, 1000)) == s);

  // order bookkeeping: min(oa + vb, ob + va)
  auto a = ints(2, {1, 1}, 4), b = ints(-1, {1, 0, 2}, 2);
  CHECK(mul(a, b).order() == std::min<std::int64_t>(4 - 1, 2 + 2));
  CHECK(mul(a, b).valuation() == 1);

  // (sum p(n) q^n) * l_1 = 1 to order 50
  auto p = invert(eta(1, 50));
  CHECK(mul(p, eta(1, 50)) == TruncatedSeries::constant(1, 50));
  std::vector<Integer> pn;
  for (int n = 0; n < 50; ++n) pn.push_back(p_classic(n));
  CHECK(mul(TruncatedSeries::make(0, pn, 50), eta(1, 50)) == TruncatedSeries::constant(1, 50));
}

TEST_CASE("invert") {
  auto geo = invert(ints(0, {1, -1}, 12));
  CHECK(geo == ints(0, std::vector<long>(12, 1), 12));

  auto p = invert(eta(1, 11));
  for (int n = 0; n <= 10; ++n) CHECK(p.coeff(n) == oracle::p(n));
  CHECK(prefix(p, 0, 11) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});

  CHECK_THROWS_AS(invert(ints(0, {2, 1}, 5)), NonInvertibleError);
  CHECK_THROWS_AS(invert(TruncatedSeries::zero(5)), NonInvertibleError);

  auto laurent = ints(-2, {-1, 3, 1}, 1);
  auto inv = invert(laurent);
  CHECK(inv.valuation() == 2);
  CHECK(inv.order() == 1 - 2 * -2);
  CHECK(mul(laurent, inv).truncate(3) == TruncatedSeries::constant(1, 3));
}

TEST_CASE("pow") {
  auto p3 = pow(eta(1, 4), -3);
  CHECK(prefix(p3, 0, 4) == std::vector<long>{1, 3, 9, 22});
  auto s = ints(1, {2, -1, 5}, 4);
  CHECK(pow(s, 1) == s);
  CHECK(pow(ints(0, {1, -1, 0, 0}, 4), 2) == ints(0, {1, -2, 1, 0}, 4));
  CHECK(pow(s, 0).coeff(0) == 1);
  CHECK_THROWS_AS(pow(ints(0, {3, 1}, 5), -1), NonInvertibleError);
}

TEST_CASE("extract_ap") {
  auto s = ints(0, {1, 2, 3, 4}, 4);
  CHECK(extract_ap(s, 2, 1) == ints(0, {2, 4}, 2));
  CHECK(extract_ap(s, 2, 0) == ints(0, {1, 3}, 2));
  CHECK(extract_ap(s, 3, 2).order() == 1);  // ceil((4 - 2)/3)
  CHECK(extract_ap(s, 1, 0) == s);
}

TEST_CASE("substitute") {
  CHECK(substitute(ints(0, {1, 1}, 2), 3) == ints(0, {1, 0, 0, 1, 0, 0}, 6));
  auto s = ints(-1, {1, 2, 3}, 2);
  CHECK(substitute(s, 1) == s);
  // psi(q^2): exponents m(m+1)
  auto psi2 = substitute(theta_psi(60), 2);
  for (std::int64_t e = 0; e < psi2.order(); ++e) {
    bool tri = false;
    for (std::int64_t m = 0; m * (m + 1) <= e; ++m) tri |= m * (m + 1) == e;
    CHECK(psi2.coeff(e) == (tri ? 1 : 0));
  }
  // q -> -q twists odd coefficients
  CHECK(substitute(ints(0, {1, 1, 1}, 3), -1) == ints(0, {1, -1, 1}, 3));
}

TEST_CASE("reduce_mod") {
  auto r = reduce_mod(ints(0, {3, -4}, 2), 3);
  CHECK(r.coeff(0) == 0);
  CHECK(r.coeff(1) == 2);
  auto s = ints(0, {7, -3, 12, 5, -1}, 5);
  CHECK(reduce_mod(reduce_mod(s, 2), 2) == reduce_mod(s, 2));

  auto p = invert(eta(1, 5 * 39 + 5));
  CHECK(reduce_mod(extract_ap(p, 5, 4), 5).truncate(40) == TruncatedSeries::zero(40));
}

TEST_CASE("first_difference") {
  auto a = ints(0, {1, 2, 3, 4}, 4), b = ints(0, {1, 2, 0, 4}, 4);
  CHECK(first_difference(a, b) == std::optional<std::int64_t>(2));
  CHECK(!first_difference(a, a));
}

TEST_CASE("binomial factors") {
  auto s = ints(0, {1, 2, 3, 4, 5, 6}, 6);
  CHECK(div_binomial(mul_binomial(s, -1, 2), -1, 2) == s);
  CHECK(mul_binomial(TruncatedSeries::constant(1, 4), -1, 1) == ints(0, {1, -1, 0, 0}, 4));
}

TEST_CASE("to_string") {
  CHECK(ints(0, {1, -3, 0, 5}, 7).to_string() == "1 - 3*q + 5*q^3 + O(q^7)");
  CHECK(TruncatedSeries::zero(3).to_string() == "O(q^3)");
}

TEST_CASE("ring laws") {
  auto r = props::ring_laws(11, 60);
  CHECK_MESSAGE(r.failures == 0, r.first);
}

TEST_CASE("extract/substitute round-trip") {
  auto r = props::extract_roundtrip(12, 100);
  CHECK_MESSAGE(r.failures == 0, r.first);
}
