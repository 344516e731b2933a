#include <random>

#include "doctest.h"

#include "qseries/kernels.hpp"
#include "qseries/qproducts.hpp"

using namespace qseries;

namespace {

std::vector<Integer> random_ints(std::mt19937_64& rng, std::size_t n, bool big) {
  std::vector<Integer> v(n);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (auto& x : v) {
    x = d(rng);
    if (big) x *= Integer("123456789012345678901234567890");
  }
  return v;
}

}  // namespace

TEST_CASE("convolve: omp matches serial") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 7u, 64u, 300u, 1200u}) {
    auto a = random_ints(rng, n, n % 2);
    auto b = random_ints(rng, n / 2 + 1, false);
    for (std::size_t out : {n, n / 3, n + 5}) {
      CHECK(kernels::convolve_serial(a, b, out) == kernels::convolve_omp(a, b, out));
    }
  }
}

TEST_CASE("reduce_mod: omp matches serial") {
  std::mt19937_64 rng(8);
  auto x = random_ints(rng, 2000, true);
  for (long m : {2L, 3L, 6L, 1000003L}) {
    auto s = kernels::reduce_mod_serial(x, m);
    CHECK(s == kernels::reduce_mod_omp(x, m));
    for (const auto& r : s) {
      CHECK(r >= 0);
      CHECK(r < m);
    }
  }
}

TEST_CASE("inverse kernel") {
  std::vector<Integer> a{1, -1};
  auto inv = kernels::inverse(a, 10);
  CHECK(inv == std::vector<Integer>(10, 1));
}

TEST_CASE("parallel toggle gives identical series") {
  kernels::set_parallel(true);
  auto on = eta_quotient({{1, -5}, {2, 3}, {7, 2}}, 800);
  kernels::set_parallel(false);
  auto off = eta_quotient({{1, -5}, {2, 3}, {7, 2}}, 800);
  kernels::set_parallel(true);
  CHECK(on == off);
}
