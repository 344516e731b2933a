#include "qseries/kernels.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

namespace qseries::kernels {

namespace {

std::atomic<bool> g_parallel{true};

std::vector<std::size_t> nonzero_indices(std::span<const Integer> a, std::size_t limit) {
  std::vector<std::size_t> nz;
  const std::size_t n = std::min(a.size(), limit);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) != 0) nz.push_back(i);
  }
  return nz;
}

}  // namespace

void set_parallel(bool enabled) noexcept { g_parallel.store(enabled, std::memory_order_relaxed); }

bool parallel_enabled() noexcept { return g_parallel.load(std::memory_order_relaxed); }

std::vector<Integer> convolve_serial(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len) {
  std::vector<Integer> c(out_len);
  const std::size_t na = std::min(a.size(), out_len);
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t nb = std::min(b.size(), out_len - i);
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < nb; ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return c;
}

// Output-stationary: each thread owns a block of result coefficients, so no
// two threads ever write the same mpz. The outer sum runs over the nonzero
// entries of the sparser operand only (eta products are O(sqrt N)-sparse).
std::vector<Integer> convolve_omp(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len) {
  auto nz_a = nonzero_indices(a, out_len);
  auto nz_b = nonzero_indices(b, out_len);
  if (nz_b.size() < nz_a.size()) {
    std::swap(a, b);
    std::swap(nz_a, nz_b);
  }
  std::vector<Integer> c(out_len);
  if (nz_a.empty() || b.empty()) return c;
  const auto nb = static_cast<std::ptrdiff_t>(b.size());
  const auto n_out = static_cast<std::ptrdiff_t>(out_len);

#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t n = 0; n < n_out; ++n) {
    const std::size_t lo = n >= nb ? static_cast<std::size_t>(n - nb + 1) : 0;
    auto it = std::lower_bound(nz_a.begin(), nz_a.end(), lo);
    mpz_ptr acc = c[static_cast<std::size_t>(n)].get_mpz_t();
    for (; it != nz_a.end() && static_cast<std::ptrdiff_t>(*it) <= n; ++it) {
      mpz_addmul(acc, a[*it].get_mpz_t(), b[static_cast<std::size_t>(n) - *it].get_mpz_t());
    }
  }
  return c;
}

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len) {
  if (!parallel_enabled() || omp_in_parallel()) return convolve_serial(a, b, out_len);
  const std::size_t work = std::min(a.size(), out_len) * std::min(b.size(), out_len);
  if (work < kParallelWorkThreshold) return convolve_serial(a, b, out_len);
  return convolve_omp(a, b, out_len);
}

std::vector<Integer> inverse(std::span<const Integer> a, std::size_t out_len) {
  std::vector<Integer> inv(out_len);
  if (out_len == 0) return inv;
  const Integer& lead = a[0];
  inv[0] = lead;
  std::vector<std::size_t> nz = nonzero_indices(a, out_len);
  if (!nz.empty() && nz.front() == 0) nz.erase(nz.begin());
  Integer acc;
  for (std::size_t n = 1; n < out_len; ++n) {
    acc = 0;
    for (std::size_t k : nz) {
      if (k > n) break;
      mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), inv[n - k].get_mpz_t());
    }
    // lead is +-1, so dividing by it is multiplying by it.
    inv[n] = -acc * lead;
  }
  return inv;
}

void mul_binomial_inplace(std::vector<Integer>& x, int c, std::size_t k) {
  for (std::size_t i = x.size(); i-- > k;) {
    if (c > 0) {
      x[i] += x[i - k];
    } else {
      x[i] -= x[i - k];
    }
  }
}

void div_binomial_inplace(std::vector<Integer>& x, int c, std::size_t k) {
  for (std::size_t i = k; i < x.size(); ++i) {
    if (c > 0) {
      x[i] -= x[i - k];
    } else {
      x[i] += x[i - k];
    }
  }
}

std::vector<Integer> reduce_mod_serial(std::span<const Integer> x, const Integer& m) {
  std::vector<Integer> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), x[i].get_mpz_t(), m.get_mpz_t());
  }
  return out;
}

std::vector<Integer> reduce_mod_omp(std::span<const Integer> x, const Integer& m) {
  std::vector<Integer> out(x.size());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    mpz_fdiv_r(out[u].get_mpz_t(), x[u].get_mpz_t(), m.get_mpz_t());
  }
  return out;
}

}  // namespace qseries::kernels
