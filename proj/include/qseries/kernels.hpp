#pragma once

// Coefficient-buffer kernels behind TruncatedSeries arithmetic.
//
// Each data-parallel kernel has a serial reference implementation kept for
// testing and benchmarking; the dispatching entry points pick the OpenMP
// version for large inputs when parallel execution is enabled.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qseries::kernels {

using Integer = mpz_class;

// c[n] = sum_{i+j=n} a[i]*b[j] for n < out_len.
std::vector<Integer> convolve_serial(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);
std::vector<Integer> convolve_omp(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);

// First out_len coefficients of 1/a; a[0] must be +1 or -1 (not checked here).
// The recurrence is sequential in n; only the sparse structure of `a` is exploited.
std::vector<Integer> inverse(std::span<const Integer> a, std::size_t out_len);

// x <- x*(1 + c*q^k) and x <- x/(1 + c*q^k), c = +-1, k >= 1, truncated to x.size().
void mul_binomial_inplace(std::vector<Integer>& x, int c, std::size_t k);
void div_binomial_inplace(std::vector<Integer>& x, int c, std::size_t k);

// x mod m into [0, m), elementwise.
std::vector<Integer> reduce_mod_serial(std::span<const Integer> x, const Integer& m);
std::vector<Integer> reduce_mod_omp(std::span<const Integer> x, const Integer& m);

// Process-wide switch for the OpenMP paths (the CLI's --parallel flag).
void set_parallel(bool enabled) noexcept;
bool parallel_enabled() noexcept;

// Work (multiply-adds) below which convolve() stays serial.
inline constexpr std::size_t kParallelWorkThreshold = 1u << 16;

}  // namespace qseries::kernels
