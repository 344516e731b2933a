#include "qseries/qproducts.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qseries/kernels.hpp"
#include "qseries/ntheory.hpp"

namespace qseries {

namespace {

std::size_t len(std::int64_t order) { return static_cast<std::size_t>(std::max<std::int64_t>(order, 0)); }

// q^s * (series computed to order - s), truncated back to `order`.
template <typename Build>
TruncatedSeries shifted(std::int64_t s, std::int64_t order, Build build) {
  if (s >= order) return TruncatedSeries::zero(order);
  return shift(build(order - s), s).truncate(order);
}

// f(c, d) where c = sign*q^a is evaluated for a single index m; the
// exponent is a*m(m+1)/2 + b*m(m-1)/2 and the sign follows the parities of
// the two triangular numbers.
void add_theta_term(std::vector<Integer>& c, int s1, std::int64_t a, int s2, std::int64_t b, std::int64_t m) {
  const std::int64_t t1 = m * (m + 1) / 2;
  const std::int64_t t2 = m * (m - 1) / 2;
  const std::int64_t e = a * t1 + b * t2;
  if (e < 0 || static_cast<std::size_t>(e) >= c.size()) return;
  int sign = 1;
  if (s1 < 0 && (t1 % 2 != 0)) sign = -sign;
  if (s2 < 0 && (t2 % 2 != 0)) sign = -sign;
  c[static_cast<std::size_t>(e)] += sign;
}

void check_odd_prime(std::int64_t p, std::int64_t min_prime) {
  if (p < min_prime || p == 2 || !ntheory::is_prime(p)) {
    throw DomainError("dissection needs an odd prime p >= " + std::to_string(min_prime) + ", got " + std::to_string(p));
  }
}

// (+-p - 1)/6, choosing the sign so the result is an integer.
std::int64_t eta_excluded_index(std::int64_t p) { return p % 6 == 1 ? (p - 1) / 6 : (-p - 1) / 6; }

int parity_sign(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

TruncatedSeries pochhammer(const PochhammerSpec& spec, std::int64_t order) {
  if (spec.sign != 1 && spec.sign != -1) throw DomainError("pochhammer base sign must be +1 or -1");
  if (spec.a < 0 || spec.step < 1) throw DomainError("pochhammer needs a >= 0 and step >= 1");
  if (spec.length && *spec.length < 0) throw DomainError("pochhammer length must be nonnegative");
  if (!spec.length && spec.a == 0 && spec.sign == 1) {
    throw DomainError("(1; q)_inf vanishes identically");
  }
  std::vector<Integer> c(len(order));
  if (!c.empty()) c[0] = 1;
  for (std::int64_t k = 0; !spec.length || k < *spec.length; ++k) {
    const std::int64_t e = spec.a + k * spec.step;
    if (e == 0) {
      // constant factor (1 - sign)
      for (auto& x : c) x *= (1 - spec.sign);
      continue;
    }
    if (e >= order) {
      if (!spec.length) break;
      continue;
    }
    kernels::mul_binomial_inplace(c, -spec.sign, static_cast<std::size_t>(e));
  }
  return TruncatedSeries::make(0, std::move(c), std::max<std::int64_t>(order, 0));
}

TruncatedSeries eta(std::int64_t k, std::int64_t order) {
  if (k < 1) throw DomainError("eta index must be positive");
  std::vector<Integer> c(len(order));
  const auto n = static_cast<std::int64_t>(c.size());
  for (std::int64_t m = 0;; ++m) {
    const std::int64_t e1 = k * (m * (3 * m - 1) / 2);
    if (e1 >= n) break;
    c[static_cast<std::size_t>(e1)] += parity_sign(m);
    const std::int64_t e2 = k * (m * (3 * m + 1) / 2);
    if (m > 0 && e2 < n) c[static_cast<std::size_t>(e2)] += parity_sign(m);
  }
  return TruncatedSeries::make(0, std::move(c), n);
}

TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t order) {
  order = std::max<std::int64_t>(order, 0);
  TruncatedSeries num = TruncatedSeries::constant(1, order);
  TruncatedSeries den = TruncatedSeries::constant(1, order);
  for (const auto& [k, e] : spec) {
    if (e == 0) continue;
    TruncatedSeries factor = pow(eta(k, order), e > 0 ? e : -e);
    if (e > 0) {
      num = mul(num, factor);
    } else {
      den = mul(den, factor);
    }
  }
  return mul(num, invert(den));
}

TruncatedSeries theta_f(int sign1, std::int64_t a, int sign2, std::int64_t b, std::int64_t order) {
  if ((sign1 != 1 && sign1 != -1) || (sign2 != 1 && sign2 != -1)) throw DomainError("theta signs must be +-1");
  if (a < 0 || b < 0) throw DomainError("theta exponents must be nonnegative");
  if (a + b < 1) throw DomainError("f(c, d) diverges when a + b = 0");
  std::vector<Integer> c(len(order));
  const auto n = static_cast<std::int64_t>(c.size());
  // Exponents are nondecreasing in |m| in both directions.
  for (std::int64_t m = 0; a * (m * (m + 1) / 2) + b * (m * (m - 1) / 2) < n; ++m) {
    add_theta_term(c, sign1, a, sign2, b, m);
  }
  for (std::int64_t m = -1; a * (m * (m + 1) / 2) + b * (m * (m - 1) / 2) < n; --m) {
    add_theta_term(c, sign1, a, sign2, b, m);
  }
  return TruncatedSeries::make(0, std::move(c), n);
}

TruncatedSeries theta_phi(std::int64_t order) { return theta_f(1, 1, 1, 1, order); }

TruncatedSeries theta_psi(std::int64_t order) { return theta_f(1, 1, 1, 3, order); }

TruncatedSeries jacobi_cube(std::int64_t order) {
  std::vector<Integer> c(len(order));
  const auto n = static_cast<std::int64_t>(c.size());
  for (std::int64_t k = 0; k * (k + 1) / 2 < n; ++k) {
    c[static_cast<std::size_t>(k * (k + 1) / 2)] = parity_sign(k) * (2 * k + 1);
  }
  return TruncatedSeries::make(0, std::move(c), n);
}

TruncatedSeries dissection_lhs(DissectionLemma lemma, std::int64_t order) {
  switch (lemma) {
    case DissectionLemma::kPsi:
      return theta_psi(order);
    case DissectionLemma::kEta:
      return eta(1, order);
    case DissectionLemma::kEtaCubed:
      return jacobi_cube(order);
  }
  throw DomainError("unknown dissection lemma");
}

std::int64_t dissection_residue(DissectionLemma lemma, std::int64_t p) {
  const std::int64_t e = lemma == DissectionLemma::kEta ? (p * p - 1) / 24 : (p * p - 1) / 8;
  return e % p;
}

TruncatedSeries dissection_tail(DissectionLemma lemma, std::int64_t p, std::int64_t order) {
  check_odd_prime(p, lemma == DissectionLemma::kEta ? 5 : 3);
  const std::int64_t p2 = p * p;
  switch (lemma) {
    case DissectionLemma::kPsi:
      return shifted((p2 - 1) / 8, order, [&](std::int64_t rest) {
        return substitute(theta_psi((rest + p2 - 1) / p2), p2).truncate(rest);
      });
    case DissectionLemma::kEta: {
      const int sign = parity_sign(eta_excluded_index(p));
      return shifted((p2 - 1) / 24, order, [&](std::int64_t rest) { return scale(eta(p2, rest), sign); });
    }
    case DissectionLemma::kEtaCubed: {
      const Integer factor = p * parity_sign((p - 1) / 2);
      return shifted((p2 - 1) / 8, order, [&](std::int64_t rest) { return scale(pow(eta(p2, rest), 3), factor); });
    }
  }
  throw DomainError("unknown dissection lemma");
}

TruncatedSeries dissection_rhs(DissectionLemma lemma, std::int64_t p, std::int64_t order) {
  TruncatedSeries total = dissection_tail(lemma, p, order);
  const std::int64_t p2 = p * p;
  switch (lemma) {
    case DissectionLemma::kPsi:
      for (std::int64_t m = 0; m <= (p - 3) / 2; ++m) {
        const std::int64_t a = (p2 + (2 * m + 1) * p) / 2;
        const std::int64_t b = (p2 - (2 * m + 1) * p) / 2;
        total = add(total, shifted((m * m + m) / 2, order,
                                   [&](std::int64_t rest) { return theta_f(1, a, 1, b, rest); }));
      }
      break;
    case DissectionLemma::kEta: {
      const std::int64_t skip = eta_excluded_index(p);
      for (std::int64_t t = -(p - 1) / 2; t <= (p - 1) / 2; ++t) {
        if (t == skip) continue;
        const std::int64_t a = (3 * p2 + (6 * t + 1) * p) / 2;
        const std::int64_t b = (3 * p2 - (6 * t + 1) * p) / 2;
        total = add(total, shifted((3 * t * t + t) / 2, order, [&](std::int64_t rest) {
                      return scale(theta_f(-1, a, -1, b, rest), parity_sign(t));
                    }));
      }
      break;
    }
    case DissectionLemma::kEtaCubed: {
      std::vector<Integer> c(len(order));
      const auto n = static_cast<std::int64_t>(c.size());
      for (std::int64_t k = 0; k <= p - 1; ++k) {
        if (k == (p - 1) / 2) continue;
        for (std::int64_t j = 0;; ++j) {
          const std::int64_t e = k * (k + 1) / 2 + p * j * (p * j + 2 * k + 1) / 2;
          if (e >= n) break;
          c[static_cast<std::size_t>(e)] += parity_sign(k + j) * (2 * p * j + 2 * k + 1);
        }
      }
      total = add(total, TruncatedSeries::make(0, std::move(c), n));
      break;
    }
  }
  return total;
}

bool dissection_exclusion_holds(DissectionLemma lemma, std::int64_t p) {
  check_odd_prime(p, lemma == DissectionLemma::kEta ? 5 : 3);
  const std::int64_t target = dissection_residue(lemma, p);
  auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
  switch (lemma) {
    case DissectionLemma::kPsi:
      for (std::int64_t m = 0; m <= (p - 3) / 2; ++m) {
        if (mod((m * m + m) / 2) == target) return false;
      }
      return true;
    case DissectionLemma::kEta: {
      const std::int64_t skip = eta_excluded_index(p);
      for (std::int64_t t = -(p - 1) / 2; t <= (p - 1) / 2; ++t) {
        if (t != skip && mod((3 * t * t + t) / 2) == target) return false;
      }
      return true;
    }
    case DissectionLemma::kEtaCubed:
      for (std::int64_t k = 0; k <= p - 1; ++k) {
        if (k != (p - 1) / 2 && mod(k * (k + 1) / 2) == target) return false;
      }
      return true;
  }
  return false;
}

bool verify_binomial_congruence(std::int64_t n, std::int64_t t, std::int64_t p, std::int64_t order) {
  const TruncatedSeries lhs = pow(eta(n, order), t * p);
  const TruncatedSeries rhs = pow(eta(n * p, order), t);
  return reduce_mod(sub(lhs, rhs), p).is_zero();
}

bool verify_dyadic_congruence(std::int64_t t, std::int64_t order) {
  const std::int64_t modulus = std::int64_t{1} << t;
  const TruncatedSeries lhs = pow(eta(1, order), modulus);
  const TruncatedSeries rhs = pow(eta(2, order), modulus / 2);
  return reduce_mod(sub(lhs, rhs), modulus).is_zero();
}

}  // namespace qseries
