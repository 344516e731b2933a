#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qseries/series.hpp"

namespace qseries {

// (sign*q^a; q^step)_length, or the infinite product when length is empty.
struct PochhammerSpec {
  int sign = 1;
  std::int64_t a = 1;
  std::int64_t step = 1;
  std::optional<std::int64_t> length;
};

// Exponent e_k for each l_k = (q^k; q^k)_inf in the quotient.
using EtaQuotientSpec = std::map<std::int64_t, std::int64_t>;

TruncatedSeries pochhammer(const PochhammerSpec& spec, std::int64_t order);

// l_k from the pentagonal number theorem.
TruncatedSeries eta(std::int64_t k, std::int64_t order);
TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t order);

// Ramanujan's f(sign1*q^a, sign2*q^b) as a bilateral sum; requires a + b >= 1.
TruncatedSeries theta_f(int sign1, std::int64_t a, int sign2, std::int64_t b, std::int64_t order);
TruncatedSeries theta_phi(std::int64_t order);  // f(q, q)
TruncatedSeries theta_psi(std::int64_t order);  // f(q, q^3)

// sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
TruncatedSeries jacobi_cube(std::int64_t order);

enum class DissectionLemma {
  kPsi,       // psi(q) into p classes
  kEta,       // l_1 into p classes, p >= 5
  kEtaCubed,  // l_1^3 into p classes
};

// Left-hand side being dissected: psi(q), l_1 or l_1^3.
TruncatedSeries dissection_lhs(DissectionLemma lemma, std::int64_t order);
// Full right-hand side of the p-dissection; equals dissection_lhs.
TruncatedSeries dissection_rhs(DissectionLemma lemma, std::int64_t p, std::int64_t order);
// The distinguished last term alone, e.g. q^{(p^2-1)/8} psi(q^{p^2}).
TruncatedSeries dissection_tail(DissectionLemma lemma, std::int64_t p, std::int64_t order);
// Residue mod p of the tail's exponents.
std::int64_t dissection_residue(DissectionLemma lemma, std::int64_t p);
// True when no other summand's q-power prefactor shares the tail's residue class.
bool dissection_exclusion_holds(DissectionLemma lemma, std::int64_t p);

inline TruncatedSeries psi_p_dissection_rhs(std::int64_t p, std::int64_t order) {
  return dissection_rhs(DissectionLemma::kPsi, p, order);
}
inline TruncatedSeries f1_p_dissection_rhs(std::int64_t p, std::int64_t order) {
  return dissection_rhs(DissectionLemma::kEta, p, order);
}
inline TruncatedSeries f1cubed_p_dissection_rhs(std::int64_t p, std::int64_t order) {
  return dissection_rhs(DissectionLemma::kEtaCubed, p, order);
}

// l_n^{t p} == l_{n p}^t (mod p), coefficientwise below `order`.
bool verify_binomial_congruence(std::int64_t n, std::int64_t t, std::int64_t p, std::int64_t order);
// l_1^{2^t} == l_2^{2^{t-1}} (mod 2^t).
bool verify_dyadic_congruence(std::int64_t t, std::int64_t order);

}  // namespace qseries
