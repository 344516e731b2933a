#include "qseries/mocktheta.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "qseries/kernels.hpp"

namespace qseries {

namespace {

// One binomial factor (1 + c*q^k) multiplied into (or divided out of) the
// running Pochhammer quotient.
struct Factor {
  int c;
  std::int64_t k;
  bool divide;
};

using Factors = std::vector<Factor>;

Factor times(int c, std::int64_t k) { return {c, k, false}; }
Factor over(int c, std::int64_t k) { return {c, k, true}; }

// Summand n is sign(n) * q^{valuation(n)} * R_n where R_n is a quotient of
// finite Pochhammer symbols. R_0 = initial(), R_{n+1} = R_n * step(n).
struct TermShape {
  bool alternating;
  Factors (*initial)();
  Factors (*step)(std::int64_t n);
};

Factors none() { return {}; }

const TermShape& shape(MockThetaId id) {
  // (q;q^2)_n / (-q^2;q^2)_n^2
  static const TermShape mu{true, none, [](std::int64_t n) {
                              return Factors{times(-1, 2 * n + 1), over(1, 2 * n + 2), over(1, 2 * n + 2)};
                            }};
  // (-q;q)_n / (q;q^2)_{n+1}
  static const TermShape sigma{false, [] { return Factors{over(-1, 1)}; }, [](std::int64_t n) {
                                 return Factors{times(1, n + 1), over(-1, 2 * n + 3)};
                               }};
  // 1 / ((q;q^3)_{n+1} (q^2;q^3)_{n+1})
  static const TermShape beta{false, [] { return Factors{over(-1, 1), over(-1, 2)}; }, [](std::int64_t n) {
                                return Factors{over(-1, 3 * n + 4), over(-1, 3 * n + 5)};
                              }};
  // (q;q^2)_n / (-q;q)_n
  static const TermShape lambda{true, none, [](std::int64_t n) {
                                  return Factors{times(-1, 2 * n + 1), over(1, n + 1)};
                                }};
  // (-q;q^2)_n / (q;q^2)_{n+1}
  static const TermShape v{false, [] { return Factors{over(-1, 1)}; }, [](std::int64_t n) {
                             return Factors{times(1, 2 * n + 1), over(-1, 2 * n + 3)};
                           }};
  // (-q;q)_{2n+1} / (q;q^2)_{n+1}
  static const TermShape nu{false, [] { return Factors{times(1, 1), over(-1, 1)}; }, [](std::int64_t n) {
                              return Factors{times(1, 2 * n + 2), times(1, 2 * n + 3), over(-1, 2 * n + 3)};
                            }};
  // (q;q^2)_n / (-q;q)_{2n}
  static const TermShape phi6{true, none, [](std::int64_t n) {
                                return Factors{times(-1, 2 * n + 1), over(1, 2 * n + 1), over(1, 2 * n + 2)};
                              }};
  // (q;q^2)_n / (-q;q)_{2n+1}
  static const TermShape psi6{true, [] { return Factors{over(1, 1)}; }, [](std::int64_t n) {
                                return Factors{times(-1, 2 * n + 1), over(1, 2 * n + 2), over(1, 2 * n + 3)};
                              }};
  switch (id) {
    case MockThetaId::MU: return mu;
    case MockThetaId::SIGMA: return sigma;
    case MockThetaId::BETA: return beta;
    case MockThetaId::LAMBDA: return lambda;
    case MockThetaId::V: return v;
    case MockThetaId::NU: return nu;
    case MockThetaId::PHI6: return phi6;
    case MockThetaId::PSI6: return psi6;
  }
  throw std::logic_error("unhandled mock theta id");
}

void apply_factors(std::vector<Integer>& r, const Factors& fs) {
  for (const Factor& f : fs) {
    if (f.k >= static_cast<std::int64_t>(r.size())) continue;
    if (f.divide) {
      kernels::div_binomial_inplace(r, f.c, static_cast<std::size_t>(f.k));
    } else {
      kernels::mul_binomial_inplace(r, f.c, static_cast<std::size_t>(f.k));
    }
  }
}

}  // namespace

std::string_view mock_name(MockThetaId id) noexcept {
  switch (id) {
    case MockThetaId::MU: return "mu";
    case MockThetaId::SIGMA: return "sigma";
    case MockThetaId::BETA: return "beta";
    case MockThetaId::LAMBDA: return "lambda";
    case MockThetaId::V: return "v";
    case MockThetaId::NU: return "nu";
    case MockThetaId::PHI6: return "phi6";
    case MockThetaId::PSI6: return "psi6";
  }
  return "?";
}

MockThetaId mock_from_name(std::string_view name) {
  for (MockThetaId id : kAllMockThetaIds) {
    if (mock_name(id) == name) return id;
  }
  throw DomainError("unknown mock theta function '" + std::string(name) + "'");
}

std::int64_t valuation_schedule(MockThetaId id, std::int64_t n) {
  if (n < 0) throw DomainError("summand index must be nonnegative");
  switch (id) {
    case MockThetaId::MU:
    case MockThetaId::PHI6: return n * n;
    case MockThetaId::SIGMA: return (n + 1) * (n + 2) / 2;
    case MockThetaId::BETA: return 3 * n * n + 3 * n + 1;
    case MockThetaId::LAMBDA: return n;
    case MockThetaId::V:
    case MockThetaId::PSI6: return (n + 1) * (n + 1);
    case MockThetaId::NU: return n + 1;
  }
  throw std::logic_error("unhandled mock theta id");
}

TruncatedSeries mock_series(MockThetaId id, std::int64_t order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  const TermShape& s = shape(id);
  std::vector<Integer> total(static_cast<std::size_t>(order));
  const std::int64_t v0 = valuation_schedule(id, 0);
  if (v0 >= order) return TruncatedSeries::make(0, std::move(total), order);

  std::vector<Integer> r(static_cast<std::size_t>(order - v0));
  r[0] = 1;
  apply_factors(r, s.initial());
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t val = valuation_schedule(id, n);
    if (val >= order) break;
    // The quotient only needs order - val coefficients from here on.
    r.resize(static_cast<std::size_t>(order - val));
    if (r[0] != 1) throw std::logic_error("summand valuation differs from its schedule");
    const bool negative = s.alternating && (n % 2 != 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto& dst = total[static_cast<std::size_t>(val) + i];
      if (negative) {
        dst -= r[i];
      } else {
        dst += r[i];
      }
    }
    apply_factors(r, s.step(n));
  }
  return TruncatedSeries::make(0, std::move(total), order);
}

}  // namespace qseries
