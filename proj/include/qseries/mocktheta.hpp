#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "qseries/series.hpp"

namespace qseries {

// The eight q-hypergeometric sums. PHI6/PSI6 are the sixth-order phi and psi,
// not the theta functions phi(q) = f(q, q) and psi(q) = f(q, q^3).
enum class MockThetaId { MU, SIGMA, BETA, LAMBDA, V, NU, PHI6, PSI6 };

inline constexpr std::array<MockThetaId, 8> kAllMockThetaIds{
    MockThetaId::MU, MockThetaId::SIGMA, MockThetaId::BETA, MockThetaId::LAMBDA,
    MockThetaId::V,  MockThetaId::NU,    MockThetaId::PHI6, MockThetaId::PSI6};

std::string_view mock_name(MockThetaId id) noexcept;
// Accepts the names printed by mock_name ("mu", "sigma", ..., "phi6", "psi6"); throws DomainError otherwise.
MockThetaId mock_from_name(std::string_view name);

// Exact q-valuation of the n-th summand; strictly increasing in n.
std::int64_t valuation_schedule(MockThetaId id, std::int64_t n);

// Sum of all summands with valuation below `order`, exact to that order.
TruncatedSeries mock_series(MockThetaId id, std::int64_t order);

}  // namespace qseries
