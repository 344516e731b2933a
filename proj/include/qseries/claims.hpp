#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseries/expr.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class ClaimKind { IDENTITY, CONGRUENCE, CONGRUENCE_FAMILY, RECURRENCE, INTERPRETATION };

std::string_view kind_name(ClaimKind kind) noexcept;  // "identity", "congruence", ...
ClaimKind kind_from_name(std::string_view name);      // also accepts upper case and '_' for '-'

// Independent nested-sum evaluation of a recurrence: returns (L(n), R(n)) for n = 0..bound.
using DirectSums = std::function<std::vector<std::pair<Integer, Integer>>(std::int64_t bound)>;

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::IDENTITY;
  std::string cite;

  // IDENTITY / RECURRENCE: lhs, rhs. CONGRUENCE / INTERPRETATION: expr.
  std::optional<Expr> lhs, rhs, expr;
  std::int64_t A = 1, B = 0;
  Integer M = 0;  // IDENTITY: 0 means exact equality, otherwise equality mod M
  std::int64_t count = 0;
  std::int64_t order = 0;

  // CONGRUENCE_FAMILY
  std::string family;
  std::int64_t p = 0, alpha = 0;

  // INTERPRETATION: count_signed for n < count, count_dp for n < order
  std::string ruleset;

  // RECURRENCE: second route, checked for n <= direct_bound
  DirectSums direct;
  std::int64_t direct_bound = 0;

  // Extra arithmetic side condition; a returned message fails the claim.
  std::function<std::optional<std::string>()> side_check;
};

enum class Status { PASS, FAIL, SKIPPED };
std::string_view status_name(Status s) noexcept;

struct Failure {
  std::int64_t n;
  std::string lhs, rhs;
  bool operator==(const Failure&) const = default;
};

struct VerificationReport {
  std::string id;
  Status status = Status::PASS;
  std::int64_t order = 0;
  std::optional<Failure> first_failure;
  double elapsed_ms = 0;
  std::string message;
};

struct Overrides {
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> count;
};

// Requests needing coefficients beyond this are reported as skipped (too expensive).
inline constexpr std::int64_t kMaxOrder = 20000;

VerificationReport verify(const Claim& claim, const Overrides& overrides = {});

// Runs claims (in parallel when enabled) and returns reports sorted by id.
std::vector<VerificationReport> verify_all(const std::vector<Claim>& claims, const Overrides& overrides = {});

const std::vector<Claim>& registry();
const Claim* find_claim(std::string_view id);

// Line-oriented "[claim]" records; throws ParseError carrying the byte offset into text.
std::vector<Claim> parse_claim_file(std::string_view text);
std::vector<Claim> load_claim_file(const std::string& path);

std::string reports_json(const std::vector<VerificationReport>& reports);
std::string reports_csv(const std::vector<VerificationReport>& reports);
std::string reports_text(const std::vector<VerificationReport>& reports);

}  // namespace qseries
