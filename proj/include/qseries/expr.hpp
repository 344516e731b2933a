#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

enum class ExprKind {
  kInteger,   // ints = {value}
  kMonomial,  // q^k: ints = {k}
  kEta,       // l(k): ints = {k}
  kPhi,       // phi(+-q^k): ints = {sign, k}
  kPsi,       // psi(+-q^k): ints = {sign, k}
  kTheta,     // f(s1 q^a, s2 q^b): ints = {s1, a, s2, b}
  kMock,      // mock(name[, +-q^k]): name, ints = {sign, k}
  kStream,    // stream(kind, scale): name = canonical kind, ints = {scale}
  kPoch,      // poch(+-q^a, q^step[, length]): ints = {sign, a, step, length or -1}
  kDissect,   // dissect(psi|eta|cube, p): ints = {p}
  kTail,      // tail(psi|eta|cube, p): ints = {p}
  kRules,     // rules(name): generating function of a partition rule set
  kSum,
  kDifference,
  kProduct,
  kQuotient,
  kNegate,
  kPower,     // ints = {exponent}
  kSub,       // SUB(e, k): q -> q^k, or q -> -q^|k| for k < 0
  kAP,        // AP(e, m, r): ints = {m, r}
};

// Parsed claim-language expression. Value type; children are owned.
struct Expr {
  ExprKind kind = ExprKind::kInteger;
  std::vector<std::int64_t> ints;
  std::string name;
  std::vector<Expr> kids;

  bool operator==(const Expr&) const = default;
};

// Throws ParseError (with byte offset) on malformed input or unknown names.
Expr parse_expr(std::string_view text);

// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

// Exact expansion to at least `order`; the result is truncated to exactly `order`.
TruncatedSeries eval_expr(const Expr& e, std::int64_t order);

}  // namespace qseries
