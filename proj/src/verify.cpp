#include <algorithm>
#include <cctype>
#include <chrono>
#include <exception>
#include <string>

#include <omp.h>

#include "qseries/claims.hpp"
#include "qseries/kernels.hpp"
#include "qseries/mocktheta.hpp"
#include "qseries/ntheory.hpp"
#include "qseries/partitions.hpp"

namespace qseries {

namespace {

using Clock = std::chrono::steady_clock;

struct TooExpensive {
  std::int64_t need;
};

void check_budget(std::int64_t need) {
  if (need > kMaxOrder) throw TooExpensive{need};
}

std::string str(const Integer& x) { return x.get_str(); }

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

void fail_with(VerificationReport& rep, std::int64_t n, const Integer& l, const Integer& r, std::string msg = {}) {
  rep.status = Status::FAIL;
  rep.first_failure = Failure{n, str(l), str(r)};
  rep.message = std::move(msg);
}

const Expr& need_expr(const std::optional<Expr>& e, const char* what) {
  if (!e) throw DomainError(std::string("claim has no ") + what);
  return *e;
}

void run_identity(const Claim& c, std::int64_t order, VerificationReport& rep) {
  check_budget(order);
  rep.order = order;
  const TruncatedSeries l = eval_expr(need_expr(c.lhs, "lhs"), order);
  const TruncatedSeries r = eval_expr(need_expr(c.rhs, "rhs"), order);
  const std::int64_t lo = std::min(l.valuation(), r.valuation());
  for (std::int64_t e = lo; e < order; ++e) {
    Integer a = l.coeff(e), b = r.coeff(e);
    const bool differ = c.M == 0 ? a != b : mod_floor(a - b, c.M) != 0;
    if (differ) {
      fail_with(rep, e, a, b);
      return;
    }
  }
}

// Coefficients of `series_expr` at A n + B must vanish mod M for n < count.
bool run_progression(const Expr& e, std::int64_t A, std::int64_t B, const Integer& M, std::int64_t count,
                     VerificationReport& rep, const std::string& label) {
  if (count <= 0) return true;
  const std::int64_t need = A * (count - 1) + B + 1;
  check_budget(need);
  rep.order = std::max(rep.order, need);
  const TruncatedSeries s = eval_expr(e, need);
  for (std::int64_t n = 0; n < count; ++n) {
    const Integer v = s.coeff(A * n + B);
    if (mod_floor(v, M) != 0) {
      fail_with(rep, n, v, 0,
                label + "coefficient at " + std::to_string(A) + "n+" + std::to_string(B) + " is " + str(v) +
                    ", nonzero mod " + str(M));
      return false;
    }
  }
  return true;
}

void run_congruence(const Claim& c, std::int64_t count, VerificationReport& rep) {
  if (c.M <= 0) throw DomainError("congruence modulus must be positive");
  if (c.A < 1 || c.B < 0) throw DomainError("progression needs A >= 1 and B >= 0");
  run_progression(need_expr(c.expr, "expr"), c.A, c.B, c.M, count, rep, "");
}

void run_family(const Claim& c, std::int64_t count, VerificationReport& rep) {
  const ntheory::FamilyId id = ntheory::family_from_name(c.family);
  const auto idx = ntheory::family_indices(id, c.p, c.alpha);  // PreconditionError -> skipped
  const Expr series = parse_expr(id == ntheory::FamilyId::kSigmaTwoAdic ? "mock(sigma)" : "mock(v)");
  // all j share one expansion; find the largest order first
  std::int64_t need = 0;
  for (const auto& f : idx) {
    if (!f.step.fits_slong_p() || !f.offset.fits_slong_p()) throw TooExpensive{kMaxOrder + 1};
    need = std::max<std::int64_t>(need, f.step.get_si() * (count - 1) + f.offset.get_si() + 1);
  }
  check_budget(need);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const auto& f = idx[j];
    if (!run_progression(series, f.step.get_si(), f.offset.get_si(), f.modulus, count, rep,
                         "j=" + std::to_string(j + 1) + ": "))
      return;
  }
}

void run_recurrence(const Claim& c, std::int64_t order, VerificationReport& rep) {
  run_identity(c, order, rep);
  if (rep.status == Status::FAIL) {
    rep.message = "series route";
    return;
  }
  if (!c.direct || c.direct_bound < 0) return;
  const std::int64_t bound = c.direct_bound;
  const auto sums = c.direct(bound);
  const std::int64_t width = std::max(order, bound + 1);
  check_budget(width);
  const TruncatedSeries l = eval_expr(*c.lhs, bound + 1);
  const TruncatedSeries r = eval_expr(*c.rhs, bound + 1);
  for (std::int64_t n = 0; n <= bound; ++n) {
    const auto& [dl, dr] = sums[static_cast<std::size_t>(n)];
    if (dl != dr) {
      fail_with(rep, n, dl, dr, "direct sums disagree");
      return;
    }
    if (dl != l.coeff(n)) {
      fail_with(rep, n, dl, l.coeff(n), "direct lhs differs from series lhs");
      return;
    }
    if (dr != r.coeff(n)) {
      fail_with(rep, n, dr, r.coeff(n), "direct rhs differs from series rhs");
      return;
    }
  }
}

void run_interpretation(const Claim& c, std::int64_t count, std::int64_t order, VerificationReport& rep) {
  const PartitionRuleSet rules = ruleset_by_name(c.ruleset);
  const Expr& e = need_expr(c.expr, "expr");
  const std::int64_t need = c.A * std::max<std::int64_t>(std::max(count, order) - 1, 0) + c.B + 1;
  check_budget(need);
  rep.order = order;
  const TruncatedSeries s = eval_expr(e, need);
  for (std::int64_t n = 0; n < count; ++n) {
    const Integer want = s.coeff(c.A * n + c.B);
    const Integer got = count_signed(rules, n);
    if (got != want) {
      fail_with(rep, n, got, want, "enumeration");
      return;
    }
  }
  const TruncatedSeries dp = count_dp(rules, order);
  for (std::int64_t n = 0; n < order; ++n) {
    const Integer want = s.coeff(c.A * n + c.B);
    const Integer got = dp.coeff(n);
    if (got != want) {
      fail_with(rep, n, got, want, "generating function");
      return;
    }
  }
}

}  // namespace

std::string_view kind_name(ClaimKind kind) noexcept {
  switch (kind) {
    case ClaimKind::IDENTITY: return "identity";
    case ClaimKind::CONGRUENCE: return "congruence";
    case ClaimKind::CONGRUENCE_FAMILY: return "congruence-family";
    case ClaimKind::RECURRENCE: return "recurrence";
    case ClaimKind::INTERPRETATION: return "interpretation";
  }
  return "?";
}

ClaimKind kind_from_name(std::string_view name) {
  std::string s(name);
  for (char& ch : s) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ch == '_') ch = '-';
  }
  for (ClaimKind k : {ClaimKind::IDENTITY, ClaimKind::CONGRUENCE, ClaimKind::CONGRUENCE_FAMILY, ClaimKind::RECURRENCE,
                      ClaimKind::INTERPRETATION}) {
    if (kind_name(k) == s) return k;
  }
  if (s == "family") return ClaimKind::CONGRUENCE_FAMILY;
  throw DomainError("unknown claim type '" + std::string(name) + "'");
}

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::PASS: return "pass";
    case Status::FAIL: return "fail";
    case Status::SKIPPED: return "skipped";
  }
  return "?";
}

VerificationReport verify(const Claim& c, const Overrides& ov) {
  VerificationReport rep;
  rep.id = c.id;
  const auto t0 = Clock::now();
  const std::int64_t order = ov.order.value_or(c.order);
  const std::int64_t count = ov.count.value_or(c.count);
  try {
    if (c.side_check) {
      if (auto msg = c.side_check()) {
        rep.status = Status::FAIL;
        rep.first_failure = Failure{0, "false", "true"};
        rep.message = *msg;
      }
    }
    if (rep.status == Status::PASS) {
      switch (c.kind) {
        case ClaimKind::IDENTITY: run_identity(c, order, rep); break;
        case ClaimKind::CONGRUENCE: run_congruence(c, count, rep); break;
        case ClaimKind::CONGRUENCE_FAMILY: run_family(c, count, rep); break;
        case ClaimKind::RECURRENCE: run_recurrence(c, order, rep); break;
        case ClaimKind::INTERPRETATION: run_interpretation(c, count, order, rep); break;
      }
    }
  } catch (const TooExpensive& te) {
    rep.status = Status::SKIPPED;
    rep.first_failure.reset();
    rep.message = "too expensive: needs order " + std::to_string(te.need) + " > " + std::to_string(kMaxOrder);
  } catch (const PreconditionError& e) {
    rep.status = Status::SKIPPED;
    rep.first_failure.reset();
    rep.message = e.what();
  } catch (const std::exception& e) {
    rep.status = Status::FAIL;
    rep.first_failure = Failure{-1, "error", "error"};
    rep.message = e.what();
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<Claim>& claims, const Overrides& ov) {
  std::vector<VerificationReport> out(claims.size());
  const auto n = static_cast<std::int64_t>(claims.size());
  if (kernels::parallel_enabled()) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = verify(claims[static_cast<std::size_t>(i)], ov);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = verify(claims[static_cast<std::size_t>(i)], ov);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace qseries
