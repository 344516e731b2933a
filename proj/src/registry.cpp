#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "qseries/claims.hpp"
#include "qseries/mocktheta.hpp"
#include "qseries/partitions.hpp"
#include "qseries/qproducts.hpp"

namespace qseries {

namespace {

// ---- direct-sum helpers -------------------------------------------------

// Coefficient table with the negative-index-is-zero convention.
class Table {
 public:
  explicit Table(const TruncatedSeries& s) {
    v_.reserve(static_cast<std::size_t>(std::max<std::int64_t>(s.order(), 0)));
    for (std::int64_t e = 0; e < s.order(); ++e) v_.push_back(s.coeff(e));
  }
  Integer operator()(std::int64_t i) const {
    if (i < 0) return 0;
    if (i >= static_cast<std::int64_t>(v_.size())) throw std::logic_error("direct sum index beyond table");
    return v_[static_cast<std::size_t>(i)];
  }

 private:
  std::vector<Integer> v_;
};

Table mock_table(MockThetaId id, std::int64_t n) { return Table(mock_series(id, n)); }
Table rules_table(const char* rules, std::int64_t n) { return Table(count_dp(ruleset_by_name(rules), n)); }
// r-copy overpartitions as (distinct with r colours) x (unrestricted with r colours)
Table pbar_table(int r, std::int64_t n) {
  const std::string k = std::to_string(r);
  return Table(count_dp(ruleset_by_name("1:0=" + k + "d"), n) * count_dp(ruleset_by_name("1:0=" + k), n));
}

long sgn(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

using Rows = std::vector<std::pair<Integer, Integer>>;

Rows direct_thm34(std::int64_t bound) {
  const Table pv = mock_table(MockThetaId::V, 2 * bound + 2);
  const Table a4 = rules_table("4-regular", bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer r = 0;
    for (std::int64_t k = 0; n - k * (k + 1) >= 0; ++k) r += a4(n - k * (k + 1));
    out.emplace_back(pv(2 * n + 1), r);
  }
  return out;
}

Rows direct_thm35(std::int64_t bound) {
  const Table pv = mock_table(MockThetaId::V, 6 * bound + 6);
  const Table p2d = rules_table("distinct-2", bound + 1);
  const Table pbar = pbar_table(1, bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer l = pv(6 * n + 5);
    for (std::int64_t m = 1; 6 * n - 9 * m * m + 3 * m + 5 >= 0; ++m) {
      l += sgn(m) * (pv(6 * n - 9 * m * m - 3 * m + 5) + pv(6 * n - 9 * m * m + 3 * m + 5));
    }
    Integer r = 0;
    for (std::int64_t t = 0; n - 3 * t * t - 3 * t >= 0; ++t) {
      const std::int64_t rest = n - 3 * t * t - 3 * t;
      for (std::int64_t c = 0; c <= rest / 2; ++c) r += sgn(t) * (2 * t + 1) * p2d(rest - 2 * c) * pbar(c);
    }
    out.emplace_back(l, 3 * r);
  }
  return out;
}

Rows direct_thm44(std::int64_t bound) {
  const Table ps = mock_table(MockThetaId::SIGMA, 2 * bound + 2);
  const Table p2d = rules_table("distinct-2", bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer r = 0;
    for (std::int64_t k = 0; n - 3 * k * (k + 1) / 2 >= 0; ++k) r += p2d(n - 3 * k * (k + 1) / 2);
    out.emplace_back(ps(2 * n + 1), r);
  }
  return out;
}

Rows direct_thm54(std::int64_t bound) {
  const Table pb = mock_table(MockThetaId::BETA, 3 * bound + 3);
  const Table pbar = pbar_table(1, bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer l = 0;
    for (std::int64_t k = 0; 3 * n - 3 * k * (k + 1) / 2 + 2 >= 0; ++k) l += pb(3 * n - 3 * k * (k + 1) / 2 + 2);
    Integer r = 0;
    for (std::int64_t m = 0; n - 3 * m * (m + 1) >= 0; ++m) r += 2 * sgn(m) * (2 * m + 1) * pbar(n - 3 * m * (m + 1));
    out.emplace_back(l, r);
  }
  return out;
}

// the statement sums plain overpartitions
Rows direct_thm55(std::int64_t bound) {
  const Table pb = mock_table(MockThetaId::BETA, 9 * bound + 9);
  const Table pbar = pbar_table(1, bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer l = 0;
    for (std::int64_t m = 0; n - m * m - m >= 0; ++m) l += sgn(m) * (2 * m + 1) * pb(9 * (n - m * m - m) + 8);
    Integer r = 0;
    for (std::int64_t k = 0; n - (3 * k * k + 3 * k) / 2 >= 0; ++k) {
      for (std::int64_t j = 0; n - (3 * k * k + 3 * k) / 2 - 3 * j * j - 3 * j >= 0; ++j) {
        r += sgn(j + k) * (2 * k + 1) * (2 * j + 1) * pbar(n - (3 * k * k + 3 * k) / 2 - 3 * j * j - 3 * j);
      }
    }
    out.emplace_back(l, 6 * r);
  }
  return out;
}

Rows direct_thm56(std::int64_t bound) {
  const Table pb = mock_table(MockThetaId::BETA, 3 * bound + 3);
  const Table pbar = pbar_table(1, bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer l = pb(3 * n + 1);
    for (std::int64_t m = 1; 3 * n - 3 * m * (3 * m - 1) + 1 >= 0; ++m) {
      l += sgn(m) * (pb(3 * n - 3 * m * (3 * m + 1) + 1) + pb(3 * n - 3 * m * (3 * m - 1) + 1));
    }
    Integer r = 0;
    for (std::int64_t k = 0; n - 3 * k * (k + 1) / 2 >= 0; ++k) r += sgn(k) * (2 * k + 1) * pbar(n - 3 * k * (k + 1) / 2);
    out.emplace_back(l, r);
  }
  return out;
}

Rows direct_thm62(std::int64_t bound) {
  const Table pl = mock_table(MockThetaId::LAMBDA, 2 * bound + 1);
  const Table p3d = rules_table("1:0=3d", bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer r = p3d(n);
    for (std::int64_t k = 1; n - 3 * k * k >= 0; ++k) r += 2 * sgn(k) * p3d(n - 3 * k * k);
    out.emplace_back(pl(2 * n), r);
  }
  return out;
}

Rows direct_thm63(std::int64_t bound) {
  const Table pl = mock_table(MockThetaId::LAMBDA, 6 * bound + 3);
  const Table pbar3 = pbar_table(3, bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer r = 0;
    for (std::int64_t l = 0; n - 3 * l * (l + 1) / 2 >= 0; ++l) {
      const std::int64_t t = 3 * l * (l + 1) / 2;
      r += 3 * sgn(l) * (2 * l + 1) * pbar3(n - t);
      for (std::int64_t k = 1; n - 3 * k * k - t >= 0; ++k) r += 6 * sgn(l + k) * (2 * l + 1) * pbar3(n - 3 * k * k - t);
    }
    out.emplace_back(pl(6 * n + 2), r);
  }
  return out;
}

Rows direct_thm64(std::int64_t bound) {
  const Table pl = mock_table(MockThetaId::LAMBDA, 6 * bound + 5);
  const Table p2d = rules_table("distinct-2", bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer lhs = 0;
    for (std::int64_t m = 0; 6 * n - 3 * m * (m + 1) + 4 >= 0; ++m) {
      lhs += sgn(m) * (2 * m + 1) * pl(6 * n - 3 * m * (m + 1) + 4);
    }
    Integer r = 0;
    for (std::int64_t l = 0; n - 3 * l * (l + 1) >= 0; ++l) {
      const std::int64_t t = 3 * l * (l + 1);
      r += 6 * sgn(l) * (2 * l + 1) * p2d(n - t);
      for (std::int64_t k = 1; n - 3 * k * k - t >= 0; ++k) r += 12 * sgn(l + k) * (2 * l + 1) * p2d(n - 3 * k * k - t);
    }
    out.emplace_back(lhs, r);
  }
  return out;
}

Rows direct_euler(std::int64_t bound) {
  const Table p = rules_table("unrestricted", bound + 1);
  Rows out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    Integer l = p(n);
    for (std::int64_t k = 1; n - k * (3 * k - 1) / 2 >= 0; ++k) {
      l += sgn(k) * (p(n - k * (3 * k - 1) / 2) + p(n - k * (3 * k + 1) / 2));
    }
    out.emplace_back(l, n == 0 ? 1 : 0);
  }
  return out;
}

// ---- claim builders -----------------------------------------------------

Claim identity(std::string id, std::string cite, const char* lhs, const char* rhs, std::int64_t order) {
  Claim c;
  c.id = std::move(id);
  c.kind = ClaimKind::IDENTITY;
  c.cite = std::move(cite);
  c.lhs = parse_expr(lhs);
  c.rhs = parse_expr(rhs);
  c.order = order;
  return c;
}

Claim congruence(std::string id, std::string cite, const char* expr, std::int64_t A, std::int64_t B, long M,
                 std::int64_t count) {
  Claim c;
  c.id = std::move(id);
  c.kind = ClaimKind::CONGRUENCE;
  c.cite = std::move(cite);
  c.expr = parse_expr(expr);
  c.A = A;
  c.B = B;
  c.M = M;
  c.count = count;
  return c;
}

Claim family(std::string id, std::string cite, const char* fam, std::int64_t p, std::int64_t alpha, std::int64_t count) {
  Claim c;
  c.id = std::move(id);
  c.kind = ClaimKind::CONGRUENCE_FAMILY;
  c.cite = std::move(cite);
  c.family = fam;
  c.p = p;
  c.alpha = alpha;
  c.count = count;
  return c;
}

Claim recurrence(std::string id, std::string cite, const char* lhs, const char* rhs, std::int64_t order,
                 DirectSums direct, std::int64_t bound) {
  Claim c = identity(std::move(id), std::move(cite), lhs, rhs, order);
  c.kind = ClaimKind::RECURRENCE;
  c.direct = std::move(direct);
  c.direct_bound = bound;
  return c;
}

Claim interpretation(std::string id, std::string cite, const char* expr, std::int64_t A, std::int64_t B,
                     const char* rules, std::int64_t count, std::int64_t order) {
  Claim c;
  c.id = std::move(id);
  c.kind = ClaimKind::INTERPRETATION;
  c.cite = std::move(cite);
  c.expr = parse_expr(expr);
  c.A = A;
  c.B = B;
  c.ruleset = rules;
  c.count = count;
  c.order = order;
  return c;
}

Claim dissection(const char* lemma_id, const char* cite, DissectionLemma lemma, const char* lhs, const char* which,
                 std::int64_t p) {
  const std::string rhs = std::string("dissect(") + which + ", " + std::to_string(p) + ")";
  Claim c = identity(std::string(lemma_id) + "-p" + std::to_string(p), cite, lhs, rhs.c_str(), 300);
  c.side_check = [lemma, p]() -> std::optional<std::string> {
    if (dissection_exclusion_holds(lemma, p)) return std::nullopt;
    return "residue class " + std::to_string(dissection_residue(lemma, p)) + " mod " + std::to_string(p) +
           " is shared with another summand";
  };
  return c;
}

std::vector<Claim> build() {
  std::vector<Claim> r;

  // products, theta functions and preliminaries
  r.push_back(identity("eq2.phi", "phi product form", "phi(q)", "l(2)^5/(l(1)^2*l(4)^2)", 400));
  r.push_back(identity("eq2.psi", "psi product form", "psi(q)", "l(2)^2/l(1)", 400));
  r.push_back(identity("eq2.f", "f(-q) product form", "f(-q, -q^2)", "l(1)", 400));
  r.push_back(identity("eq2.phineg", "phi(-q) product form", "phi(-q)", "l(1)^2/l(2)", 400));
  r.push_back(identity("eq2.jacobi", "Jacobi identity", "l(1)^3", "stream(jacobi, 1)", 400));
  r.push_back(identity("eq2.triple-phi", "Jacobi triple product", "f(q, q)",
                       "poch(-q, q^2)^2*poch(q^2, q^2)", 400));
  r.push_back(identity("eq2.triple-psi", "Jacobi triple product", "f(q, q^3)",
                       "poch(-q, q^4)*poch(-q^3, q^4)*poch(q^4, q^4)", 400));
  r.push_back(identity("eq2.triple-f", "Jacobi triple product", "f(-q, -q^2)",
                       "poch(q, q^3)*poch(q^2, q^3)*poch(q^3, q^3)", 400));
  r.push_back(identity("eq2.triple-f15", "Jacobi triple product", "f(q, q^5)",
                       "poch(-q, q^6)*poch(-q^5, q^6)*poch(q^6, q^6)", 400));

  for (std::int64_t p : {3, 5, 7}) r.push_back(dissection("lemma2.1", "Lemma 2.1", DissectionLemma::kPsi, "psi(q)", "psi", p));
  for (std::int64_t p : {5, 7, 11}) r.push_back(dissection("lemma2.2", "Lemma 2.2", DissectionLemma::kEta, "l(1)", "eta", p));
  for (std::int64_t p : {3, 5, 7}) r.push_back(dissection("lemma2.3", "Lemma 2.3", DissectionLemma::kEtaCubed, "l(1)^3", "cube", p));

  r.push_back(identity("lemma2.4a", "Lemma 2.4 (3-dissection of l2/l1^2)", "l(2)/l(1)^2",
                       "l(6)^4*l(9)^6/(l(3)^8*l(18)^3) + 2*q*l(6)^3*l(9)^3/l(3)^7 + 4*q^2*l(6)^2*l(18)^3/l(3)^6",
                       500));
  r.push_back(identity("lemma2.4b", "Lemma 2.4 (3-dissection of 1/(l1 l2))", "1/(l(1)*l(2))",
                       "l(9)^9/(l(3)^6*l(6)^2*l(18)^3) + q*l(9)^6/(l(3)^5*l(6)^3)"
                       " + 3*q^2*l(9)^3*l(18)^3/(l(3)^4*l(6)^4) - 2*q^3*l(18)^6/(l(3)^3*l(6)^5)"
                       " + 4*q^4*l(18)^9/(l(3)^2*l(6)^6*l(9)^3)",
                       500));
  r.push_back(identity("lemma2.4c", "Lemma 2.4 (3-dissection of l4/l1)", "l(4)/l(1)",
                       "l(12)*l(18)^4/(l(3)^3*l(36)^2) + q*l(6)^2*l(9)^3*l(36)/(l(3)^4*l(18)^2)"
                       " + 2*q^2*l(6)*l(18)*l(36)/l(3)^3",
                       500));

  for (auto [n, t, p] : {std::array<long, 3>{1, 1, 3}, {1, 2, 3}, {2, 1, 5}, {3, 1, 7}, {1, 1, 2}}) {
    const std::string e = "l(" + std::to_string(n) + ")^" + std::to_string(t * p) + " - l(" + std::to_string(n * p) +
                          ")^" + std::to_string(t);
    r.push_back(congruence("binom.lm1-" + std::to_string(n) + "-" + std::to_string(t) + "-" + std::to_string(p),
                           "binomial congruence (lm1)", e.c_str(), 1, 0, p, 200));
  }
  for (long t : {1, 2, 3}) {
    const std::string e = "l(1)^" + std::to_string(1L << t) + " - l(2)^" + std::to_string(1L << (t - 1));
    r.push_back(congruence("binom.lm2-" + std::to_string(t), "binomial congruence (lm2)", e.c_str(), 1, 0, 1L << t, 200));
  }

  // partition function sanity checks
  r.push_back(congruence("ramanujan.p5", "Ramanujan p(5n+4)", "l(1)^-1", 5, 4, 5, 150));
  r.push_back(congruence("ramanujan.p7", "Ramanujan p(7n+5)", "l(1)^-1", 7, 5, 7, 150));
  r.push_back(congruence("ramanujan.p11", "Ramanujan p(11n+6)", "l(1)^-1", 11, 6, 11, 150));
  r.push_back(recurrence("euler.pentagonal", "Euler recurrence for p(n)", "rules(unrestricted)*stream(pentagonal, 1)", "1",
                         300, direct_euler, 300));
  r.push_back(interpretation("eq1.pn", "p(n) generating function", "l(1)^-1", 1, 0, "unrestricted", 41, 301));
  r.push_back(interpretation("eq1.mr", "signed distinct partitions", "l(1)", 1, 0, "distinct-signed", 41, 301));
  r.push_back(interpretation("eq1.mr1", "signed 2-colour distinct partitions", "l(1)^2", 1, 0, "distinct-signed-2", 26, 301));
  r.push_back(interpretation("eq1.p2", "p_2d generating function", "(l(2)/l(1))^2", 1, 0, "distinct-2", 26, 301));
  r.push_back(interpretation("eq1.p3", "A_4 generating function", "l(4)/l(1)", 1, 0, "4-regular", 26, 301));

  // v(q)
  r.push_back(identity("thm3.1", "Theorem 3.1", "AP(mock(v), 2, 1)", "l(4)^3/(l(1)*l(2))", 500));
  r.push_back(identity("eq3.2", "Theorem 3.1 proof (e5)", "mock(mu, -q^2) + 4*mock(v)",
                       "poch(q^4, q^4)*poch(-q^2, q^4)^3/(poch(q^2, q^4)^2*poch(-q^4, q^4)^2)"
                       " + 4*q*poch(q^8, q^8)*poch(-q^4, q^4)/(poch(q^4, q^8)*poch(q^2, q^4))",
                       400));
  r.push_back(identity("eq3.a2", "Theorem 3.1 proof (a2)", "AP(mock(v), 2, 1)",
                       "poch(q^4, q^4)*poch(-q^2, q^2)/(poch(q^2, q^4)*poch(q, q^2))", 500));
  r.push_back(interpretation("thm3.2", "Theorem 3.2", "mock(v)", 2, 1, "thm3.2", 26, 201));
  r.push_back(identity("eq3.1", "Theorem 3.3 proof (1)", "AP(mock(v), 2, 1)",
                       "l(12)^2*l(18)^6/(l(3)^3*l(6)*l(36)^3) + q*l(12)*l(6)*l(9)^3/l(3)^4"
                       " + 3*q^2*l(12)*l(18)^3/l(3)^3 + q^3*l(6)^2*l(9)^3*l(36)^3/(l(3)^4*l(18)^3)"
                       " + 2*q^4*l(6)*l(36)^3/l(3)^3",
                       500));
  r.push_back(identity("eq3.3", "Theorem 3.3 proof (2)", "AP(mock(v), 6, 5)", "3*l(4)*l(6)^3/l(1)^3", 300));
  r.push_back(congruence("thm3.3i", "Theorem 3.3(i)", "mock(v)", 6, 5, 3, 150));
  r.push_back(congruence("thm3.3ii-base", "Theorem 3.3(ii), alpha = 0", "AP(mock(v), 2, 1) - psi(q)*psi(q^2)", 1, 0, 2, 300));
  r.push_back(congruence("thm3.3iii-base", "Theorem 3.3(iii), alpha = 0", "AP(mock(v), 6, 5) - 3*l(1)*l(6)^3", 1, 0, 6, 300));
  r.push_back(family("thm3.3ii-p5", "Theorem 3.3(ii)", "thm3.3ii", 5, 0, 10));
  r.push_back(family("thm3.3ii-p7", "Theorem 3.3(ii)", "thm3.3ii", 7, 0, 10));
  r.push_back(family("thm3.3ii-p5-a1", "Theorem 3.3(ii)", "thm3.3ii", 5, 1, 1));
  r.push_back(family("thm3.3iii-p5", "Theorem 3.3(iii)", "thm3.3iii", 5, 0, 5));
  r.push_back(recurrence("thm3.4", "Theorem 3.4", "AP(mock(v), 2, 1)", "l(4)/l(1)*stream(psi, 2)", 300, direct_thm34, 60));
  r.push_back(recurrence("thm3.5", "Theorem 3.5", "AP(mock(v), 6, 5)*stream(pentagonal, 1)",
                         "3*SUB(l(2)/l(1)^2, 2)*(l(2)/l(1))^2*stream(jacobi, 6)", 300, direct_thm35, 60));
  r.push_back(congruence("remark3.6", "Remark 3.6", "mock(mu) - l(1)^-3", 1, 0, 4, 300));

  // sigma(q)
  r.push_back(identity("thm4.1", "Theorem 4.1", "AP(mock(sigma), 2, 1)", "l(2)^2*l(6)^2/(l(1)^2*l(3))", 500));
  r.push_back(identity("eq4.s14", "Theorem 4.1 proof (s14)", "SUB(mock(nu), 2) - mock(sigma, -q)",
                       "q*l(4)^2*l(12)^2/(l(2)^2*l(6))", 400));
  r.push_back(interpretation("thm4.2", "Theorem 4.2", "mock(sigma)", 2, 1, "thm4.2", 26, 201));
  r.push_back(congruence("thm4.3-base", "Theorem 4.3, alpha = 0", "AP(mock(sigma), 2, 1) - l(2)*psi(q^3)", 1, 0, 2, 300));
  r.push_back(family("thm4.3-p5", "Theorem 4.3", "thm4.3", 5, 0, 10));
  r.push_back(recurrence("thm4.4", "Theorem 4.4", "AP(mock(sigma), 2, 1)", "(l(2)/l(1))^2*stream(psi, 3)", 300,
                         direct_thm44, 60));

  // beta(q)
  r.push_back(identity("eq5.b6", "Section 5 (b6)", "AP(mock(beta), 3, 1)", "l(3)^3/l(1)^2", 500));
  r.push_back(identity("thm5.1", "Theorem 5.1", "AP(mock(beta), 3, 2)", "2*l(6)^3/(l(1)*l(2))", 500));
  r.push_back(identity("thm5.1-corrected", "Theorem 5.1 (corrected form)", "AP(mock(beta), 3, 2)",
                       "2*l(6)^3/(l(1)*l(2)) - q^-1*mock(psi6)", 500));
  r.push_back(identity("eq5.b2", "Theorem 5.1 proof (b2)", "SUB(mock(phi6), 3) + 2*q^-1*SUB(mock(psi6), 3) + 2*mock(beta)",
                       "l(2)*l(3)^5/(l(1)^2*l(6)^3)", 400));
  r.push_back(identity("eq5.b10", "Theorem 5.1 proof (b10)", "2*mock(beta)",
                       "-SUB(mock(phi6), 3) - 2*q^-1*SUB(mock(psi6), 3) + l(6)*l(9)^6/(l(3)^3*l(18)^3)"
                       " + 2*q*l(9)^3/l(3)^2 + 4*q^2*l(18)^3/(l(3)*l(6))",
                       400));
  r.push_back(identity("eq5.b4", "Theorem 5.3 proof (b4)", "AP(mock(beta), 3, 2)",
                       "2*l(9)^9*l(6)/(l(3)^6*l(18)^3) + 2*q*l(9)^6/l(3)^5 + 6*q^2*l(9)^3*l(18)^3/(l(3)^4*l(6))"
                       " - 4*q^3*l(18)^6/(l(3)^3*l(6)^2) + 8*q^4*l(18)^9/(l(3)^2*l(6)^3*l(9)^3)",
                       300));
  r.push_back(identity("eq5.b5", "Theorem 5.3 proof (b5)", "AP(mock(beta), 9, 8)", "6*l(3)^3*l(6)^3/(l(1)^4*l(2))", 300));
  r.push_back(identity("eq5.b5-corrected", "Theorem 5.3 proof (b5, corrected form)", "AP(mock(beta), 9, 8)",
                       "6*l(3)^3*l(6)^3/(l(1)^4*l(2)) - q^-1*AP(mock(psi6), 3, 0)", 300));
  r.push_back(interpretation("thm5.2", "Theorem 5.2", "mock(beta)", 3, 2, "thm5.2", 26, 201));
  r.push_back(congruence("thm5.3", "Theorem 5.3", "mock(beta)", 9, 8, 6, 100));
  r.push_back(recurrence("thm5.4", "Theorem 5.4", "AP(mock(beta), 3, 2)*psi(q)", "2*l(2)/l(1)^2*stream(jacobi, 6)", 300,
                         direct_thm54, 60));
  r.push_back(recurrence("thm5.5", "Theorem 5.5", "AP(mock(beta), 9, 8)*stream(jacobi, 2)",
                         "6*(l(2)/l(1)^2)^2*stream(jacobi, 3)*stream(jacobi, 6)", 300, direct_thm55, 60));
  r.push_back(recurrence("thm5.6", "Theorem 5.6", "AP(mock(beta), 3, 1)*stream(pentagonal, 2)",
                         "l(2)/l(1)^2*stream(jacobi, 3)", 300, direct_thm56, 60));

  // lambda(q)
  r.push_back(identity("eq6.l2", "Section 6 (l2)", "AP(mock(lambda), 2, 0)", "l(2)^3*l(3)^2/(l(1)^3*l(6))", 400));
  r.push_back(identity("eq6.l3", "Section 6 (l3)", "AP(mock(lambda), 6, 2)", "3*l(3)^5/l(6)*(l(2)/l(1)^2)^3", 400));
  r.push_back(identity("eq6.l4", "Section 6 (l4)", "AP(mock(lambda), 6, 4)", "l(2)^2*l(3)^2*l(6)^2/l(1)^5", 400));
  r.push_back(identity("eq6.l4-corrected", "Section 6 (l4, corrected form)", "AP(mock(lambda), 6, 4)",
                       "6*l(2)^2*l(3)^2*l(6)^2/l(1)^5", 400));
  r.push_back(interpretation("thm6.1", "Theorem 6.1", "mock(lambda)", 2, 0, "thm6.1", 26, 201));
  r.push_back(recurrence("thm6.2", "Theorem 6.2", "AP(mock(lambda), 2, 0)", "(l(2)/l(1))^3*stream(phi, 3)", 300,
                         direct_thm62, 60));
  r.push_back(recurrence("thm6.3", "Theorem 6.3", "AP(mock(lambda), 6, 2)",
                         "3*(l(2)/l(1)^2)^3*stream(phi, 3)*stream(jacobi, 3)", 300, direct_thm63, 60));
  r.push_back(recurrence("thm6.4", "Theorem 6.4", "AP(mock(lambda), 6, 4)*stream(jacobi, 1)",
                         "6*(l(2)/l(1))^2*stream(phi, 3)*stream(jacobi, 6)", 300, direct_thm64, 60));

  std::sort(r.begin(), r.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build();
  return claims;
}

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace qseries
