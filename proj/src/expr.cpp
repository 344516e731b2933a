#include "qseries/expr.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

#include "qseries/mocktheta.hpp"
#include "qseries/partitions.hpp"
#include "qseries/qproducts.hpp"

namespace qseries {

namespace {

Expr leaf(ExprKind kind, std::vector<std::int64_t> ints, std::string name = {}) {
  return Expr{kind, std::move(ints), std::move(name), {}};
}

Expr node(ExprKind kind, std::vector<Expr> kids, std::vector<std::int64_t> ints = {}) {
  return Expr{kind, std::move(ints), {}, std::move(kids)};
}

std::string short_stream(StreamKind k) {
  switch (k) {
    case StreamKind::PENTAGONAL: return "pentagonal";
    case StreamKind::TRIANGULAR_JACOBI: return "jacobi";
    case StreamKind::SQUARE_PHI: return "phi";
    case StreamKind::TRIANGULAR_PSI: return "psi";
  }
  return "?";
}

DissectionLemma lemma_from_name(const std::string& s) {
  if (s == "psi") return DissectionLemma::kPsi;
  if (s == "eta") return DissectionLemma::kEta;
  return DissectionLemma::kEtaCubed;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                s_[pos_] == '-' || s_[pos_] == '.' || s_[pos_] == ':' || s_[pos_] == '=' ||
                                s_[pos_] == ',')) {
      // ',' only belongs to inline rule sets, which always contain ':'
      if (s_[pos_] == ',' && s_.substr(start, pos_ - start).find(':') == std::string_view::npos) break;
      if (s_[pos_] == '-' && pos_ == start) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t nat() {
    skip();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const int d = s_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail_at("integer too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  std::int64_t integer() {
    if (accept('-')) return -nat();
    accept('+');
    return nat();
  }

  // [-]q[^k]; returns {sign, k}
  std::pair<std::int64_t, std::int64_t> qarg() {
    std::int64_t sign = accept('-') ? -1 : 1;
    expect('q');
    std::int64_t k = 1;
    if (accept('^')) k = nat();
    if (k < 1) fail("exponent must be positive");
    return {sign, k};
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = node(ExprKind::kSum, {std::move(lhs), product()});
      } else if (accept('-')) {
        lhs = node(ExprKind::kDifference, {std::move(lhs), product()});
      } else {
        return lhs;
      }
    }
  }

  Expr product() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = node(ExprKind::kProduct, {std::move(lhs), unary()});
      } else if (accept('/')) {
        lhs = node(ExprKind::kQuotient, {std::move(lhs), unary()});
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return node(ExprKind::kNegate, {unary()});
    return power();
  }

  Expr power() {
    Expr base = atom();
    while (accept('^')) {
      std::int64_t e;
      if (accept('(')) {
        e = integer();
        expect(')');
      } else {
        e = integer();
      }
      base = node(ExprKind::kPower, {std::move(base)}, {e});
    }
    return base;
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return leaf(ExprKind::kInteger, {nat()});
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) word += s_[pos_++];
    if (word.empty()) fail("unexpected '" + std::string(1, c) + "'");
    if (word == "q") {
      // q^k binds as a monomial; q^-k is allowed
      std::int64_t k = 1;
      if (accept('^')) {
        if (accept('(')) {
          k = integer();
          expect(')');
        } else {
          k = integer();
        }
      }
      return leaf(ExprKind::kMonomial, {k});
    }
    if (!accept('(')) fail_at("unknown symbol '" + word + "'", start);
    if (word == "l") {
      const std::int64_t k = nat();
      if (k < 1) fail("eta index must be positive");
      expect(')');
      return leaf(ExprKind::kEta, {k});
    }
    if (word == "phi" || word == "psi") {
      auto [sign, k] = qarg();
      expect(')');
      return leaf(word == "phi" ? ExprKind::kPhi : ExprKind::kPsi, {sign, k});
    }
    if (word == "f") {
      auto [s1, a] = qarg();
      expect(',');
      auto [s2, b] = qarg();
      expect(')');
      return leaf(ExprKind::kTheta, {s1, a, s2, b});
    }
    if (word == "mock") {
      const std::size_t at = pos_;
      std::string name = ident();
      try {
        mock_from_name(name);
      } catch (const DomainError&) {
        skip();
        fail_at("unknown mock theta function '" + name + "'", at);
      }
      std::pair<std::int64_t, std::int64_t> arg{1, 1};
      if (accept(',')) arg = qarg();
      expect(')');
      return leaf(ExprKind::kMock, {arg.first, arg.second}, name);
    }
    if (word == "stream") {
      skip();
      const std::size_t at = pos_;
      std::string name = ident();
      StreamKind kind;
      try {
        kind = stream_from_name(name);
      } catch (const DomainError&) {
        fail_at("unknown stream kind '" + name + "'", at);
      }
      expect(',');
      const std::int64_t scale = nat();
      if (scale < 1) fail("stream scale must be positive");
      expect(')');
      return leaf(ExprKind::kStream, {scale}, short_stream(kind));
    }
    if (word == "poch") {
      auto [sign, a] = qarg();
      if (a < 1) fail("poch base exponent must be positive");
      expect(',');
      auto [ssign, step] = qarg();
      if (ssign != 1) fail("poch step must be q^k");
      std::int64_t len = -1;
      if (accept(',')) len = nat();
      expect(')');
      return leaf(ExprKind::kPoch, {sign, a, step, len});
    }
    if (word == "dissect" || word == "tail") {
      skip();
      const std::size_t at = pos_;
      std::string which = ident();
      if (which != "psi" && which != "eta" && which != "cube") fail_at("unknown dissection '" + which + "'", at);
      expect(',');
      const std::int64_t p = nat();
      expect(')');
      return leaf(word == "dissect" ? ExprKind::kDissect : ExprKind::kTail, {p}, which);
    }
    if (word == "rules") {
      skip();
      const std::size_t at = pos_;
      std::string name = ident();
      try {
        ruleset_by_name(name);
      } catch (const std::exception&) {
        fail_at("unknown rule set '" + name + "'", at);
      }
      expect(')');
      return leaf(ExprKind::kRules, {}, name);
    }
    if (word == "SUB") {
      Expr e = sum();
      expect(',');
      const std::int64_t k = integer();
      if (k == 0) fail("substitution exponent must be nonzero");
      expect(')');
      return node(ExprKind::kSub, {std::move(e)}, {k});
    }
    if (word == "AP") {
      Expr e = sum();
      expect(',');
      const std::int64_t m = nat();
      if (m < 1) fail("progression modulus must be positive");
      expect(',');
      const std::int64_t r = nat();
      expect(')');
      return node(ExprKind::kAP, {std::move(e)}, {m, r});
    }
    fail_at("unknown symbol '" + word + "'", start);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string qarg_text(std::int64_t sign, std::int64_t k) {
  std::string s = sign < 0 ? "-q" : "q";
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kSum:
    case ExprKind::kDifference: return 1;
    case ExprKind::kProduct:
    case ExprKind::kQuotient: return 2;
    case ExprKind::kNegate: return 3;
    case ExprKind::kPower: return 4;
    default: return 5;
  }
}

void print_to(const Expr& e, int need, std::string& out);

void print_binary(const Expr& e, const char* op, int lp, int rp, std::string& out) {
  print_to(e.kids[0], lp, out);
  out += op;
  print_to(e.kids[1], rp, out);
}

void print_to(const Expr& e, int need, std::string& out) {
  const bool paren = precedence(e) < need;
  if (paren) out += '(';
  switch (e.kind) {
    case ExprKind::kInteger: out += std::to_string(e.ints[0]); break;
    case ExprKind::kMonomial:
      out += "q";
      if (e.ints[0] != 1) out += "^" + std::to_string(e.ints[0]);
      break;
    case ExprKind::kEta: out += "l(" + std::to_string(e.ints[0]) + ")"; break;
    case ExprKind::kPhi: out += "phi(" + qarg_text(e.ints[0], e.ints[1]) + ")"; break;
    case ExprKind::kPsi: out += "psi(" + qarg_text(e.ints[0], e.ints[1]) + ")"; break;
    case ExprKind::kTheta:
      out += "f(" + qarg_text(e.ints[0], e.ints[1]) + ", " + qarg_text(e.ints[2], e.ints[3]) + ")";
      break;
    case ExprKind::kMock:
      out += "mock(" + e.name;
      if (e.ints[0] != 1 || e.ints[1] != 1) out += ", " + qarg_text(e.ints[0], e.ints[1]);
      out += ")";
      break;
    case ExprKind::kStream: out += "stream(" + e.name + ", " + std::to_string(e.ints[0]) + ")"; break;
    case ExprKind::kPoch:
      out += "poch(" + qarg_text(e.ints[0], e.ints[1]) + ", " + qarg_text(1, e.ints[2]);
      if (e.ints[3] >= 0) out += ", " + std::to_string(e.ints[3]);
      out += ")";
      break;
    case ExprKind::kDissect: out += "dissect(" + e.name + ", " + std::to_string(e.ints[0]) + ")"; break;
    case ExprKind::kTail: out += "tail(" + e.name + ", " + std::to_string(e.ints[0]) + ")"; break;
    case ExprKind::kRules: out += "rules(" + e.name + ")"; break;
    case ExprKind::kSum: print_binary(e, " + ", 1, 2, out); break;
    case ExprKind::kDifference: print_binary(e, " - ", 1, 2, out); break;
    case ExprKind::kProduct: print_binary(e, "*", 2, 3, out); break;
    case ExprKind::kQuotient: print_binary(e, "/", 2, 3, out); break;
    case ExprKind::kNegate:
      out += "-";
      print_to(e.kids[0], 3, out);
      break;
    case ExprKind::kPower:
      // (q)^k must not reprint as the monomial q^k
      print_to(e.kids[0], e.kids[0].kind == ExprKind::kMonomial ? 6 : 5, out);
      out += "^" + std::to_string(e.ints[0]);
      break;
    case ExprKind::kSub:
      out += "SUB(";
      print_to(e.kids[0], 0, out);
      out += ", " + std::to_string(e.ints[0]) + ")";
      break;
    case ExprKind::kAP:
      out += "AP(";
      print_to(e.kids[0], 0, out);
      out += ", " + std::to_string(e.ints[0]) + ", " + std::to_string(e.ints[1]) + ")";
      break;
  }
  if (paren) out += ')';
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// series in q^k (or -q^k) from a series in q evaluated to `order`
TruncatedSeries substituted(std::int64_t sign, std::int64_t k, std::int64_t order,
                            TruncatedSeries (*make)(std::int64_t)) {
  TruncatedSeries base = make(ceil_div(order, k));
  if (sign == 1 && k == 1) return base;
  return substitute(base, sign * k);
}

TruncatedSeries eval_raw(const Expr& e, std::int64_t n) {
  switch (e.kind) {
    case ExprKind::kInteger: return TruncatedSeries::constant(Integer(static_cast<long>(e.ints[0])), n);
    case ExprKind::kMonomial: return TruncatedSeries::monomial(1, e.ints[0], n);
    case ExprKind::kEta: return eta(e.ints[0], n);
    case ExprKind::kPhi: return substituted(e.ints[0], e.ints[1], n, theta_phi);
    case ExprKind::kPsi: return substituted(e.ints[0], e.ints[1], n, theta_psi);
    case ExprKind::kTheta:
      return theta_f(static_cast<int>(e.ints[0]), e.ints[1], static_cast<int>(e.ints[2]), e.ints[3], n);
    case ExprKind::kMock: {
      const MockThetaId id = mock_from_name(e.name);
      TruncatedSeries base = mock_series(id, ceil_div(n, e.ints[1]));
      if (e.ints[0] == 1 && e.ints[1] == 1) return base;
      return substitute(base, e.ints[0] * e.ints[1]);
    }
    case ExprKind::kStream: return theta_stream(stream_from_name(e.name), e.ints[0], n);
    case ExprKind::kPoch: {
      PochhammerSpec spec{static_cast<int>(e.ints[0]), e.ints[1], e.ints[2], std::nullopt};
      if (e.ints[3] >= 0) spec.length = e.ints[3];
      return pochhammer(spec, n);
    }
    case ExprKind::kDissect: return dissection_rhs(lemma_from_name(e.name), e.ints[0], n);
    case ExprKind::kTail: return dissection_tail(lemma_from_name(e.name), e.ints[0], n);
    case ExprKind::kRules: return count_dp(ruleset_by_name(e.name), n);
    case ExprKind::kSum: return add(eval_raw(e.kids[0], n), eval_raw(e.kids[1], n));
    case ExprKind::kDifference: return sub(eval_raw(e.kids[0], n), eval_raw(e.kids[1], n));
    case ExprKind::kProduct: {
      TruncatedSeries a = eval_raw(e.kids[0], n);
      TruncatedSeries b = eval_raw(e.kids[1], n);
      // a negative valuation on one side eats order from the other
      if (b.valuation() < 0) a = eval_raw(e.kids[0], n - b.valuation());
      if (a.valuation() < 0) b = eval_raw(e.kids[1], n - a.valuation());
      return mul(a, b);
    }
    case ExprKind::kQuotient: {
      TruncatedSeries b = eval_raw(e.kids[1], n);
      TruncatedSeries a = eval_raw(e.kids[0], n + std::max<std::int64_t>(b.valuation(), 0));
      const std::int64_t need = n - std::min<std::int64_t>(a.valuation(), 0) + 2 * b.valuation();
      if (need > b.order()) b = eval_raw(e.kids[1], need);
      return mul(a, invert(b));
    }
    case ExprKind::kNegate: return negate(eval_raw(e.kids[0], n));
    case ExprKind::kPower: return pow(eval_raw(e.kids[0], n), e.ints[0]);
    case ExprKind::kSub: {
      const std::int64_t k = e.ints[0];
      const std::int64_t ak = k < 0 ? -k : k;
      return substitute(eval_raw(e.kids[0], ceil_div(n, ak)), k);
    }
    case ExprKind::kAP: {
      const std::int64_t m = e.ints[0];
      const std::int64_t r = e.ints[1];
      return extract_ap(eval_raw(e.kids[0], m * std::max<std::int64_t>(n, 0) + r), m, r);
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_to(e, 0, out);
  return out;
}

TruncatedSeries eval_expr(const Expr& e, std::int64_t order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  std::int64_t target = order;
  for (int attempt = 0; attempt < 12; ++attempt) {
    TruncatedSeries r = eval_raw(e, target);
    if (r.order() >= order) return r.truncate(order);
    // powers and quotients of series with nonzero valuation lose order; ask for more
    target += std::max<std::int64_t>(order - r.order(), 1) * (attempt + 1);
  }
  throw DomainError("could not evaluate '" + print_expr(e) + "' to order " + std::to_string(order));
}

}  // namespace qseries
