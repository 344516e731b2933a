#include <fstream>
#include <sstream>
#include <string>

#include "qseries/claims.hpp"

namespace qseries {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t to_int(std::string_view v, std::size_t at) {
  std::int64_t out = 0;
  std::size_t used = 0;
  try {
    out = std::stoll(std::string(v), &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + std::string(v) + "'", at);
  }
  if (used != v.size()) throw ParseError("expected an integer, got '" + std::string(v) + "'", at);
  return out;
}

void finish(Claim& c, std::size_t at) {
  if (c.id.empty()) throw ParseError("claim without id", at);
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw ParseError("claim '" + c.id + "' is missing " + what, at);
  };
  switch (c.kind) {
    case ClaimKind::IDENTITY:
    case ClaimKind::RECURRENCE:
      need(c.lhs.has_value() && c.rhs.has_value(), "lhs/rhs");
      need(c.order > 0, "order");
      break;
    case ClaimKind::CONGRUENCE:
      need(c.expr.has_value(), "expr");
      need(c.M > 0, "M");
      need(c.count > 0, "count");
      break;
    case ClaimKind::CONGRUENCE_FAMILY:
      need(!c.family.empty(), "family");
      need(c.p > 0, "p");
      need(c.count > 0, "count");
      break;
    case ClaimKind::INTERPRETATION:
      need(c.expr.has_value(), "expr");
      need(!c.ruleset.empty(), "ruleset");
      need(c.count > 0 || c.order > 0, "count or order");
      break;
  }
}

}  // namespace

std::vector<Claim> parse_claim_file(std::string_view text) {
  std::vector<Claim> out;
  std::optional<Claim> cur;
  std::size_t cur_at = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    const std::size_t at = pos;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (nl == std::string_view::npos) break;
      continue;
    }
    if (line == "[claim]") {
      if (cur) {
        finish(*cur, cur_at);
        out.push_back(std::move(*cur));
      }
      cur.emplace();
      cur->order = 0;
      cur_at = at;
      continue;
    }
    if (!cur) throw ParseError("field outside a [claim] record", at);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", at);
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view val = trim(line.substr(eq + 1));
    const std::size_t vat = at + static_cast<std::size_t>(val.data() - text.substr(at).data());
    Claim& c = *cur;
    auto expr = [&] {
      try {
        return parse_expr(val);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad expression for ") + key, vat + e.offset());
      }
    };
    if (key == "id") {
      c.id = val;
    } else if (key == "type") {
      try {
        c.kind = kind_from_name(val);
      } catch (const DomainError&) {
        throw ParseError("unknown claim type '" + std::string(val) + "'", vat);
      }
    } else if (key == "lhs") {
      c.lhs = expr();
    } else if (key == "rhs") {
      c.rhs = expr();
    } else if (key == "expr") {
      c.expr = expr();
    } else if (key == "A") {
      c.A = to_int(val, vat);
    } else if (key == "B") {
      c.B = to_int(val, vat);
    } else if (key == "M") {
      c.M = static_cast<long>(to_int(val, vat));
    } else if (key == "count") {
      c.count = to_int(val, vat);
    } else if (key == "family") {
      c.family = val;
    } else if (key == "p") {
      c.p = to_int(val, vat);
    } else if (key == "alpha") {
      c.alpha = to_int(val, vat);
    } else if (key == "order") {
      c.order = to_int(val, vat);
    } else if (key == "ruleset") {
      c.ruleset = val;
    } else if (key == "cite") {
      c.cite = val;
    } else {
      throw ParseError("unknown field '" + key + "'", at);
    }
    if (nl == std::string_view::npos) break;
  }
  if (cur) {
    finish(*cur, cur_at);
    out.push_back(std::move(*cur));
  }
  return out;
}

std::vector<Claim> load_claim_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open claim file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_claim_file(ss.str());
}

}  // namespace qseries
