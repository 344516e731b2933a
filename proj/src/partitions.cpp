#include "qseries/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "qseries/kernels.hpp"
#include "qseries/qproducts.hpp"

namespace qseries {

PartitionRuleSet::PartitionRuleSet(std::int64_t modulus, std::vector<ResidueRule> rules) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("rule set modulus must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(modulus), false);
  rules_.resize(static_cast<std::size_t>(modulus));
  for (const ResidueRule& r : rules) {
    if (r.residue < 0 || r.residue >= modulus) {
      throw DomainError("residue " + std::to_string(r.residue) + " out of range for modulus " + std::to_string(modulus));
    }
    if (r.colors < 0) throw DomainError("color count must be nonnegative");
    const auto i = static_cast<std::size_t>(r.residue);
    if (seen[i]) throw DomainError("residue " + std::to_string(r.residue) + " has two rules");
    seen[i] = true;
    rules_[i] = r;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw DomainError("residue " + std::to_string(i) + " has no rule");
  }
}

std::string PartitionRuleSet::to_string() const {
  std::ostringstream os;
  os << modulus_ << ":";
  bool first = true;
  for (const ResidueRule& r : rules_) {
    if (r.colors == 0) continue;
    if (!first) os << ",";
    first = false;
    os << r.residue << "=" << r.colors << (r.distinct ? "d" : "") << (r.signed_by_count ? "s" : "");
  }
  return os.str();
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("bad " + std::string(what) + " '" + std::string(s) + "' in rule set");
  }
  return v;
}

const std::map<std::string, std::string, std::less<>>& builtin_rulesets() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"thm3.2", "4:0=1ds,1=1,2=2,3=1"},
      {"thm4.2", "6:0=1ds,1=2,3=3,5=2"},
      {"thm5.2", "6:0=1ds,1=1,2=2,3=1,4=2,5=1"},
      {"thm6.1", "6:0=1ds,1=3,3=1,5=3"},
      {"unrestricted", "1:0=1"},
      {"distinct-signed", "1:0=1ds"},
      {"distinct-signed-2", "1:0=2ds"},
      {"distinct-2", "1:0=2d"},
      {"4-regular", "4:1=1,2=1,3=1"},
  };
  return table;
}

// Backtracking over (value, color) slots in nonincreasing order; each slot
// is used with some positive multiplicity or skipped.
class Enumerator {
 public:
  Enumerator(const PartitionRuleSet& rules, std::int64_t n) : n_(n) {
    for (std::int64_t v = n; v >= 1; --v) {
      const ResidueRule& r = rules.rule_for(v);
      for (int c = r.colors - 1; c >= 0; --c) slots_.push_back({v, c, r.distinct, r.signed_by_count});
    }
    // first_fit_[rem] = first slot index whose value is <= rem
    first_fit_.assign(static_cast<std::size_t>(n + 1), slots_.size());
    for (std::int64_t rem = 0; rem <= n; ++rem) {
      auto it = std::find_if(slots_.begin(), slots_.end(), [rem](const Slot& s) { return s.value <= rem; });
      first_fit_[static_cast<std::size_t>(rem)] = static_cast<std::size_t>(it - slots_.begin());
    }
  }

  std::int64_t count() { return count_from(0, n_, 1); }

  void visit(const std::function<void(const ColoredPartition&)>& f) {
    ColoredPartition current{{}, 1};
    visit_from(0, n_, current, f);
  }

 private:
  struct Slot {
    std::int64_t value;
    int color;
    bool distinct;
    bool signed_by_count;
  };

  std::size_t start(std::size_t s, std::int64_t rem) const {
    return std::max(s, first_fit_[static_cast<std::size_t>(rem)]);
  }

  std::int64_t count_from(std::size_t s, std::int64_t rem, int sign) const {
    if (rem == 0) return sign;
    std::int64_t total = 0;
    for (std::size_t t = start(s, rem); t < slots_.size(); ++t) {
      const Slot& slot = slots_[t];
      const std::int64_t most = slot.distinct ? 1 : rem / slot.value;
      int sg = sign;
      for (std::int64_t m = 1; m <= most; ++m) {
        if (slot.signed_by_count) sg = -sg;
        total += count_from(t + 1, rem - m * slot.value, sg);
      }
    }
    return total;
  }

  void visit_from(std::size_t s, std::int64_t rem, ColoredPartition& cur,
                  const std::function<void(const ColoredPartition&)>& f) const {
    if (rem == 0) {
      f(cur);
      return;
    }
    for (std::size_t t = start(s, rem); t < slots_.size(); ++t) {
      const Slot& slot = slots_[t];
      const std::int64_t most = slot.distinct ? 1 : rem / slot.value;
      const int saved_sign = cur.sign;
      for (std::int64_t m = 1; m <= most; ++m) {
        if (slot.signed_by_count) cur.sign = -cur.sign;
        cur.parts.push_back({slot.value, slot.color});
        visit_from(t + 1, rem - m * slot.value, cur, f);
      }
      cur.parts.resize(cur.parts.size() - static_cast<std::size_t>(most));
      cur.sign = saved_sign;
    }
  }

  std::int64_t n_;
  std::vector<Slot> slots_;
  std::vector<std::size_t> first_fit_;
};

int parity_sign(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

std::vector<Integer> zeros(std::int64_t order) {
  return std::vector<Integer>(static_cast<std::size_t>(std::max<std::int64_t>(order, 0)));
}

}  // namespace

PartitionRuleSet parse_ruleset(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("rule set '" + std::string(text) + "' lacks 'modulus:'");
  const std::int64_t modulus = parse_int(text.substr(0, colon), "modulus");
  if (modulus < 1) throw DomainError("rule set modulus must be positive");
  std::vector<ResidueRule> rules;
  for (std::int64_t r = 0; r < modulus; ++r) rules.push_back({r, 0, false, false});
  std::vector<bool> listed(static_cast<std::size_t>(modulus));
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("rule '" + std::string(item) + "' lacks '='");
    const std::int64_t residue = parse_int(item.substr(0, eq), "residue");
    std::string_view spec = item.substr(eq + 1);
    bool distinct = false;
    bool sign = false;
    while (!spec.empty() && (spec.back() == 'd' || spec.back() == 's')) {
      (spec.back() == 'd' ? distinct : sign) = true;
      spec.remove_suffix(1);
    }
    if (residue < 0 || residue >= modulus) throw DomainError("residue out of range in '" + std::string(item) + "'");
    if (listed[static_cast<std::size_t>(residue)]) throw DomainError("residue " + std::to_string(residue) + " listed twice");
    listed[static_cast<std::size_t>(residue)] = true;
    rules[static_cast<std::size_t>(residue)] = {residue, static_cast<int>(parse_int(spec, "color count")), distinct, sign};
  }
  return PartitionRuleSet(modulus, std::move(rules));
}

PartitionRuleSet ruleset_by_name(std::string_view name) {
  const auto& table = builtin_rulesets();
  if (auto it = table.find(name); it != table.end()) return parse_ruleset(it->second);
  if (name.find(':') != std::string_view::npos) return parse_ruleset(name);
  throw DomainError("unknown rule set '" + std::string(name) + "'");
}

std::vector<std::string> builtin_ruleset_names() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : builtin_rulesets()) out.push_back(name);
  return out;
}

void for_each_partition(const PartitionRuleSet& rules, std::int64_t n,
                        const std::function<void(const ColoredPartition&)>& visit) {
  if (n < 0) return;
  Enumerator(rules, n).visit(visit);
}

Integer count_signed(const PartitionRuleSet& rules, std::int64_t n) {
  if (n < 0) return 0;
  return Integer(static_cast<long>(Enumerator(rules, n).count()));
}

TruncatedSeries count_dp(const PartitionRuleSet& rules, std::int64_t order) {
  std::vector<Integer> c = zeros(order);
  if (!c.empty()) c[0] = 1;
  for (std::int64_t t = 1; t < order; ++t) {
    const ResidueRule& r = rules.rule_for(t);
    const auto k = static_cast<std::size_t>(t);
    for (int i = 0; i < r.colors; ++i) {
      if (r.distinct) {
        // (1 + q^t) per color, or (1 - q^t) when each part flips the sign
        kernels::mul_binomial_inplace(c, r.signed_by_count ? -1 : 1, k);
      } else {
        // 1/(1 - q^t), or 1/(1 + q^t) when signed
        kernels::div_binomial_inplace(c, r.signed_by_count ? 1 : -1, k);
      }
    }
  }
  return TruncatedSeries::make(0, std::move(c), std::max<std::int64_t>(order, 0));
}

std::vector<Integer> partition_numbers(std::int64_t count) {
  std::vector<Integer> p = zeros(count);
  for (std::int64_t n = 0; n < count; ++n) {
    if (n == 0) {
      p[0] = 1;
      continue;
    }
    Integer acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int sign = parity_sign(k + 1);
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

Integer p_classic(std::int64_t n) {
  if (n < 0) return 0;
  return partition_numbers(n + 1).back();
}

TruncatedSeries p_r(std::int64_t r, std::int64_t order) {
  if (r == 0) throw DomainError("p_r needs r != 0");
  return eta_quotient({{1, -r}}, order);
}

TruncatedSeries overpartition_r(std::int64_t r, std::int64_t order) {
  if (r < 1) throw DomainError("overpartition copies must be positive");
  return eta_quotient({{1, -2 * r}, {2, r}}, order);
}

TruncatedSeries p_rd(std::int64_t r, std::int64_t order) {
  if (r < 1) throw DomainError("distinct-part copies must be positive");
  return eta_quotient({{1, -r}, {2, r}}, order);
}

TruncatedSeries regular4(std::int64_t order) { return eta_quotient({{1, -1}, {4, 1}}, order); }

std::string_view stream_name(StreamKind kind) noexcept {
  switch (kind) {
    case StreamKind::PENTAGONAL: return "PENTAGONAL";
    case StreamKind::TRIANGULAR_JACOBI: return "TRIANGULAR_JACOBI";
    case StreamKind::SQUARE_PHI: return "SQUARE_PHI";
    case StreamKind::TRIANGULAR_PSI: return "TRIANGULAR_PSI";
  }
  return "?";
}

StreamKind stream_from_name(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (up == "PENTAGONAL") return StreamKind::PENTAGONAL;
  if (up == "TRIANGULAR_JACOBI" || up == "JACOBI") return StreamKind::TRIANGULAR_JACOBI;
  if (up == "SQUARE_PHI" || up == "PHI") return StreamKind::SQUARE_PHI;
  if (up == "TRIANGULAR_PSI" || up == "PSI") return StreamKind::TRIANGULAR_PSI;
  throw DomainError("unknown stream kind '" + std::string(name) + "'");
}

TruncatedSeries theta_stream(StreamKind kind, std::int64_t scale, std::int64_t order) {
  if (scale < 1) throw DomainError("stream scale must be positive");
  std::vector<Integer> c = zeros(order);
  const auto n = static_cast<std::int64_t>(c.size());
  auto put = [&](std::int64_t e, long w) {
    if (e * scale < n) c[static_cast<std::size_t>(e * scale)] += w;
  };
  switch (kind) {
    case StreamKind::PENTAGONAL:
      put(0, 1);
      for (std::int64_t m = 1; scale * (m * (3 * m - 1) / 2) < n; ++m) {
        put(m * (3 * m - 1) / 2, parity_sign(m));
        put(m * (3 * m + 1) / 2, parity_sign(m));
      }
      break;
    case StreamKind::TRIANGULAR_JACOBI:
      for (std::int64_t k = 0; scale * (k * (k + 1) / 2) < n; ++k) put(k * (k + 1) / 2, parity_sign(k) * (2 * k + 1));
      break;
    case StreamKind::SQUARE_PHI:
      put(0, 1);
      for (std::int64_t k = 1; scale * k * k < n; ++k) put(k * k, 2 * parity_sign(k));
      break;
    case StreamKind::TRIANGULAR_PSI:
      for (std::int64_t k = 0; scale * (k * (k + 1) / 2) < n; ++k) put(k * (k + 1) / 2, 1);
      break;
  }
  return TruncatedSeries::make(0, std::move(c), n);
}

}  // namespace qseries
