#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// How parts congruent to `residue` (mod the rule set's modulus) may appear.
struct ResidueRule {
  std::int64_t residue = 0;
  int colors = 1;                // 0 forbids the class
  bool distinct = false;         // no repeated (value, color) pair
  bool signed_by_count = false;  // contributes (-1)^{number of parts in the class}

  bool operator==(const ResidueRule&) const = default;
};

// One rule per residue class mod `modulus`, indexed by residue.
class PartitionRuleSet {
 public:
  // Throws DomainError unless the rules cover every residue class exactly once.
  PartitionRuleSet(std::int64_t modulus, std::vector<ResidueRule> rules);

  std::int64_t modulus() const noexcept { return modulus_; }
  const ResidueRule& rule_for(std::int64_t part) const { return rules_[static_cast<std::size_t>(part % modulus_)]; }
  const std::vector<ResidueRule>& rules() const noexcept { return rules_; }

  // Inline spelling "m:r=<colors>[d][s],..." (unlisted residues are forbidden).
  std::string to_string() const;

  bool operator==(const PartitionRuleSet&) const = default;

 private:
  std::int64_t modulus_;
  std::vector<ResidueRule> rules_;
};

PartitionRuleSet parse_ruleset(std::string_view text);
// Built-in names ("thm3.2", "thm4.2", "thm5.2", "thm6.1", "unrestricted", "distinct-signed",
// "distinct-signed-2", "distinct-2", "4-regular") or the inline spelling.
PartitionRuleSet ruleset_by_name(std::string_view name);
std::vector<std::string> builtin_ruleset_names();

struct ColoredPart {
  std::int64_t value;
  int color;  // 0-based label within the part's class
  bool operator==(const ColoredPart&) const = default;
};

struct ColoredPartition {
  std::vector<ColoredPart> parts;  // nonincreasing by (value, color)
  int sign;
};

// Visits every colored partition of n permitted by the rules. Negative n visits nothing.
void for_each_partition(const PartitionRuleSet& rules, std::int64_t n,
                        const std::function<void(const ColoredPartition&)>& visit);

// Signed count by exhaustive backtracking; 0 for negative n.
Integer count_signed(const PartitionRuleSet& rules, std::int64_t n);

// Generating function of count_signed, valid below `order`.
TruncatedSeries count_dp(const PartitionRuleSet& rules, std::int64_t order);

// p(n) by Euler's pentagonal recurrence; 0 for negative n.
Integer p_classic(std::int64_t n);
std::vector<Integer> partition_numbers(std::int64_t count);

TruncatedSeries p_r(std::int64_t r, std::int64_t order);             // 1/l_1^r, r != 0
TruncatedSeries overpartition_r(std::int64_t r, std::int64_t order); // (l_2/l_1^2)^r
TruncatedSeries p_rd(std::int64_t r, std::int64_t order);            // (l_2/l_1)^r
TruncatedSeries regular4(std::int64_t order);                        // l_4/l_1

enum class StreamKind {
  PENTAGONAL,         // sum (-1)^m q^{m(3m-1)/2}, m in Z
  TRIANGULAR_JACOBI,  // sum (-1)^k (2k+1) q^{k(k+1)/2}
  SQUARE_PHI,         // 1 + 2 sum_{k>=1} (-1)^k q^{k^2}
  TRIANGULAR_PSI,     // sum q^{k(k+1)/2}
};

std::string_view stream_name(StreamKind kind) noexcept;
StreamKind stream_from_name(std::string_view name);  // case-insensitive; short aliases accepted

// The weighted exponent stream with every exponent multiplied by `scale`.
TruncatedSeries theta_stream(StreamKind kind, std::int64_t scale, std::int64_t order);

}  // namespace qseries
