#include "qseries/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qseries/claims.hpp"
#include "qseries/kernels.hpp"
#include "qseries/mocktheta.hpp"
#include "qseries/partitions.hpp"

namespace qseries::cli {

namespace {

constexpr std::int64_t kDefaultOrder = 500;
constexpr std::int64_t kDenseLimit = 50;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string render(const TruncatedSeries& s) {
  if (s.order() - s.valuation() <= kDenseLimit && s.order() <= kDenseLimit) return s.to_string();
  // sparse exponent:coefficient pairs
  std::ostringstream out;
  bool any = false;
  for (std::int64_t e = s.valuation(); e < s.order(); ++e) {
    const Integer c = s.coeff(e);
    if (c == 0) continue;
    if (any) out << ' ';
    out << e << ':' << c.get_str();
    any = true;
  }
  if (any) out << ' ';
  out << "O(q^" << s.order() << ")";
  return out.str();
}

std::string part_label(const PartitionRuleSet& rules, const ColoredPart& p) {
  std::string s = std::to_string(p.value);
  if (rules.rule_for(p.value).colors > 1) s += static_cast<char>('a' + p.color);
  return s;
}

int do_coeff(const std::string& name, const std::vector<std::int64_t>& ns, std::ostream& out) {
  MockThetaId id;
  try {
    id = mock_from_name(name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  std::int64_t hi = 0;
  for (auto n : ns) {
    if (n < 0) throw UsageError("coefficient index must be nonnegative");
    hi = std::max(hi, n);
  }
  const TruncatedSeries s = mock_series(id, hi + 1);
  for (std::size_t i = 0; i < ns.size(); ++i) out << (i ? " " : "") << s.coeff(ns[i]).get_str();
  out << '\n';
  return 0;
}

int do_series(const std::string& text, std::int64_t order, const std::string& format, std::ostream& out) {
  const Expr e = parse_expr(text);
  const TruncatedSeries s = eval_expr(e, order);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = print_expr(e);
    j["valuation"] = s.valuation();
    j["order"] = s.order();
    auto& cs = j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : s.coeffs()) cs.push_back(c.get_str());
    out << j.dump() << '\n';
  } else {
    out << render(s) << '\n';
  }
  return 0;
}

int do_verify(const std::vector<std::string>& ids, const std::vector<std::string>& files, std::optional<std::int64_t> order,
              std::optional<std::int64_t> count, const std::string& format, std::ostream& out) {
  std::vector<Claim> claims;
  std::vector<Claim> from_files;
  for (const auto& f : files) {
    auto more = load_claim_file(f);
    from_files.insert(from_files.end(), more.begin(), more.end());
  }
  const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end() || (ids.empty() && files.empty());
  if (all) claims = registry();
  for (const auto& id : ids) {
    if (id == "all") continue;
    auto hit = std::find_if(from_files.begin(), from_files.end(), [&](const Claim& c) { return c.id == id; });
    if (hit != from_files.end()) continue;
    const Claim* c = find_claim(id);
    if (!c) throw UsageError("unknown claim id '" + id + "'");
    if (!all) claims.push_back(*c);
  }
  claims.insert(claims.end(), from_files.begin(), from_files.end());
  if (order && *order < 1) throw UsageError("--order must be at least 1");
  const auto reports = verify_all(claims, Overrides{order, count});
  if (format == "json") {
    out << reports_json(reports);
  } else if (format == "csv") {
    out << reports_csv(reports);
  } else {
    out << reports_text(reports);
  }
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::FAIL; });
  return failed ? 1 : 0;
}

int do_enumerate(const std::string& name, std::int64_t n, bool list, std::ostream& out) {
  PartitionRuleSet rules = [&] {
    try {
      return ruleset_by_name(name);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }();
  if (list) {
    for_each_partition(rules, n, [&](const ColoredPartition& p) {
      out << (p.sign < 0 ? '-' : '+');
      if (p.parts.empty()) out << " (empty)";
      for (const auto& part : p.parts) out << ' ' << part_label(rules, part);
      out << '\n';
    });
  }
  out << count_signed(rules, n).get_str() << '\n';
  return 0;
}

int do_list(std::ostream& out) {
  for (const Claim& c : registry()) {
    char line[128];
    std::snprintf(line, sizeof line, "%-22s %-18s ", c.id.c_str(), std::string(kind_name(c.kind)).c_str());
    out << line << c.cite << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series toolkit for mock theta function identities"};
  app.name("qseries");
  app.require_subcommand(1);

  std::string format = "text";
  std::string parallel = "on";
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> count;

  auto* coeff = app.add_subcommand("coeff", "exact coefficients of a mock theta function");
  std::string mock;
  std::vector<std::int64_t> ns;
  coeff->add_option("name", mock, "mu, sigma, beta, lambda, v, nu, phi6, psi6")->required();
  coeff->add_option("n", ns, "indices")->required();

  auto* series = app.add_subcommand("series", "expand an expression");
  std::string text;
  std::int64_t series_order = kDefaultOrder;
  series->add_option("expr", text)->required();
  series->add_option("--order,-N", series_order)->check(CLI::PositiveNumber);
  series->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "verify registry or file claims");
  std::vector<std::string> ids;
  std::vector<std::string> files;
  verify_cmd->add_option("ids", ids, "claim ids or 'all'");
  verify_cmd->add_option("--order,-N", order);
  verify_cmd->add_option("--count", count);
  verify_cmd->add_option("--claims", files)->check(CLI::ExistingFile);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  verify_cmd->add_option("--parallel", parallel)->check(CLI::IsMember({"on", "off"}));

  auto* enumerate = app.add_subcommand("enumerate", "signed count of colored partitions");
  std::string rules;
  std::int64_t n = 0;
  bool list = false;
  enumerate->add_option("ruleset", rules)->required();
  enumerate->add_option("n", n)->required();
  enumerate->add_flag("--list", list, "print the partitions");

  auto* list_cmd = app.add_subcommand("list", "registry with citations");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  kernels::set_parallel(parallel == "on");
  try {
    if (coeff->parsed()) return do_coeff(mock, ns, out);
    if (series->parsed()) return do_series(text, series_order, format, out);
    if (verify_cmd->parsed()) return do_verify(ids, files, order, count, format, out);
    if (enumerate->parsed()) return do_enumerate(rules, n, list, out);
    if (list_cmd->parsed()) return do_list(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qseries::cli
