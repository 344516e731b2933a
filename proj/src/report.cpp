#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "qseries/claims.hpp"

namespace qseries {

namespace {

long long ms(double v) { return static_cast<long long>(v + 0.5); }

}  // namespace

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["status"] = std::string(status_name(r.status));
    o["order"] = r.order;
    if (r.first_failure) {
      o["first_failure"] = {{"n", r.first_failure->n}, {"lhs", r.first_failure->lhs}, {"rhs", r.first_failure->rhs}};
    } else {
      o["first_failure"] = nullptr;
    }
    o["elapsed_ms"] = ms(r.elapsed_ms);
    o["message"] = r.message;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "id,status,order,first_n,elapsed_ms\n";
  for (const auto& r : reports) {
    out << r.id << ',' << status_name(r.status) << ',' << r.order << ',';
    if (r.first_failure) out << r.first_failure->n;
    out << ',' << ms(r.elapsed_ms) << '\n';
  }
  return out.str();
}

std::string reports_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    char head[160];
    std::snprintf(head, sizeof head, "%-22s %-7s order=%-6lld %8lld ms", r.id.c_str(),
                  std::string(status_name(r.status)).c_str(), static_cast<long long>(r.order), ms(r.elapsed_ms));
    out << head;
    if (r.first_failure) {
      out << "  first failure n=" << r.first_failure->n << " lhs=" << r.first_failure->lhs
          << " rhs=" << r.first_failure->rhs;
    }
    if (!r.message.empty()) out << "  (" << r.message << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace qseries
