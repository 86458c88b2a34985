// Serialization of CriterionReport and an independent re-checker that
// works from the evidence fields alone.

#ifndef IRRCERT_REPORT_HPP
#define IRRCERT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "irrcert/criteria.hpp"

namespace irrcert {

/// Layout documented in docs/report_schema.json.
nlohmann::ordered_json to_json(const CriterionReport& r);
/// Throws std::invalid_argument on a malformed document.
CriterionReport report_from_json(const nlohmann::ordered_json& j);

/// Human-readable multi-line rendering.
std::string render_text(const CriterionReport& r);

struct RecheckResult {
  bool reproduced = false;
  std::string detail;
};

/// Recomputes the values, q_k (with the brute-force oracle), the root bound
/// and the route inequality from the evidence, and compares verdicts.
RecheckResult recheck_report(const CriterionReport& r);

}  // namespace irrcert

#endif  // IRRCERT_REPORT_HPP
