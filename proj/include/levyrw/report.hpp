#ifndef LEVYRW_REPORT_HPP
#define LEVYRW_REPORT_HPP

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

namespace levyrw {

/// How a criterion's pass flag is derived from its numbers.
enum class CriterionKind {
  kRelative,          // |estimate / target - 1| <= tolerance
  kAbsolute,          // |estimate - target| <= tolerance
  kBelow,             // estimate < tolerance            (distances, target 0)
  kAtLeastFraction,   // estimate >= tolerance * target  (lower bounds)
  kWithinStdErrors,   // |estimate - target| <= tolerance * std_error
  kAtLeast,           // estimate >= tolerance           (counts)
};

inline const char* to_string(CriterionKind k) {
  switch (k) {
    case CriterionKind::kRelative: return "relative";
    case CriterionKind::kAbsolute: return "absolute";
    case CriterionKind::kBelow: return "below";
    case CriterionKind::kAtLeastFraction: return "at_least_fraction";
    case CriterionKind::kWithinStdErrors: return "within_std_errors";
    case CriterionKind::kAtLeast: return "at_least";
  }
  return "?";
}

inline bool criterion_passes(CriterionKind kind, double estimate, double target, double tolerance,
                             double std_error) {
  if (!std::isfinite(estimate)) return false;
  switch (kind) {
    case CriterionKind::kRelative: return std::fabs(estimate / target - 1.0) <= tolerance;
    case CriterionKind::kAbsolute: return std::fabs(estimate - target) <= tolerance;
    case CriterionKind::kBelow: return estimate < tolerance;
    case CriterionKind::kAtLeastFraction: return estimate >= tolerance * target;
    case CriterionKind::kWithinStdErrors:
      return std::fabs(estimate - target) <= tolerance * std_error;
    case CriterionKind::kAtLeast: return estimate >= tolerance;
  }
  return false;
}

struct Criterion {
  std::string name;
  CriterionKind kind = CriterionKind::kRelative;
  double estimate = 0.0;
  double target = 0.0;
  double std_error = 0.0;
  double tolerance = 0.0;
  nlohmann::json details = nlohmann::json::object();

  bool pass() const { return criterion_passes(kind, estimate, target, tolerance, std_error); }
};

/// One record per verification check. Checks made of several criteria pass
/// when all of them do; the headline numbers are those of the first failing
/// criterion, or of the first criterion when everything passes.
struct CheckRecord {
  std::string theorem_id;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Criterion> criteria;
  double wall_seconds = 0.0;

  bool pass() const {
    for (const auto& c : criteria)
      if (!c.pass()) return false;
    return !criteria.empty();
  }

  const Criterion& headline() const {
    for (const auto& c : criteria)
      if (!c.pass()) return c;
    return criteria.front();
  }
};

inline nlohmann::json to_json(const Criterion& c) {
  auto num = [](double x) -> nlohmann::json {
    if (std::isfinite(x)) return x;
    return nullptr;
  };
  return {{"name", c.name},           {"kind", to_string(c.kind)}, {"estimate", num(c.estimate)},
          {"target", num(c.target)},  {"std_error", num(c.std_error)},
          {"tolerance", c.tolerance}, {"pass", c.pass()},          {"details", c.details}};
}

inline nlohmann::json to_json(const CheckRecord& r) {
  nlohmann::json j;
  j["theorem_id"] = r.theorem_id;
  j["parameters"] = r.parameters;
  if (!r.criteria.empty()) {
    const auto h = to_json(r.headline());
    for (const char* key : {"estimate", "target", "std_error", "tolerance"}) j[key] = h[key];
  }
  j["pass"] = r.pass();
  j["wall_seconds"] = r.wall_seconds;
  j["criteria"] = nlohmann::json::array();
  for (const auto& c : r.criteria) j["criteria"].push_back(to_json(c));
  return j;
}

struct VerificationReport {
  static constexpr const char* kSchema = "levyrw.verification_report/1";
  std::vector<CheckRecord> records;
  nlohmann::json metadata = nlohmann::json::object();

  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["metadata"] = metadata;
    j["all_pass"] = all_pass();
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) j["records"].push_back(levyrw::to_json(r));
    return j;
  }
};

}  // namespace levyrw

#endif  // LEVYRW_REPORT_HPP
