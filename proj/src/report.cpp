#include "mgd/report.hpp"

#include <cmath>

namespace mgd {

nlohmann::json number_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["anchor"] = r.anchor;
  j["passed"] = r.passed;
  j["samples"] = r.samples;
  j["skipped"] = r.skipped;
  j["max_violation"] = number_json(r.max_violation);
  j["tolerance"] = number_json(r.tolerance);
  j["witness"] = r.witness;
  j["details"] = r.details;
  return j;
}

}  // namespace mgd
