#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

namespace mgd {

/// Outcome of a single check. `max_violation` is the largest signed excess
/// over the allowed bound (normalized where the check is relative); a value
/// <= tolerance passes. `witness` holds the inputs of the worst sample when
/// the check failed.
struct VerificationReport {
  std::string check_id;
  std::string anchor;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  nlohmann::json witness;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const VerificationReport& r);

/// JSON numbers cannot hold inf/nan; those are written as strings.
nlohmann::json number_json(double v);

}  // namespace mgd
