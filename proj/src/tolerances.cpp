#include "mgd/tolerances.hpp"

#include <cmath>

#include "mgd/errors.hpp"

namespace mgd {

namespace {

double* field(Tolerances& t, std::string_view name) {
  if (name == "fp") return &t.fp;
  if (name == "hom") return &t.hom;
  if (name == "fact") return &t.fact;
  if (name == "fact_rel") return &t.fact_rel;
  if (name == "root") return &t.root;
  if (name == "limit") return &t.limit;
  if (name == "modulus") return &t.modulus;
  return nullptr;
}

}  // namespace

void Tolerances::set(std::string_view name, double value) {
  double* f = field(*this, name);
  if (!f) throw ConfigurationError("unknown tolerance '" + std::string(name) + "'");
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigurationError("tolerance '" + std::string(name) + "' must be finite and >= 0");
  }
  *f = value;
}

double Tolerances::get(std::string_view name) const {
  double* f = field(const_cast<Tolerances&>(*this), name);
  if (!f) throw ConfigurationError("unknown tolerance '" + std::string(name) + "'");
  return *f;
}

const std::vector<std::string>& Tolerances::names() {
  static const std::vector<std::string> kNames = {"fact", "fact_rel", "fp",     "hom",
                                                  "limit", "modulus", "root"};
  return kNames;
}

}  // namespace mgd
