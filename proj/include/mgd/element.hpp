#pragma once

#include <complex>
#include <string>
#include <variant>

#include "mgd/matrix.hpp"

namespace mgd {

/// Concrete value of an element. Which alternative is live is decided by the
/// owning group: reals and positive reals use double, the circle stores its
/// canonical angle as double, C* uses complex, matrix groups use Matrix.
using Payload = std::variant<double, std::complex<double>, Matrix>;

/// A value tagged with the id of the group that can interpret it.
struct GroupElement {
  std::string group_id;
  Payload payload;
};

double real_of(const GroupElement& x);
const std::complex<double>& complex_of(const GroupElement& x);
const Matrix& matrix_of(const GroupElement& x);

double real_of(const Payload& p);
const std::complex<double>& complex_of(const Payload& p);
const Matrix& matrix_of(const Payload& p);

}  // namespace mgd
