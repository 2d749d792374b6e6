#include "mgd/element.hpp"

#include "mgd/errors.hpp"

namespace mgd {

namespace {

template <class T>
const T& get_or_throw(const Payload& p, const char* what) {
  if (const T* v = std::get_if<T>(&p)) return *v;
  throw ContractViolation(std::string("element payload is not ") + what);
}

}  // namespace

double real_of(const Payload& p) { return get_or_throw<double>(p, "a real"); }
const std::complex<double>& complex_of(const Payload& p) {
  return get_or_throw<std::complex<double>>(p, "a complex number");
}
const Matrix& matrix_of(const Payload& p) { return get_or_throw<Matrix>(p, "a matrix"); }

double real_of(const GroupElement& x) { return real_of(x.payload); }
const std::complex<double>& complex_of(const GroupElement& x) { return complex_of(x.payload); }
const Matrix& matrix_of(const GroupElement& x) { return matrix_of(x.payload); }

}  // namespace mgd
