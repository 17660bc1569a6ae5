#pragma once

#include <stdexcept>
#include <string>

namespace p3wkb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (odd Bernoulli index, pole of Gamma, ...).
struct DomainError : Error {
  using Error::Error;
};

// Division by, or root/log of, a vanishing leading term.
struct SingularError : Error {
  using Error::Error;
};

// Parameters violate the genericity conditions.
struct DegenerateError : Error {
  using Error::Error;
};

// A request the theory does not resolve (e.g. connection inside a loop).
struct UnsupportedError : Error {
  using Error::Error;
};

// Not enough Taylor orders left to honour a request.
struct OrderError : Error {
  using Error::Error;
};

struct TraceError : Error {
  using Error::Error;
};

}  // namespace p3wkb
