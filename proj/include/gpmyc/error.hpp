#pragma once

#include <stdexcept>
#include <string>

namespace gpmyc {

/// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (out-of-range vertex, loop
/// edge, family parameter below its minimum, wrong kind of graph).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: graph6 lines, family specs.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exact solver was asked to run above its enforced size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, int order, int cap)
      : Error(what + ": order " + std::to_string(order) + " exceeds cap " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  int order() const noexcept { return order_; }
  int cap() const noexcept { return cap_; }

 private:
  int order_;
  int cap_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpmyc
