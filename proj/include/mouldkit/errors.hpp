#pragma once

#include <stdexcept>
#include <string>

namespace mouldkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedSubstitution : public Error { using Error::Error; };
class NotDivisible : public Error { using Error::Error; };
class AlphabetError : public Error { using Error::Error; };
class NotHomogeneous : public Error { using Error::Error; };
class HasConstantTerm : public Error { using Error::Error; };
class SlotError : public Error { using Error::Error; };
class PoleError : public Error { using Error::Error; };
class NotLie : public Error { using Error::Error; };
class WeightTooSmall : public Error { using Error::Error; };
class WeightBoundError : public Error { using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string location)
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace mouldkit
