#pragma once

#include <stdexcept>
#include <string>

namespace atgrid {

// Thrown when an input exceeds a configured size guard. Guards are
// configuration, so the message always names the limit that was hit.
class GuardError : public std::runtime_error {
  public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the text-format readers (edge lists, orientations, Eisenstein
// literals) with a message naming the offending token or line.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exact computation produced a result the engines could not
// certify (an exactness assertion failed). Distinct from GuardError: this one
// signals a bug or an unexpected input, never a configured limit.
class ExactnessError : public std::runtime_error {
  public:
    explicit ExactnessError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace atgrid
