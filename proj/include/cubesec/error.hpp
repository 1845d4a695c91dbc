#pragma once

#include <stdexcept>
#include <string>

namespace cubesec {

// Base for every domain failure raised by the library. The CLI maps these to
// exit code 3; I/O and parse failures (ParseError) map to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The vectors do not span R^k (or a subset solve lost rank).
class NotAFrame : public Error {
 public:
  NotAFrame() : Error("not a frame") {}
  explicit NotAFrame(const std::string& detail) : Error("not a frame: " + detail) {}
};

class NotTight : public Error {
 public:
  explicit NotTight(double defect)
      : Error("not a tight frame (max |A - I| = " + std::to_string(defect) + ")") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input files. Deliberately not derived from Error.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubesec
