#pragma once

#include <stdexcept>
#include <string>

namespace ploi {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated (out-of-domain point, end not
// fixed, interval that is not a group orbital, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (fractions, map literals, names).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration grew past its configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A bounded search (word radius, iteration budget) ran out before finding
// what it was looking for.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

// Geometry that rules out solvability was met where an algorithm needs it
// absent: a transition chain, an imbalanced orbital, an orbital crossing a
// fundamental domain end.
class Obstruction : public Error {
 public:
  using Error::Error;
};

}  // namespace ploi
