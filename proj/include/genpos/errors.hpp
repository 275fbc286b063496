#pragma once

#include <stdexcept>
#include <string>

namespace genpos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero, operands from different fields, impossible roots of unity.
class FieldError : public Error {
 public:
  using Error::Error;
};

// Violated operation precondition (bad sizes, zero polynomial, coincident points...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A configured budget was exhausted. `budget()` names which one.
class ResourceError : public Error {
 public:
  ResourceError(std::string budget, const std::string& what)
      : Error(what), budget_(std::move(budget)) {}
  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

}  // namespace genpos
