#pragma once

#include <stdexcept>
#include <string>

namespace pipm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A caller violated a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// The problem data admits no feasible point.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A linear system could not be solved to the required accuracy.
class SingularError : public Error {
 public:
  using Error::Error;
};

// A solve needed by a calculation did not reach optimality.
class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace pipm
