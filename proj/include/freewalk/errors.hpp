#pragma once

#include <stdexcept>
#include <string>

namespace freewalk {

// Base error carrying a stable machine-readable code and the process exit
// status the CLI maps it to (1 = bad input, 2 = solver failure).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, int exit_code)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        exit_code_(exit_code) {}

  const std::string& code() const { return code_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string code_;
  int exit_code_;
};

// Invalid input: malformed words, non-normalized distributions, bad configs.
class ValidationError : public Error {
 public:
  ValidationError(std::string code, const std::string& message)
      : Error(std::move(code), message, 1) {}
};

// A numerical routine failed to converge or hit a degenerate instance.
class SolverError : public Error {
 public:
  SolverError(std::string code, const std::string& message)
      : Error(std::move(code), message, 2) {}
};

}  // namespace freewalk
