#pragma once

#include <stdexcept>
#include <string>

namespace trop {

// Base of all toolkit errors. `code` is a stable machine-readable slug,
// used verbatim on the CLI error line.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A circuit family failed one of the three circuit axioms.
class AxiomViolation : public Error {
 public:
  AxiomViolation(int axiom, const std::string& what)
      : Error("axiom-violation", what), axiom_(axiom) {}
  int axiom() const { return axiom_; }

 private:
  int axiom_;
};

// Malformed or out-of-contract input: out-of-range element, not a circuit
// of the matroid, not simple, bad permutation, parse error, ...
class InvalidInput : public Error {
 public:
  InvalidInput(std::string code, const std::string& what)
      : Error(std::move(code), what) {}
};

// An exhaustive search would exceed a configured resource cap.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(const std::string& what)
      : Error("limit-exceeded", what) {}
};

// The two binarity characterizations disagreed. They provably agree, so
// this only ever signals an implementation bug.
class MethodDisagreement : public Error {
 public:
  explicit MethodDisagreement(const std::string& what)
      : Error("method-disagreement", what) {}
};

}  // namespace trop
