#pragma once

#include <stdexcept>
#include <string>

namespace wz {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A shift quotient is not a rational function (some Gamma class failed to balance).
class NotHypergeometric : public Error {
 public:
  using Error::Error;
};

/// The linearized coefficient system has a solution that violates w = y*d.
class InconsistentBilinear : public Error {
 public:
  using Error::Error;
};

class PoleEncountered : public Error {
 public:
  PoleEncountered(long n, std::string factor)
      : Error("pole at n=" + std::to_string(n) + " in factor " + factor),
        n_(n), factor_(std::move(factor)) {}
  long n() const { return n_; }
  const std::string& factor() const { return factor_; }

 private:
  long n_;
  std::string factor_;
};

class Divergent : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class ZeroS : public Error {
 public:
  ZeroS() : Error("S is identically zero; certificate undefined") {}
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace wz
