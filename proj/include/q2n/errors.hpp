#pragma once

#include <stdexcept>
#include <string>

namespace q2n {

/// Vectors of different dimension were mixed in one operation.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A descriptor parameter is outside its admissible range
/// (e.g. an affine coefficient below 1/2, a non-positive scale).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// An argument is outside the mathematical domain of the operation
/// (negative radicand, non-positive tolerance, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Structurally malformed input (bad JSON shape, unparseable token).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Every sample of a statistical estimate was degenerate; no sound
/// bound can be reported.
class InconclusiveSampling : public std::runtime_error {
 public:
  explicit InconclusiveSampling(const std::string& what) : std::runtime_error(what) {}
};

/// A caller-supplied convergence certificate failed spot verification.
class InvalidCertificate : public std::runtime_error {
 public:
  explicit InvalidCertificate(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace q2n
