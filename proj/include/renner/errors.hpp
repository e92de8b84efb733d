#ifndef RENNER_ERRORS_HPP
#define RENNER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace renner {

// qpoly
struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& m) : std::runtime_error("DivisionByZero: " + m) {}
};
struct PoleAtValue : std::runtime_error {
  explicit PoleAtValue(const std::string& m) : std::runtime_error("PoleAtValue: " + m) {}
};
struct NonPolynomialEntry : std::runtime_error {
  explicit NonPolynomialEntry(const std::string& m) : std::runtime_error("NonPolynomialEntry: " + m) {}
};

// monoid-elements
struct NotInMonoid : std::runtime_error {
  explicit NotInMonoid(const std::string& m) : std::runtime_error("NotInMonoid: " + m) {}
};
struct InvalidK : std::runtime_error {
  explicit InvalidK(const std::string& m) : std::runtime_error("InvalidK: " + m) {}
};
struct DefinitionMismatch : std::runtime_error {
  explicit DefinitionMismatch(const std::string& m) : std::runtime_error("DefinitionMismatch: " + m) {}
};

// solomon-matrices
struct DecompositionMismatch : std::runtime_error {
  explicit DecompositionMismatch(const std::string& m) : std::runtime_error("DecompositionMismatch: " + m) {}
};

// hecke-tables
struct SupportViolation : std::runtime_error {
  explicit SupportViolation(const std::string& m) : std::runtime_error("SupportViolation: " + m) {}
};

// cli-io
struct UnsupportedSize : std::runtime_error {
  explicit UnsupportedSize(const std::string& m) : std::runtime_error("UnsupportedSize: " + m) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error("ParseError: " + m) {}
};
struct CorruptCache : std::runtime_error {
  explicit CorruptCache(const std::string& m) : std::runtime_error("CorruptCache: " + m) {}
};

}  // namespace renner

#endif
