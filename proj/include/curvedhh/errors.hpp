#ifndef CURVEDHH_ERRORS_HPP
#define CURVEDHH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvedhh {

/*
 * Every failure raised by the library derives from Error and carries a short
 * machine-readable code.  The CLI maps codes onto exit statuses:
 *
 *   E_CONFIG, E_VALIDATION, E_RELATION, E_DEGREE, E_INVALID_COMPLEX  -> 1
 *   E_IO, E_PARSE, E_SEMANTIC                                        -> 2
 *   E_CONVENTION                                                     -> 3
 */
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Mixed fields, bad moduli, non-invertible literals.
class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(const std::string& msg) : Error("E_CONFIG", msg) {}
};

// d∘d != 0 on a complex handed to homology routines.
class InvalidComplexError : public Error {
 public:
  InvalidComplexError(int degree, const std::string& msg)
      : Error("E_INVALID_COMPLEX", msg), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

// Structure constants violating composability or the degree rule.
class DegreeError : public Error {
 public:
  explicit DegreeError(const std::string& msg) : Error("E_DEGREE", msg) {}
};

// A failed A-infinity (or bimodule) relation.
class RelationViolation : public Error {
 public:
  explicit RelationViolation(const std::string& msg) : Error("E_RELATION", msg) {}
};

// Structural precondition failures (non-unital input, non-directed input, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error("E_VALIDATION", msg) {}
};

// Sign/convention self-tests of assembled complexes (d∘d on the Hochschild
// or bar complex, well-definedness of induced maps).
class ConventionViolation : public Error {
 public:
  explicit ConventionViolation(const std::string& msg) : Error("E_CONVENTION", msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error("E_IO", msg) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error("E_PARSE", msg), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed syntax but meaningless content (dangling ids, duplicate records).
class SemanticError : public Error {
 public:
  SemanticError(int line, const std::string& msg) : Error("E_SEMANTIC", msg), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

inline int exit_status(const Error& e) {
  const auto& c = e.code();
  if (c == "E_IO" || c == "E_PARSE" || c == "E_SEMANTIC") return 2;
  if (c == "E_CONVENTION") return 3;
  return 1;
}

}  // namespace curvedhh

#endif  // CURVEDHH_ERRORS_HPP
