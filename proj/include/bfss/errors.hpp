#ifndef BFSS_ERRORS_HPP
#define BFSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bfss {

// Base of every error thrown by this library. The CLI maps subclasses onto
// exit codes (1 = I/O, 2 = validation/usage, 3 = law violation).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text: unparseable document or decimal literal.
class ParseError : public Error {
public:
  using Error::Error;
};

// Well-formed input that violates a schema, uniqueness or range rule.
// Messages name the offending path.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A degree or grade component outside its representable range.
class OutOfRange : public Error {
public:
  using Error::Error;
};

// Binary or family operation over sets with different universes.
class UniverseMismatch : public Error {
public:
  using Error::Error;
};

// Restricted operation on operands whose parameter sets do not meet.
class EmptyParameterIntersection : public Error {
public:
  using Error::Error;
};

// Family operation applied to an empty family.
class EmptyFamily : public Error {
public:
  using Error::Error;
};

// A referenced parameter is not present in the soft set.
class UnknownParameter : public Error {
public:
  using Error::Error;
};

// A decision was requested over an empty choice of parameters.
class EmptyChoice : public Error {
public:
  using Error::Error;
};

}  // namespace bfss

#endif  // BFSS_ERRORS_HPP
