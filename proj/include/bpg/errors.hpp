#ifndef BPG_ERRORS_HPP
#define BPG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bpg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Graph construction rejected; carries the list of violated invariants.
class InvalidGraphError : public Error {
public:
  InvalidGraphError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations(std::move(violations)) {}

  std::vector<std::string> violations;
};

/// Path endpoints do not match (concatenation, extension).
class ComposabilityError : public Error {
public:
  using Error::Error;
};

/// Two values over different ambient graphs were combined.
class GraphMismatchError : public Error {
public:
  using Error::Error;
};

/// Input failed validation during parsing (malformed JSON, unknown ids).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A documented operation precondition failed; `condition` names it.
class PreconditionError : public Error {
public:
  PreconditionError(const std::string& what, std::string condition)
      : Error(what), condition(std::move(condition)) {}

  std::string condition;
};

} // namespace bpg

#endif // BPG_ERRORS_HPP
