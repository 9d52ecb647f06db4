// Exception hierarchy shared by all modules.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stemcalc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Structurally invalid arguments: wrong algebra level, bad subscript,
/// inconsistent degrees, out-of-range indices.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Operands live at incompatible algebra levels.
class LevelMismatchError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Input is well-formed but lies outside the fragment a decision procedure
/// covers.
class SubringError : public Error {
public:
  using Error::Error;
};

/// A configured work bound was exceeded before the computation finished.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

/// A derivation step needs a previously established fact that is absent.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A cross-check that must hold by construction failed; indicates a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace stemcalc
