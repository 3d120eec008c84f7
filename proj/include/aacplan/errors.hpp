#pragma once

#include <stdexcept>
#include <string>

namespace aacplan {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownTrait : Error {
  using Error::Error;
};

struct DuplicateName : Error {
  using Error::Error;
};

struct InvalidDescriptor : Error {
  using Error::Error;
};

struct InvalidAccuracy : Error {
  using Error::Error;
};

struct InvalidTransformation : Error {
  using Error::Error;
};

/// A transformation id does not resolve in the catalog.
struct UnknownStage : Error {
  using Error::Error;
};

struct NoChannel : Error {
  using Error::Error;
};

struct InvalidObjective : Error {
  using Error::Error;
};

struct UnknownMember : Error {
  using Error::Error;
};

struct SelfRoute : Error {
  using Error::Error;
};

struct UnknownEstimate : Error {
  using Error::Error;
};

struct InsufficientData : Error {
  using Error::Error;
};

struct Uncoverable : Error {
  Uncoverable(std::string row_label, const std::string& what)
      : Error(what), row(std::move(row_label)) {}
  std::string row;
};

struct TooLarge : Error {
  using Error::Error;
};

/// Scenario file is not well-formed structured text.
struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("parse error at line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

/// Scenario file is well-formed but violates the schema or cross-references.
struct ValidationError : Error {
  ValidationError(std::string doc_path, const std::string& message)
      : Error(doc_path + ": " + message), path(std::move(doc_path)) {}
  std::string path;
};

}  // namespace aacplan
