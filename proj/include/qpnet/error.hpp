#pragma once

#include <stdexcept>
#include <string>

namespace qpnet {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (QP notation, DIMACS, JSON, query strings).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) +
                             (column > 0 ? ":" + std::to_string(column) : "") +
                             ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Expansion produced more terms than the configured cap.
class ExpansionLimit : public Error {
 public:
  explicit ExpansionLimit(std::size_t cap)
      : Error("multilinear expansion exceeds " + std::to_string(cap) +
              " terms"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class NotDecomposed : public Error {
 public:
  using Error::Error;
};

class MissingAtom : public Error {
 public:
  explicit MissingAtom(const std::string& atom)
      : Error("valuation has no value for '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class InvalidValuation : public Error {
 public:
  using Error::Error;
};

/// A rewrite rule was applied to an expression that does not have its shape.
class RewriteError : public Error {
 public:
  enum class Kind { PivotNotFound, ShapeMismatch };
  RewriteError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class ZeroEvidence : public Error {
 public:
  ZeroEvidence() : Error("zero-probability evidence") {}
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class TooManyAtoms : public Error {
 public:
  using Error::Error;
};

class TooManyVariables : public Error {
 public:
  using Error::Error;
};

class HeaderMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

class ConfigMismatch : public Error {
 public:
  ConfigMismatch() : Error("pulse trains have different configurations") {}
};

class ZeroEvidenceArea : public Error {
 public:
  ZeroEvidenceArea() : Error("evidence pulse train has zero area") {}
};

/// Query refers to unknown nodes or repeats a node.
class QueryError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpnet
