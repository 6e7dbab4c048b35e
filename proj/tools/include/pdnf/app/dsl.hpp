#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdnf/error.hpp"
#include "pdnf/polynomial.hpp"
#include "pdnf/vector_field.hpp"

namespace pdnf::app {

/// Syntax or resolution error in a field description, with a 1-based position.
class ParseError : public pdnf::Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : pdnf::Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        message_(msg), line_(line), column_(column) {}
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

struct ParamDecl {
  std::string name;
  Rational value;

  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

struct SymmetryDecl {
  std::string name;
  std::vector<Polynomial> rhs;  ///< over vars followed by params

  friend bool operator==(const SymmetryDecl&, const SymmetryDecl&) = default;
};

/// A parsed field description. Right-hand sides are exact polynomials in the
/// variables and parameters together (variables first), so parameters can be
/// rebound without reparsing.
struct FieldSpec {
  std::vector<std::string> vars;
  std::vector<ParamDecl> params;
  std::vector<Polynomial> rhs;
  std::vector<SymmetryDecl> symmetries;

  /// Variable names followed by parameter names.
  std::vector<std::string> symbol_names() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

FieldSpec parse_field(std::string_view text);

/// Canonical text form; parse_field(print_spec(s)) == s.
std::string print_spec(const FieldSpec& spec);

using Bindings = std::map<std::string, Rational>;

struct NamedField {
  std::string name;
  VectorField field;
};

struct BoundField {
  std::vector<std::string> vars;
  Bindings params;  ///< the values actually used
  VectorField field;
  std::vector<NamedField> symmetries;
};

/// Substitutes parameter values (defaults overridden by `overrides`).
/// Fields are exact polynomials: their truncation is their degree (at least 1).
BoundField bind(const FieldSpec& spec, const Bindings& overrides = {});

/// "NAME=VALUE" with a rational VALUE.
std::pair<std::string, Rational> parse_binding(std::string_view text);

/// One grid point per non-empty line: whitespace-separated NAME=VALUE pairs;
/// '#' starts a comment.
std::vector<Bindings> parse_grid(std::string_view text);

}  // namespace pdnf::app
