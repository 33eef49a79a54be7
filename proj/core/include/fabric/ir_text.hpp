#pragma once

// Textual form of a circuit (`.scifr` files): one MLIR-flavoured function
// per file, ops spelled `scifr_bool.<op>` / `scifr_ckks.<op>`.
//
//   func @half_adder(%a: !lwe, %b: !lwe) -> !lwe, !lwe {
//     %sum = scifr_bool.xor %a, %b : !lwe
//     %carry = scifr_bool.and %a, %b : !lwe
//     return %sum, %carry : !lwe, !lwe
//   }

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fabric/circuit.hpp"

namespace fabric {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::size_t length = 0;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;
};

inline constexpr std::size_t kMaxDiagnostics = 20;

struct ParseResult {
  std::variant<CircuitGraph, std::vector<Diagnostic>> outcome;

  bool ok() const { return std::holds_alternative<CircuitGraph>(outcome); }
  const CircuitGraph& graph() const { return std::get<CircuitGraph>(outcome); }
  CircuitGraph& graph() { return std::get<CircuitGraph>(outcome); }
  const std::vector<Diagnostic>& diagnostics() const {
    return std::get<std::vector<Diagnostic>>(outcome);
  }
};

ParseResult parse(std::string_view text);

// Canonical form: two-space indent, attributes sorted by name, LF endings.
std::string print(const CircuitGraph& graph);

// "file:line:col: error: message"
std::string format_diagnostic(std::string_view file, const Diagnostic& diag);

// Reads and parses a file; an unreadable file yields one diagnostic at 1:1.
ParseResult parse_file(const std::string& path);

}  // namespace fabric
