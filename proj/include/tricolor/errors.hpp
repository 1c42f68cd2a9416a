#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricolor {

using Vertex = std::uint32_t;

// Malformed graph, file or argument.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A bookkeeping invariant broke inside the library itself.
class InternalInvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The oracle refuses inputs above its size cap.
class OracleRefusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when the input exhibits a configuration that cannot occur for a
// cleaned member of the class. Either the input is not a member or there is
// a bug upstream.
class StructuralDiagnostic : public std::runtime_error {
public:
  StructuralDiagnostic(std::string kind, std::string detail,
                       std::vector<Vertex> witness = {})
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string &kind() const noexcept { return kind_; }
  const std::vector<Vertex> &witness() const noexcept { return witness_; }

private:
  std::string kind_;
  std::vector<Vertex> witness_;
};

} // namespace tricolor
