#pragma once

#include <stdexcept>
#include <string>

namespace abducer {

// Base class for all library errors. `code()` is the stable machine-readable
// identifier the CLI maps to exit codes and JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("syntax_error", message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownOperator : public Error {
 public:
  UnknownOperator(const std::string& token, std::size_t position)
      : Error("unknown_operator",
              "unknown operator '" + token + "' (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownWorld : public Error {
 public:
  explicit UnknownWorld(const std::string& id)
      : Error("unknown_world", "unknown world '" + id + "'") {}
};

class UnknownAtom : public Error {
 public:
  explicit UnknownAtom(const std::string& name)
      : Error("unknown_atom", "unknown atom '" + name + "'") {}
};

class InvalidModel : public Error {
 public:
  explicit InvalidModel(const std::string& message) : Error("invalid_model", message) {}
};

class EmptyObservation : public Error {
 public:
  explicit EmptyObservation(const std::string& formula)
      : Error("empty_observation", "no world satisfies '" + formula + "'") {}
};

class PointEliminated : public Error {
 public:
  PointEliminated(const std::string& world, const std::string& formula)
      : Error("point_eliminated",
              "world '" + world + "' does not satisfy '" + formula + "'") {}
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t requested, std::size_t cap)
      : Error("budget_exceeded", "candidate count " + std::to_string(requested) +
                                     " exceeds cap " + std::to_string(cap)) {}
};

class NoSolutions : public Error {
 public:
  NoSolutions() : Error("no_solutions", "no candidate satisfies the solution condition") {}
};

class TooManyAtoms : public Error {
 public:
  TooManyAtoms(std::size_t count, std::size_t bound)
      : Error("too_many_atoms", std::to_string(count) + " atoms exceed the truth-table bound of " +
                                    std::to_string(bound)) {}
};

class NotPropositional : public Error {
 public:
  explicit NotPropositional(const std::string& formula)
      : Error("not_propositional", "'" + formula + "' contains a modal operator") {}
};

class BackendUnavailable : public Error {
 public:
  explicit BackendUnavailable(const std::string& name)
      : Error("backend_unavailable", "no complexity backend named '" + name + "'") {}
};

class OrderMismatch : public Error {
 public:
  OrderMismatch() : Error("order_mismatch", "relation matrices use different world orders") {}
};

}  // namespace abducer
