#pragma once

#include <stdexcept>
#include <string>

namespace nasheq {

// Base class for all library errors so callers can catch everything at once.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad JSON, bad rational literal, bad CLI flag value.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A payoff value that cannot be represented as an exact rational
// (e.g. a floating-point literal in a game file).
class NonRationalPayoff : public ParseError {
 public:
  explicit NonRationalPayoff(const std::string& what) : ParseError(what) {}
};

// Structurally invalid game: wrong player/strategy counts, duplicate or
// missing payoff entries, out-of-range strategy indices.
class InvalidGame : public Error {
 public:
  explicit InvalidGame(const std::string& what) : Error(what) {}
};

// Division by a zero polynomial or zero field element.
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Mixing field elements that live in different number fields.
class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error(what) {}
};

// Evaluating a polynomial with an assignment that does not cover every
// variable the evaluation needs.
class PartialAssignment : public Error {
 public:
  explicit PartialAssignment(const std::string& what) : Error(what) {}
};

// Combining polynomials built over different variable orders.
class OrderMismatch : public Error {
 public:
  explicit OrderMismatch(const std::string& what) : Error(what) {}
};

// The equilibrium system has infinitely many complex solutions (positive-
// dimensional ideal) or otherwise falls outside the generic case the solver
// handles exactly.
class NonGenericGame : public Error {
 public:
  explicit NonGenericGame(const std::string& what) : Error(what) {}
};

// The system has no real solutions at all.
class NoRealRoot : public Error {
 public:
  explicit NoRealRoot(const std::string& what) : Error(what) {}
};

// The system has real solutions but every one of them is rational, so there
// is no irrational sample point to seed the conjugation method with.
class NoIrrationalRoot : public Error {
 public:
  explicit NoIrrationalRoot(const std::string& what) : Error(what) {}
};

// Two-player games have only rational totally mixed equilibria, which the
// conjugation method deliberately refuses to process.
class BimatrixUnsupported : public Error {
 public:
  explicit BimatrixUnsupported(const std::string& what) : Error(what) {}
};

// Instance exceeds the configured variable-count limit.
class SizeLimitExceeded : public Error {
 public:
  explicit SizeLimitExceeded(const std::string& what) : Error(what) {}
};

// A solution tuple that does not assign a value to every variable.
class IncompleteTuple : public Error {
 public:
  explicit IncompleteTuple(const std::string& what) : Error(what) {}
};

// An operation that requires an irreducible polynomial received a
// reducible (or constant) one.
class NotIrreducible : public Error {
 public:
  explicit NotIrreducible(const std::string& what) : Error(what) {}
};

// A claimed sample solution does not satisfy every system equation exactly.
class SampleNotOnVariety : public Error {
 public:
  explicit SampleNotOnVariety(const std::string& what) : Error(what) {}
};

// Internal invariant violation; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace nasheq
