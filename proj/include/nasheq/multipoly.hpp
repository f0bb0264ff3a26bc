#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nasheq/errors.hpp"
#include "nasheq/rational.hpp"

namespace nasheq {

// A fixed sequence of variable names, highest precedence first. All
// polynomials built over the same order object (or an equal one) are
// compatible; mixing orders raises OrderMismatch.
class VarOrder {
 public:
  explicit VarOrder(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VarOrder& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

VarOrderPtr make_order(std::vector<std::string> names);

// Power product over a fixed variable count. Index 0 is the lex-greatest
// variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exp_(std::move(exponents)) {}
  static Monomial unit(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }
  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t power = 1);

  std::size_t nvars() const { return exp_.size(); }
  std::uint32_t exponent(std::size_t index) const { return exp_.at(index); }
  std::uint64_t total_degree() const;
  bool is_unit() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other) in the caller-facing direction: *this | other.
  Monomial divide_into(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  // Lexicographic comparison: negative, zero, positive.
  int compare_lex(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

 private:
  std::vector<std::uint32_t> exp_;
};

struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.compare_lex(b) > 0;
  }
};

struct Term {
  Monomial monomial;
  Rat coefficient;
};

// Sparse multivariate polynomial with exact rational coefficients under the
// lexicographic order fixed by its VarOrder. Terms are stored sorted with
// the leading term first; zero coefficients are never stored.
class MPoly {
 public:
  explicit MPoly(VarOrderPtr order);

  static MPoly zero(VarOrderPtr order) { return MPoly(std::move(order)); }
  static MPoly constant(VarOrderPtr order, const Rat& value);
  static MPoly variable(VarOrderPtr order, std::size_t index);
  static MPoly from_terms(VarOrderPtr order, const std::vector<Term>& terms);

  const VarOrderPtr& order() const { return order_; }
  std::size_t nvars() const { return order_->size(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  bool is_constant() const;
  // Largest exponent of one variable across all terms.
  std::uint32_t degree_in(std::size_t var_index) const;
  bool uses_variable(std::size_t var_index) const {
    return degree_in(var_index) > 0;
  }

  // Leading term under lex; requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;
  Term leading_term() const;

  std::vector<Term> terms() const;
  Rat coefficient_of(const Monomial& m) const;

  MPoly operator+(const MPoly& other) const;
  MPoly operator-(const MPoly& other) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& other) const;
  MPoly scaled(const Rat& factor) const;
  MPoly times_term(const Rat& coefficient, const Monomial& monomial) const;

  bool operator==(const MPoly& other) const;

  // Divides by the gcd of the integer-cleared coefficients and makes the
  // leading coefficient positive: the canonical primitive integer form.
  MPoly primitive_part() const;
  // Scales so the leading coefficient is 1 (nonzero polynomial).
  MPoly monic() const;

  // Full evaluation: `values[i]` is the value of variable i. T must support
  // +, *, and construction via `make_const` from a Rat.
  template <typename T, typename MakeConst>
  T evaluate(std::span<const T> values, MakeConst&& make_const) const {
    if (values.size() != nvars()) {
      throw PartialAssignment("evaluation needs a value for every variable");
    }
    T acc = make_const(Rat(0));
    for (const auto& [mono, coeff] : terms_) {
      T term = make_const(coeff);
      for (std::size_t i = 0; i < nvars(); ++i) {
        for (std::uint32_t e = 0; e < mono.exponent(i); ++e) {
          term = term * values[i];
        }
      }
      acc = acc + term;
    }
    return acc;
  }

  Rat evaluate_rational(std::span<const Rat> values) const;
  double evaluate_double(std::span<const double> values) const;

  // Partial evaluation collapsing to a univariate in `var_index`: every
  // other variable that actually appears must be assigned. Returns dense
  // coefficients, constant first.
  template <typename T, typename MakeConst>
  std::vector<T> collapse_to_univariate(std::size_t var_index,
                                        std::span<const std::optional<T>> values,
                                        MakeConst&& make_const) const {
    if (values.size() != nvars()) {
      throw PartialAssignment("assignment vector has the wrong length");
    }
    std::vector<T> coeffs(static_cast<std::size_t>(degree_in(var_index)) + 1,
                          make_const(Rat(0)));
    for (const auto& [mono, coeff] : terms_) {
      T term = make_const(coeff);
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (i == var_index) continue;
        if (mono.exponent(i) == 0) continue;
        if (!values[i].has_value()) {
          throw PartialAssignment("variable '" + order_->name(i) +
                                  "' is unassigned");
        }
        for (std::uint32_t e = 0; e < mono.exponent(i); ++e) {
          term = term * *values[i];
        }
      }
      const std::size_t k = mono.exponent(var_index);
      coeffs[k] = coeffs[k] + term;
    }
    return coeffs;
  }

  // Substitutes a polynomial for one variable (used for simplex
  // elimination when building the reduced system).
  MPoly substitute(std::size_t var_index, const MPoly& replacement) const;

  // Rebuilds this polynomial over another order that contains (at least)
  // every variable this polynomial actually uses.
  MPoly reorder(const VarOrderPtr& new_order) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rat& c);

  VarOrderPtr order_;
  std::map<Monomial, Rat, MonomialLexGreater> terms_;
};

// Raises OrderMismatch unless both polynomials share an equal order.
void require_same_order(const MPoly& a, const MPoly& b);

}  // namespace nasheq
