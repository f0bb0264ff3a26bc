#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nasheq/multipoly.hpp"
#include "nasheq/unipoly.hpp"

namespace nasheq {

// Full normal form of p against an ordered list of reducers: each step
// cancels the first reducible term using the first basis element whose
// leading monomial divides it. Deterministic in the basis order.
MPoly reduce(const MPoly& p, std::span<const MPoly> basis);

// S-polynomial with monic normalization:
//   S(f,g) = (L/LT(f)) f - (L/LT(g)) g,  L = lcm(LM(f), LM(g)).
MPoly s_polynomial(const MPoly& f, const MPoly& g);

struct BuchbergerStats {
  std::uint64_t pairs_considered = 0;   // critical pairs generated
  std::uint64_t pairs_skipped = 0;      // dropped by the coprimality criterion
  std::uint64_t reductions = 0;         // S-polynomials reduced
  std::uint64_t zero_reductions = 0;    // of these, how many vanished
  std::uint64_t basis_size = 0;         // final reduced basis size
};

// Triangular description of a zero-dimensional ideal whose reduced basis is
//   { g(v),  w - h_w(v)  for every other variable w }
// with v the lex-least variable. Every solution is read off by substituting
// a root of the eliminant into the coordinate maps.
struct ShapeForm {
  std::size_t primitive_variable;             // index of the lex-least variable
  UPoly eliminant;                            // monic g, univariate in it
  std::map<std::size_t, UPoly> coordinate_map;  // w -> h_w
};

struct GroebnerBasis {
  std::vector<MPoly> polynomials;  // reduced, monic, leading monomials descending
  VarOrderPtr order;
  bool zero_dimensional = false;    // finitely many complex solutions
  bool inconsistent = false;        // basis is {1}: no solutions at all
  std::optional<ShapeForm> shape;
};

struct IdealClassification {
  bool zero_dimensional = false;
  bool inconsistent = false;
  std::optional<ShapeForm> shape;
};

// Dimension and shape classification of a reduced basis: zero-dimensional
// iff every variable carries a pure-power leading monomial; shape form as
// described above.
IdealClassification classify_ideal(std::span<const MPoly> reduced_basis,
                                   const VarOrderPtr& order);

// Buchberger's algorithm under the lexicographic order, with the normal
// pair-selection strategy (lowest lcm total degree, ties by index pair) and
// the coprime-leading-monomial skip criterion. Returns the unique reduced
// monic basis, sorted by leading monomial descending.
GroebnerBasis buchberger(std::span<const MPoly> generators, VarOrderPtr order,
                         BuchbergerStats* stats = nullptr);

// Extracts a polynomial that involves exactly one variable as univariate.
UPoly as_univariate(const MPoly& p, std::size_t var_index);

}  // namespace nasheq
