#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nasheq/groebner.hpp"
#include "nasheq/multipoly.hpp"
#include "nasheq/numberfield.hpp"
#include "nasheq/unipoly.hpp"

namespace nasheq {

// Galois group of the splitting field of an irreducible rational
// polynomial. Degrees 1 through 4 are identified exactly; higher degrees
// are reported as Unknown.
enum class GaloisGroup { C1, C2, C3, S3, C4, V4, D4, A4, S4, Unknown };

std::string group_name(GaloisGroup group);

struct GaloisInfo {
  GaloisGroup group = GaloisGroup::Unknown;
  // Set for every identified group (always true below degree 5); empty when
  // the group is Unknown.
  std::optional<bool> solvable;
  int degree = 0;
  int real_roots = 0;
};

// Classification: degree 1 -> C1; degree 2 -> C2; degree 3 -> C3 when the
// discriminant is a rational square, else S3; degree 4 via the resolvent
// cubic's rational-root pattern plus discriminant squareness; degree >= 5
// -> Unknown. Throws NotIrreducible unless the input is irreducible.
GaloisInfo identify_group(const UPoly& irreducible);

// Whether roots are expressible by radicals: true for every identified
// group up to degree 4; false (conservatively) for Unknown.
bool solvable_by_radicals(const GaloisInfo& info);

// One exact solution of a polynomial system: every coordinate lives in the
// same real number field, aligned with the system's variable order.
enum class TupleSource { Sample, Conjugate };

struct SolutionTuple {
  FieldPtr field;
  std::vector<NFElement> coordinates;
  TupleSource source = TupleSource::Sample;
};

// eq evaluated at the tuple, exactly, inside the tuple's field.
NFElement evaluate_at_tuple(const MPoly& eq, const SolutionTuple& tuple);

// True iff every equation evaluates to exactly zero at the tuple.
bool on_variety(std::span<const MPoly> equations, const SolutionTuple& tuple);

// Coordinates as standalone algebraic numbers (for field-independent
// comparison and rendering).
std::vector<AlgebraicNumber> tuple_values(const SolutionTuple& tuple);

// Lexicographic order by exact coordinate comparison.
int compare_tuples(const SolutionTuple& a, const SolutionTuple& b);

// Canonical ascending order, exact duplicates removed.
void sort_and_dedup(std::vector<SolutionTuple>& tuples);

struct OrbitStats {
  std::uint64_t actions = 0;                // conjugations applied
  std::uint64_t candidates_generated = 0;   // candidate tuples formed
  std::uint64_t candidates_rejected = 0;    // discarded: not on the variety
  std::uint64_t nonreal_discarded = 0;      // complex conjugate roots skipped
};

// All real solutions of the system reachable from `sample` by conjugating
// roots, including the sample itself; canonically sorted.
//
// Fast path (shape form given): the primitive coordinate's conjugates are
// the real roots of its minimal polynomial; each conjugate tuple is read
// off the coordinate maps directly and is on the variety by construction.
//
// Fallback (no shape form): a worklist seeded with the sample. Each step
// conjugates a processed tuple either wholesale (moving every coordinate to
// another real root of the field generator - a field isomorphism) or one
// coordinate at a time (inside degree-2 fields, where a coordinate's
// conjugate stays in the field); candidates survive only if every equation
// still evaluates to exactly zero.
//
// Throws SampleNotOnVariety if the sample fails an equation.
std::vector<SolutionTuple> orbit(const SolutionTuple& sample,
                                 std::span<const MPoly> equations,
                                 const std::optional<ShapeForm>& shape,
                                 OrbitStats* stats = nullptr);

// Builds the solution tuple of a shape-form system at one real root of the
// eliminant: the primitive coordinate is the root itself, every other
// coordinate is its map evaluated there.
SolutionTuple tuple_from_shape_root(const ShapeForm& shape,
                                    const VarOrderPtr& order,
                                    const AlgebraicNumber& root,
                                    TupleSource source);

}  // namespace nasheq
