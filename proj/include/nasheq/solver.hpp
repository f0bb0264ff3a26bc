#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nasheq/galois.hpp"
#include "nasheq/game.hpp"
#include "nasheq/groebner.hpp"

namespace nasheq {

enum class SolveMethod { Orbit, Naive, Both };

// Verdict over the totally mixed solution set:
//   Rpie                   - nonempty, and every coordinate of every
//                            equilibrium is irrational
//   HasRationalTotallyMixed - nonempty with some rational coordinate
//   NoTotallyMixed          - no totally mixed equilibrium exists
//   NonGeneric              - the system fell outside the generic case
enum class RpieVerdict { Rpie, HasRationalTotallyMixed, NoTotallyMixed,
                         NonGeneric };

std::string method_name(SolveMethod method);
SolveMethod parse_method(const std::string& name);
std::string verdict_name(RpieVerdict verdict);

struct SolveStats {
  std::uint64_t buchberger_calls = 0;
  // Full factorizations of a univariate eliminant (degree >= 2).
  std::uint64_t univariate_factorizations = 0;
  std::uint64_t factorizations_after_sample = 0;
  // Completed substitution chains (depth-first leaves reaching a full
  // assignment); the conjugation path performs none.
  std::uint64_t substitutions = 0;
  std::uint64_t substitutions_after_sample = 0;
  std::uint64_t orbit_actions = 0;
  std::uint64_t candidates_generated = 0;
  std::uint64_t candidates_rejected_rational = 0;  // rational roots skipped
                                                   // when seeding the sample
  std::uint64_t candidates_rejected_complex = 0;   // non-real roots discarded
  std::uint64_t candidates_rejected_not_nash = 0;
  // Wall-clock phase times in seconds. Reported on standard error only so
  // rendered output stays byte-deterministic.
  double wall_groebner_s = 0.0;
  double wall_roots_s = 0.0;
  double wall_filter_s = 0.0;
};

// One irreducible factor of a level eliminant, with its Galois data.
struct EliminantReport {
  std::string variable;
  UPoly polynomial;  // irreducible, primitive integer coefficients
  GaloisInfo galois;
  bool used_for_sample = false;
};

struct SampleResult {
  SolutionTuple sample;
  GroebnerBasis basis;
  std::vector<EliminantReport> eliminants;
};

// One exact solution of the system, chosen deterministically: the least
// irrational real root of the (factored) eliminant seeds the sample; in
// shape position every other coordinate is read off the coordinate maps
// with no further substitution or factorization.
// Throws NonGenericGame, NoRealRoot, NoIrrationalRoot.
SampleResult sample_solution(const GameSystem& gs,
                             SolveStats* stats = nullptr);

struct OrbitSolutions {
  std::vector<SolutionTuple> tuples;  // canonically sorted, duplicate-free
  GroebnerBasis basis;
  std::vector<EliminantReport> eliminants;
};

// All real solutions of the system via one Buchberger run plus root
// conjugation: for every irreducible factor of the eliminant, the tuples at
// its real roots form one Galois orbit, read off the shape coordinate maps.
// Rational eliminant roots contribute their (rational) tuples as well.
// Requires the generic case; throws NonGenericGame when the ideal is
// positive-dimensional or not in shape position.
OrbitSolutions all_solutions_orbit(const GameSystem& gs,
                                   SolveStats* stats = nullptr);

struct NaiveSolutions {
  std::vector<SolutionTuple> tuples;
  GroebnerBasis basis;
};

// The classical depth-first method: substitute every real root of every
// level eliminant back into the triangular form, one branch per root
// combination. Serves as the independent oracle for the conjugation path.
NaiveSolutions all_solutions_naive(const GameSystem& gs,
                                   SolveStats* stats = nullptr);

// Exact Nash verification of a totally mixed candidate.
struct NashCertificate {
  // margin_signs[player][strategy] = sign of (expected payoff - payoff of
  // deviating to that pure strategy); a totally mixed equilibrium has all
  // margins exactly 0.
  std::vector<std::vector<int>> margin_signs;
  bool interior = false;       // every weight strictly between 0 and 1
  bool simplex_exact = false;  // each player's weights sum to exactly 1
  bool best_response = false;  // no profitable pure deviation
  bool is_nash = false;
};

// Checks a tuple (aligned with `order`, covering every strategy weight)
// against the definition directly. Throws IncompleteTuple.
NashCertificate is_nash(const Game& game, const SolutionTuple& tuple,
                        const VarOrderPtr& order);

struct Equilibrium {
  SolutionTuple tuple;  // aligned with the system's variable order
  NashCertificate certificate;
};

struct SolveOptions {
  SolveMethod method = SolveMethod::Orbit;
  // Refuse games with more total strategies than this (Buchberger cost is
  // doubly exponential in the worst case).
  int size_limit = 12;
  // Custom variable order; defaults to the game's standard order.
  VarOrderPtr order;
};

struct SolveResult {
  std::vector<Equilibrium> equilibria;  // canonically sorted
  RpieVerdict verdict = RpieVerdict::NoTotallyMixed;
  GroebnerBasis basis;
  std::vector<EliminantReport> eliminants;
  SolveMethod method = SolveMethod::Orbit;
  // stats_orbit is populated unless method = naive; stats_naive unless
  // method = orbit.
  SolveStats stats_orbit;
  SolveStats stats_naive;
};

// Full pipeline: system construction, solution enumeration by the chosen
// method, exact Nash filtering, verdict. method = both runs the
// conjugation and substitution paths and insists their solution sets agree
// exactly. Throws BimatrixUnsupported (two players with the conjugation
// method), NonGenericGame, SizeLimitExceeded.
SolveResult solve(const Game& game, const SolveOptions& options = {});

// Totally mixed classification; never throws for solvable inputs
// (NonGenericGame becomes the NonGeneric verdict). Uses the substitution
// method so two-player games are classified too.
RpieVerdict classify_rpie(const Game& game);

}  // namespace nasheq
