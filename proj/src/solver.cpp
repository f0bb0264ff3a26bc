#include "nasheq/solver.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "nasheq/errors.hpp"

namespace nasheq {

std::string method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::Orbit: return "orbit";
    case SolveMethod::Naive: return "naive";
    case SolveMethod::Both: return "both";
  }
  throw InternalError("unhandled method");
}

SolveMethod parse_method(const std::string& name) {
  if (name == "orbit") return SolveMethod::Orbit;
  if (name == "naive") return SolveMethod::Naive;
  if (name == "both") return SolveMethod::Both;
  throw ParseError("unknown method '" + name + "' (orbit, naive, both)");
}

std::string verdict_name(RpieVerdict verdict) {
  switch (verdict) {
    case RpieVerdict::Rpie: return "RPIE";
    case RpieVerdict::HasRationalTotallyMixed:
      return "HasRationalTotallyMixed";
    case RpieVerdict::NoTotallyMixed: return "NoTotallyMixed";
    case RpieVerdict::NonGeneric: return "NonGeneric";
  }
  throw InternalError("unhandled verdict");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared front end of both methods: one Buchberger run plus the generic-
// case gates. Both methods must agree on what counts as generic, so that a
// game either works with both or fails with both.
GroebnerBasis prepare_basis(const GameSystem& gs, SolveStats& stats) {
  const auto start = Clock::now();
  GroebnerBasis basis = buchberger(gs.equations, gs.order);
  stats.buchberger_calls += 1;
  stats.wall_groebner_s += seconds_since(start);
  if (basis.inconsistent) return basis;
  if (!basis.zero_dimensional) {
    throw NonGenericGame(
        "the equilibrium system has infinitely many complex solutions");
  }
  if (!basis.shape) {
    throw NonGenericGame(
        "the equilibrium system is zero-dimensional but not in shape "
        "position; the generic-case solver does not apply");
  }
  return basis;
}

struct EliminantFactorData {
  UPoly polynomial;                   // irreducible factor
  std::vector<AlgebraicNumber> roots;  // real roots, ascending
};

// One factorization of the eliminant; real roots isolated per factor.
std::vector<EliminantFactorData> analyze_eliminant(const UPoly& eliminant) {
  std::vector<EliminantFactorData> out;
  for (const IrreducibleFactor& f : factor(eliminant)) {
    EliminantFactorData data;
    data.polynomial = f.factor;
    if (f.factor.degree() == 1) {
      data.roots.push_back(AlgebraicNumber::from_rational(
          -f.factor.coefficient(0) / f.factor.coefficient(1)));
    } else {
      for (const QInterval& interval : isolate_real_roots(f.factor)) {
        data.roots.push_back(AlgebraicNumber::root_of(f.factor, interval));
      }
    }
    out.push_back(std::move(data));
  }
  return out;
}

// The sample seed: the least irrational real root across all factors.
// Returns (factor index, root index) or nothing if every real root is
// rational.
std::optional<std::pair<std::size_t, std::size_t>> least_irrational_root(
    const std::vector<EliminantFactorData>& factors) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (std::size_t r = 0; r < factors[f].roots.size(); ++r) {
      if (factors[f].roots[r].is_rational()) continue;
      if (!best || factors[f].roots[r].compare(
                       factors[best->first].roots[best->second]) < 0) {
        best = {f, r};
      }
    }
  }
  return best;
}

std::vector<EliminantReport> build_reports(
    const std::vector<EliminantFactorData>& factors,
    const std::string& variable,
    std::optional<std::size_t> sample_factor) {
  std::vector<EliminantReport> reports;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    EliminantReport report;
    report.variable = variable;
    report.polynomial = factors[f].polynomial;
    report.galois = identify_group(factors[f].polynomial);
    report.used_for_sample = sample_factor && *sample_factor == f;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace

SampleResult sample_solution(const GameSystem& gs, SolveStats* stats) {
  SolveStats local;
  SolveStats& s = stats ? *stats : local;
  GroebnerBasis basis = prepare_basis(gs, s);
  if (basis.inconsistent) {
    throw NoRealRoot("the equilibrium system has no solutions at all");
  }
  const ShapeForm& shape = *basis.shape;

  const auto start = Clock::now();
  s.univariate_factorizations += 1;
  const std::vector<EliminantFactorData> factors =
      analyze_eliminant(shape.eliminant);

  bool any_real = false;
  for (const EliminantFactorData& f : factors) {
    any_real = any_real || !f.roots.empty();
    s.candidates_rejected_complex +=
        static_cast<std::uint64_t>(f.polynomial.degree()) - f.roots.size();
  }
  if (!any_real) {
    s.wall_roots_s += seconds_since(start);
    throw NoRealRoot("every root of the eliminant is complex");
  }
  for (const EliminantFactorData& f : factors) {
    for (const AlgebraicNumber& root : f.roots) {
      if (root.is_rational()) s.candidates_rejected_rational += 1;
    }
  }
  const auto seed = least_irrational_root(factors);
  if (!seed) {
    s.wall_roots_s += seconds_since(start);
    throw NoIrrationalRoot(
        "every real root of the eliminant is rational; there is no "
        "irrational sample to conjugate");
  }

  SampleResult result;
  result.sample = tuple_from_shape_root(
      shape, gs.order, factors[seed->first].roots[seed->second],
      TupleSource::Sample);
  s.candidates_generated += 1;
  s.wall_roots_s += seconds_since(start);
  result.basis = std::move(basis);
  result.eliminants = build_reports(
      factors, gs.order->name(shape.primitive_variable), seed->first);
  return result;
}

OrbitSolutions all_solutions_orbit(const GameSystem& gs, SolveStats* stats) {
  SolveStats local;
  SolveStats& s = stats ? *stats : local;
  OrbitSolutions result;
  result.basis = prepare_basis(gs, s);
  if (result.basis.inconsistent) return result;
  const ShapeForm& shape = *result.basis.shape;

  const auto start = Clock::now();
  s.univariate_factorizations += 1;
  const std::vector<EliminantFactorData> factors =
      analyze_eliminant(shape.eliminant);
  const auto seed = least_irrational_root(factors);

  for (std::size_t f = 0; f < factors.size(); ++f) {
    const EliminantFactorData& data = factors[f];
    s.candidates_rejected_complex +=
        static_cast<std::uint64_t>(data.polynomial.degree()) -
        data.roots.size();
    for (std::size_t r = 0; r < data.roots.size(); ++r) {
      const AlgebraicNumber& root = data.roots[r];
      const bool is_seed = seed && seed->first == f && seed->second == r;
      if (root.is_rational()) s.candidates_rejected_rational += 1;
      // Every real root of this irreducible factor is a conjugate of the
      // factor's sample root; the whole orbit is read off the coordinate
      // maps with no substitution.
      if (!is_seed && !root.is_rational()) s.orbit_actions += 1;
      s.candidates_generated += 1;
      SolutionTuple tuple = tuple_from_shape_root(
          shape, gs.order, root,
          is_seed ? TupleSource::Sample : TupleSource::Conjugate);
      if (!on_variety(gs.equations, tuple)) {
        throw InternalError("a shape-form solution left the variety");
      }
      result.tuples.push_back(std::move(tuple));
    }
  }
  s.wall_roots_s += seconds_since(start);
  sort_and_dedup(result.tuples);
  result.eliminants = build_reports(
      factors, gs.order->name(shape.primitive_variable),
      seed ? std::optional<std::size_t>(seed->first) : std::nullopt);
  return result;
}

namespace {

// Depth-first enumeration over the triangular form. Variables are resolved
// from the lex-least upward; each level collapses the basis to a univariate
// polynomial in the level variable, enumerates its real roots, and recurses.
class SubstitutionWalker {
 public:
  SubstitutionWalker(const GameSystem& gs, const GroebnerBasis& basis,
                     SolveStats& stats)
      : gs_(gs), basis_(basis), stats_(stats),
        field_(NumberField::rationals()),
        values_(gs.order->size()) {}

  std::vector<SolutionTuple> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  const GameSystem& gs_;
  const GroebnerBasis& basis_;
  SolveStats& stats_;
  FieldPtr field_;
  std::vector<std::optional<NFElement>> values_;
  std::vector<SolutionTuple> found_;
  bool first_chain_done_ = false;  // everything after it is "after sample"

  NFElement make_const(const Rat& r) const {
    return NFElement::from_rational(field_, r);
  }

  // Collapsed nonzero univariate polynomials (coefficients in the current
  // field, constant first) in the level variable; nullopt when the branch
  // is inconsistent (some fully assigned element is nonzero).
  std::optional<std::vector<std::vector<NFElement>>> collapse_level(
      std::size_t var) const {
    std::vector<std::vector<NFElement>> collapsed;
    for (const MPoly& p : basis_.polynomials) {
      std::vector<NFElement> coeffs;
      try {
        coeffs = p.collapse_to_univariate<NFElement>(
            var, values_, [this](const Rat& r) { return make_const(r); });
      } catch (const PartialAssignment&) {
        continue;  // involves a variable above this level
      }
      while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
      if (coeffs.empty()) continue;            // vanished identically
      if (coeffs.size() == 1) return std::nullopt;  // nonzero constant
      collapsed.push_back(std::move(coeffs));
    }
    return collapsed;
  }

  void leaf() {
    stats_.substitutions += 1;
    if (first_chain_done_) stats_.substitutions_after_sample += 1;
    first_chain_done_ = true;
    SolutionTuple tuple;
    tuple.field = field_;
    tuple.source = TupleSource::Sample;
    for (const auto& v : values_) tuple.coordinates.push_back(*v);
    if (!on_variety(gs_.equations, tuple)) {
      throw InternalError("a substitution chain left the variety");
    }
    found_.push_back(std::move(tuple));
  }

  void descend(std::size_t level) {
    if (level == values_.size()) {
      leaf();
      return;
    }
    const std::size_t var = values_.size() - 1 - level;  // lex-least first
    const auto collapsed = collapse_level(var);
    if (!collapsed) return;  // inconsistent branch
    if (collapsed->empty()) {
      throw NonGenericGame(
          "no equation determines variable '" + gs_.order->name(var) +
          "' on this branch; the solution set is not finite here");
    }
    if (field_->degree() == 1) {
      descend_rational_field(level, var, *collapsed);
    } else {
      descend_extended_field(level, var, *collapsed);
    }
  }

  // Current field is the rationals: combine the level polynomials by gcd,
  // factor, and branch over every real root, extending the field at
  // irrational ones.
  void descend_rational_field(
      std::size_t level, std::size_t var,
      const std::vector<std::vector<NFElement>>& collapsed) {
    UPoly level_poly;
    for (const auto& coeffs : collapsed) {
      std::vector<Rat> rational;
      rational.reserve(coeffs.size());
      for (const NFElement& c : coeffs) {
        const auto r = c.as_rational();
        if (!r) throw InternalError("irrational value in a rational field");
        rational.push_back(*r);
      }
      const UPoly p(std::move(rational));
      level_poly = level_poly.is_zero() ? p : upoly_gcd(level_poly, p);
      if (level_poly.is_constant()) return;  // no common root
    }

    std::vector<AlgebraicNumber> roots;
    if (level_poly.degree() == 1) {
      roots.push_back(AlgebraicNumber::from_rational(
          -level_poly.coefficient(0) / level_poly.coefficient(1)));
    } else {
      stats_.univariate_factorizations += 1;
      if (first_chain_done_) stats_.factorizations_after_sample += 1;
      for (const EliminantFactorData& f : analyze_eliminant(level_poly)) {
        stats_.candidates_rejected_complex +=
            static_cast<std::uint64_t>(f.polynomial.degree()) -
            f.roots.size();
        roots.insert(roots.end(), f.roots.begin(), f.roots.end());
      }
      std::sort(roots.begin(), roots.end(),
                [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                  return a.compare(b) < 0;
                });
    }

    for (const AlgebraicNumber& root : roots) {
      if (root.is_rational()) {
        values_[var] = make_const(*root.as_rational());
        descend(level + 1);
        values_[var].reset();
      } else {
        // First proper extension: move the (so far rational) assignment
        // into the new field.
        const FieldPtr extended = NumberField::adjoin(root);
        const FieldPtr saved_field = field_;
        std::vector<std::optional<NFElement>> saved_values = values_;
        field_ = extended;
        for (auto& v : values_) {
          if (v) v = NFElement::from_rational(extended, *v->as_rational());
        }
        values_[var] = NFElement::generator(extended);
        descend(level + 1);
        field_ = saved_field;
        values_ = std::move(saved_values);
      }
    }
  }

  // Inside a proper extension every level polynomial must be linear: its
  // single root stays in the field. Anything of higher degree would need a
  // second extension, which the generic case never produces.
  void descend_extended_field(
      std::size_t level, std::size_t var,
      const std::vector<std::vector<NFElement>>& collapsed) {
    for (const auto& coeffs : collapsed) {
      if (coeffs.size() > 2) {
        throw NonGenericGame(
            "variable '" + gs_.order->name(var) +
            "' needs a second field extension; the generic-case solver "
            "does not apply");
      }
    }
    const NFElement root = -(collapsed.front()[0] / collapsed.front()[1]);
    for (std::size_t i = 1; i < collapsed.size(); ++i) {
      if (!(collapsed[i][0] + collapsed[i][1] * root).is_zero()) {
        return;  // no common root on this branch
      }
    }
    values_[var] = root;
    descend(level + 1);
    values_[var].reset();
  }
};

}  // namespace

NaiveSolutions all_solutions_naive(const GameSystem& gs, SolveStats* stats) {
  SolveStats local;
  SolveStats& s = stats ? *stats : local;
  NaiveSolutions result;
  result.basis = prepare_basis(gs, s);
  if (result.basis.inconsistent) return result;

  const auto start = Clock::now();
  SubstitutionWalker walker(gs, result.basis, s);
  result.tuples = walker.run();
  s.candidates_generated += result.tuples.size();
  s.wall_roots_s += seconds_since(start);
  sort_and_dedup(result.tuples);
  return result;
}

NashCertificate is_nash(const Game& game, const SolutionTuple& tuple,
                        const VarOrderPtr& order) {
  if (tuple.coordinates.size() != order->size() ||
      order->size() != static_cast<std::size_t>(game.total_strategies())) {
    throw IncompleteTuple(
        "the tuple must assign every strategy weight of the game");
  }

  NashCertificate cert;
  cert.interior = true;
  cert.simplex_exact = true;
  cert.best_response = true;

  for (int player = 0; player < game.players(); ++player) {
    NFElement sum = NFElement::from_rational(tuple.field, Rat(0));
    for (int strategy = 0; strategy < game.strategies(player); ++strategy) {
      const auto index = order->index_of(strategy_var_name(player, strategy));
      if (!index) {
        throw IncompleteTuple("the order is missing a strategy weight");
      }
      const NFElement& weight = tuple.coordinates[*index];
      if (!in_open_unit_interval(weight)) cert.interior = false;
      sum = sum + weight;
    }
    const auto total = sum.as_rational();
    if (!total || *total != 1) cert.simplex_exact = false;
  }

  for (int player = 0; player < game.players(); ++player) {
    const MPoly alpha = expected_payoff(game, player, order);
    const NFElement value = evaluate_at_tuple(alpha, tuple);
    std::vector<int> signs;
    for (int strategy = 0; strategy < game.strategies(player); ++strategy) {
      const MPoly deviation =
          pure_deviation_payoff(game, player, strategy, order);
      const NFElement margin = value - evaluate_at_tuple(deviation, tuple);
      const int sign = margin.sign();
      if (sign < 0) cert.best_response = false;
      signs.push_back(sign);
    }
    cert.margin_signs.push_back(std::move(signs));
  }

  cert.is_nash = cert.interior && cert.simplex_exact && cert.best_response;
  return cert;
}

namespace {

std::vector<Equilibrium> filter_nash(const Game& game, const GameSystem& gs,
                                     const std::vector<SolutionTuple>& tuples,
                                     SolveStats& stats) {
  const auto start = Clock::now();
  std::vector<Equilibrium> out;
  for (const SolutionTuple& tuple : tuples) {
    NashCertificate cert = is_nash(game, tuple, gs.order);
    if (cert.is_nash) {
      out.push_back({tuple, std::move(cert)});
    } else {
      stats.candidates_rejected_not_nash += 1;
    }
  }
  stats.wall_filter_s += seconds_since(start);
  return out;
}

bool tuple_sets_equal(const std::vector<SolutionTuple>& a,
                      const std::vector<SolutionTuple>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (compare_tuples(a[i], b[i]) != 0) return false;
  }
  return true;
}

bool has_rational_coordinate(const std::vector<Equilibrium>& equilibria) {
  for (const Equilibrium& e : equilibria) {
    for (const NFElement& c : e.tuple.coordinates) {
      if (c.as_rational()) return true;
    }
  }
  return false;
}

}  // namespace

SolveResult solve(const Game& game, const SolveOptions& options) {
  if (game.total_strategies() > options.size_limit) {
    throw SizeLimitExceeded(
        "the game has " + std::to_string(game.total_strategies()) +
        " strategy weights; the configured limit is " +
        std::to_string(options.size_limit));
  }
  if (options.method != SolveMethod::Naive && game.players() == 2) {
    throw BimatrixUnsupported(
        "two-player games with rational payoffs have only rational totally "
        "mixed equilibria, so the conjugation method does not apply; use "
        "the substitution method");
  }

  const GameSystem gs = build_game_system(game, options.order);

  SolveResult result;
  result.method = options.method;

  std::optional<OrbitSolutions> orbit_solutions;
  std::optional<NaiveSolutions> naive_solutions;
  if (options.method != SolveMethod::Naive) {
    orbit_solutions = all_solutions_orbit(gs, &result.stats_orbit);
  }
  if (options.method != SolveMethod::Orbit) {
    naive_solutions = all_solutions_naive(gs, &result.stats_naive);
  }
  if (orbit_solutions && naive_solutions &&
      !tuple_sets_equal(orbit_solutions->tuples, naive_solutions->tuples)) {
    throw InternalError(
        "the conjugation and substitution methods disagree on the solution "
        "set");
  }

  if (orbit_solutions) {
    result.basis = orbit_solutions->basis;
    result.eliminants = orbit_solutions->eliminants;
    result.equilibria =
        filter_nash(game, gs, orbit_solutions->tuples, result.stats_orbit);
  }
  if (naive_solutions) {
    std::vector<Equilibrium> from_naive =
        filter_nash(game, gs, naive_solutions->tuples, result.stats_naive);
    if (!orbit_solutions) {
      result.basis = naive_solutions->basis;
      result.equilibria = std::move(from_naive);
      // Reporting-only factor analysis (not part of the solve accounting).
      if (result.basis.shape) {
        const auto factors = analyze_eliminant(result.basis.shape->eliminant);
        const auto seed = least_irrational_root(factors);
        result.eliminants = build_reports(
            factors, gs.order->name(result.basis.shape->primitive_variable),
            seed ? std::optional<std::size_t>(seed->first) : std::nullopt);
      }
    }
  }

  if (result.equilibria.empty()) {
    result.verdict = RpieVerdict::NoTotallyMixed;
  } else if (has_rational_coordinate(result.equilibria)) {
    result.verdict = RpieVerdict::HasRationalTotallyMixed;
  } else {
    result.verdict = RpieVerdict::Rpie;
  }
  return result;
}

RpieVerdict classify_rpie(const Game& game) {
  SolveOptions options;
  options.method = SolveMethod::Naive;
  try {
    return solve(game, options).verdict;
  } catch (const NonGenericGame&) {
    return RpieVerdict::NonGeneric;
  }
}

}  // namespace nasheq
