#include "nasheq/galois.hpp"

#include <algorithm>
#include <deque>

#include "nasheq/errors.hpp"

namespace nasheq {

std::string group_name(GaloisGroup group) {
  switch (group) {
    case GaloisGroup::C1: return "C1";
    case GaloisGroup::C2: return "C2";
    case GaloisGroup::C3: return "C3";
    case GaloisGroup::S3: return "S3";
    case GaloisGroup::C4: return "C4";
    case GaloisGroup::V4: return "V4";
    case GaloisGroup::D4: return "D4";
    case GaloisGroup::A4: return "A4";
    case GaloisGroup::S4: return "S4";
    case GaloisGroup::Unknown: return "Unknown";
  }
  throw InternalError("unhandled group label");
}

namespace {

// Whether delta is a square in Q(sqrt(disc)): either a rational square or a
// rational square times disc.
bool splits_over(const Rat& delta, const Rat& disc) {
  if (delta == 0) return true;
  if (is_rational_square(delta)) return true;
  const Rat scaled = delta * disc;
  return is_rational_square(scaled);
}

GaloisGroup classify_quartic(const UPoly& p) {
  const UPoly m = p.monic();
  const Rat a = m.coefficient(3);
  const Rat b = m.coefficient(2);
  const Rat c = m.coefficient(1);
  const Rat d = m.coefficient(0);

  // Resolvent cubic: its rational-root pattern separates the five cases.
  const Rat r1 = a * c - Rat(4) * d;
  const Rat r0 = a * a * d - Rat(4) * b * d + c * c;
  const UPoly resolvent({-r0, r1, -b, Rat(1)});
  const std::vector<Rat> roots = rational_roots(resolvent);
  const Rat disc = discriminant(p);

  if (roots.empty()) {
    return is_rational_square(disc) ? GaloisGroup::A4 : GaloisGroup::S4;
  }
  if (roots.size() == 3) return GaloisGroup::V4;
  if (roots.size() != 1) {
    // A cubic with two rational roots has a rational third root.
    throw InternalError("impossible rational-root count for a cubic");
  }
  const Rat beta = roots.front();
  // The quartic splits into two quadratics over Q(sqrt(disc)) exactly in
  // the cyclic case.
  const bool first = splits_over(beta * beta - Rat(4) * d, disc);
  const bool second = splits_over(a * a - Rat(4) * (b - beta), disc);
  return (first && second) ? GaloisGroup::C4 : GaloisGroup::D4;
}

}  // namespace

GaloisInfo identify_group(const UPoly& p) {
  if (p.degree() < 1) {
    throw NotIrreducible("a constant polynomial has no Galois group");
  }
  if (!is_irreducible(p)) {
    throw NotIrreducible("Galois classification needs an irreducible input: " +
                         p.to_string());
  }
  GaloisInfo info;
  info.degree = p.degree();
  info.real_roots = p.degree() == 1 ? 1 : count_real_roots(p);
  switch (p.degree()) {
    case 1:
      info.group = GaloisGroup::C1;
      break;
    case 2:
      info.group = GaloisGroup::C2;
      break;
    case 3:
      info.group = is_rational_square(discriminant(p)) ? GaloisGroup::C3
                                                       : GaloisGroup::S3;
      break;
    case 4:
      info.group = classify_quartic(p);
      break;
    default:
      info.group = GaloisGroup::Unknown;
      break;
  }
  if (info.group != GaloisGroup::Unknown) info.solvable = true;
  return info;
}

bool solvable_by_radicals(const GaloisInfo& info) {
  return info.solvable.value_or(false);
}

NFElement evaluate_at_tuple(const MPoly& eq, const SolutionTuple& tuple) {
  if (tuple.coordinates.size() != eq.nvars()) {
    throw IncompleteTuple("tuple does not assign every system variable");
  }
  const FieldPtr& field = tuple.field;
  return eq.evaluate<NFElement>(
      std::span<const NFElement>(tuple.coordinates),
      [&field](const Rat& r) { return NFElement::from_rational(field, r); });
}

bool on_variety(std::span<const MPoly> equations, const SolutionTuple& tuple) {
  for (const MPoly& eq : equations) {
    if (!evaluate_at_tuple(eq, tuple).is_zero()) return false;
  }
  return true;
}

std::vector<AlgebraicNumber> tuple_values(const SolutionTuple& tuple) {
  std::vector<AlgebraicNumber> values;
  values.reserve(tuple.coordinates.size());
  for (const NFElement& c : tuple.coordinates) {
    values.push_back(c.algebraic_value());
  }
  return values;
}

int compare_tuples(const SolutionTuple& a, const SolutionTuple& b) {
  if (a.coordinates.size() != b.coordinates.size()) {
    throw IncompleteTuple("comparing tuples of different lengths");
  }
  for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
    const int c = a.coordinates[i].algebraic_value().compare(
        b.coordinates[i].algebraic_value());
    if (c != 0) return c;
  }
  return 0;
}

void sort_and_dedup(std::vector<SolutionTuple>& tuples) {
  std::vector<std::vector<AlgebraicNumber>> keys;
  keys.reserve(tuples.size());
  for (const SolutionTuple& t : tuples) keys.push_back(tuple_values(t));

  std::vector<std::size_t> index(tuples.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  const auto compare_keys = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < keys[x].size(); ++i) {
      const int c = keys[x][i].compare(keys[y][i]);
      if (c != 0) return c;
    }
    return 0;
  };
  std::sort(index.begin(), index.end(),
            [&](std::size_t x, std::size_t y) { return compare_keys(x, y) < 0; });

  std::vector<SolutionTuple> out;
  for (std::size_t pos = 0; pos < index.size(); ++pos) {
    if (pos > 0 && compare_keys(index[pos - 1], index[pos]) == 0) {
      // Keep one copy; prefer remembering that it was a sample.
      if (tuples[index[pos]].source == TupleSource::Sample) {
        out.back().source = TupleSource::Sample;
      }
      continue;
    }
    out.push_back(tuples[index[pos]]);
  }
  tuples = std::move(out);
}

SolutionTuple tuple_from_shape_root(const ShapeForm& shape,
                                    const VarOrderPtr& order,
                                    const AlgebraicNumber& root,
                                    TupleSource source) {
  SolutionTuple tuple;
  tuple.source = source;
  if (root.is_rational()) {
    tuple.field = NumberField::rationals();
    const Rat value = *root.as_rational();
    std::vector<NFElement> coords(
        order->size(), NFElement::from_rational(tuple.field, Rat(0)));
    coords[shape.primitive_variable] =
        NFElement::from_rational(tuple.field, value);
    for (const auto& [w, h] : shape.coordinate_map) {
      coords[w] = NFElement::from_rational(tuple.field, h.evaluate(value));
    }
    tuple.coordinates = std::move(coords);
  } else {
    tuple.field = NumberField::adjoin(root);
    const NFElement theta = NFElement::generator(tuple.field);
    std::vector<NFElement> coords(
        order->size(), NFElement::from_rational(tuple.field, Rat(0)));
    coords[shape.primitive_variable] = theta;
    for (const auto& [w, h] : shape.coordinate_map) {
      coords[w] = evaluate_at(h, theta);
    }
    tuple.coordinates = std::move(coords);
  }
  if (shape.coordinate_map.size() + 1 != order->size()) {
    throw InternalError("shape form does not cover every variable");
  }
  return tuple;
}

namespace {

std::vector<AlgebraicNumber> real_roots_of_irreducible(const UPoly& minpoly) {
  std::vector<AlgebraicNumber> roots;
  for (const QInterval& interval : isolate_real_roots(minpoly)) {
    roots.push_back(AlgebraicNumber::root_of(minpoly, interval));
  }
  return roots;
}

std::vector<SolutionTuple> orbit_shape(const SolutionTuple& sample,
                                       std::span<const MPoly> equations,
                                       const ShapeForm& shape,
                                       OrbitStats& stats) {
  const VarOrderPtr& order = equations.front().order();
  const AlgebraicNumber primitive =
      sample.coordinates.at(shape.primitive_variable).algebraic_value();

  std::vector<SolutionTuple> out;
  if (primitive.is_rational()) {
    // A rational point is fixed by every automorphism: the orbit is itself.
    SolutionTuple self = sample;
    self.source = TupleSource::Sample;
    out.push_back(std::move(self));
    return out;
  }

  const UPoly& minpoly = primitive.minimal_polynomial();
  const std::vector<AlgebraicNumber> roots =
      real_roots_of_irreducible(minpoly);
  stats.nonreal_discarded +=
      static_cast<std::uint64_t>(minpoly.degree()) - roots.size();
  for (const AlgebraicNumber& root : roots) {
    const bool is_sample = root.compare(primitive) == 0;
    if (!is_sample) stats.actions += 1;
    stats.candidates_generated += 1;
    SolutionTuple tuple = tuple_from_shape_root(
        shape, order, root,
        is_sample ? TupleSource::Sample : TupleSource::Conjugate);
    if (!on_variety(equations, tuple)) {
      throw InternalError("shape-form conjugate left the variety");
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

std::vector<SolutionTuple> orbit_worklist(const SolutionTuple& sample,
                                          std::span<const MPoly> equations,
                                          OrbitStats& stats) {
  std::vector<SolutionTuple> processed;
  std::vector<std::vector<AlgebraicNumber>> keys;
  std::deque<std::size_t> pending;
  std::vector<UPoly> counted_minpolys;

  const auto try_add = [&](SolutionTuple candidate) {
    stats.candidates_generated += 1;
    if (!on_variety(equations, candidate)) {
      stats.candidates_rejected += 1;
      return;
    }
    std::vector<AlgebraicNumber> key = tuple_values(candidate);
    for (const auto& existing : keys) {
      bool equal = true;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i].compare(existing[i]) != 0) {
          equal = false;
          break;
        }
      }
      if (equal) return;
    }
    processed.push_back(std::move(candidate));
    keys.push_back(std::move(key));
    pending.push_back(processed.size() - 1);
  };

  {
    SolutionTuple seed = sample;
    seed.source = TupleSource::Sample;
    try_add(std::move(seed));
  }

  while (!pending.empty()) {
    const SolutionTuple current = processed[pending.front()];
    pending.pop_front();
    const int degree = current.field->degree();
    if (degree < 2) continue;  // rational coordinates have no conjugates

    const UPoly& minpoly =
        current.field->generator().minimal_polynomial();
    const std::vector<AlgebraicNumber> roots =
        real_roots_of_irreducible(minpoly);
    if (std::find(counted_minpolys.begin(), counted_minpolys.end(), minpoly) ==
        counted_minpolys.end()) {
      counted_minpolys.push_back(minpoly);
      stats.nonreal_discarded +=
          static_cast<std::uint64_t>(minpoly.degree()) - roots.size();
    }

    // Whole-tuple conjugation: move every coordinate to a sibling real root
    // of the generator. This is a field isomorphism, so the equations keep
    // holding exactly.
    for (const AlgebraicNumber& root : roots) {
      if (root.compare(current.field->generator()) == 0) continue;
      stats.actions += 1;
      SolutionTuple image;
      image.source = TupleSource::Conjugate;
      image.field = NumberField::adjoin(root);
      image.coordinates.reserve(current.coordinates.size());
      for (const NFElement& c : current.coordinates) {
        image.coordinates.emplace_back(image.field, c.representative());
      }
      try_add(std::move(image));
    }

    // Single-coordinate conjugation inside a quadratic field: the other
    // root of the generator lives in the same field, so replacing one
    // coordinate by its conjugate stays representable. Candidates off the
    // variety are filtered out above.
    if (degree == 2) {
      const Rat trace =
          -minpoly.coefficient(1) / minpoly.coefficient(2);
      for (std::size_t i = 0; i < current.coordinates.size(); ++i) {
        const UPoly& rep = current.coordinates[i].representative();
        if (rep.degree() < 1) continue;  // rational: fixed by conjugation
        stats.actions += 1;
        SolutionTuple candidate = current;
        candidate.source = TupleSource::Conjugate;
        candidate.coordinates[i] =
            NFElement(current.field, rep.compose_affine(Rat(-1), trace));
        try_add(std::move(candidate));
      }
    }
  }
  return processed;
}

}  // namespace

std::vector<SolutionTuple> orbit(const SolutionTuple& sample,
                                 std::span<const MPoly> equations,
                                 const std::optional<ShapeForm>& shape,
                                 OrbitStats* stats) {
  if (equations.empty()) {
    throw InternalError("orbit expansion needs at least one equation");
  }
  OrbitStats local;
  OrbitStats& s = stats ? *stats : local;
  if (!on_variety(equations, sample)) {
    throw SampleNotOnVariety("a system equation is nonzero at the sample");
  }
  std::vector<SolutionTuple> out =
      shape ? orbit_shape(sample, equations, *shape, s)
            : orbit_worklist(sample, equations, s);
  sort_and_dedup(out);
  return out;
}

}  // namespace nasheq
