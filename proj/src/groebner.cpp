#include "nasheq/groebner.hpp"

#include <algorithm>
#include <set>

#include "nasheq/errors.hpp"

namespace nasheq {

MPoly reduce(const MPoly& p, std::span<const MPoly> basis) {
  MPoly remainder = MPoly::zero(p.order());
  MPoly work = p;
  while (!work.is_zero()) {
    const Monomial lm = work.leading_monomial();
    const Rat lc = work.leading_coefficient();
    bool reduced = false;
    for (const MPoly& b : basis) {
      if (b.is_zero()) continue;
      require_same_order(work, b);
      if (b.leading_monomial().divides(lm)) {
        const Monomial quotient_mono = b.leading_monomial().divide_into(lm);
        const Rat quotient_coeff = lc / b.leading_coefficient();
        work = work - b.times_term(quotient_coeff, quotient_mono);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // Move the irreducible leading term to the remainder.
      remainder = remainder + MPoly::from_terms(p.order(), {Term{lm, lc}});
      work = work - MPoly::from_terms(p.order(), {Term{lm, lc}});
    }
  }
  return remainder;
}

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) {
    throw InternalError("S-polynomial of a zero polynomial");
  }
  require_same_order(f, g);
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const MPoly left = f.times_term(Rat(1) / f.leading_coefficient(),
                                  f.leading_monomial().divide_into(l));
  const MPoly right = g.times_term(Rat(1) / g.leading_coefficient(),
                                   g.leading_monomial().divide_into(l));
  return left - right;
}

UPoly as_univariate(const MPoly& p, std::size_t var_index) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(p.degree_in(var_index)) + 1,
                          Rat(0));
  for (const auto& term : p.terms()) {
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (v != var_index && term.monomial.exponent(v) != 0) {
        throw InternalError("polynomial is not univariate in the variable");
      }
    }
    coeffs[term.monomial.exponent(var_index)] += term.coefficient;
  }
  return UPoly(std::move(coeffs));
}

IdealClassification classify_ideal(std::span<const MPoly> reduced_basis,
                                   const VarOrderPtr& order) {
  IdealClassification out;
  if (reduced_basis.size() == 1 && !reduced_basis[0].is_zero() &&
      reduced_basis[0].is_constant()) {
    // Basis {1}: empty variety. Finitely many (zero) solutions.
    out.zero_dimensional = true;
    out.inconsistent = true;
    return out;
  }
  const std::size_t nvars = order->size();
  // Zero-dimensional iff every variable appears as a pure power among the
  // leading monomials.
  std::vector<bool> covered(nvars, false);
  for (const MPoly& b : reduced_basis) {
    if (b.is_zero()) continue;
    const Monomial& lm = b.leading_monomial();
    std::size_t support = 0;
    std::size_t the_var = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (lm.exponent(v) > 0) {
        ++support;
        the_var = v;
      }
    }
    if (support == 1) covered[the_var] = true;
  }
  out.zero_dimensional =
      std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
  if (!out.zero_dimensional || nvars == 0) return out;

  // Shape test: lex-least variable carries the eliminant; every other
  // variable appears exactly once as a linear leading monomial with a tail
  // in the primitive variable only.
  const std::size_t primitive = nvars - 1;
  if (reduced_basis.size() != nvars) return out;
  ShapeForm shape;
  shape.primitive_variable = primitive;
  std::vector<bool> mapped(nvars, false);
  bool ok = true;
  for (const MPoly& b : reduced_basis) {
    const Monomial& lm = b.leading_monomial();
    // Univariate in the primitive variable: the eliminant.
    bool only_primitive = true;
    for (std::size_t v = 0; v + 1 < nvars; ++v) {
      if (b.degree_in(v) > 0) only_primitive = false;
    }
    if (only_primitive) {
      if (!shape.eliminant.is_zero()) {
        ok = false;  // two eliminants cannot happen in a reduced basis
        break;
      }
      shape.eliminant = as_univariate(b, primitive);
      continue;
    }
    // Otherwise: must be w - h_w(primitive) with LM = w.
    if (lm.total_degree() != 1) {
      ok = false;
      break;
    }
    std::size_t w = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (lm.exponent(v) == 1) w = v;
    }
    if (w == primitive || mapped[w]) {
      ok = false;
      break;
    }
    MPoly tail = b - MPoly::variable(b.order(), w).scaled(b.leading_coefficient());
    // h_w = -tail / lc; the basis is monic so lc is 1.
    for (std::size_t v = 0; v + 1 < nvars; ++v) {
      if (tail.degree_in(v) > 0) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    shape.coordinate_map[w] = as_univariate(-tail, primitive);
    mapped[w] = true;
  }
  if (ok && shape.eliminant.degree() >= 1 &&
      shape.coordinate_map.size() == nvars - 1) {
    out.shape = std::move(shape);
  }
  return out;
}

namespace {

struct Pair {
  std::uint64_t lcm_degree;
  std::size_t i;
  std::size_t j;
  bool operator<(const Pair& other) const {
    if (lcm_degree != other.lcm_degree) return lcm_degree < other.lcm_degree;
    if (i != other.i) return i < other.i;
    return j < other.j;
  }
};

}  // namespace

GroebnerBasis buchberger(std::span<const MPoly> generators, VarOrderPtr order,
                         BuchbergerStats* stats) {
  BuchbergerStats local;
  std::vector<MPoly> basis;
  for (const MPoly& g : generators) {
    if (g.is_zero()) continue;
    MPoly p = g;
    if (!(*p.order() == *order)) p = p.reorder(order);
    basis.push_back(p.primitive_part());
  }
  std::set<Pair> queue;
  auto enqueue_with = [&](std::size_t fresh) {
    for (std::size_t i = 0; i < fresh; ++i) {
      const Monomial l =
          basis[i].leading_monomial().lcm(basis[fresh].leading_monomial());
      queue.insert(Pair{l.total_degree(), i, fresh});
      ++local.pairs_considered;
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) enqueue_with(j);

  while (!queue.empty()) {
    const Pair next = *queue.begin();
    queue.erase(queue.begin());
    const MPoly& f = basis[next.i];
    const MPoly& g = basis[next.j];
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    // Coprime leading monomials reduce to zero automatically.
    if (l == f.leading_monomial() * g.leading_monomial()) {
      ++local.pairs_skipped;
      continue;
    }
    ++local.reductions;
    const MPoly remainder = reduce(s_polynomial(f, g), basis);
    if (remainder.is_zero()) {
      ++local.zero_reductions;
      continue;
    }
    basis.push_back(remainder.primitive_part());
    enqueue_with(basis.size() - 1);
  }

  // Minimalize: drop any element whose leading monomial is divisible by
  // another kept element's leading monomial (keeping the earlier one when
  // leading monomials coincide).
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b || !keep[b] || !keep[a]) continue;
      const Monomial& la = basis[a].leading_monomial();
      const Monomial& lb = basis[b].leading_monomial();
      if (la == lb) {
        keep[std::max(a, b)] = false;
      } else if (lb.divides(la)) {
        keep[a] = false;
      }
    }
  }
  std::vector<MPoly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (keep[a]) minimal.push_back(basis[a]);
  }
  // Inter-reduce: replace each element by its normal form against the rest,
  // which keeps leading monomials and removes every redundant tail term.
  std::vector<MPoly> reduced_basis;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    MPoly nf = reduce(minimal[a], others);
    if (!nf.is_zero()) reduced_basis.push_back(nf.monic());
  }
  std::sort(reduced_basis.begin(), reduced_basis.end(),
            [](const MPoly& a, const MPoly& b) {
              return a.leading_monomial().compare_lex(b.leading_monomial()) > 0;
            });

  GroebnerBasis out;
  out.polynomials = std::move(reduced_basis);
  out.order = order;
  if (out.polynomials.empty()) {
    // All generators were zero: the whole space, not zero-dimensional.
    out.zero_dimensional = order->size() == 0;
  } else {
    IdealClassification cls = classify_ideal(out.polynomials, order);
    out.zero_dimensional = cls.zero_dimensional;
    out.inconsistent = cls.inconsistent;
    out.shape = std::move(cls.shape);
  }
  local.basis_size = out.polynomials.size();
  if (stats) *stats = local;
  return out;
}

}  // namespace nasheq
