// Exact factorization over the rationals: squarefree split, then modular
// factorization (Berlekamp), quadratic Hensel lifting to a coefficient
// bound, and subset recombination with exact divisibility tests. Fully
// deterministic: the working prime is the smallest usable one and subsets
// are enumerated in index order.

#include <algorithm>
#include <span>

#include "nasheq/errors.hpp"
#include "nasheq/unipoly.hpp"

namespace nasheq {

namespace {

using ZVec = std::vector<Int>;  // dense integer coefficients, constant first

Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Symmetric representative in (-m/2, m/2].
Int mod_sym(const Int& a, const Int& m) {
  Int r = mod_pos(a, m);
  if (2 * r > m) r -= m;
  return r;
}

void zp_trim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int zp_deg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

ZVec zp_reduce(ZVec v, const Int& m) {
  for (auto& x : v) x = mod_pos(x, m);
  zp_trim(v);
  return v;
}

ZVec zp_add(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return zp_reduce(std::move(out), m);
}

ZVec zp_sub(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return zp_reduce(std::move(out), m);
}

ZVec zp_mul(const ZVec& a, const ZVec& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZVec out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return zp_reduce(std::move(out), m);
}

ZVec zp_scale(const ZVec& a, const Int& c, const Int& m) {
  ZVec out = a;
  for (auto& x : out) x *= c;
  return zp_reduce(std::move(out), m);
}

Int zp_inverse(const Int& a, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InternalError("non-invertible leading coefficient in modular ring");
  }
  return inv;
}

// Division with remainder; the divisor's leading coefficient must be
// invertible mod m (always true for monic divisors).
std::pair<ZVec, ZVec> zp_divrem(const ZVec& a, const ZVec& b, const Int& m) {
  if (b.empty()) throw DivisionByZero("modular polynomial division by zero");
  ZVec rem = a;
  const int db = zp_deg(b);
  if (zp_deg(a) < db) return {{}, rem};
  const Int inv = zp_inverse(b.back(), m);
  ZVec quot(a.size() - b.size() + 1, Int(0));
  for (int k = zp_deg(a) - db; k >= 0; --k) {
    Int q = mod_pos(rem[static_cast<std::size_t>(k + db)] * inv, m);
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= db; ++i) {
      auto& coeff = rem[static_cast<std::size_t>(k + i)];
      coeff = mod_pos(coeff - q * b[static_cast<std::size_t>(i)], m);
    }
  }
  zp_trim(rem);
  zp_trim(quot);
  return {std::move(quot), std::move(rem)};
}

ZVec zp_monic(const ZVec& a, const Int& m) {
  if (a.empty()) return a;
  return zp_scale(a, zp_inverse(a.back(), m), m);
}

// Monic gcd mod a prime p.
ZVec zp_gcd(ZVec a, ZVec b, const Int& p) {
  while (!b.empty()) {
    ZVec r = zp_divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

ZVec zp_derivative(const ZVec& a, const Int& m) {
  if (a.size() <= 1) return {};
  ZVec out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = a[i] * static_cast<unsigned long>(i);
  }
  return zp_reduce(std::move(out), m);
}

ZVec zp_mulmod(const ZVec& a, const ZVec& b, const ZVec& f, const Int& m) {
  return zp_divrem(zp_mul(a, b, m), f, m).second;
}

ZVec zp_powmod(ZVec base, Int e, const ZVec& f, const Int& m) {
  ZVec result{Int(1)};
  base = zp_divrem(base, f, m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = zp_mulmod(result, base, f, m);
    base = zp_mulmod(base, base, f, m);
    e /= 2;
  }
  return result;
}

// Extended Euclid mod a prime: s*a + t*b = 1 for coprime a, b, normalized
// so deg s < deg b and deg t < deg a.
std::pair<ZVec, ZVec> zp_bezout_coprime(const ZVec& a, const ZVec& b,
                                        const Int& p) {
  ZVec r0 = zp_reduce(a, p), r1 = zp_reduce(b, p);
  ZVec s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
  while (!r1.empty()) {
    auto [q, r] = zp_divrem(r0, r1, p);
    ZVec s2 = zp_sub(s0, zp_mul(q, s1, p), p);
    ZVec t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (zp_deg(r0) != 0) {
    throw InternalError("bezout coefficients requested for non-coprime input");
  }
  const Int inv = zp_inverse(r0[0], p);
  ZVec s = zp_scale(s0, inv, p);
  ZVec t = zp_scale(t0, inv, p);
  // Normalize degrees: s := s mod b, then t := (1 - s*a) / b.
  s = zp_divrem(s, b, p).second;
  ZVec num = zp_sub(ZVec{Int(1)}, zp_mul(s, a, p), p);
  auto [tq, tr] = zp_divrem(num, b, p);
  if (!tr.empty()) throw InternalError("bezout normalization failed");
  t = std::move(tq);
  return {std::move(s), std::move(t)};
}

// ---------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial mod a prime.
// ---------------------------------------------------------------------

std::vector<ZVec> nullspace_mod_p(std::vector<ZVec> matrix, const Int& p) {
  // matrix[row][col], square. Gauss-Jordan; returns a basis of {v : Mv = 0}.
  const std::size_t n = matrix.size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  std::vector<bool> is_pivot_col(n, false);
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && matrix[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(matrix[pivot], matrix[row]);
    const Int inv = zp_inverse(matrix[row][col], p);
    for (auto& x : matrix[row]) x = mod_pos(x * inv, p);
    for (std::size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == row || matrix[r2][col] == 0) continue;
      const Int factor = matrix[r2][col];
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        matrix[r2][c2] = mod_pos(matrix[r2][c2] - factor * matrix[row][c2], p);
      }
    }
    pivot_col_of_row.push_back(col);
    is_pivot_col[col] = true;
    ++row;
  }
  std::vector<ZVec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    ZVec v(n, Int(0));
    v[free_col] = 1;
    for (std::size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2) {
      v[pivot_col_of_row[r2]] = mod_pos(-matrix[r2][free_col], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ZVec> berlekamp(const ZVec& f, const Int& p) {
  const int n = zp_deg(f);
  if (n <= 1) return {f};
  // Frobenius rows: row i holds t^(i*p) mod f.
  std::vector<ZVec> rows(static_cast<std::size_t>(n));
  const ZVec tp = zp_powmod(ZVec{Int(0), Int(1)}, p, f, p);
  rows[0] = ZVec{Int(1)};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    rows[i] = zp_mulmod(rows[i - 1], tp, f, p);
  }
  // v is in the Berlekamp subalgebra iff sum_i v_i * rows[i] = v, i.e.
  // (Q^T - I) v = 0 with Q[i][j] = coefficient j of rows[i].
  std::vector<ZVec> matrix(static_cast<std::size_t>(n),
                           ZVec(static_cast<std::size_t>(n), Int(0)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      matrix[j][i] = rows[i][j];
    }
    matrix[i][i] = mod_pos(matrix[i][i] - 1, p);
  }
  const std::vector<ZVec> basis = nullspace_mod_p(std::move(matrix), p);
  const std::size_t factor_count = basis.size();
  std::vector<ZVec> factors{f};
  if (factor_count == 1) return factors;
  for (const auto& raw_v : basis) {
    if (factors.size() == factor_count) break;
    ZVec v = raw_v;
    zp_trim(v);
    if (zp_deg(v) <= 0) continue;  // constants never split anything
    std::vector<ZVec> next;
    for (const auto& u : factors) {
      if (zp_deg(u) <= 1) {
        next.push_back(u);
        continue;
      }
      ZVec remaining = u;
      for (Int c = 0; c < p && zp_deg(remaining) > 0; ++c) {
        ZVec shifted = v;
        if (shifted.empty()) shifted.push_back(Int(0));
        shifted[0] = mod_pos(shifted[0] - c, p);
        zp_trim(shifted);
        ZVec g = zp_gcd(remaining, shifted, p);
        if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(remaining)) {
          next.push_back(g);
          remaining = zp_divrem(remaining, g, p).first;
        }
      }
      if (zp_deg(remaining) > 0) next.push_back(zp_monic(remaining, p));
    }
    factors = std::move(next);
  }
  if (factors.size() != factor_count) {
    throw InternalError("modular factor count mismatch after splitting");
  }
  return factors;
}

// ---------------------------------------------------------------------
// Quadratic Hensel lifting.
// ---------------------------------------------------------------------

// One step: from f = g*h (mod m), s*g + t*h = 1 (mod m), h monic, to the
// same relations mod m^2.
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t,
                 const Int& m) {
  const Int m2 = m * m;
  const ZVec e = zp_sub(zp_reduce(f, m2), zp_mul(g, h, m2), m2);
  auto [q, r] = zp_divrem(zp_mul(s, e, m2), h, m2);
  ZVec g_new = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
  ZVec h_new = zp_add(h, r, m2);
  const ZVec one{Int(1)};
  const ZVec b = zp_sub(
      zp_add(zp_mul(s, g_new, m2), zp_mul(t, h_new, m2), m2), one, m2);
  auto [c, d] = zp_divrem(zp_mul(s, b, m2), h_new, m2);
  ZVec s_new = zp_sub(s, d, m2);
  ZVec t_new = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, g_new, m2), m2);
  g = std::move(g_new);
  h = std::move(h_new);
  s = std::move(s_new);
  t = std::move(t_new);
}

// Lifts monic factors of F from mod p to mod M (a power p^(2^j) chosen by
// the caller), where F = lc(F) * prod(factors) mod p. Appends the lifted
// monic factors in order.
void hensel_lift_tree(const ZVec& F, std::span<const ZVec> factors,
                      const Int& p, const Int& M, std::vector<ZVec>& out) {
  if (factors.size() == 1) {
    out.push_back(zp_monic(zp_reduce(F, M), M));
    return;
  }
  const std::size_t half = factors.size() / 2;
  // Left product carries the leading coefficient; right stays monic.
  ZVec lc{mod_pos(F.back(), p)};
  ZVec g = lc;
  for (std::size_t i = 0; i < half; ++i) g = zp_mul(g, factors[i], p);
  ZVec h{Int(1)};
  for (std::size_t i = half; i < factors.size(); ++i) {
    h = zp_mul(h, factors[i], p);
  }
  auto [s, t] = zp_bezout_coprime(g, h, p);
  Int m = p;
  while (m < M) {
    hensel_step(F, g, h, s, t, m);
    m *= m;
  }
  hensel_lift_tree(g, factors.subspan(0, half), p, M, out);
  hensel_lift_tree(h, factors.subspan(half), p, M, out);
}

// ---------------------------------------------------------------------
// Zassenhaus driver.
// ---------------------------------------------------------------------

ZVec to_zvec(const UPoly& p) {
  ZVec out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (c.get_den() != 1) {
      throw InternalError("integer coefficients expected for factorization");
    }
    out.push_back(c.get_num());
  }
  return out;
}

UPoly from_zvec(const ZVec& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c);
  return UPoly(std::move(out));
}

bool prime_is_usable(const Int& p, const ZVec& f) {
  if (mod_pos(f.back(), p) == 0) return false;
  const ZVec fb = zp_reduce(f, p);
  const ZVec fd = zp_derivative(fb, p);
  if (fd.empty()) return false;
  return zp_deg(zp_gcd(fb, fd, p)) == 0;
}

// Smallest odd prime keeping the leading coefficient a unit and the
// reduction squarefree. Exists for every squarefree integer polynomial.
Int choose_prime(const ZVec& f) {
  Int p = 3;
  while (true) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) != 0 && prime_is_usable(p, f)) {
      return p;
    }
    p += 2;
  }
}

// Coefficient bound: any factor of f (over Z, with leading coefficient
// dividing lc(f)) has coefficients below (n+1) * 2^n * max|f_i| * |lc(f)|.
Int coefficient_bound(const ZVec& f) {
  Int max_abs = 0;
  for (const auto& c : f) {
    Int a = abs(c);
    if (a > max_abs) max_abs = a;
  }
  const auto n = static_cast<unsigned long>(zp_deg(f));
  Int two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  return Int(n + 1) * two_n * max_abs * abs(f.back());
}

// Advances a sorted index combination to the next one in lexicographic
// order; returns false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) <= limit) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Factors a primitive squarefree integer polynomial of degree >= 1 into
// primitive irreducible integer polynomials with positive leading
// coefficients.
std::vector<UPoly> factor_squarefree_primitive(const UPoly& input) {
  std::vector<UPoly> result;
  if (input.degree() == 1) {
    result.push_back(input.primitive_integer_form());
    return result;
  }
  const ZVec f = to_zvec(input.primitive_integer_form());
  const Int p = choose_prime(f);
  const std::vector<ZVec> modular = berlekamp(zp_monic(zp_reduce(f, p), p), p);
  if (modular.size() == 1) {
    result.push_back(input.primitive_integer_form());
    return result;
  }
  const Int bound = coefficient_bound(f);
  Int M = p;
  while (M < 2 * bound + 1) M *= M;
  std::vector<ZVec> lifted;
  hensel_lift_tree(zp_reduce(f, M), modular, p, M, lifted);

  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  UPoly current = from_zvec(f);
  std::size_t subset_size = 1;
  while (2 * subset_size <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> combo(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) combo[i] = i;
    do {
      // Candidate: lc(current) * prod of chosen lifted factors, symmetric.
      ZVec cand{to_zvec(current).back()};
      for (std::size_t pos : combo) {
        cand = zp_mul(cand, lifted[remaining[pos]], M);
      }
      for (auto& c : cand) c = mod_sym(c, M);
      zp_trim(cand);
      const UPoly candidate = from_zvec(cand).primitive_integer_form();
      if (candidate.degree() >= 1) {
        auto [quot, rem] = current.divrem(candidate);
        if (rem.is_zero()) {
          result.push_back(candidate);
          current = quot.primitive_integer_form();
          std::vector<std::size_t> next_remaining;
          for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (std::find(combo.begin(), combo.end(), i) == combo.end()) {
              next_remaining.push_back(remaining[i]);
            }
          }
          remaining = std::move(next_remaining);
          found = true;
          break;
        }
      }
    } while (next_combination(combo, remaining.size() - 1));
    if (!found) ++subset_size;
  }
  if (current.degree() >= 1) {
    result.push_back(current.primitive_integer_form());
  }
  return result;
}

}  // namespace

std::vector<IrreducibleFactor> factor(const UPoly& p) {
  if (p.is_zero()) throw Error("cannot factor the zero polynomial");
  std::vector<IrreducibleFactor> out;
  if (p.degree() == 0) return out;
  for (const auto& part : yun_squarefree(p)) {
    for (const auto& irr : factor_squarefree_primitive(part.factor)) {
      out.push_back(IrreducibleFactor{irr, part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
              if (a.factor.degree() != b.factor.degree()) {
                return a.factor.degree() < b.factor.degree();
              }
              const auto& ca = a.factor.coefficients();
              const auto& cb = b.factor.coefficients();
              for (std::size_t i = ca.size(); i-- > 0;) {
                if (ca[i] != cb[i]) return ca[i] < cb[i];
              }
              return false;
            });
  return out;
}

bool is_irreducible(const UPoly& p) {
  if (p.is_zero() || p.degree() < 1) return false;
  const auto factors = factor(p);
  return factors.size() == 1 && factors[0].multiplicity == 1 &&
         factors[0].factor.degree() == p.degree();
}

}  // namespace nasheq
