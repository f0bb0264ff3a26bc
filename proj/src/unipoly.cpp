#include "nasheq/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "nasheq/errors.hpp"

namespace nasheq {

UPoly::UPoly(std::vector<Rat> coefficients) : c_(std::move(coefficients)) {
  for (auto& v : c_) v.canonicalize();  // two-argument Rat may arrive raw
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rat& value) {
  return UPoly(std::vector<Rat>{value});
}

UPoly UPoly::identity() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

const Rat& UPoly::coefficient(std::size_t k) const {
  static const Rat kZero(0);
  return k < c_.size() ? c_[k] : kZero;
}

const Rat& UPoly::leading_coefficient() const {
  if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& other) const {
  std::vector<Rat> out(std::max(c_.size(), other.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] += other.c_[i];
  return UPoly(std::move(out));
}

UPoly UPoly::operator-(const UPoly& other) const {
  std::vector<Rat> out(std::max(c_.size(), other.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] -= other.c_[i];
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  std::vector<Rat> out = c_;
  for (auto& v : out) v = -v;
  return UPoly(std::move(out));
}

UPoly UPoly::operator*(const UPoly& other) const {
  if (is_zero() || other.is_zero()) return UPoly();
  std::vector<Rat> out(c_.size() + other.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.c_.size(); ++j) {
      out[i + j] += c_[i] * other.c_[j];
    }
  }
  return UPoly(std::move(out));
}

UPoly UPoly::scaled(const Rat& factor) const {
  if (sgn(factor) == 0) return UPoly();
  Rat f = factor;
  f.canonicalize();
  std::vector<Rat> out = c_;
  for (auto& v : out) v *= f;
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rat> rem = c_;
  const int dd = divisor.degree();
  const Rat& lead = divisor.leading_coefficient();
  if (static_cast<int>(rem.size()) - 1 < dd) return {UPoly(), UPoly(rem)};
  std::vector<Rat> quot(rem.size() - static_cast<std::size_t>(dd), Rat(0));
  for (int k = static_cast<int>(rem.size()) - 1 - dd; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + dd)] / lead;
    if (sgn(q) == 0) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -=
          q * divisor.c_[static_cast<std::size_t>(i)];
    }
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::divide_exact(const UPoly& divisor) const {
  auto [q, r] = divrem(divisor);
  if (!r.is_zero()) throw InternalError("polynomial division was not exact");
  return q;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out[i - 1] = c_[i] * Rat(static_cast<unsigned long>(i));
  }
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) throw InternalError("monic form of the zero polynomial");
  return scaled(Rat(1) / leading_coefficient());
}

UPoly UPoly::primitive_integer_form() const {
  if (is_zero()) return *this;
  Int den_lcm = 1;
  for (const auto& v : c_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Int content = 0;
  for (const auto& v : c_) {
    Int cleared = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cleared.get_mpz_t());
  }
  Rat factor(den_lcm, content);
  factor.canonicalize();
  if (sgn(leading_coefficient()) < 0) factor = -factor;
  return scaled(factor);
}

Rat UPoly::evaluate(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  return acc;
}

QInterval UPoly::evaluate_interval(const QInterval& x) const {
  QInterval acc = QInterval::point(Rat(0));
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + QInterval::point(c_[i]);
  }
  return acc;
}

double UPoly::evaluate_double(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i].get_d();
  }
  return acc;
}

UPoly UPoly::compose_affine(const Rat& a, const Rat& b) const {
  // Horner over the polynomial argument a*t + b.
  UPoly arg = UPoly(std::vector<Rat>{b, a});
  UPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * arg + UPoly::constant(c_[i]);
  }
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& coeff = c_[i];
    if (sgn(coeff) == 0) continue;
    Rat magnitude = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(coeff) < 0 ? " - " : " + ");
    }
    const bool unit = (magnitude == 1);
    if (!unit || i == 0) out << rat_to_string(magnitude);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = x.divrem(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

std::vector<SquarefreeFactor> yun_squarefree(const UPoly& p) {
  if (p.is_zero()) throw InternalError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = upoly_gcd(f, fp);
  UPoly b = f.divide_exact(a);
  UPoly c = fp.divide_exact(a);
  UPoly d = c - b.derivative();
  int multiplicity = 1;
  while (b.degree() > 0) {
    UPoly g = upoly_gcd(b, d);
    if (g.degree() > 0) {
      out.push_back(SquarefreeFactor{g, multiplicity});
    }
    b = b.divide_exact(g);
    c = d.divide_exact(g);
    d = c - b.derivative();
    ++multiplicity;
  }
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly result = UPoly::constant(Rat(1));
  for (const auto& part : yun_squarefree(p)) {
    result = result * part.factor;
  }
  return result;
}

std::vector<Rat> rational_roots(const UPoly& p) {
  std::vector<Rat> roots;
  if (p.is_zero() || p.degree() == 0) return roots;
  const UPoly f = p.primitive_integer_form();
  if (f.sign_at(Rat(0)) == 0) roots.push_back(Rat(0));
  // Candidate p/q with p | constant term and q | leading coefficient.
  Int a0(0);
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    if (sgn(f.coefficient(i)) != 0) {
      a0 = f.coefficient(i).get_num();
      break;
    }
  }
  const Int an = f.leading_coefficient().get_num();
  auto divisors = [](Int n) {
    n = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    }
    return out;
  };
  for (const Int& num : divisors(a0)) {
    for (const Int& den : divisors(an)) {
      Rat candidate(num, den);
      candidate.canonicalize();
      if (f.sign_at(candidate) == 0) roots.push_back(candidate);
      candidate = -candidate;
      if (f.sign_at(candidate) == 0) roots.push_back(candidate);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Rat root_bound(const UPoly& p) {
  if (p.degree() < 1) return Rat(1);
  // Cauchy bound: 1 + max |a_i| / |a_n|.
  Rat best(0);
  const Rat lead = abs(p.leading_coefficient());
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = abs(p.coefficient(static_cast<std::size_t>(i))) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  seq.push_back(p);
  seq.push_back(p.derivative());
  while (!seq.back().is_zero()) {
    UPoly r = seq[seq.size() - 2].divrem(seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();  // drop the zero tail
  return seq;
}

int sign_variations_at(const std::vector<UPoly>& seq, const Rat& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& q : seq) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Roots in (lo, hi] by Sturm's theorem.
int sturm_count(const std::vector<UPoly>& seq, const Rat& lo, const Rat& hi) {
  return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

// Isolates roots of a squarefree polynomial with NO rational roots, so no
// bisection point can ever be a root.
void isolate_recursive(const UPoly& p, const std::vector<UPoly>& seq,
                       const Rat& lo, const Rat& hi,
                       std::vector<QInterval>& out) {
  const int count = sturm_count(seq, lo, hi);
  if (count == 0) return;
  if (count == 1) {
    if (p.sign_at(lo) == p.sign_at(hi)) {
      throw InternalError("single simple root without a sign change");
    }
    out.emplace_back(QInterval(lo, hi));
    return;
  }
  const Rat mid = (lo + hi) / 2;
  isolate_recursive(p, seq, lo, mid, out);
  isolate_recursive(p, seq, mid, hi, out);
}

}  // namespace

int count_real_roots(const UPoly& squarefree) {
  if (squarefree.degree() < 1) return 0;
  const auto seq = sturm_sequence(squarefree);
  const Rat bound = root_bound(squarefree);
  return sturm_count(seq, -bound, bound);
}

int count_real_roots_in(const UPoly& squarefree, const Rat& lo, const Rat& hi) {
  if (squarefree.degree() < 1) return 0;
  if (lo >= hi) return 0;
  const auto seq = sturm_sequence(squarefree);
  return sturm_count(seq, lo, hi);
}

// One bisection step on a sign-change interval, keeping the root inside.
QInterval bisect_once(const UPoly& p, const QInterval& interval) {
  const Rat mid = interval.mid();
  const int s_mid = p.sign_at(mid);
  if (s_mid == 0) return QInterval::point(mid);
  if (s_mid == p.sign_at(interval.lo)) return QInterval(mid, interval.hi);
  return QInterval(interval.lo, mid);
}

std::vector<QInterval> isolate_real_roots(const UPoly& squarefree) {
  std::vector<QInterval> out;
  if (squarefree.degree() < 1) return out;
  UPoly p = squarefree.monic();
  // Rational roots become point intervals and are divided out so that the
  // remaining polynomial is nonzero at every rational bisection point.
  std::vector<QInterval> points;
  for (const Rat& r : rational_roots(p)) {
    points.emplace_back(QInterval::point(r));
    p = p.divide_exact(UPoly(std::vector<Rat>{-r, Rat(1)}));
  }
  std::vector<QInterval> brackets;
  if (p.degree() >= 1) {
    const auto seq = sturm_sequence(p);
    const Rat bound = root_bound(p);
    isolate_recursive(p, seq, -bound, bound, brackets);
  }
  // Shrink the sign-change brackets until they avoid every rational root
  // and every other interval, so each one isolates its root with respect
  // to the full input polynomial.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < brackets.size(); ++i) {
      bool crowded = false;
      for (const auto& pt : points) {
        if (brackets[i].intersects(pt)) crowded = true;
      }
      for (std::size_t j = 0; j < brackets.size(); ++j) {
        if (j != i && brackets[i].intersects(brackets[j])) crowded = true;
      }
      if (crowded) {
        brackets[i] = bisect_once(p, brackets[i]);
        changed = true;
      }
    }
  }
  out = std::move(points);
  out.insert(out.end(), brackets.begin(), brackets.end());
  std::sort(out.begin(), out.end(),
            [](const QInterval& a, const QInterval& b) { return a.lo < b.lo; });
  return out;
}

QInterval refine_interval(const UPoly& squarefree, QInterval interval,
                          const Rat& target_width) {
  if (interval.is_point()) return interval;
  int s_lo = squarefree.sign_at(interval.lo);
  int s_hi = squarefree.sign_at(interval.hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
    throw InternalError("refine_interval needs a sign-change interval");
  }
  while (interval.width() > target_width) {
    const Rat mid = interval.mid();
    const int s_mid = squarefree.sign_at(mid);
    if (s_mid == 0) return QInterval::point(mid);
    if (s_mid == s_lo) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
  return interval;
}

Rat resultant(const UPoly& p, const UPoly& q) {
  const int m = p.degree();
  const int n = q.degree();
  if (m < 0 || n < 0) return Rat(0);
  if (m == 0 && n == 0) return Rat(1);
  if (m == 0) {
    Rat out(1);
    for (int i = 0; i < n; ++i) out *= p.coefficient(0);
    return out;
  }
  if (n == 0) {
    Rat out(1);
    for (int i = 0; i < m; ++i) out *= q.coefficient(0);
    return out;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
  // n rows of p's coefficients, then m rows of q's, each shifted right.
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) {
      s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] =
          p.coefficient(static_cast<std::size_t>(m - k));
    }
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) {
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] =
          q.coefficient(static_cast<std::size_t>(n - k));
    }
  }
  // Exact Gaussian elimination.
  Rat det(1);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && sgn(s[pivot][col]) == 0) ++pivot;
    if (pivot == size) return Rat(0);
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    const Rat inv = Rat(1) / s[col][col];
    for (std::size_t row = col + 1; row < size; ++row) {
      if (sgn(s[row][col]) == 0) continue;
      const Rat factor = s[row][col] * inv;
      for (std::size_t k = col; k < size; ++k) {
        s[row][k] -= factor * s[col][k];
      }
    }
  }
  return det;
}

Rat discriminant(const UPoly& p) {
  const int d = p.degree();
  if (d < 1) throw InternalError("discriminant needs degree >= 1");
  Rat res = resultant(p, p.derivative());
  res /= p.leading_coefficient();
  const int exponent = (d * (d - 1)) / 2;
  if (exponent % 2 == 1) res = -res;
  return res;
}

}  // namespace nasheq
