#include "nasheq/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nasheq {

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParseError("empty variable name");
    if (!seen.insert(n).second) {
      throw ParseError("duplicate variable name '" + n + "'");
    }
  }
}

std::optional<std::size_t> VarOrder::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VarOrderPtr make_order(std::vector<std::string> names) {
  return std::make_shared<const VarOrder>(std::move(names));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            std::uint32_t power) {
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exp_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exp_.begin(), exp_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exp_.size() != other.exp_.size()) {
    throw OrderMismatch("monomials over different variable counts");
  }
  std::vector<std::uint32_t> e(exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exp_[i] + other.exp_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (exp_.size() != other.exp_.size()) {
    throw OrderMismatch("monomials over different variable counts");
  }
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide_into(const Monomial& other) const {
  if (!divides(other)) throw InternalError("monomial division is not exact");
  std::vector<std::uint32_t> e(exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exp_[i] - exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (exp_.size() != other.exp_.size()) {
    throw OrderMismatch("monomials over different variable counts");
  }
  std::vector<std::uint32_t> e(exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::max(exp_[i], other.exp_[i]);
  }
  return Monomial(std::move(e));
}

int Monomial::compare_lex(const Monomial& other) const {
  if (exp_.size() != other.exp_.size()) {
    throw OrderMismatch("monomials over different variable counts");
  }
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] != other.exp_[i]) return exp_[i] < other.exp_[i] ? -1 : 1;
  }
  return 0;
}

MPoly::MPoly(VarOrderPtr order) : order_(std::move(order)) {
  if (!order_) throw InternalError("polynomial without a variable order");
}

MPoly MPoly::constant(VarOrderPtr order, const Rat& value) {
  MPoly p(std::move(order));
  p.add_term(Monomial::unit(p.nvars()), value);
  return p;
}

MPoly MPoly::variable(VarOrderPtr order, std::size_t index) {
  MPoly p(std::move(order));
  p.add_term(Monomial::variable(p.nvars(), index), Rat(1));
  return p;
}

MPoly MPoly::from_terms(VarOrderPtr order, const std::vector<Term>& terms) {
  MPoly p(std::move(order));
  for (const auto& t : terms) {
    if (t.monomial.nvars() != p.nvars()) {
      throw OrderMismatch("term has the wrong variable count");
    }
    p.add_term(t.monomial, t.coefficient);
  }
  return p;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  Rat canonical = c;
  canonical.canonicalize();  // two-argument Rat construction may skip this
  auto [it, inserted] = terms_.emplace(m, canonical);
  if (!inserted) {
    it->second += canonical;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::uint64_t MPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.total_degree());
  return d;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::uint32_t MPoly::degree_in(std::size_t var_index) const {
  std::uint32_t d = 0;
  for (const auto& [mono, coeff] : terms_) {
    d = std::max(d, mono.exponent(var_index));
  }
  return d;
}

const Monomial& MPoly::leading_monomial() const {
  if (is_zero()) throw InternalError("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const Rat& MPoly::leading_coefficient() const {
  if (is_zero()) throw InternalError("leading term of the zero polynomial");
  return terms_.begin()->second;
}

Term MPoly::leading_term() const {
  return Term{leading_monomial(), leading_coefficient()};
}

std::vector<Term> MPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) out.push_back(Term{mono, coeff});
  return out;
}

Rat MPoly::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& other) const {
  require_same_order(*this, other);
  MPoly out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

MPoly MPoly::operator-(const MPoly& other) const {
  require_same_order(*this, other);
  MPoly out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, -coeff);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out(order_);
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

MPoly MPoly::operator*(const MPoly& other) const {
  require_same_order(*this, other);
  MPoly out(order_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::scaled(const Rat& factor) const {
  MPoly out(order_);
  if (sgn(factor) == 0) return out;
  Rat f = factor;
  f.canonicalize();
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, coeff * f);
  }
  return out;
}

MPoly MPoly::times_term(const Rat& coefficient, const Monomial& monomial) const {
  MPoly out(order_);
  if (sgn(coefficient) == 0) return out;
  Rat c = coefficient;
  c.canonicalize();
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono * monomial, coeff * c);
  }
  return out;
}

bool MPoly::operator==(const MPoly& other) const {
  return *order_ == *other.order_ && terms_ == other.terms_;
}

MPoly MPoly::primitive_part() const {
  if (is_zero()) return *this;
  // Clear denominators, then divide by the integer content.
  Int den_lcm = 1;
  for (const auto& [mono, coeff] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            coeff.get_den().get_mpz_t());
  }
  Int content = 0;
  for (const auto& [mono, coeff] : terms_) {
    Int cleared = coeff.get_num() * (den_lcm / coeff.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cleared.get_mpz_t());
  }
  Rat factor(den_lcm, content);
  factor.canonicalize();
  if (sgn(leading_coefficient()) < 0) factor = -factor;
  return scaled(factor);
}

MPoly MPoly::monic() const {
  if (is_zero()) throw InternalError("monic form of the zero polynomial");
  return scaled(Rat(1) / leading_coefficient());
}

Rat MPoly::evaluate_rational(std::span<const Rat> values) const {
  return evaluate<Rat>(values, [](const Rat& r) { return r; });
}

double MPoly::evaluate_double(std::span<const double> values) const {
  return evaluate<double>(values, [](const Rat& r) { return r.get_d(); });
}

MPoly MPoly::substitute(std::size_t var_index, const MPoly& replacement) const {
  require_same_order(*this, replacement);
  MPoly out(order_);
  for (const auto& [mono, coeff] : terms_) {
    std::vector<std::uint32_t> rest(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      rest[i] = (i == var_index) ? 0 : mono.exponent(i);
    }
    MPoly term(order_);
    term.add_term(Monomial(std::move(rest)), coeff);
    for (std::uint32_t e = 0; e < mono.exponent(var_index); ++e) {
      term = term * replacement;
    }
    out = out + term;
  }
  return out;
}

MPoly MPoly::reorder(const VarOrderPtr& new_order) const {
  MPoly out(new_order);
  for (const auto& [mono, coeff] : terms_) {
    std::vector<std::uint32_t> e(new_order->size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (mono.exponent(i) == 0) continue;
      auto idx = new_order->index_of(order_->name(i));
      if (!idx) {
        throw OrderMismatch("variable '" + order_->name(i) +
                            "' missing from the target order");
      }
      e[*idx] = mono.exponent(i);
    }
    out.add_term(Monomial(std::move(e)), coeff);
  }
  return out;
}

std::string MPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rat magnitude = coeff;
    if (first) {
      if (sgn(coeff) < 0) {
        out << "-";
        magnitude = -coeff;
      }
      first = false;
    } else {
      out << (sgn(coeff) < 0 ? " - " : " + ");
      magnitude = abs(coeff);
    }
    const bool unit_mono = mono.is_unit();
    const bool unit_coeff = (magnitude == 1);
    if (!unit_coeff || unit_mono) out << rat_to_string(magnitude);
    bool printed_var = false;
    for (std::size_t i = 0; i < nvars(); ++i) {
      const auto e = mono.exponent(i);
      if (e == 0) continue;
      if (printed_var || !unit_coeff || unit_mono) out << "*";
      out << order_->name(i);
      if (e > 1) out << "^" << e;
      printed_var = true;
    }
  }
  return out.str();
}

void require_same_order(const MPoly& a, const MPoly& b) {
  if (!(*a.order() == *b.order())) {
    throw OrderMismatch("polynomials use different variable orders");
  }
}

}  // namespace nasheq
