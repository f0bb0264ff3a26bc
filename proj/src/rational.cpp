#include "nasheq/rational.hpp"

#include <cctype>

#include "nasheq/errors.hpp"

namespace nasheq {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_plain_integer(text)) {
      throw ParseError("not an exact rational literal: '" + text + "'");
    }
    Rat value;
    if (value.set_str(text, 10) != 0) {
      throw ParseError("not an exact rational literal: '" + text + "'");
    }
    return value;
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_plain_integer(num) || !is_plain_integer(den)) {
    throw ParseError("not an exact rational literal: '" + text + "'");
  }
  Rat value;
  if (value.set_str(text, 10) != 0) {
    throw ParseError("not an exact rational literal: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw ParseError("zero denominator in rational literal: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int isqrt_floor(const Int& value) {
  if (value < 0) throw InternalError("isqrt_floor of a negative integer");
  Int root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

std::optional<Int> exact_sqrt(const Int& value) {
  if (value < 0) return std::nullopt;
  if (mpz_perfect_square_p(value.get_mpz_t()) == 0) return std::nullopt;
  return isqrt_floor(value);
}

bool is_rational_square(const Rat& value) {
  if (value < 0) return false;
  return exact_sqrt(value.get_num()).has_value() &&
         exact_sqrt(value.get_den()).has_value();
}

Int pow10(unsigned exponent) {
  Int result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

std::string decimal_string(const Rat& value, int digits) {
  if (digits < 1) throw ParseError("decimal rendering needs at least 1 digit");
  const bool negative = sgn(value) < 0;
  Rat magnitude = negative ? Rat(-value) : value;
  // round(|v| * 10^d) with ties away from zero: floor(|v|*10^d + 1/2).
  const Int scale = pow10(static_cast<unsigned>(digits));
  Rat scaled = magnitude * Rat(scale);
  scaled += Rat(1, 2);
  Int units = scaled.get_num() / scaled.get_den();  // floor for non-negative
  // Ties (exact .5) round away from zero: floor(x + 1/2) already does that
  // for non-negative x.
  std::string body = units.get_str();
  const std::size_t min_len = static_cast<std::size_t>(digits) + 1;
  if (body.size() < min_len) body.insert(0, min_len - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  if (negative && units != 0) body.insert(0, "-");
  return body;
}

}  // namespace nasheq
