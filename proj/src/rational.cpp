#include "trilie/rational.hpp"

#include <cctype>

namespace trilie {

std::string to_string(const Rational& q) { return q.str(); }

namespace {

// Accepts an optional leading '-' followed by one or more decimal digits.
bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

} // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) return std::nullopt;
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
    return std::nullopt;
  }
  Integer d(den);
  if (d == 0) return std::nullopt;
  return Rational(Integer(num), d);
}

} // namespace trilie
