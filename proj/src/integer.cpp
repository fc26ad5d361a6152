#include "sl2cat/integer.hpp"

#include <cctype>
#include <limits>

namespace sl2cat {

namespace {

bool is_signed_digits(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (!is_signed_digits(num)) return std::nullopt;
  Integer p = parse_integer(num);
  Integer q = 1;
  if (slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    if (!is_signed_digits(den)) return std::nullopt;
    q = parse_integer(den);
    if (q == 0) return std::nullopt;
  }
  return Rational(p, q);
}

std::optional<std::int64_t> to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace sl2cat
