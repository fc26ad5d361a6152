#include "sl2cat/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sl2cat {

UltrasphericalPoly::UltrasphericalPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UltrasphericalPoly UltrasphericalPoly::monomial(std::size_t k, Integer c) {
  std::vector<Integer> v(k + 1);
  v[k] = std::move(c);
  return UltrasphericalPoly(std::move(v));
}

void UltrasphericalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UltrasphericalPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UltrasphericalPoly UltrasphericalPoly::operator+(const UltrasphericalPoly& o) const {
  std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
  return UltrasphericalPoly(std::move(v));
}

UltrasphericalPoly UltrasphericalPoly::operator-(const UltrasphericalPoly& o) const {
  std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) - o.coeff(k);
  return UltrasphericalPoly(std::move(v));
}

UltrasphericalPoly UltrasphericalPoly::operator*(const UltrasphericalPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UltrasphericalPoly(std::move(v));
}

UltrasphericalPoly UltrasphericalPoly::scaled(const Integer& c) const {
  std::vector<Integer> v = coeffs_;
  for (auto& x : v) x *= c;
  return UltrasphericalPoly(std::move(v));
}

FusionElement FusionElement::simple(SimpleIndex m, Integer mult) {
  FusionElement e;
  e.add(m, mult);
  return e;
}

Integer FusionElement::coeff(SimpleIndex m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void FusionElement::add(SimpleIndex m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool FusionElement::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

FusionElement FusionElement::operator+(const FusionElement& o) const {
  FusionElement out = *this;
  for (const auto& [m, c] : o.coeffs_) out.add(m, c);
  return out;
}

FusionElement FusionElement::operator-(const FusionElement& o) const {
  FusionElement out = *this;
  for (const auto& [m, c] : o.coeffs_) out.add(m, -c);
  return out;
}

std::vector<UltrasphericalPoly> r_polys_upto(std::size_t n) {
  std::vector<UltrasphericalPoly> out;
  out.reserve(n + 1);
  out.push_back(UltrasphericalPoly::monomial(0));
  if (n >= 1) out.push_back(UltrasphericalPoly::monomial(1));
  const auto x = UltrasphericalPoly::monomial(1);
  for (std::size_t i = 2; i <= n; ++i) out.push_back(x * out[i - 1] - out[i - 2]);
  return out;
}

UltrasphericalPoly r_poly(std::size_t i) { return r_polys_upto(i).back(); }

FusionElement tensor(const FusionElement& a, const FusionElement& b) {
  FusionElement out;
  for (const auto& [m, cm] : a.coeffs()) {
    for (const auto& [n, cn] : b.coeffs()) {
      Integer c = cm * cn;
      const SimpleIndex lo = m > n ? m - n : n - m;
      for (SimpleIndex k = lo; k <= m + n; k += 2) out.add(k, c);
    }
  }
  return out;
}

FusionElement poly_to_fusion(const UltrasphericalPoly& p) {
  // Peel off the leading term with the monic R_deg.
  FusionElement out;
  UltrasphericalPoly rest = p;
  if (rest.is_zero()) return out;
  const auto rs = r_polys_upto(static_cast<std::size_t>(rest.degree()));
  while (!rest.is_zero()) {
    const auto d = static_cast<std::size_t>(rest.degree());
    Integer lead = rest.coeff(d);
    out.add(d, lead);
    rest = rest - rs[d].scaled(lead);
  }
  return out;
}

UltrasphericalPoly fusion_to_poly(const FusionElement& a) {
  if (a.is_zero()) return {};
  const auto rs = r_polys_upto(a.coeffs().rbegin()->first);
  UltrasphericalPoly out;
  for (const auto& [m, c] : a.coeffs()) out = out + rs[m].scaled(c);
  return out;
}

Integer dim(const FusionElement& a) {
  Integer d = 0;
  for (const auto& [m, c] : a.coeffs()) d += c * Integer(m + 1);
  return d;
}

namespace {

void write_term(std::ostringstream& os, bool first, const Integer& c, const std::string& body) {
  Integer mag = c < 0 ? Integer(-c) : c;
  if (c < 0) os << '-';
  else if (!first) os << '+';
  if (body.empty()) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << '*';
  os << body;
}

std::string strip_spaces(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  return s;
}

// Splits "a+b-c" into signed terms; a leading sign is allowed.
std::vector<std::pair<bool, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<bool, std::string>> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    std::size_t j = i;
    int depth = 0;
    while (j < s.size()) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0 && (s[j] == '+' || s[j] == '-')) break;
      ++j;
    }
    if (j == i) throw std::invalid_argument("empty term in '" + s + "'");
    terms.emplace_back(neg, s.substr(i, j - i));
    i = j;
  }
  if (terms.empty()) throw std::invalid_argument("empty expression");
  return terms;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

// "[c*]body" -> (c, body)
std::pair<Integer, std::string> split_coefficient(const std::string& term) {
  auto star = term.find('*');
  if (star == std::string::npos) return {Integer(1), term};
  std::string c = term.substr(0, star);
  if (!all_digits(c)) throw std::invalid_argument("bad coefficient '" + c + "'");
  return {Integer(c), term.substr(star + 1)};
}

}  // namespace

std::string to_string(const FusionElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.coeffs()) {
    write_term(os, first, c, "L(" + std::to_string(m) + ")");
    first = false;
  }
  return os.str();
}

std::string to_string(const UltrasphericalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Integer& c = p.coeffs()[k];
    if (c == 0) continue;
    std::string body = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    write_term(os, first, c, body);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FusionElement& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const UltrasphericalPoly& p) { return os << to_string(p); }

FusionElement parse_fusion(const std::string& text) {
  const std::string s = strip_spaces(text);
  FusionElement out;
  if (s == "0") return out;
  for (const auto& [neg, term] : split_terms(s)) {
    auto [c, body] = split_coefficient(term);
    if (body.size() < 4 || body.compare(0, 2, "L(") != 0 || body.back() != ')') {
      throw std::invalid_argument("expected L(k), got '" + body + "'");
    }
    std::string k = body.substr(2, body.size() - 3);
    if (!all_digits(k)) throw std::invalid_argument("bad simple index '" + k + "'");
    out.add(std::stoul(k), neg ? Integer(-c) : c);
  }
  return out;
}

UltrasphericalPoly parse_poly(const std::string& text) {
  const std::string s = strip_spaces(text);
  UltrasphericalPoly out;
  for (const auto& [neg, term] : split_terms(s)) {
    std::size_t k = 0;
    Integer c = 1;
    if (all_digits(term)) {
      c = Integer(term);
    } else {
      auto [cc, body] = split_coefficient(term);
      c = cc;
      if (body == "x") {
        k = 1;
      } else if (body.size() > 2 && body.compare(0, 2, "x^") == 0 && all_digits(body.substr(2))) {
        k = std::stoul(body.substr(2));
      } else {
        throw std::invalid_argument("expected x^k, got '" + body + "'");
      }
    }
    out = out + UltrasphericalPoly::monomial(k, neg ? Integer(-c) : c);
  }
  return out;
}

}  // namespace sl2cat
