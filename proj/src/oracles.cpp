#include "sl2cat/oracles.hpp"

#include <algorithm>
#include <regex>

namespace sl2cat {

namespace {

bool integral(const Rational& q) { return denominator(q) == 1; }

Index as_index(const Rational& q) { return static_cast<Index>(numerator(q).convert_to<long>()); }

}  // namespace

OClassVector::OClassVector(Map m) {
  for (const auto& [l, c] : m) add(l, c);
}

OClassVector OClassVector::verma(const Rational& lambda, Integer mult) {
  OClassVector v;
  v.add(lambda, mult);
  return v;
}

Integer OClassVector::coeff(const Rational& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? Integer(0) : it->second;
}

void OClassVector::add(const Rational& lambda, const Integer& c) {
  if (c == 0) return;
  auto& slot = entries_[lambda];
  slot += c;
  if (slot == 0) entries_.erase(lambda);
}

OClassVector OClassVector::operator+(const OClassVector& o) const {
  OClassVector r = *this;
  for (const auto& [l, c] : o.entries_) r.add(l, c);
  return r;
}

OClassVector OClassVector::operator-(const OClassVector& o) const { return *this + o.scaled(-1); }

OClassVector OClassVector::scaled(const Integer& c) const {
  OClassVector r;
  if (c == 0) return r;
  for (const auto& [l, v] : entries_) r.entries_[l] = v * c;
  return r;
}

std::string to_string(const OClassVector& v) {
  if (v.entries().empty()) return "0";
  std::string s;
  for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) {
    if (!s.empty()) s += it->second < 0 ? " - " : " + ";
    else if (it->second < 0) s += "-";
    const Integer a = abs(it->second);
    if (a != 1) s += a.str() + "*";
    s += "[Delta(" + to_string(it->first) + ")]";
  }
  return s;
}

void check_legal(const NamedOObject& o) {
  if (o.tag == NamedOObject::Tag::Delta || !integral(o.lambda)) return;
  if (o.lambda > -1) {
    throw IllegalObject(to_string(o) + " is not in the additive closure of integral tilting modules");
  }
}

OClassVector class_of(const NamedOObject& o) {
  check_legal(o);
  OClassVector v = OClassVector::verma(o.lambda);
  if (o.tag == NamedOObject::Tag::P && integral(o.lambda) && o.lambda <= -2) v.add(-o.lambda - 2, 1);
  return v;
}

std::string to_string(const NamedOObject& o, bool p_minus_one) {
  std::string tag = o.tag == NamedOObject::Tag::L ? "L" : o.tag == NamedOObject::Tag::P ? "P" : "Delta";
  if (p_minus_one && o.tag == NamedOObject::Tag::L && o.lambda == -1) tag = "P";
  return tag + "(" + to_string(o.lambda) + ")";
}

NamedOObject parse_o_object(const std::string& text) {
  static const std::regex re(R"(\s*(L|P|Delta|D)\s*\(\s*([^)\s]+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse object '" + text + "'");
  const auto lambda = parse_rational(m[2]);
  if (!lambda) throw std::invalid_argument("bad weight in '" + text + "'");
  NamedOObject o;
  o.lambda = *lambda;
  const std::string t = m[1];
  o.tag = t == "L" ? NamedOObject::Tag::L : t == "P" ? NamedOObject::Tag::P : NamedOObject::Tag::Delta;
  if (o.tag == NamedOObject::Tag::P && (!integral(o.lambda) || o.lambda == -1)) o.tag = NamedOObject::Tag::L;
  return o;
}

OClassVector tensor_in_O(std::size_t n, const OClassVector& v) {
  OClassVector out;
  for (const auto& [l, c] : v.entries()) {
    for (std::size_t k = 0; k <= n; ++k) out.add(l + static_cast<long>(n) - 2 * static_cast<long>(k), c);
  }
  return out;
}

std::vector<std::pair<NamedOObject, Integer>> decompose_in_N(const OClassVector& v) {
  std::vector<std::pair<NamedOObject, Integer>> out;
  OClassVector rest = v;
  // dominant integral Verma classes only occur inside P(-lambda-2)
  for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) {
    const Rational& l = it->first;
    if (!integral(l) || l < 0) continue;
    const Integer m = rest.coeff(l);
    if (m < 0) throw NotInCatalog("negative multiplicity of [Delta(" + to_string(l) + ")]");
    const NamedOObject p{NamedOObject::Tag::P, -l - 2};
    out.emplace_back(p, m);
    rest = rest - class_of(p).scaled(m);
  }
  for (const auto& [l, c] : rest.entries()) {
    if (integral(l) && l >= 0) throw NotInCatalog("residual on dominant weight " + to_string(l));
    if (c < 0) throw NotInCatalog("negative multiplicity of L(" + to_string(l) + ")");
    out.emplace_back(NamedOObject{NamedOObject::Tag::L, l}, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.lambda != b.first.lambda) return a.first.lambda > b.first.lambda;
    return a.first.tag < b.first.tag;
  });
  return out;
}

std::string to_string(Realization r) {
  switch (r) {
    case Realization::AinfTilting: return "A_inf_tilting";
    case Realization::CinfProjInj: return "C_inf_projinj";
    case Realization::AinfInfGeneric: return "A_infinf_generic";
    case Realization::N5Borel: return "N5_borel";
    case Realization::N6Borel: return "N6_borel";
  }
  return "?";
}

std::vector<Realization> all_realizations() {
  return {Realization::AinfTilting, Realization::CinfProjInj, Realization::AinfInfGeneric, Realization::N5Borel,
          Realization::N6Borel};
}

std::string catalog_name(Realization r) {
  switch (r) {
    case Realization::AinfTilting: return "Ainf";
    case Realization::CinfProjInj: return "Cinf";
    case Realization::AinfInfGeneric: return "AinfInf";
    case Realization::N5Borel: return "AinfInf";
    case Realization::N6Borel: return "Ainf";
  }
  return "?";
}

namespace {

constexpr std::size_t kWindow = 8;

// Column j of [L(1)] on a Nat-indexed family, from a rule giving summand indices.
template <class Rule>
PresentedMatrix fit_columns(Rule rule) {
  DenseMatrix w(kWindow, kWindow);
  for (std::size_t j = 0; j < kWindow; ++j) {
    for (auto [i, c] : rule(j)) {
      if (i < static_cast<Index>(kWindow)) w(static_cast<std::size_t>(i), j) += c;
    }
  }
  return PresentedMatrix::fit_nat(w, 1);
}

// Shift-invariant family on Z: diagonals read off column 0, checked on nearby columns.
template <class Rule>
PresentedMatrix fit_toeplitz(Rule rule) {
  PresentedMatrix::Diagonals d;
  for (auto [i, c] : rule(0)) d[-i] += c;
  const auto m = PresentedMatrix::toeplitz(IndexSet::integers(), d);
  for (Index j = -3; j <= 3; ++j) {
    std::map<Index, Integer> col;
    for (auto [i, c] : rule(j)) col[i] += c;
    for (Index i = j - 3; i <= j + 3; ++i) {
      auto it = col.find(i);
      if (m.entry(i, j) != (it == col.end() ? Integer(0) : it->second)) {
        throw std::logic_error("realization is not shift invariant");
      }
    }
  }
  return m;
}

using Column = std::vector<std::pair<Index, Integer>>;

}  // namespace

PresentedMatrix derive_catalog_matrix(Realization r) {
  switch (r) {
    case Realization::AinfTilting:
      // L(-2-j) modulo the ideal generated by all P(lambda), L(-1) = P(-1) included
      return fit_columns([](std::size_t j) {
        Column col;
        const Rational l = -2 - static_cast<long>(j);
        for (const auto& [o, c] : decompose_in_N(tensor_in_O(1, class_of({NamedOObject::Tag::L, l})))) {
          if (o.tag == NamedOObject::Tag::P || o.lambda == -1) continue;
          col.emplace_back(as_index(Rational(-2 - o.lambda)), c);
        }
        return col;
      });
    case Realization::CinfProjInj:
      // P(-1-j), P(-1) = L(-1)
      return fit_columns([](std::size_t j) {
        Column col;
        const Rational l = -1 - static_cast<long>(j);
        const auto tag = j == 0 ? NamedOObject::Tag::L : NamedOObject::Tag::P;
        for (const auto& [o, c] : decompose_in_N(tensor_in_O(1, class_of({tag, l})))) {
          if (o.tag == NamedOObject::Tag::L && o.lambda != -1) throw std::logic_error("non-projective summand");
          col.emplace_back(as_index(Rational(-1 - o.lambda)), c);
        }
        return col;
      });
    case Realization::AinfInfGeneric: {
      const Rational base(1, 3);
      return fit_toeplitz([&](Index j) {
        Column col;
        for (const auto& [o, c] : decompose_in_N(tensor_in_O(1, class_of({NamedOObject::Tag::L, base + j})))) {
          col.emplace_back(as_index(Rational(o.lambda - base)), c);
        }
        return col;
      });
    }
    case Realization::N5Borel:
      return fit_toeplitz([](Index j) {
        const auto [a, b] = borel_tensor_N(j);
        return Column{{a, 1}, {b, 1}};
      });
    case Realization::N6Borel:
      return fit_columns([](std::size_t j) {
        Column col;
        for (std::size_t k : borel_tensor_Q(j)) col.emplace_back(static_cast<Index>(k), 1);
        return col;
      });
  }
  throw std::logic_error("unknown realization");
}

namespace {

using Character = std::map<Index, long>;

void add_shifted(Character& out, const Character& in, Index limit) {
  for (const auto& [w, c] : in) {
    for (Index s : {-1, 1}) {
      if (w + s <= limit) out[w + s] += c;
    }
  }
}

void subtract(Character& a, const Character& b, long times) {
  for (const auto& [w, c] : b) {
    if ((a[w] -= times * c) == 0) a.erase(w);
  }
}

Character char_N(Index nu, Index limit) {
  Character c;
  for (Index w = nu; w <= limit; w += 2) c[w] = 1;
  return c;
}

Character char_Q(std::size_t k) {
  Character c;
  for (Index w = -static_cast<Index>(k); w <= static_cast<Index>(k); w += 2) c[w] = 1;
  return c;
}

}  // namespace

std::pair<Index, Index> borel_tensor_N(Index mu, std::size_t check_depth) {
  const Index limit = mu + 2 * static_cast<Index>(check_depth);
  Character prod;
  add_shifted(prod, char_N(mu, limit + 1), limit);
  std::vector<Index> found;
  while (!prod.empty()) {
    const auto [nu, m] = *prod.begin();
    if (m < 0) throw std::logic_error("negative weight multiplicity in L(1) (x) N(mu)");
    for (long t = 0; t < m; ++t) found.push_back(nu);
    subtract(prod, char_N(nu, limit), m);
  }
  if (found != std::vector<Index>{mu - 1, mu + 1}) throw std::logic_error("character check of L(1) (x) N(mu) failed");
  return {mu + 1, mu - 1};
}

std::vector<std::size_t> borel_tensor_Q(std::size_t i) {
  Character prod;
  add_shifted(prod, char_Q(i), static_cast<Index>(i) + 1);
  std::vector<std::size_t> found;
  while (!prod.empty()) {
    const auto [w, m] = *prod.begin();
    if (m < 0 || w > 0) throw std::logic_error("character check of F_1 Q(lambda, i) failed");
    const auto k = static_cast<std::size_t>(-w);
    for (long t = 0; t < m; ++t) found.push_back(k);
    subtract(prod, char_Q(k), m);
  }
  std::sort(found.begin(), found.end());
  const std::vector<std::size_t> expected = i == 0 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{i - 1, i + 1};
  if (found != expected) throw std::logic_error("character check of F_1 Q(lambda, i) failed");
  return found;
}

std::vector<Index> q_composition(std::size_t k) {
  std::vector<Index> out;
  for (const auto& [w, c] : char_Q(k)) out.push_back(w);
  return out;
}

Index q_top(std::size_t k) { return -static_cast<Index>(k); }
Index q_socle(std::size_t k) { return static_cast<Index>(k); }

int q_hom_bound(std::size_t i, std::size_t j) {
  const auto cj = q_composition(j), ci = q_composition(i);
  // the image of the top of Q(i) must be a factor of Q(j)
  if (std::find(cj.begin(), cj.end(), q_top(i)) == cj.end()) return 0;
  // the socle of Q(j) must be hit
  if (std::find(ci.begin(), ci.end(), q_socle(j)) == ci.end()) return 0;
  // top multiplicity one: maps are determined by the image of a top vector
  if (i == j) return 1;
  long common = 0;
  for (Index w : ci) common += std::count(cj.begin(), cj.end(), w);
  return static_cast<int>(common);
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;
using Sparse = std::vector<SparseRow>;

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& [k, v] : a[i]) {
      for (const auto& [j, w] : b[k]) {
        auto& slot = out[i][j];
        slot += v * w;
        if (slot == 0) out[i].erase(j);
      }
    }
  }
  return out;
}

std::size_t sparse_rank(const Sparse& m) {
  std::map<std::size_t, SparseRow> pivots;
  for (SparseRow row : m) {
    while (!row.empty()) {
      const auto [lead, v] = *row.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Rational f = v / it->second.at(lead);
      for (const auto& [j, w] : it->second) {
        auto& slot = row[j];
        slot -= f * w;
        if (slot == 0) row.erase(j);
      }
    }
  }
  return pivots.size();
}

}  // namespace

JordanPartition jordan_kronecker_oracle(std::size_t n, const Rational& lambda) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::size_t dim = 2 * n;
  // basis e_a (x) f_b at a * n + b; e acts by e (x) 1 + 1 (x) e
  Sparse a(dim);
  for (std::size_t b = 0; b < n; ++b) {
    a[b][n + b] += 1;
    for (std::size_t s = 0; s < 2; ++s) {
      a[s * n + b][s * n + b] += lambda;
      if (b + 1 < n) a[s * n + b][s * n + b + 1] += 1;
    }
  }
  Sparse nil = a;
  for (std::size_t i = 0; i < dim; ++i) {
    auto& slot = nil[i][i];
    slot -= lambda;
    if (slot == 0) nil[i].erase(i);
  }
  std::vector<std::size_t> ranks{dim};
  Sparse power = nil;
  while (ranks.back() > 0) {
    if (ranks.size() > dim) throw std::logic_error("A - lambda is not nilpotent");
    ranks.push_back(sparse_rank(power));
    power = multiply(power, nil);
  }
  JordanPartition out;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t t = 0; t < at_least_k - at_least_next; ++t) out.push_back({k, lambda});
  }
  std::sort(out.begin(), out.end(), [](const JordanBlock& x, const JordanBlock& y) { return x.size > y.size; });
  return out;
}

std::string to_string(const JordanPartition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(p[i].size) + ", " + to_string(p[i].eigenvalue) + ")";
  }
  return s + "}";
}

}  // namespace sl2cat
