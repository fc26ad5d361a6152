#include "sl2cat/restriction.hpp"

#include <algorithm>

namespace sl2cat {

SlCharacter::SlCharacter(std::size_t modulus, std::vector<PresentedVector> classes)
    : modulus_(modulus), classes_(std::move(classes)) {
  if (modulus_ == 0 || classes_.size() != modulus_) throw std::invalid_argument("character needs one class per residue");
  for (const auto& c : classes_) {
    if (c.index() != IndexSet::nat()) throw std::invalid_argument("character classes are nat-indexed");
  }
}

SlCharacter SlCharacter::arithmetic(std::size_t start, std::size_t step, Integer mult) {
  if (step != 1 && step != 2 && step != 4) throw std::invalid_argument("step must be 1, 2 or 4");
  std::vector<PresentedVector> classes;
  for (std::size_t r = 0; r < step; ++r) {
    if (r == start % step) {
      classes.emplace_back(IndexSet::nat(), std::vector<Integer>((start - r) / step, 0), 0, mult);
    } else {
      classes.push_back(PresentedVector::constant(IndexSet::nat(), 0));
    }
  }
  return SlCharacter(step, std::move(classes));
}

std::optional<SlCharacter> SlCharacter::fit(const std::vector<Integer>& values) {
  std::optional<SlCharacter> best;
  for (std::size_t p : {1, 2, 4}) {
    std::vector<PresentedVector> classes;
    for (std::size_t r = 0; r < p; ++r) {
      std::vector<Integer> s;
      for (std::size_t k = r; k < values.size(); k += p) s.push_back(values[k]);
      const std::size_t m = s.size();
      if (m < 3) break;
      const Integer a = s[m - 1] - s[m - 2];
      const Integer b = s[m - 1] - a * static_cast<long>(m - 1);
      std::size_t h = m;
      while (h > 0 && s[h - 1] == a * static_cast<long>(h - 1) + b) --h;
      if (m - h < 3) break;
      classes.emplace_back(IndexSet::nat(), std::vector<Integer>(s.begin(), s.begin() + static_cast<long>(h)), a, b);
    }
    if (classes.size() != p) continue;
    SlCharacter c(p, std::move(classes));
    if (!best || c.generic_start() < best->generic_start()) best = std::move(c);
  }
  return best;
}

Integer SlCharacter::at(std::size_t k) const {
  return classes_[k % modulus_].at(static_cast<Index>(k / modulus_));
}

std::size_t SlCharacter::generic_start() const {
  std::size_t h = 0;
  for (const auto& c : classes_) h = std::max(h, c.head().size());
  return modulus_ * h;
}

bool SlCharacter::is_nonnegative() const {
  for (const auto& c : classes_) {
    for (const auto& v : c.head()) {
      if (v < 0) return false;
    }
    if (c.a() < 0 || c.at(static_cast<Index>(c.head().size())) < 0) return false;
  }
  return true;
}

std::string to_string(const SlCharacter& c) {
  const std::size_t shown = std::max<std::size_t>(c.generic_start() + 4 * c.modulus(), 8);
  std::string s;
  for (std::size_t k = 0; k < shown; ++k) {
    const Integer v = c.at(k);
    if (v == 0) continue;
    if (!s.empty()) s += " + ";
    if (v != 1) s += v.str() + "*";
    s += "L(" + std::to_string(k) + ")";
  }
  bool more = false;
  for (const auto& cl : c.classes()) more = more || cl.a() != 0 || cl.b() != 0;
  if (s.empty()) return more ? "..." : "0";
  return more ? s + " + ..." : s;
}

Json character_to_json(const SlCharacter& c) {
  Json j;
  j["modulus"] = c.modulus();
  Json classes = Json::array();
  for (const auto& v : c.classes()) classes.push_back(vector_to_json(v));
  j["classes"] = std::move(classes);
  Json preview = Json::array();
  for (std::size_t k = 0; k < 12; ++k) preview.push_back(integer_to_json(c.at(k)));
  j["preview"] = std::move(preview);
  j["text"] = to_string(c);
  return j;
}

std::string to_string(const TensorRelation& r) {
  std::string s = "L(1) x " + r.lhs + " = ";
  for (std::size_t i = 0; i < r.rhs.size(); ++i) {
    if (i) s += " + ";
    if (r.rhs[i].second != 1) s += r.rhs[i].second.str() + "*";
    s += r.rhs[i].first;
  }
  return s;
}

std::vector<std::string> builtin_system_names() { return {"dinf", "schrodinger", "takiff"}; }

namespace {

std::string v(long n) { return "V(" + std::to_string(n) + ")"; }

}  // namespace

RestrictionSystem builtin_system(const std::string& name, std::size_t truncation, bool assume_restrictions) {
  if (truncation < 4) throw std::invalid_argument("truncation must be at least 4");
  const long t = static_cast<long>(truncation);
  RestrictionSystem s;
  s.name = name;
  if (name == "takiff") {
    for (long n = -t; n <= t; ++n) {
      s.modules.push_back(v(n));
      s.fixed[v(n)] = SlCharacter::arithmetic(static_cast<std::size_t>(std::abs(n)), 2);
    }
    for (long n = -t + 1; n <= t - 1; ++n) s.relations.push_back({v(n), {{v(n - 1), 1}, {v(n + 1), 1}}});
  } else if (name == "schrodinger") {
    for (long n = 0; n <= t; ++n) {
      s.modules.push_back(v(n));
      s.fixed[v(n)] = SlCharacter::arithmetic(static_cast<std::size_t>(n), 1);
    }
    s.relations.push_back({v(0), {{v(0), 1}, {v(1), 1}}});
    for (long n = 1; n <= t - 1; ++n) s.relations.push_back({v(n), {{v(n - 1), 1}, {v(n + 1), 1}}});
  } else if (name == "dinf") {
    s.modules = {"V'(0)", "V'(2)"};
    for (long n = 1; n <= t; ++n) s.modules.push_back(v(n));
    s.relations.push_back({"V'(0)", {{v(1), 1}}});
    s.relations.push_back({"V'(2)", {{v(1), 1}}});
    s.relations.push_back({v(1), {{"V'(0)", 1}, {"V'(2)", 1}, {v(2), 1}}});
    for (long n = 2; n <= t - 1; ++n) s.relations.push_back({v(n), {{v(n - 1), 1}, {v(n + 1), 1}}});
    if (assume_restrictions) {
      for (long n = 1; n <= t; ++n) s.fixed[v(n)] = SlCharacter::arithmetic(static_cast<std::size_t>(n), 2);
      s.normalizations.push_back({"V'(0)", 0, 1});
      s.normalizations.push_back({"V'(2)", 2, 1});
    }
  } else {
    throw UnknownSystem("unknown restriction system '" + name + "'");
  }
  return s;
}

std::string to_string(RestrictionSolution::Status s) {
  switch (s) {
    case RestrictionSolution::Status::Unique: return "unique";
    case RestrictionSolution::Status::Underdetermined: return "underdetermined";
    case RestrictionSolution::Status::Infeasible: return "infeasible";
  }
  return "?";
}

bool check_relation(const TensorRelation& r, const std::map<std::string, SlCharacter>& chars) {
  std::size_t g = chars.at(r.lhs).generic_start();
  for (const auto& [y, c] : r.rhs) g = std::max(g, chars.at(y).generic_start());
  // past g + 2 every term is affine on classes mod 4; two points per class decide
  const std::size_t end = g + 2 + 2 * 4 + 1;
  const auto& x = chars.at(r.lhs);
  for (std::size_t k = 0; k <= end; ++k) {
    Integer lhs = x.at(k + 1);
    if (k >= 1) lhs += x.at(k - 1);
    Integer rhs = 0;
    for (const auto& [y, c] : r.rhs) rhs += c * chars.at(y).at(k);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

using Row = std::map<std::size_t, Rational>;  // sum coef * x + constant (key = n) = 0

void axpy(Row& row, const Rational& f, const Row& other) {
  for (const auto& [j, w] : other) {
    auto& slot = row[j];
    slot -= f * w;
    if (slot == 0) row.erase(j);
  }
}

}  // namespace

RestrictionSolution restriction_consistency_solve(const RestrictionSystem& s, std::size_t truncation) {
  if (truncation < 4) throw std::invalid_argument("truncation must be at least 4");
  const std::size_t width = truncation + 1;
  std::map<std::string, std::size_t> slot;
  for (const auto& m : s.modules) {
    if (!s.fixed.count(m)) slot.emplace(m, slot.size());
  }
  const std::size_t n = slot.size() * width;
  RestrictionSolution sol;
  sol.unknowns = n;

  std::vector<std::pair<Row, std::string>> eqs;
  auto term = [&](Row& row, const std::string& mod, std::size_t k, const Integer& c) {
    if (auto it = s.fixed.find(mod); it != s.fixed.end()) {
      row[n] += Rational(c * it->second.at(k));
    } else {
      row[slot.at(mod) * width + k] += Rational(c);
    }
  };
  for (const auto& r : s.relations) {
    for (std::size_t k = 0; k + 1 <= truncation; ++k) {
      Row row;
      term(row, r.lhs, k + 1, 1);
      if (k >= 1) term(row, r.lhs, k - 1, 1);
      for (const auto& [y, c] : r.rhs) term(row, y, k, -c);
      std::erase_if(row, [](const auto& e) { return e.second == 0; });
      eqs.emplace_back(std::move(row), to_string(r) + " at L(" + std::to_string(k) + ")");
    }
  }
  for (const auto& nm : s.normalizations) {
    Row row;
    term(row, nm.module, nm.k, 1);
    row[n] -= Rational(nm.value);
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    eqs.emplace_back(std::move(row), "[" + nm.module + " : L(" + std::to_string(nm.k) + ")] = " + nm.value.str());
  }
  sol.equations = eqs.size();

  std::map<std::size_t, Row> pivots;
  for (auto& [row, label] : eqs) {
    while (!row.empty() && row.begin()->first < n) {
      const auto [lead, c] = *row.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      axpy(row, c / it->second.at(lead), it->second);
    }
    if (row.empty()) continue;
    if (row.begin()->first == n) {
      sol.status = RestrictionSolution::Status::Infeasible;
      sol.failed_relation = label;
      return sol;
    }
    pivots.emplace(row.begin()->first, std::move(row));
  }
  sol.free_dims = n - pivots.size();
  if (sol.free_dims > 0) {
    sol.status = RestrictionSolution::Status::Underdetermined;
    return sol;
  }
  std::vector<Rational> x(n);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rational acc = 0;
    for (const auto& [j, w] : it->second) {
      if (j == it->first) continue;
      acc += w * (j == n ? Rational(1) : x[j]);
    }
    x[it->first] = -acc / it->second.at(it->first);
  }
  sol.status = RestrictionSolution::Status::Unique;
  sol.nonnegative_integral = true;
  sol.characters = s.fixed;
  bool fitted = true;
  for (const auto& [mod, base] : slot) {
    std::vector<Integer> values;
    for (std::size_t k = 0; k < width; ++k) {
      const Rational& q = x[base * width + k];
      if (denominator(q) != 1 || q < 0) sol.nonnegative_integral = false;
      values.push_back(numerator(q));
    }
    if (!sol.nonnegative_integral) continue;
    if (auto c = SlCharacter::fit(values)) sol.characters[mod] = *c;
    else fitted = false;
  }
  if (sol.nonnegative_integral && fitted) {
    sol.certified = std::all_of(s.relations.begin(), s.relations.end(),
                                [&](const TensorRelation& r) { return check_relation(r, sol.characters); });
  }
  return sol;
}

Json solution_to_json(const RestrictionSystem& s, const RestrictionSolution& sol) {
  Json j;
  j["system"] = s.name;
  j["status"] = to_string(sol.status);
  j["unknowns"] = sol.unknowns;
  j["equations"] = sol.equations;
  j["free_dims"] = sol.free_dims;
  if (!sol.failed_relation.empty()) j["failed_relation"] = sol.failed_relation;
  if (sol.status == RestrictionSolution::Status::Unique) {
    j["nonnegative_integral"] = sol.nonnegative_integral;
    j["certified"] = sol.certified;
    Json chars = Json::object();
    for (const auto& m : s.modules) {
      if (auto it = sol.characters.find(m); it != sol.characters.end()) {
        Json c = character_to_json(it->second);
        c["fixed"] = s.fixed.count(m) > 0;
        chars[m] = std::move(c);
      }
    }
    j["characters"] = std::move(chars);
  }
  return j;
}

}  // namespace sl2cat
