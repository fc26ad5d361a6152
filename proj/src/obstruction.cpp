#include "sl2cat/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace sl2cat {

std::string to_string(ObstructionReport::Status s) {
  switch (s) {
    case ObstructionReport::Status::Sat: return "SAT";
    case ObstructionReport::Status::Unsat: return "UNSAT";
    case ObstructionReport::Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

int length(const Multiset& m) {
  int n = 0;
  for (const auto& [i, c] : m) n += c;
  return n;
}

bool leq(const Multiset& a, const Multiset& b) {
  for (const auto& [i, c] : a) {
    auto it = b.find(i);
    if (it == b.end() || it->second < c) return false;
  }
  return true;
}

Multiset minus(const Multiset& a, const Multiset& b) {
  Multiset out = a;
  for (const auto& [i, c] : b) {
    if ((out[i] -= c) == 0) out.erase(i);
  }
  return out;
}

Multiset plus(const Multiset& a, const Multiset& b) {
  Multiset out = a;
  for (const auto& [i, c] : b) out[i] += c;
  return out;
}

int count(const Multiset& m, Index i) {
  auto it = m.find(i);
  return it == m.end() ? 0 : it->second;
}

std::vector<Multiset> submultisets(const Multiset& c) {
  std::vector<Multiset> out{{}};
  for (const auto& [i, n] : c) {
    std::vector<Multiset> next;
    for (const auto& base : out) {
      for (int k = 0; k <= n; ++k) {
        Multiset m = base;
        if (k) m[i] = k;
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

// A module with composition c, top t and socle s splits as Z + M'' with Z
// semisimple and M'' free of simple summands, so soc M'' lies in rad M''.
bool admissible(const Multiset& c, const Multiset& t, const Multiset& s) {
  if (c.empty()) return t.empty() && s.empty();
  Multiset meet;
  for (const auto& [i, n] : t) {
    const int k = std::min(n, count(s, i));
    if (k) meet[i] = k;
  }
  for (const auto& z : submultisets(meet)) {
    const Multiset c2 = minus(c, z), t2 = minus(t, z), s2 = minus(s, z);
    if (c2.empty()) {
      if (t2.empty() && s2.empty()) return true;
      continue;
    }
    if (length(c2) >= 2 && !t2.empty() && !s2.empty() && leq(plus(t2, s2), c2)) return true;
  }
  return false;
}

struct Term {
  long coef;
  std::size_t module;
  bool top;
  Index simple;
};

struct Constraint {
  std::string kind;
  std::string identity;
  std::vector<Term> lhs, rhs;
  std::size_t ready = 0;
};

struct Option {
  Multiset top, socle;
};

}  // namespace

ObstructionReport socle_top_feasibility(const ModuleCategoryModel& model, std::size_t depth,
                                        const ObstructionOptions& options) {
  if (depth == 0) throw std::invalid_argument("depth must be positive");
  if (depth > options.depth_cap) {
    throw DepthTooLarge("depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(options.depth_cap));
  }
  const PresentedMatrix simples = model.basis() == Basis::Simples ? model.f1() : transpose(model.f1());
  const ModuleCategoryModel sm(model.name(), Basis::Simples, simples);

  ObstructionReport report;
  report.model = model.name();
  report.depth = depth;
  const IndexSet& index = simples.index();
  report.origin = index.kind == IndexSet::Kind::Int ? -static_cast<Index>(depth / 2) : 0;
  if (index.is_finite() && depth > index.n) throw std::invalid_argument("depth exceeds the number of objects");
  auto object = [&](std::size_t p) { return report.origin + static_cast<Index>(p); };
  auto dim = [&](Index i) -> long {
    auto it = options.schur_dims.find(i);
    return it == options.schur_dims.end() ? 1 : it->second;
  };
  auto id = [&](std::size_t k, std::size_t p) { return k * depth + p; };

  // compositions
  for (std::size_t k = 0; k <= depth; ++k) {
    const PresentedMatrix f = sm.action(k);
    const long band = static_cast<long>(f.band());
    for (std::size_t p = 0; p < depth; ++p) {
      const Index j = object(p);
      Index lo = j - band - 1, hi = std::max<Index>(static_cast<Index>(f.reach()), j + band + 1);
      if (index.kind != IndexSet::Kind::Int) lo = std::max<Index>(lo, 0);
      if (index.is_finite()) hi = std::min<Index>(hi, static_cast<Index>(index.n) - 1);
      ModuleUnknown mod;
      mod.functor = k;
      mod.object = j;
      for (Index i = lo; i <= hi; ++i) {
        const Integer v = f.entry(i, j);
        if (v < 0) throw std::invalid_argument("negative composition multiplicity in F_" + std::to_string(k));
        if (v > 0) {
          if (v > 64) {
            mod.wildcard = true;
            mod.composition[i] = 64;
          } else {
            mod.composition[i] = static_cast<int>(v.convert_to<long>());
          }
        }
      }
      if (length(mod.composition) > options.max_length) mod.wildcard = true;
      report.modules.push_back(std::move(mod));
    }
  }
  const std::size_t n = report.modules.size();

  auto name = [&](std::size_t m, bool top, Index i) {
    const auto& mod = report.modules[m];
    std::ostringstream os;
    os << "[" << (top ? "top" : "soc") << " F_" << mod.functor << " S_" << mod.object << " : S_" << i << "]";
    return os.str();
  };
  auto side = [&](const std::vector<Term>& ts) {
    std::string s;
    for (const auto& t : ts) {
      if (!s.empty()) s += " + ";
      if (t.coef != 1) s += std::to_string(t.coef) + "*";
      s += name(t.module, t.top, t.simple);
    }
    return s;
  };

  std::vector<Constraint> constraints;
  std::set<std::string> seen;
  auto add = [&](Constraint c) {
    bool live = false;
    for (const auto* ts : {&c.lhs, &c.rhs}) {
      for (const auto& t : *ts) {
        if (report.modules[t.module].wildcard) {
          ++report.skipped;
          return;
        }
        if (count(report.modules[t.module].composition, t.simple)) live = true;
        c.ready = std::max(c.ready, t.module);
      }
    }
    if (!live) return;
    c.identity = side(c.lhs) + " = " + side(c.rhs);
    if (!seen.insert(c.identity).second) return;
    constraints.push_back(std::move(c));
  };

  // F_a S_j simple, say S_x: then F_b S_x = sum over CG(a,b) of F_m S_j, read through Hom(S_x, F_b S_l).
  for (std::size_t a = 1; a <= depth; ++a) {
    for (std::size_t p = 0; p < depth; ++p) {
      const auto& src = report.modules[id(a, p)];
      if (src.wildcard || length(src.composition) != 1) continue;
      const Index x = src.composition.begin()->first, j = object(p);
      for (std::size_t b = 1; a + b <= depth; ++b) {
        for (std::size_t q = 0; q < depth; ++q) {
          for (bool top : {false, true}) {
            Constraint c;
            c.kind = "hom";
            c.lhs.push_back({dim(x), id(b, q), top, x});
            for (std::size_t m = a > b ? a - b : b - a; m <= a + b; m += 2) c.rhs.push_back({dim(j), id(m, q), top, j});
            add(std::move(c));
          }
        }
      }
    }
  }
  // Hom(F_k S_j, S_i) = Hom(S_j, F_k S_i)
  for (std::size_t k = 1; k <= depth; ++k) {
    for (std::size_t p = 0; p < depth; ++p) {
      for (std::size_t q = 0; q < depth; ++q) {
        Constraint c;
        c.kind = "adjunction";
        c.lhs.push_back({dim(object(q)), id(k, p), true, object(q)});
        c.rhs.push_back({dim(object(p)), id(k, q), false, object(p)});
        add(std::move(c));
      }
    }
  }
  std::stable_sort(constraints.begin(), constraints.end(),
                   [](const Constraint& a, const Constraint& b) { return a.ready < b.ready; });
  report.constraints = constraints.size();

  // domains, deduplicated on the coordinates the constraints read
  std::vector<std::set<Index>> read_top(n), read_soc(n);
  for (const auto& c : constraints) {
    for (const auto* ts : {&c.lhs, &c.rhs}) {
      for (const auto& t : *ts) (t.top ? read_top : read_soc)[t.module].insert(t.simple);
    }
  }
  std::vector<std::vector<Option>> domain(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto& mod = report.modules[m];
    if (mod.wildcard) {
      domain[m].push_back({});
      continue;
    }
    const Multiset& c = mod.composition;
    std::vector<Option> all{{c, c}};
    if (mod.functor > 0) {
      const auto subs = submultisets(c);
      for (const auto& t : subs) {
        for (const auto& s : subs) {
          if (!(t == c && s == c) && admissible(c, t, s)) all.push_back({t, s});
        }
      }
    }
    std::set<std::vector<int>> keys;
    for (auto& o : all) {
      std::vector<int> key;
      for (Index i : read_top[m]) key.push_back(count(o.top, i));
      for (Index i : read_soc[m]) key.push_back(count(o.socle, i));
      if (keys.insert(key).second) domain[m].push_back(std::move(o));
    }
  }

  std::vector<std::vector<const Constraint*>> at(n);
  for (const auto& c : constraints) at[c.ready].push_back(&c);
  std::vector<const Option*> chosen(n, nullptr);
  auto value = [&](const std::vector<Term>& ts) {
    long v = 0;
    for (const auto& t : ts) v += t.coef * count(t.top ? chosen[t.module]->top : chosen[t.module]->socle, t.simple);
    return v;
  };

  long deepest = -1;
  std::map<std::string, std::size_t> trace_pos;
  std::function<bool(std::size_t)> search = [&](std::size_t m) -> bool {
    if (m == n) return true;
    for (const auto& o : domain[m]) {
      chosen[m] = &o;
      const Constraint* bad = nullptr;
      long l = 0, r = 0;
      for (const auto* c : at[m]) {
        l = value(c->lhs);
        r = value(c->rhs);
        if (l != r) {
          bad = c;
          break;
        }
      }
      if (!bad) {
        if (search(m + 1)) return true;
        continue;
      }
      if (static_cast<long>(m) > deepest) {
        deepest = static_cast<long>(m);
        report.trace.clear();
        trace_pos.clear();
      }
      if (static_cast<long>(m) == deepest) {
        auto [it, fresh] = trace_pos.emplace(bad->identity, report.trace.size());
        if (fresh) report.trace.push_back({bad->kind, bad->identity, l, r, 0});
        ++report.trace[it->second].violations;
      }
    }
    return false;
  };

  if (search(0)) {
    report.status = report.skipped ? ObstructionReport::Status::Unknown : ObstructionReport::Status::Sat;
    report.trace.clear();
    for (std::size_t m = 0; m < n; ++m) {
      if (report.modules[m].wildcard) continue;
      report.modules[m].top = chosen[m]->top;
      report.modules[m].socle = chosen[m]->socle;
    }
  } else {
    report.status = ObstructionReport::Status::Unsat;
  }
  return report;
}

namespace {

Json multiset_json(const Multiset& m) {
  Json j = Json::object();
  for (const auto& [i, c] : m) j[std::to_string(i)] = c;
  return j;
}

}  // namespace

Json report_to_json(const ObstructionReport& r) {
  Json j;
  j["model"] = r.model;
  j["depth"] = r.depth;
  j["window"] = {{"origin", r.origin}, {"size", r.depth}};
  j["status"] = to_string(r.status);
  j["constraints"] = r.constraints;
  j["skipped"] = r.skipped;
  Json mods = Json::array();
  for (const auto& m : r.modules) {
    Json e;
    e["functor"] = m.functor;
    e["object"] = m.object;
    e["composition"] = multiset_json(m.composition);
    e["wildcard"] = m.wildcard;
    if (r.status != ObstructionReport::Status::Unsat && !m.wildcard) {
      e["top"] = multiset_json(m.top);
      e["socle"] = multiset_json(m.socle);
    }
    mods.push_back(std::move(e));
  }
  j["modules"] = std::move(mods);
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    trace.push_back({{"kind", t.kind}, {"identity", t.identity}, {"lhs", t.lhs}, {"rhs", t.rhs},
                     {"violations", t.violations}});
  }
  j["trace"] = std::move(trace);
  if (!r.trace.empty()) j["first_violated"] = r.trace.front().identity;
  return j;
}

}  // namespace sl2cat
