#include "sl2cat/modcat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace sl2cat {

namespace detail {
const std::map<std::string, std::string>& catalog_sources();
}

std::string to_string(Basis b) { return b == Basis::Projectives ? "projectives" : "simples"; }

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

struct ModuleCategoryModel::Cache {
  std::shared_mutex mutex;
  std::vector<PresentedMatrix> actions;
};

ModuleCategoryModel::ModuleCategoryModel(std::string name, Basis basis, PresentedMatrix f1, std::string provenance,
                                         std::optional<DynkinType> expected_type)
    : name_(std::move(name)),
      basis_(basis),
      f1_(std::move(f1)),
      provenance_(std::move(provenance)),
      expected_(expected_type),
      cache_(std::make_shared<Cache>()) {
  if (!is_nonnegative(f1_)) throw std::invalid_argument("model " + name_ + ": [F_1] has a negative entry");
}

PresentedMatrix ModuleCategoryModel::action(std::size_t i) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (i < cache_->actions.size()) return cache_->actions[i];
  }
  std::unique_lock lock(cache_->mutex);
  auto& a = cache_->actions;
  if (a.empty()) a.push_back(PresentedMatrix::identity(f1_.index()));
  if (a.size() == 1) a.push_back(f1_);
  while (a.size() <= i) a.push_back(f1_ * a.back() - a[a.size() - 2]);
  return a[i];
}

PresentedMatrix derive_action(const ModuleCategoryModel& m, std::size_t i) { return m.action(i); }

ModuleCategoryModel model_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("model json must be an object");
  if (!j.contains("f1")) throw std::invalid_argument("model json needs \"f1\"");
  const std::string name = j.value("name", std::string("unnamed"));
  Basis basis = Basis::Projectives;
  if (j.contains("basis")) {
    const auto b = j["basis"].get<std::string>();
    if (b == "simples") basis = Basis::Simples;
    else if (b != "projectives") throw std::invalid_argument("basis must be \"projectives\" or \"simples\"");
  }
  std::optional<DynkinType> expected;
  if (j.contains("expected_type")) {
    expected = parse_dynkin_type(j["expected_type"].get<std::string>());
    if (!expected) throw std::invalid_argument("unknown expected_type " + j["expected_type"].dump());
  }
  return ModuleCategoryModel(name, basis, matrix_from_json(j["f1"]), j.value("provenance", std::string()), expected);
}

Json model_to_json(const ModuleCategoryModel& m) {
  Json j;
  j["name"] = m.name();
  j["basis"] = to_string(m.basis());
  j["provenance"] = m.provenance();
  if (m.expected_type()) j["expected_type"] = to_string(*m.expected_type());
  j["f1"] = matrix_to_json(m.f1());
  return j;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::catalog_sources()) out.push_back(name);
  return out;
}

const std::string& catalog_source(const std::string& name) {
  const auto& src = detail::catalog_sources();
  auto it = src.find(name);
  if (it == src.end()) throw UnknownModel("unknown catalog model '" + name + "'");
  return it->second;
}

ModuleCategoryModel catalog(const std::string& name) { return model_from_json(Json::parse(catalog_source(name))); }

CategorifiabilityReport check_categorifiability(const ModuleCategoryModel& m, std::size_t upto) {
  CategorifiabilityReport out;
  out.upto = upto;
  for (std::size_t i = 0; i <= upto; ++i) {
    const auto f = m.action(i);
    for (const auto& [ij, v] : f.head()) {
      if (v < 0) {
        out.ok = false;
        out.failure = CategorifiabilityReport::Failure{i, ij.first, ij.second, v};
        return out;
      }
    }
    for (const auto& [d, v] : f.diagonals()) {
      if (v < 0) {
        const Index r = f.index().kind == IndexSet::Kind::Int
                            ? 0
                            : static_cast<Index>(std::max(f.head_size(), f.reach()) + f.band());
        out.ok = false;
        out.failure = CategorifiabilityReport::Failure{i, r, r + d, v};
        return out;
      }
    }
  }
  return out;
}

namespace {

struct Window {
  Index origin;
  std::size_t size;
};

Window generator_window(const PresentedMatrix& f) {
  switch (f.index().kind) {
    case IndexSet::Kind::Finite: return {0, f.index().n};
    case IndexSet::Kind::Nat: return {0, std::max(f.head_size(), f.reach()) + 2 * std::max<std::size_t>(f.band(), 1)};
    case IndexSet::Kind::Int: {
      const std::size_t n = 2 * f.band() + 3;
      return {-static_cast<Index>(n / 2), n};
    }
  }
  return {0, 0};
}

// Edges i -> j inside the window when F_1 applied to object i contains j.
std::vector<std::vector<std::size_t>> generator_edges(const PresentedMatrix& f, const Window& w) {
  std::vector<std::vector<std::size_t>> out(w.size);
  for (std::size_t i = 0; i < w.size; ++i) {
    for (std::size_t j = 0; j < w.size; ++j) {
      if (f.entry(w.origin + static_cast<Index>(j), w.origin + static_cast<Index>(i)) != 0) out[i].push_back(j);
    }
  }
  return out;
}

std::vector<bool> reachable(const std::vector<std::vector<std::size_t>>& adj, std::size_t from) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

bool strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
  if (adj.empty()) return true;
  std::vector<std::vector<std::size_t>> rev(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (std::size_t u : adj[v]) rev[u].push_back(v);
  }
  auto all = [](const std::vector<bool>& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); };
  return all(reachable(adj, 0)) && all(reachable(rev, 0));
}

}  // namespace

ActionGraph action_graph(const ModuleCategoryModel& m) {
  const auto& f = m.f1();
  const Window w = generator_window(f);
  const auto adj = generator_edges(f, w);
  ActionGraph g;
  g.origin = w.origin;
  g.size = w.size;
  g.exact = f.index().is_finite();
  for (std::size_t i = 0; i < w.size; ++i) {
    if (g.exact) {
      const auto seen = reachable(adj, i);
      for (std::size_t j = 0; j < w.size; ++j) {
        if (seen[j]) g.edges.emplace_back(w.origin + static_cast<Index>(i), w.origin + static_cast<Index>(j));
      }
    } else {
      g.edges.emplace_back(w.origin + static_cast<Index>(i), w.origin + static_cast<Index>(i));
      for (std::size_t j : adj[i]) {
        if (j != i) g.edges.emplace_back(w.origin + static_cast<Index>(i), w.origin + static_cast<Index>(j));
      }
    }
  }
  return g;
}

TransitivityReport is_transitive(const ModuleCategoryModel& m) {
  const auto& f = m.f1();
  const bool ray_both_ways = f.tail(1) != 0 && f.tail(-1) != 0;
  switch (f.index().kind) {
    case IndexSet::Kind::Finite: {
      const bool sc = strongly_connected(generator_edges(f, generator_window(f)));
      return {sc ? Tri::Yes : Tri::No, sc ? "action graph strongly connected" : "action graph not strongly connected"};
    }
    case IndexSet::Kind::Int:
      if (ray_both_ways) return {Tri::Yes, "tail links every index to both neighbours"};
      return {Tri::Unknown, "tail lacks a nonzero +1 or -1 diagonal"};
    case IndexSet::Kind::Nat: {
      if (!ray_both_ways) return {Tri::Unknown, "tail lacks a nonzero +1 or -1 diagonal"};
      const Window w = generator_window(f);
      if (strongly_connected(generator_edges(f, w))) {
        return {Tri::Yes, "window of " + std::to_string(w.size) + " objects strongly connected and tail links the ray"};
      }
      return {Tri::Unknown, "window of " + std::to_string(w.size) + " objects not strongly connected"};
    }
  }
  return {};
}

Classification classify_type(const ModuleCategoryModel& m) {
  const auto t = is_transitive(m);
  if (t.verdict != Tri::Yes) throw PreconditionFailed("model " + m.name() + " not known to be transitive: " + t.reason);
  const auto c = check_categorifiability(m);
  if (!c.ok) {
    throw PreconditionFailed("model " + m.name() + " not categorifiable: [F_" + std::to_string(c.failure->i) +
                             "] has entry " + c.failure->value.str());
  }
  const auto& f = m.f1();
  const auto id = PresentedMatrix::identity(f.index());
  Classification out;
  try {
    return classify(validate_gcm(id + id - f));
  } catch (const AxiomViolation& e) {
    out.note = e.what();
  }
  return out;
}

ModuleCategoryModel to_simples_basis(const ModuleCategoryModel& m) {
  if (m.basis() != Basis::Projectives) throw std::invalid_argument("model is not in the projectives basis");
  return ModuleCategoryModel(m.name(), Basis::Simples, transpose(m.f1()), m.provenance(), m.expected_type());
}

ModuleCategoryModel to_projectives_basis(const ModuleCategoryModel& m) {
  if (m.basis() != Basis::Simples) throw std::invalid_argument("model is not in the simples basis");
  return ModuleCategoryModel(m.name(), Basis::Projectives, transpose(m.f1()), m.provenance(), m.expected_type());
}

bool semisimplicity_symmetry_check(const ModuleCategoryModel& m) { return is_symmetric(m.f1()); }

}  // namespace sl2cat
