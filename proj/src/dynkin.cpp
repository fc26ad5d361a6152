#include "sl2cat/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace sl2cat {

namespace {

Index as_index(std::size_t n) { return static_cast<Index>(n); }

struct FamilyInfo {
  Family family;
  const char* name;
  Kind kind;
  bool ranked;
  std::size_t min_rank;    // ranked families
  std::size_t fixed_rank;  // fixed-size families
};

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {Family::A, "A", Kind::Classical, true, 1, 0},
      {Family::B, "B", Kind::Classical, true, 2, 0},
      {Family::C, "C", Kind::Classical, true, 3, 0},
      {Family::D, "D", Kind::Classical, true, 4, 0},
      {Family::E6, "E6", Kind::Classical, false, 0, 6},
      {Family::E7, "E7", Kind::Classical, false, 0, 7},
      {Family::E8, "E8", Kind::Classical, false, 0, 8},
      {Family::F4, "F4", Kind::Classical, false, 0, 4},
      {Family::G2, "G2", Kind::Classical, false, 0, 2},
      {Family::AffA, "~A", Kind::Affine, true, 2, 0},
      {Family::AffA11, "~A11", Kind::Affine, false, 0, 1},
      {Family::AffA12, "~A12", Kind::Affine, false, 0, 1},
      {Family::AffB, "~B", Kind::Affine, true, 2, 0},
      {Family::AffBC, "~BC", Kind::Affine, true, 2, 0},
      {Family::AffC, "~C", Kind::Affine, true, 2, 0},
      {Family::AffBD, "~BD", Kind::Affine, true, 3, 0},
      {Family::AffD, "~D", Kind::Affine, true, 4, 0},
      {Family::AffCD, "~CD", Kind::Affine, true, 3, 0},
      {Family::AffE6, "~E6", Kind::Affine, false, 0, 6},
      {Family::AffE7, "~E7", Kind::Affine, false, 0, 7},
      {Family::AffE8, "~E8", Kind::Affine, false, 0, 8},
      {Family::AffF41, "~F41", Kind::Affine, false, 0, 4},
      {Family::AffF42, "~F42", Kind::Affine, false, 0, 4},
      {Family::AffG21, "~G21", Kind::Affine, false, 0, 2},
      {Family::AffG22, "~G22", Kind::Affine, false, 0, 2},
      {Family::AffL, "~L", Kind::Affine, true, 0, 0},
      {Family::AffBL, "~BL", Kind::Affine, true, 1, 0},
      {Family::AffCL, "~CL", Kind::Affine, true, 1, 0},
      {Family::AffDL, "~DL", Kind::Affine, true, 2, 0},
      {Family::Ainf, "A_inf", Kind::Infinite, false, 0, 0},
      {Family::AinfInf, "A_inf^inf", Kind::Infinite, false, 0, 0},
      {Family::Binf, "B_inf", Kind::Infinite, false, 0, 0},
      {Family::Cinf, "C_inf", Kind::Infinite, false, 0, 0},
      {Family::Dinf, "D_inf", Kind::Infinite, false, 0, 0},
      {Family::Tinf, "T_inf", Kind::Infinite, false, 0, 0},
  };
  return table;
}

const FamilyInfo& info(Family f) {
  for (const auto& fi : family_table()) {
    if (fi.family == f) return fi;
  }
  throw std::logic_error("unknown family");
}

std::vector<Family> families_of(Kind k) {
  std::vector<Family> out;
  for (const auto& fi : family_table()) {
    if (fi.kind == k) out.push_back(fi.family);
  }
  return out;
}

// Q(i,j) += k and, for unoriented edges, Q(j,i) += k.
struct Builder {
  explicit Builder(std::size_t n) : q(n, n) {}
  Builder& edge(std::size_t i, std::size_t j) {
    q(i, j) += 1;
    q(j, i) += 1;
    return *this;
  }
  Builder& arrow(std::size_t i, std::size_t j, int k = 1) {
    q(i, j) += k;
    return *this;
  }
  Builder& loop(std::size_t i, int k = 1) {
    q(i, i) += k;
    return *this;
  }
  Builder& path(std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) edge(i, i + 1);
    return *this;
  }
  DenseMatrix q;
};

DenseMatrix finite_template(const DynkinType& t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case Family::A: return Builder(n).path(0, n - 1).q;
    case Family::B: return Builder(n).path(0, n - 1).arrow(1, 0).q;
    case Family::C: return Builder(n).path(0, n - 1).arrow(0, 1).q;
    case Family::D: return Builder(n).path(0, n - 2).edge(1, n - 1).q;
    case Family::E6: return Builder(6).path(0, 4).edge(2, 5).q;
    case Family::E7: return Builder(7).path(0, 5).edge(2, 6).q;
    case Family::E8: return Builder(8).path(0, 6).edge(2, 7).q;
    case Family::F4: return Builder(4).path(0, 3).arrow(1, 2).q;
    case Family::G2: return Builder(2).edge(0, 1).arrow(0, 1, 2).q;
    case Family::AffA: return Builder(n + 1).path(0, n).edge(n, 0).q;
    case Family::AffA11: return Builder(2).edge(0, 1).arrow(0, 1, 3).q;
    case Family::AffA12: return Builder(2).edge(0, 1).edge(0, 1).q;
    case Family::AffB: return Builder(n + 1).path(0, n).arrow(1, 0).arrow(n - 1, n).q;
    case Family::AffBC: return Builder(n + 1).path(0, n).arrow(1, 0).arrow(n, n - 1).q;
    case Family::AffC: return Builder(n + 1).path(0, n).arrow(0, 1).arrow(n, n - 1).q;
    case Family::AffBD: return Builder(n + 1).path(0, n - 1).edge(1, n).arrow(n - 2, n - 1).q;
    case Family::AffD: return Builder(n + 1).path(0, n - 2).edge(1, n - 1).edge(n - 3, n).q;
    case Family::AffCD: return Builder(n + 1).path(0, n - 1).edge(1, n).arrow(n - 1, n - 2).q;
    case Family::AffE6: return Builder(7).path(0, 4).edge(2, 5).edge(5, 6).q;
    case Family::AffE7: return Builder(8).path(0, 6).edge(3, 7).q;
    case Family::AffE8: return Builder(9).path(0, 7).edge(2, 8).q;
    case Family::AffF41: return Builder(5).path(0, 4).arrow(2, 3).q;
    case Family::AffF42: return Builder(5).path(0, 4).arrow(1, 2).q;
    case Family::AffG21: return Builder(3).path(0, 2).arrow(1, 2, 2).q;
    case Family::AffG22: return Builder(3).path(0, 2).arrow(0, 1, 2).q;
    case Family::AffL: return Builder(n + 1).path(0, n).loop(0).loop(n).q;
    case Family::AffBL: return Builder(n + 1).path(0, n).arrow(1, 0).loop(n).q;
    case Family::AffCL: return Builder(n + 1).path(0, n).arrow(0, 1).loop(n).q;
    case Family::AffDL: return Builder(n + 1).path(0, n - 1).edge(1, n).loop(n - 1).q;
    default: break;
  }
  throw std::logic_error("not a finite family");
}

PresentedMatrix infinite_template(Family f) {
  const PresentedMatrix::Diagonals path = {{-1, 1}, {1, 1}};
  switch (f) {
    case Family::Ainf: return PresentedMatrix::toeplitz(IndexSet::nat(), path);
    case Family::AinfInf: return PresentedMatrix::toeplitz(IndexSet::integers(), path);
    case Family::Binf: return PresentedMatrix(IndexSet::nat(), 1, {{{0, 1}, 1}, {{1, 0}, 2}}, path);
    case Family::Cinf: return PresentedMatrix(IndexSet::nat(), 1, {{{0, 1}, 2}, {{1, 0}, 1}}, path);
    case Family::Dinf: return PresentedMatrix(IndexSet::nat(), 1, {{{0, 2}, 1}, {{2, 0}, 1}}, path);
    case Family::Tinf:
      return PresentedMatrix(IndexSet::nat(), 1, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}}, path);
    default: break;
  }
  throw std::logic_error("not an infinite family");
}

std::size_t vertex_count(const DynkinType& t) {
  const auto& fi = info(t.family);
  const std::size_t r = fi.ranked ? t.rank : fi.fixed_rank;
  return fi.kind == Kind::Affine ? r + 1 : r;
}

PresentedMatrix two_id_minus(const PresentedMatrix& m) {
  return PresentedMatrix::identity(m.index()) + PresentedMatrix::identity(m.index()) - m;
}

// First index from which a Nat presentation is pure tail.
std::size_t settled(const PresentedMatrix& m) { return std::max(m.head_size(), m.reach()); }

}  // namespace

Kind DynkinType::kind() const { return info(family).kind; }
bool DynkinType::has_rank() const { return info(family).ranked; }

std::string to_string(const DynkinType& t) {
  const auto& fi = info(t.family);
  if (!fi.ranked) return fi.name;
  return std::string(fi.name) + "_" + std::to_string(t.rank);
}

std::optional<DynkinType> parse_dynkin_type(const std::string& text) {
  for (const auto& fi : family_table()) {
    const std::string name = fi.name;
    if (!fi.ranked) {
      if (text == name) return DynkinType{fi.family, fi.fixed_rank};
      continue;
    }
    if (text.size() > name.size() + 1 && text.compare(0, name.size(), name) == 0 && text[name.size()] == '_') {
      const std::string digits = text.substr(name.size() + 1);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
      if (digits.size() > 6) return std::nullopt;
      DynkinType t{fi.family, std::stoul(digits)};
      if (is_legal(t)) return t;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::size_t min_rank(Family f) {
  const auto& fi = info(f);
  return fi.ranked ? fi.min_rank : fi.fixed_rank;
}

bool is_legal(const DynkinType& t) {
  const auto& fi = info(t.family);
  return fi.ranked ? t.rank >= fi.min_rank : true;
}

std::vector<Family> classical_families() { return families_of(Kind::Classical); }
std::vector<Family> affine_families() { return families_of(Kind::Affine); }
std::vector<Family> infinite_families() { return families_of(Kind::Infinite); }

AxiomViolation::AxiomViolation(std::string axiom, Index i, Index j)
    : std::invalid_argument("GCM axiom violated: " + axiom + " at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")"),
      axiom_(std::move(axiom)),
      i_(i),
      j_(j) {}

GCM validate_gcm(const PresentedMatrix& m) {
  auto check = [](const Integer& cij, const Integer& cji, Index i, Index j) {
    if (i == j) {
      if (cij > 2) throw AxiomViolation("diagonal entry exceeds 2", i, j);
      return;
    }
    if (cij > 0) throw AxiomViolation("positive off-diagonal entry", i, j);
    if ((cij == 0) != (cji == 0)) throw AxiomViolation("zero pattern not symmetric", i, j);
  };
  if (m.index().kind == IndexSet::Kind::Int) {
    for (const auto& [d, v] : m.diagonals()) check(v, m.tail(-d), 0, d);
    return GCM{m};
  }
  // Beyond the window every entry is a tail entry whose mirror is also a tail entry.
  const std::size_t n = m.index().is_finite() ? m.index().n : settled(m) + 2 * m.band() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      check(m.entry(as_index(i), as_index(j)), m.entry(as_index(j), as_index(i)), as_index(i), as_index(j));
    }
  }
  if (!m.index().is_finite()) {
    for (const auto& [d, v] : m.diagonals()) check(v, m.tail(-d), as_index(n), as_index(n) + d);
  }
  return GCM{m};
}

DiagramGraph graph_of(const GCM& c) { return DiagramGraph{two_id_minus(c.matrix)}; }

GCM gcm_of(const DiagramGraph& g) { return validate_gcm(two_id_minus(g.adjacency)); }

DiagramGraph diagram_template(const DynkinType& t) {
  if (!is_legal(t)) throw IllegalRank("illegal rank for " + to_string(t));
  if (t.kind() == Kind::Infinite) return DiagramGraph{infinite_template(t.family)};
  return DiagramGraph{PresentedMatrix::from_dense(finite_template(t))};
}

bool is_connected(const PresentedMatrix& q) {
  const auto& idx = q.index();
  std::vector<Index> offsets;
  for (const auto& [d, v] : q.diagonals()) {
    if (d != 0) offsets.push_back(d < 0 ? -d : d);
  }
  Index g = 0;
  for (Index d : offsets) g = std::gcd(g, d);
  if (idx.kind == IndexSet::Kind::Int) return g == 1;

  // Vertices [0, n) plus, for Nat, one super-vertex n standing for the ray.
  const bool infinite = idx.kind == IndexSet::Kind::Nat;
  if (infinite && g != 1) return false;
  const std::size_t n = infinite ? settled(q) + q.band() : idx.n;
  const std::size_t total = infinite ? n + 1 : n;
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t jmax = infinite ? n + q.band() + 1 : n;
    for (std::size_t j = 0; j < jmax; ++j) {
      if (i == j) continue;
      if (q.entry(as_index(i), as_index(j)) == 0 && q.entry(as_index(j), as_index(i)) == 0) continue;
      const std::size_t target = j >= n ? n : j;
      adj[i].push_back(target);
      adj[target].push_back(i);
    }
  }
  std::vector<bool> seen(total, false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    const std::size_t v = todo.front();
    todo.pop();
    for (std::size_t u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        todo.push(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::size_t coxeter_number(const DynkinType& t) {
  if (t.kind() != Kind::Classical) throw std::invalid_argument("Coxeter number needs a classical type");
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank - 2;
    case Family::E6: return 12;
    case Family::E7: return 18;
    case Family::E8: return 30;
    case Family::F4: return 12;
    case Family::G2: return 6;
    default: break;
  }
  throw std::logic_error("unreachable");
}

bool check_coxeter_annihilation(const DynkinType& t) {
  const std::size_t h = coxeter_number(t);
  const auto q = diagram_template(t).adjacency;
  return poly_eval(r_poly(h - 1), q) == PresentedMatrix::zero(q.index());
}

namespace {

std::optional<PresentedVector> finite_null_vector(const PresentedMatrix& c) {
  const auto basis = nullspace(to_rational(truncate(c, c.index().n)));
  if (basis.size() != 1) return std::nullopt;
  auto v = primitive_integer_vector(basis[0]);
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x <= 0; })) {
    for (auto& x : v) x = -x;
  }
  PresentedVector out(c.index(), v, 0, 0);
  if (!out.is_positive()) return std::nullopt;
  return out;
}

std::optional<PresentedVector> nat_null_vector(const PresentedMatrix& c) {
  const std::size_t w = c.band();
  const std::size_t k = settled(c) + w;
  const std::size_t g = std::max({c.reach(), c.head_size() + w, k + w});
  Integer sum_t = 0, moment_t = 0;
  for (const auto& [d, t] : c.diagonals()) {
    sum_t += t;
    moment_t += t * d;
  }
  // Unknowns: x_0..x_{k-1}, a, b.
  RationalMatrix sys(g + 2, k + 2);
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t jmax = std::max(c.reach(), i + w + 1);
    for (std::size_t j = 0; j < jmax; ++j) {
      const Integer e = c.entry(as_index(i), as_index(j));
      if (e == 0) continue;
      if (j < k) {
        sys(i, j) += Rational(e);
      } else {
        sys(i, k) += Rational(e * Integer(j));
        sys(i, k + 1) += Rational(e);
      }
    }
  }
  sys(g, k) = Rational(sum_t);
  sys(g + 1, k) = Rational(moment_t);
  sys(g + 1, k + 1) = Rational(sum_t);
  const auto basis = nullspace(sys);
  if (basis.size() != 1) return std::nullopt;
  auto v = primitive_integer_vector(basis[0]);
  bool flip = true;
  for (std::size_t i = 0; i < k; ++i) flip = flip && v[i] <= 0;
  flip = flip && v[k + 1] <= 0;
  if (flip) {
    for (auto& x : v) x = -x;
  }
  PresentedVector out(IndexSet::nat(), std::vector<Integer>(v.begin(), v.begin() + as_index(k)), v[k], v[k + 1]);
  if (!out.is_positive()) return std::nullopt;
  if (!apply(c, out).is_zero()) throw std::logic_error("null vector certificate failed");
  return out;
}

}  // namespace

std::optional<PresentedVector> find_positive_null_vector(const GCM& c) {
  const auto& m = c.matrix;
  switch (m.index().kind) {
    case IndexSet::Kind::Finite: return finite_null_vector(m);
    case IndexSet::Kind::Nat: return nat_null_vector(m);
    case IndexSet::Kind::Int: {
      Integer s = 0;
      for (const auto& [d, t] : m.diagonals()) s += t;
      if (s != 0) return std::nullopt;
      return PresentedVector::constant(m.index(), 1);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_isomorphism(
    const DenseMatrix& a, const DenseMatrix& b, const std::vector<std::pair<std::size_t, std::size_t>>& fixed) {
  const std::size_t n = a.rows();
  if (b.rows() != n || a.cols() != n || b.cols() != n) return std::nullopt;
  auto signature = [n](const DenseMatrix& m, std::size_t v) {
    std::vector<Integer> out, in;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      out.push_back(m(v, u));
      in.push_back(m(u, v));
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    std::vector<Integer> sig{m(v, v)};
    sig.insert(sig.end(), out.begin(), out.end());
    sig.insert(sig.end(), in.begin(), in.end());
    return sig;
  };
  std::vector<std::vector<Integer>> sa(n), sb(n);
  for (std::size_t v = 0; v < n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> p(n, unset);
  std::vector<bool> used(n, false);
  for (auto [x, y] : fixed) {
    if (x >= n || y >= n || sa[x] != sb[y] || used[y]) return std::nullopt;
    p[x] = y;
    used[y] = true;
  }
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v) {
    if (p[v] == unset) order.push_back(v);
  }
  auto consistent = [&](std::size_t v, std::size_t img) {
    for (std::size_t u = 0; u < n; ++u) {
      if (p[u] == unset) continue;
      if (a(v, u) != b(img, p[u]) || a(u, v) != b(p[u], img)) return false;
    }
    return a(v, v) == b(img, img);
  };
  for (auto [x, y] : fixed) {
    p[x] = unset;
    if (!consistent(x, y)) return std::nullopt;
    p[x] = y;
  }
  std::function<bool(std::size_t)> search = [&](std::size_t pos) {
    if (pos == order.size()) return true;
    const std::size_t v = order[pos];
    for (std::size_t img = 0; img < n; ++img) {
      if (used[img] || sa[v] != sb[img] || !consistent(v, img)) continue;
      p[v] = img;
      used[img] = true;
      if (search(pos + 1)) return true;
      p[v] = unset;
      used[img] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return p;
}

FiniteClassification classify_finite(const GCM& c) {
  const auto& m = c.matrix;
  if (!m.index().is_finite()) throw std::invalid_argument("classify_finite needs a finite GCM");
  const auto q = graph_of(c).adjacency;
  if (!is_connected(q)) throw NotConnected("GCM is not irreducible");
  FiniteClassification out;
  const std::size_t n = m.index().n;
  out.minors = leading_principal_minors(truncate(m, n));
  out.positive_definite = std::all_of(out.minors.begin(), out.minors.end(), [](const Integer& x) { return x > 0; });
  if (!out.positive_definite) return out;
  const DenseMatrix qd = truncate(q, n);
  for (Family f : classical_families()) {
    DynkinType t{f, info(f).ranked ? n : info(f).fixed_rank};
    if (!is_legal(t) || vertex_count(t) != n) continue;
    if (find_isomorphism(qd, finite_template(t))) {
      out.type = t;
      break;
    }
  }
  return out;
}

std::string to_string(Classification::Result r) {
  switch (r) {
    case Classification::Result::Classical: return "Classical";
    case Classification::Result::Affine: return "Affine";
    case Classification::Result::Infinite: return "Infinite";
    case Classification::Result::Unrecognized: return "Unrecognized";
  }
  return "?";
}

namespace {

std::optional<DynkinType> match_affine(const DenseMatrix& q) {
  const std::size_t n = q.rows();
  for (Family f : affine_families()) {
    const auto& fi = info(f);
    DynkinType t{f, fi.ranked ? n - 1 : fi.fixed_rank};
    if (n == 0 || !is_legal(t) || vertex_count(t) != n) continue;
    if (find_isomorphism(q, finite_template(t))) return t;
  }
  return std::nullopt;
}

std::optional<DynkinType> match_infinite(const PresentedMatrix& q) {
  const PresentedMatrix::Diagonals path = {{-1, 1}, {1, 1}};
  if (q.diagonals() != path) return std::nullopt;
  if (q.index().kind == IndexSet::Kind::Int) return DynkinType{Family::AinfInf, 0};
  for (Family f : infinite_families()) {
    const auto t = infinite_template(f);
    if (t.index().kind != IndexSet::Kind::Nat) continue;
    // The ray beyond the window hangs off its last vertex in both matrices.
    const std::size_t k = std::max(settled(q), settled(t)) + 1;
    if (find_isomorphism(truncate(q, k), truncate(t, k), {{k - 1, k - 1}})) return DynkinType{f, 0};
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const GCM& c) {
  const auto q = graph_of(c).adjacency;
  if (!is_connected(q)) throw NotConnected("diagram is not connected");
  Classification out;
  if (c.matrix.index().is_finite()) {
    const auto fin = classify_finite(c);
    out.minors = fin.minors;
    if (fin.positive_definite) {
      if (fin.type) {
        out.result = Classification::Result::Classical;
        out.type = fin.type;
      } else {
        out.note = "positive definite but not a classical diagram";
      }
      return out;
    }
    out.null_vector = find_positive_null_vector(c);
    if (!out.null_vector) {
      out.note = "no positive null vector";
      return out;
    }
    out.type = match_affine(truncate(q, c.matrix.index().n));
    if (out.type) {
      out.result = Classification::Result::Affine;
    } else {
      out.note = "positive null vector found but no affine template matches";
    }
    return out;
  }
  out.null_vector = find_positive_null_vector(c);
  out.type = match_infinite(q);
  if (out.type && out.null_vector) {
    out.result = Classification::Result::Infinite;
  } else if (!out.null_vector) {
    out.type.reset();
    out.note = "no eventually-affine positive null vector";
  } else {
    out.note = "positive null vector found but no infinite template matches";
  }
  return out;
}

std::string to_dot(const PresentedMatrix& q, const std::string& name, std::size_t window) {
  const auto& idx = q.index();
  std::size_t n = 0;
  if (idx.is_finite()) {
    n = idx.n;
  } else {
    n = window ? window : (idx.kind == IndexSet::Kind::Int ? 7 : settled(q) + q.band() + 3);
  }
  const Index origin = truncate_origin(q, n);
  const DenseMatrix d = truncate(q, n);
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "  v" << i;
    if (idx.kind == IndexSet::Kind::Int) os << " [label=\"" << origin + as_index(i) << "\"]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d(i, j) != 0) os << "  v" << i << " -> v" << j << " [label=" << d(i, j) << "];\n";
    }
  }
  if (!idx.is_finite()) {
    os << "  more [label=\"...\", shape=plaintext];\n";
    os << "  v" << n - 1 << " -> more [style=dashed, dir=none];\n";
    if (idx.kind == IndexSet::Kind::Int) {
      os << "  less [label=\"...\", shape=plaintext];\n";
      os << "  less -> v0 [style=dashed, dir=none];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace sl2cat
