#include "sl2cat/matrix_json.hpp"

#include <stdexcept>

namespace sl2cat {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("matrix json: " + what); }

Index index_from(const Json& j) {
  if (!j.is_number_integer()) bad("index must be an integer");
  return j.get<Index>();
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (auto small = to_int64(v)) return Json(*small);
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    auto q = parse_rational(j.get<std::string>());
    if (!q || boost::multiprecision::denominator(*q) != 1) bad("not an integer: " + j.get<std::string>());
    return boost::multiprecision::numerator(*q);
  }
  bad("expected integer, got " + j.dump());
}

Json index_to_json(const IndexSet& s) {
  switch (s.kind) {
    case IndexSet::Kind::Nat: return "nat";
    case IndexSet::Kind::Int: return "int";
    case IndexSet::Kind::Finite: return Json{{"finite", s.n}};
  }
  return nullptr;
}

IndexSet index_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "nat") return IndexSet::nat();
    if (j == "int") return IndexSet::integers();
    bad("unknown index kind " + j.dump());
  }
  if (j.is_object() && j.size() == 1 && j.contains("finite") && j["finite"].is_number_unsigned()) {
    return IndexSet::finite(j["finite"].get<std::size_t>());
  }
  bad("index must be \"nat\", \"int\" or {\"finite\": n}");
}

Json matrix_to_json(const PresentedMatrix& m) {
  Json entries = Json::array();
  for (const auto& [ij, v] : m.head()) entries.push_back(Json::array({ij.first, ij.second, integer_to_json(v)}));
  Json diagonals = Json::object();
  for (const auto& [d, v] : m.diagonals()) diagonals[std::to_string(d)] = integer_to_json(v);
  Json out;
  out["index"] = index_to_json(m.index());
  out["head"] = Json{{"size", m.head_size()}, {"entries", entries}};
  out["tail"] = Json{{"band", m.band()}, {"diagonals", diagonals}};
  return out;
}

PresentedMatrix matrix_from_json(const Json& j) {
  if (j.is_array()) {
    const std::size_t n = j.size();
    if (n == 0) bad("empty dense matrix");
    DenseMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n) bad("dense matrix must be square");
      for (std::size_t k = 0; k < n; ++k) d(i, k) = integer_from_json(j[i][k]);
    }
    return PresentedMatrix::from_dense(d);
  }
  if (!j.is_object() || !j.contains("index")) bad("missing \"index\"");
  const IndexSet idx = index_from_json(j["index"]);
  std::size_t size = 0;
  PresentedMatrix::Entries entries;
  if (j.contains("head")) {
    const Json& h = j["head"];
    if (!h.is_object()) bad("\"head\" must be an object");
    if (h.contains("size")) {
      if (!h["size"].is_number_unsigned()) bad("head size must be a non-negative integer");
      size = h["size"].get<std::size_t>();
    }
    if (h.contains("entries")) {
      for (const auto& e : h["entries"]) {
        if (!e.is_array() || e.size() != 3) bad("head entries are [i, j, v] triples");
        auto key = std::make_pair(index_from(e[0]), index_from(e[1]));
        if (entries.count(key)) bad("duplicate head entry");
        entries[key] = integer_from_json(e[2]);
      }
    }
  }
  PresentedMatrix::Diagonals diagonals;
  if (j.contains("tail")) {
    const Json& t = j["tail"];
    if (!t.is_object()) bad("\"tail\" must be an object");
    std::size_t band = 0;
    bool has_band = t.contains("band");
    if (has_band) {
      if (!t["band"].is_number_unsigned()) bad("band must be a non-negative integer");
      band = t["band"].get<std::size_t>();
    }
    if (t.contains("diagonals")) {
      if (!t["diagonals"].is_object()) bad("diagonals must be an object");
      for (const auto& [key, val] : t["diagonals"].items()) {
        Index d = 0;
        try {
          std::size_t used = 0;
          d = std::stol(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          bad("diagonal key is not an integer: " + key);
        }
        if (has_band && static_cast<std::size_t>(d < 0 ? -d : d) > band) bad("diagonal " + key + " outside band");
        diagonals[d] = integer_from_json(val);
      }
    }
  }
  if (idx.is_finite() && size != 0 && size != idx.n) bad("finite head size must equal n");
  try {
    return PresentedMatrix(idx, size, std::move(entries), std::move(diagonals));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json vector_to_json(const PresentedVector& v) {
  Json head = Json::array();
  for (const auto& x : v.head()) head.push_back(integer_to_json(x));
  Json out;
  out["index"] = index_to_json(v.index());
  out["head"] = head;
  out["tail"] = Json{{"a", integer_to_json(v.a())}, {"b", integer_to_json(v.b())}};
  return out;
}

PresentedVector vector_from_json(const Json& j) {
  if (!j.is_object()) bad("vector must be an object");
  const IndexSet idx = j.contains("index") ? index_from_json(j["index"]) : IndexSet::nat();
  std::vector<Integer> head;
  if (j.contains("head")) {
    if (!j["head"].is_array()) bad("vector head must be an array");
    for (const auto& x : j["head"]) head.push_back(integer_from_json(x));
  }
  Integer a = 0, b = 0;
  if (j.contains("tail")) {
    const Json& t = j["tail"];
    if (t.contains("a")) a = integer_from_json(t["a"]);
    if (t.contains("b")) b = integer_from_json(t["b"]);
  }
  try {
    return PresentedVector(idx, std::move(head), a, b);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

}  // namespace sl2cat
