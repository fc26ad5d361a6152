#pragma once

// JSON form of presented matrices and vectors.
//
//   {"index": "nat" | "int" | {"finite": n},
//    "head": {"size": N, "entries": [[i, j, v], ...]},
//    "tail": {"band": w, "diagonals": {"-1": 1, "0": 0, "1": 1}}}
//
// Vectors: {"index": ..., "head": [..], "tail": {"a": 0, "b": 1}}; "index"
// defaults to "nat". Integers outside int64 are written as decimal strings.

#include "sl2cat/presented_matrix.hpp"

#include "json.hpp"

namespace sl2cat {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json index_to_json(const IndexSet& s);
IndexSet index_from_json(const Json& j);

Json matrix_to_json(const PresentedMatrix& m);
/// Throws std::invalid_argument on malformed input. A bare array of arrays
/// is read as a finite dense matrix.
PresentedMatrix matrix_from_json(const Json& j);

Json vector_to_json(const PresentedVector& v);
PresentedVector vector_from_json(const Json& j);

}  // namespace sl2cat
