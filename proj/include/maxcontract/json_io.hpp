#pragma once

#include <string>

#include "maxcontract/superalgebra.hpp"

namespace maxcontract {

/// Renders the algebra as a schema-1 JSON document: sorted keys, canonical
/// scalar strings, two-space indentation, trailing newline.  Deterministic —
/// equal algebras produce byte-identical documents.
std::string to_json(const SuperAlgebra& alg);

/// Inverse of to_json.  Throws std::runtime_error describing the first
/// problem on malformed documents (wrong schema, unknown family, bad scalar
/// literal, out-of-range indices, grading inconsistent with the family).
SuperAlgebra from_json(const std::string& text);

void save_json(const SuperAlgebra& alg, const std::string& path);
SuperAlgebra load_json(const std::string& path);

} // namespace maxcontract
