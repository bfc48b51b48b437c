#pragma once

#include <variant>
#include <vector>

#include "rmatrix/manin.hpp"
#include "rmatrix/sheaf.hpp"
#include "rmatrix/verify.hpp"

namespace rmatrix {

inline constexpr const char* kSchemaVersion = "rmatrix/1";

/// A serializable document: a schema version plus one payload.
struct Document {
  std::variant<Tensor2, Tensor3, SeriesTensor, MatTriple, std::vector<Verdict>> payload;

  std::string kind() const;
};

/// Canonical UTF-8 JSON: keys sorted, rationals as "p/q" (or "p"),
/// cyclotomics as {order, coeffs}, exponent vectors as integer lists.
/// Identical values always serialize to identical bytes.
std::string serialize(const Document& doc);

/// Strict parser: rejects schema mismatches, unknown keys, and any
/// non-canonical scalar spelling.
Document parse_document(const std::string& text);

}  // namespace rmatrix
