#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halpart/core.hpp"

namespace halpart {

/// The text form of a mapping:
///
///     # comment
///     X: 1 2 3
///     Y: 1 2 3
///     1 : 1 2
///     2 : 1 2
///     3 : 1 2 3
///
/// The X: and Y: headers are optional. An element with an empty image is
/// written `x :`.
struct MappingDocument {
    std::optional<std::vector<std::string>> x_elements;
    std::optional<std::vector<std::string>> y_elements;
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;

    friend bool operator==(const MappingDocument&, const MappingDocument&) = default;
};

/// Throws ParseError with a line number on malformed input or duplicates.
[[nodiscard]] MappingDocument parse_mapping_document(std::string_view text);

/// Canonical text form; parse_mapping_document inverts it.
[[nodiscard]] std::string serialize(const MappingDocument& doc);

/// Resolves a document into a mapping. Without an X: header, X is the row
/// order; without a Y: header, Y is the order of first appearance. Declared
/// elements without a row get an empty image. Throws ParseError when rows
/// reference undeclared elements.
[[nodiscard]] FiniteMapping to_mapping(const MappingDocument& doc);

/// A fully declared document describing `f`.
[[nodiscard]] MappingDocument to_document(const FiniteMapping& f);

} // namespace halpart
