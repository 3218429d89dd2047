#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sll/examples.hpp"

namespace sll {

/// Malformed or inconsistent input document. `where` is a field path such as
/// "products[3][2][0]" or "line 4, column 7".
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses a JSON algebra document. With `field_override`, scalars are read in
/// that field instead of the document's own.
AlgebraDocument parse_document(const std::string& text, std::optional<Field> field_override = std::nullopt);
AlgebraDocument load_document(const std::string& path, std::optional<Field> field_override = std::nullopt);

/// Canonical form: sorted keys, canonical scalar strings, products sorted by (i, j), two-space indent.
std::string dump_document(const AlgebraDocument& doc);
void save_document(const AlgebraDocument& doc, const std::string& path);

/// Writes text to a file, throwing std::runtime_error on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace sll
