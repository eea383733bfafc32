#pragma once

// JSON code files:
//   {"codewords": [[...], ...], "generators": [g | null, ...], "length": L, "weight": w}
// Keys are sorted, codewords are in canonical (lexicographic) order and
// "generators" is present only when at least one codeword carries a tag.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cackit/cac.hpp"

namespace cackit {

/// Malformed or structurally invalid code file.
class CodeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] std::string to_json(const Cac& code, int indent = -1);
[[nodiscard]] Cac cac_from_json(std::string_view text);

[[nodiscard]] Cac read_cac_file(const std::filesystem::path& path);
void write_cac_file(const Cac& code, const std::filesystem::path& path);

}  // namespace cackit
