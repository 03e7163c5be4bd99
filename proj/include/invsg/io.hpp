#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "invsg/semigroup.hpp"

namespace invsg {

// Cayley JSON: {"name", "size", "table": [[...]], "star": [...],
// "identity"?, "zero"?}. Readers run the full from_cayley validation.
InvolutorySemigroup parse_cayley_json(const std::string& text);
InvolutorySemigroup read_cayley_json(std::istream& in);
// Throws Io when the file cannot be opened.
InvolutorySemigroup load_cayley_json(const std::filesystem::path& path);

std::string to_cayley_json(const InvolutorySemigroup& s);
void save_cayley_json(const InvolutorySemigroup& s, const std::filesystem::path& path);

}  // namespace invsg
