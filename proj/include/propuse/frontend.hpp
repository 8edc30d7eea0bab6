#ifndef PROPUSE_FRONTEND_HPP
#define PROPUSE_FRONTEND_HPP

#include <string>
#include <string_view>

#include "propuse/corpus.hpp"

namespace propuse {

// Parses corpus text into a validated Library. Throws ParseError on syntax
// errors and ValidationFailed when the parsed library violates invariants.
Library parse_library(std::string_view text);

// Reads and parses a corpus file; throws Error when the file cannot be read.
Library load_library(const std::string& path);

// Canonical text: constants, constructors, and attachments sorted; items in
// library order. parse_library(serialize_library(lib)) == lib structurally.
std::string serialize_library(const Library& lib);

}  // namespace propuse

#endif
