#pragma once

#include <string>
#include <string_view>

#include "latfree/equivalence.hpp"
#include "latfree/simplex.hpp"

namespace latfree {

/// Simplex document: {"dim": d, "vertices": [[...d integers...] x (d+1)]}.
/// Entries must be exact integers; floats are rejected. Throws
/// InvalidInputError with a descriptive message on any defect.
Simplex parse_simplex_json(std::string_view text);

/// Reads and parses a simplex document from a file.
Simplex read_simplex_file(const std::string& path);

/// Compact single-line document, integers only.
std::string to_json(const Simplex& s);

/// Canonical form document: {"dim": d, "hnf": [[...]]}.
std::string to_json(const CanonicalForm& form);

} // namespace latfree
