#pragma once

#include <iosfwd>
#include <string>

#include "gridfrechet/core.hpp"

namespace gridfrechet {

// Text format: header "gw <d> <n>", then n lines of d space-separated decimal
// integers, LF endings. serialize is canonical (single spaces, trailing LF),
// so parse(serialize(w)) round-trips bit-exactly. Parse errors carry 1-based
// line numbers; vertex k lives on line k+2.
GridWalk read_walk(std::istream& in);
void write_walk(std::ostream& out, const GridWalk& walk);

GridWalk parse_walk(const std::string& text);
std::string serialize_walk(const GridWalk& walk);

// File variants prefix diagnostics with the path.
GridWalk read_walk_file(const std::string& path);
void write_walk_file(const std::string& path, const GridWalk& walk);

}  // namespace gridfrechet
