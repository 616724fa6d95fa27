#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "removal/triangle.hpp"

namespace removal {

// Line-oriented instance format, little-endian base-p indices throughout:
//
//   fpn v1 p=<p> n=<n>
//   X: i1 i2 ...
//   Y: ...
//   Z: ...
//
// Matched-collection files share the header and carry one "T: x y z" line
// per triple.  Parse errors carry the 1-based line number.

using Instance = std::variant<TripleSystem, MatchedTriples>;

Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);

TripleSystem load_system(const std::string& path);
MatchedTriples load_matched(const std::string& path);

std::string format_system(const TripleSystem& sys);
std::string format_matched(const MatchedTriples& m);

void save_system(const TripleSystem& sys, const std::string& path);
void save_matched(const MatchedTriples& m, const std::string& path);

}  // namespace removal
