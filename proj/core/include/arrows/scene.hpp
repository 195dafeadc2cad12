#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "arrows/point.hpp"

namespace arrows {

// A named point set of one fixed dimension, as read from a scene file. Point
// names are nonempty strings over [A-Za-z0-9_]; every point has the scene's
// dimension.
struct Scene {
  std::size_t dim = 0;
  std::map<std::string, Point> points;

  friend bool operator==(const Scene& lhs, const Scene& rhs);
  friend bool operator!=(const Scene& lhs, const Scene& rhs) { return !(lhs == rhs); }
};

// Line-oriented scene text:
//   dim <n>                       (first meaningful line)
//   point <NAME> <q1> ... <qn>    (one per point, any order)
// '#' starts a comment running to end of line; blank lines are ignored.
// Errors: ParseError (with the offending line number in the message),
// DuplicateName, DimensionMismatch (wrong coordinate count).
Scene parse_scene(std::string_view text);

// Reads and parses a scene file; a missing/unreadable file is a ParseError.
Scene load_scene(const std::string& path);

// The inverse of parse_scene up to ordering: points are printed sorted by
// name, coordinates in canonical form. parse_scene(format_scene(s)) == s.
std::string format_scene(const Scene& scene);

}  // namespace arrows
