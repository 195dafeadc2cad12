#include "arrows/scene.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "arrows/error.hpp"
#include "arrows/rational.hpp"

namespace arrows {

bool operator==(const Scene& lhs, const Scene& rhs) {
  if (lhs.dim != rhs.dim) return false;
  if (lhs.points.size() != rhs.points.size()) return false;
  auto it = rhs.points.begin();
  for (const auto& [name, point] : lhs.points) {
    if (it->first != name || it->second != point) return false;
    ++it;
  }
  return true;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  // Comments run to end of line; tokens are whitespace-separated.
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::istringstream stream{std::string(line)};
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string at_line(std::size_t lineno, const std::string& what) {
  return "line " + std::to_string(lineno) + ": " + what;
}

}  // namespace

Scene parse_scene(std::string_view text) {
  Scene scene;
  bool have_dim = false;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view line =
        text.substr(start, end == std::string_view::npos ? text.size() - start
                                                         : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++lineno;

    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_dim) {
      if (tokens[0] != "dim") {
        raise(ErrorCode::ParseError,
              at_line(lineno, "expected 'dim <n>' header"));
      }
      if (tokens.size() != 2) {
        raise(ErrorCode::ParseError, at_line(lineno, "expected 'dim <n>'"));
      }
      std::size_t value = 0;
      for (char c : tokens[1]) {
        if (c < '0' || c > '9') {
          raise(ErrorCode::ParseError,
                at_line(lineno, "bad dimension '" + tokens[1] + "'"));
        }
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > 64) {
          raise(ErrorCode::ParseError,
                at_line(lineno, "dimension out of range"));
        }
      }
      if (value == 0) {
        raise(ErrorCode::ParseError,
              at_line(lineno, "dimension must be at least 1"));
      }
      scene.dim = value;
      have_dim = true;
      continue;
    }

    if (tokens[0] == "dim") {
      raise(ErrorCode::ParseError, at_line(lineno, "duplicate dim header"));
    }
    if (tokens[0] != "point") {
      raise(ErrorCode::ParseError,
            at_line(lineno, "unknown directive '" + tokens[0] + "'"));
    }
    if (tokens.size() < 2 || !valid_name(tokens[1])) {
      raise(ErrorCode::ParseError,
            at_line(lineno, "expected 'point <NAME> <coordinates>'"));
    }
    const std::string& name = tokens[1];
    if (scene.points.contains(name)) {
      raise(ErrorCode::DuplicateName,
            at_line(lineno, "duplicate point '" + name + "'"));
    }
    const std::size_t given = tokens.size() - 2;
    if (given != scene.dim) {
      raise(ErrorCode::DimensionMismatch,
            at_line(lineno, "point '" + name + "' has " +
                                std::to_string(given) + " coordinate" +
                                (given == 1 ? "" : "s") + ", scene dimension is " +
                                std::to_string(scene.dim)));
    }
    std::vector<Rational> coords;
    coords.reserve(scene.dim);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      try {
        coords.push_back(Rational::parse(tokens[i]));
      } catch (const Error& e) {
        raise(ErrorCode::ParseError, at_line(lineno, e.what()));
      }
    }
    scene.points.emplace(name, Point(std::move(coords)));
  }
  if (!have_dim) {
    raise(ErrorCode::ParseError, "line 1: missing dim header");
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    raise(ErrorCode::ParseError, "cannot open scene file '" + path + "'");
  }
  std::ostringstream contents;
  contents << file.rdbuf();
  return parse_scene(contents.str());
}

std::string format_scene(const Scene& scene) {
  std::ostringstream os;
  os << "dim " << scene.dim << '\n';
  for (const auto& [name, point] : scene.points) {
    os << "point " << name;
    for (const Rational& c : point.coords()) {
      os << ' ' << c;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace arrows
