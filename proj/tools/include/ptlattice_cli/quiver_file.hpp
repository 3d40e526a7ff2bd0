#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ptlattice/quiver.hpp"

namespace ptl::cli {

struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

struct QuiverFileOptions {
  std::string field = "q";  // "q" or "gf"
  int prime = 2;
  std::size_t dim_bound = 3;
};

// Parsed quiver file. Relations list arrow names in composition order:
// ["a", "b"] is the path that follows a and then b.
struct QuiverFile {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<std::string>> relations;
  QuiverFileOptions options;

  // Validated algebra; throws InvalidQuiver, ArrowInIdeal, NotAdmissible, ...
  [[nodiscard]] AlgebraPtr algebra() const;
};

// Subset of TOML: comments, strings, integers, booleans, arrays, inline
// tables and [table] headers. Errors are ParseError "origin:line:col: ...".
QuiverFile parse_quiver_file(std::string_view text, std::string_view origin = "<input>");
QuiverFile load_quiver_file(const std::string& path);

}  // namespace ptl::cli
