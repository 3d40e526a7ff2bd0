#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ptlattice/quiver.hpp"

namespace ptl {

// An arrow or its formal inverse. Direct letters sort before inverse ones.
struct Letter {
  std::size_t arrow = 0;
  bool inverse = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

std::size_t letter_source(const Quiver& q, Letter l);
std::size_t letter_target(const Quiver& q, Letter l);

// A walk in the quiver; trivial walks are the lazy paths e_v.
class StringWalk {
 public:
  StringWalk() = default;
  StringWalk(std::size_t start, std::vector<Letter> letters) : start_(start), letters_(std::move(letters)) {}
  static StringWalk trivial(std::size_t v) { return StringWalk(v, {}); }

  [[nodiscard]] std::size_t start() const noexcept { return start_; }
  [[nodiscard]] std::size_t end(const Quiver& q) const;
  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
  [[nodiscard]] bool is_trivial() const noexcept { return letters_.empty(); }
  // Vertices visited, one per position: length() + 1 entries.
  [[nodiscard]] std::vector<std::size_t> vertices(const Quiver& q) const;
  [[nodiscard]] StringWalk inverse(const Quiver& q) const;
  // Lexicographic minimum of the walk and its inverse.
  [[nodiscard]] StringWalk canonical(const Quiver& q) const;
  [[nodiscard]] std::string to_string(const Quiver& q) const;

  friend auto operator<=>(const StringWalk&, const StringWalk&) = default;

 private:
  std::size_t start_ = 0;
  std::vector<Letter> letters_;
};

// Whether appending l to a string that ends at `end` keeps it a string:
// composable, no a a^-1 / a^-1 a, no direct or inverse run containing a relation.
bool can_append(const BoundQuiverAlgebra& a, const std::vector<Letter>& letters, std::size_t end, Letter l);
bool is_string(const BoundQuiverAlgebra& a, const StringWalk& w);

}  // namespace ptl
