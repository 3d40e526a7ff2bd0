#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptlattice/quiver.hpp"
#include "ptlattice/walk.hpp"

namespace ptl {

struct StringAlgebraVerdict {
  bool holds = true;
  std::string violated_clause;  // "a" or "b" when holds is false
  std::string detail;
};

// One of the three forbidden local configurations for distributivity:
// (i) two entering arrows, (ii) three exiting arrows, (iii) one entering arrow
// alpha and two exiting beta, gamma with alpha beta and alpha gamma both outside I.
struct ForbiddenConfiguration {
  std::string kind;  // "i", "ii" or "iii"
  std::size_t vertex = 0;
  std::vector<std::size_t> arrows;
  std::string description;
};

struct DistributivityVerdict {
  bool holds = true;
  std::optional<ForbiddenConfiguration> witness;
};

struct LrdVerdict {
  bool holds = true;
  std::string reason;  // empty when holds
};

struct ClassificationReport {
  StringAlgebraVerdict string_algebra;
  std::optional<StringWalk> band;  // only searched for string algebras
  DistributivityVerdict distributive;
  LrdVerdict lrd;
  std::vector<BoundQuiverAlgebra> components;
};

StringAlgebraVerdict is_string_algebra(const BoundQuiverAlgebra& a);
// Shortest band up to rotation and inversion, canonically rotated. Throws NotStringAlgebra.
std::optional<StringWalk> find_band(const BoundQuiverAlgebra& a);
DistributivityVerdict distributivity_criterion(const BoundQuiverAlgebra& a);
LrdVerdict lrd_criterion(const BoundQuiverAlgebra& a);
std::vector<BoundQuiverAlgebra> connected_components(const BoundQuiverAlgebra& a);
ClassificationReport classify(const BoundQuiverAlgebra& a);

}  // namespace ptl
