#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptl {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

// Arrow indices composed left to right: {a, b} is "a then b".
using Path = std::vector<std::size_t>;

class Quiver {
 public:
  std::size_t add_vertex(std::string label);
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);
  std::size_t add_arrow(std::string name, std::string_view source, std::string_view target);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t num_arrows() const noexcept { return arrows_.size(); }
  [[nodiscard]] const std::string& vertex_label(std::size_t v) const { return vertices_.at(v); }
  [[nodiscard]] const std::vector<std::string>& vertex_labels() const noexcept { return vertices_; }
  [[nodiscard]] const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] std::optional<std::size_t> find_vertex(std::string_view label) const;
  [[nodiscard]] std::optional<std::size_t> find_arrow(std::string_view name) const;
  [[nodiscard]] std::vector<std::size_t> arrows_out(std::size_t v) const;
  [[nodiscard]] std::vector<std::size_t> arrows_in(std::size_t v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// A path in the basis of kQ/I; trivial paths have no arrows and source == target.
struct BasisPath {
  std::size_t source = 0;
  std::size_t target = 0;
  Path arrows;

  friend auto operator<=>(const BasisPath&, const BasisPath&) = default;
};

// kQ/I for a monomial admissible ideal I, immutable once validated.
class BoundQuiverAlgebra {
 public:
  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const std::vector<Path>& relations() const noexcept { return relations_; }
  [[nodiscard]] const std::vector<BasisPath>& path_basis() const noexcept { return basis_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  [[nodiscard]] std::size_t num_vertices() const noexcept { return quiver_.num_vertices(); }
  [[nodiscard]] std::size_t num_arrows() const noexcept { return quiver_.num_arrows(); }
  [[nodiscard]] std::size_t max_relation_length() const noexcept;

  [[nodiscard]] bool is_composable(const Path& p) const;
  [[nodiscard]] bool contains_relation(const Path& p) const;
  // Composable and free of relation subpaths.
  [[nodiscard]] bool is_residue(const Path& p) const { return is_composable(p) && !contains_relation(p); }
  [[nodiscard]] bool is_relation(const Path& p) const;

  // Index into path_basis(), if the path is a residue path.
  [[nodiscard]] std::optional<std::size_t> basis_index(std::size_t source, const Path& p) const;
  [[nodiscard]] std::vector<std::size_t> basis_paths_from(std::size_t v) const;
  [[nodiscard]] std::vector<std::size_t> basis_paths_to(std::size_t v) const;
  [[nodiscard]] std::string path_name(const BasisPath& p) const;

 private:
  friend BoundQuiverAlgebra validate_admissible(const Quiver&, const std::vector<Path>&);

  Quiver quiver_;
  std::vector<Path> relations_;
  std::vector<BasisPath> basis_;
  std::map<std::pair<std::size_t, Path>, std::size_t> index_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

// Computes the path basis. Throws ArrowInIdeal, RelationNotAPath or NotAdmissible.
BoundQuiverAlgebra validate_admissible(const Quiver& q, const std::vector<Path>& relations);
BoundQuiverAlgebra validate_admissible(const Quiver& q, const std::vector<std::vector<std::string>>& relations);

AlgebraPtr make_algebra(const Quiver& q, const std::vector<Path>& relations);
AlgebraPtr make_algebra(const Quiver& q, const std::vector<std::vector<std::string>>& relations);

}  // namespace ptl
