#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ptlattice/linalg.hpp"
#include "ptlattice/quiver.hpp"

namespace ptl {

// A finite-dimensional right module given as a quiver representation. The
// matrix of arrow a: s -> t has dim(t) rows and dim(s) columns.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr a, Field f, std::vector<std::size_t> dims, std::vector<Matrix> maps, std::string label = {});
  static Representation zero(AlgebraPtr a, Field f);

  [[nodiscard]] const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  [[nodiscard]] const BoundQuiverAlgebra& algebra() const noexcept { return *algebra_; }
  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  [[nodiscard]] std::size_t dim(std::size_t v) const { return dims_.at(v); }
  [[nodiscard]] std::size_t total_dim() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return total_dim() == 0; }
  [[nodiscard]] const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  [[nodiscard]] const std::vector<Matrix>& maps() const noexcept { return maps_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Matrix of the path p = a1 then a2 ...: M(a_k) * ... * M(a_1).
  [[nodiscard]] Matrix path_map(std::size_t source, const Path& p) const;
  // Same entries read in another field (rationals must be integral to go to GF(p)).
  [[nodiscard]] Representation over_field(Field f) const;

 private:
  AlgebraPtr algebra_;
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  std::string label_;
};

// Vertex-indexed family of matrices; component v has dim N_v rows, dim M_v columns.
struct Morphism {
  std::vector<Matrix> components;

  [[nodiscard]] bool is_zero() const;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Scalar& s);
Morphism zero_morphism(const Representation& m, const Representation& n);
Morphism identity_morphism(const Representation& m);
bool is_morphism(const Morphism& f, const Representation& m, const Representation& n);
// Concatenated row-major entries of all components, and its inverse.
Vector flatten(const Morphism& f);
Morphism unflatten(const Vector& v, const Representation& m, const Representation& n);
Morphism linear_combination(const std::vector<Morphism>& basis, const Vector& coeffs);

struct HomSpace {
  Representation source;
  Representation target;
  std::vector<Morphism> basis;

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
  // Span of the basis inside the flattened morphism coordinates.
  [[nodiscard]] Subspace as_subspace() const;
};

HomSpace hom_space(const Representation& m, const Representation& n);

class Submodule {
 public:
  Submodule() = default;
  Submodule(Representation parent, std::vector<Subspace> spaces);  // validates arrow stability
  static Submodule zero(const Representation& parent);
  static Submodule full(const Representation& parent);

  [[nodiscard]] const Representation& parent() const noexcept { return parent_; }
  [[nodiscard]] const std::vector<Subspace>& spaces() const noexcept { return spaces_; }
  [[nodiscard]] const Subspace& space(std::size_t v) const { return spaces_.at(v); }
  [[nodiscard]] std::vector<std::size_t> dims() const;
  [[nodiscard]] std::size_t total_dim() const;
  [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
  [[nodiscard]] bool is_full() const { return total_dim() == parent_.total_dim(); }
  [[nodiscard]] bool contains(const Submodule& o) const;
  [[nodiscard]] Submodule sum(const Submodule& o) const;
  [[nodiscard]] Submodule intersect(const Submodule& o) const;

  friend bool operator==(const Submodule& a, const Submodule& b) { return a.spaces_ == b.spaces_; }

 private:
  Representation parent_;
  std::vector<Subspace> spaces_;
};

Submodule image(const Morphism& f, const Representation& target);
Submodule kernel(const Morphism& f, const Representation& source);
// Sum of images of all basis morphisms of the given hom spaces into their common target.
Submodule sum_of_images(const Representation& n, const std::vector<const HomSpace*>& homs);
// Intersection of kernels of all basis morphisms out of their common source.
Submodule common_kernel(const Representation& n, const std::vector<const HomSpace*>& homs);

Submodule trace(const std::vector<Representation>& generators, const Representation& n);
Submodule reject(const std::vector<Representation>& cogenerators, const Representation& n);

struct Quotient {
  Representation module;
  Morphism projection;
};
// Complements are spanned by the non-pivot unit vectors of each echelon basis.
Quotient quotient_by(const Representation& n, const Submodule& s);

struct Inclusion {
  Representation module;
  Morphism inclusion;
};
// The submodule as a representation in its echelon bases.
Inclusion submodule_as_module(const Submodule& s);

Representation direct_sum(const std::vector<Representation>& parts);

}  // namespace ptl
