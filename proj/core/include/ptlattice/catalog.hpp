#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptlattice/brute_force.hpp"
#include "ptlattice/representation.hpp"
#include "ptlattice/walk.hpp"

namespace ptl {

enum class CatalogMethod { Strings, BruteForce };

struct CatalogOptions {
  Field field = Field::rationals();  // used by the string method
  int prime = 2;                     // used by brute force when field is Q
  std::size_t dim_bound = 3;
  std::size_t tuple_budget = std::size_t{1} << 22;
};

// One module per isomorphism class of indecomposables, in a fixed order.
class IndecCatalog {
 public:
  IndecCatalog(AlgebraPtr a, Field f, CatalogMethod method, std::vector<Representation> modules,
               std::vector<StringWalk> strings = {});

  [[nodiscard]] const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  [[nodiscard]] const BoundQuiverAlgebra& algebra() const noexcept { return *algebra_; }
  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] CatalogMethod method() const noexcept { return method_; }
  [[nodiscard]] std::size_t size() const noexcept { return modules_.size(); }
  [[nodiscard]] const std::vector<Representation>& modules() const noexcept { return modules_; }
  [[nodiscard]] const Representation& operator[](std::size_t i) const { return modules_.at(i); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return modules_.at(i).label(); }
  // Empty for brute-force catalogs; otherwise aligned with modules().
  [[nodiscard]] const std::vector<StringWalk>& strings() const noexcept { return strings_; }

  [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;
  // Position of the module isomorphic to m, if m is one of the indecomposables.
  [[nodiscard]] std::optional<std::size_t> index_of(const Representation& m) const;

 private:
  AlgebraPtr algebra_;
  Field field_;
  CatalogMethod method_;
  std::vector<Representation> modules_;
  std::vector<StringWalk> strings_;
};

// Strings when the algebra is a string algebra (BandPresent if it has a band),
// brute force over GF(p) otherwise.
IndecCatalog build_catalog(const AlgebraPtr& a, const CatalogOptions& opts = {});

// Sort key: total dimension, then dimension vector in descending lex order.
bool catalog_order_less(const Representation& x, const Representation& y);

}  // namespace ptl
