#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ptlattice/catalog.hpp"
#include "ptlattice/lattice.hpp"
#include "ptlattice/pretorsion.hpp"
#include "ptlattice/representation.hpp"

namespace ptl::testing {

std::string fixture_path(std::string_view name);
std::string golden_path(std::string_view name);
AlgebraPtr fixture_algebra(std::string_view name);

// Fixtures whose catalog builds with the default options.
const std::vector<std::string>& finite_fixtures();
// Fixtures refused by the catalog builder (band or dimension bound).
const std::vector<std::string>& refused_fixtures();

// Algebras built in code.
AlgebraPtr algebra(const std::vector<std::string>& vertices,
                   const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                   const std::vector<std::vector<std::string>>& relations = {});

// Representation from integer matrices keyed by arrow name; missing arrows
// are zero. Entries are row-major with rows = dim(target).
Representation rep(const AlgebraPtr& a, const std::vector<std::size_t>& dims,
                   const std::map<std::string, std::vector<long long>>& maps, Field f = Field::rationals());

// Catalog, context and the three lattices of a finite fixture, built once.
struct FixtureData {
  AlgebraPtr algebra;
  std::unique_ptr<IndecCatalog> catalog;
  std::unique_ptr<PretorsionContext> ctx;
  std::unique_ptr<FiniteLattice> pretorsion;
  std::unique_ptr<FiniteLattice> pretorsionfree;
  std::unique_ptr<FiniteLattice> torsion;
};
const FixtureData& fixture_data(const std::string& name);

// Every element of Hom(m, n) over a prime field.
std::vector<Morphism> all_morphisms(const Representation& m, const Representation& n);

// Exhaustive search over GF(p): is n a quotient of a sum of at most
// total_dim(n) copies of modules in xs? Inputs over Q are read over GF(p).
bool epi_oracle(const std::vector<Representation>& xs, const Representation& n, int p = 2);
// Dually, does n embed in a sum of at most total_dim(n) copies of modules in ys?
bool mono_oracle(const std::vector<Representation>& ys, const Representation& n, int p = 2);

// Labels of the members of an index set, sorted.
std::vector<std::string> member_labels(const IndecCatalog& c, const IndexSet& s);

}  // namespace ptl::testing
