#pragma once

#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ptlattice/catalog.hpp"
#include "ptlattice/classify.hpp"
#include "ptlattice/pretorsion.hpp"
#include "ptlattice_cli/quiver_file.hpp"

namespace ptl::cli {

// Keys are sorted (std::map) so equal inputs serialize to identical bytes.
using Json = nlohmann::json;

Json classify_json(const QuiverFile& file, const BoundQuiverAlgebra& a, const ClassificationReport& r);
std::string classify_text(const Json& j);

Json catalog_json(const IndecCatalog& c);
std::string catalog_text(const Json& j);

struct LatticeView {
  std::string kind;
  const FiniteLattice* lattice = nullptr;
  std::vector<std::vector<std::string>> members;  // display labels per element
  std::vector<std::size_t> rank;                  // DOT rank per element
  std::vector<bool> framed;                       // dotted frame (classic class)
};

Json lattice_json(const std::string& algebra_name, const LatticeView& v);
std::string lattice_text(const Json& j);
// Undirected Hasse diagram drawn bottom to top, one rank per total dimension.
std::string lattice_dot(const std::string& algebra_name, const LatticeView& v);

Json theories_json(const std::string& algebra_name, const PretorsionContext& ctx,
                   const std::vector<VerifiedPretorsionTheory>& theories, std::size_t pairs_checked, bool audit);
std::string theories_text(const Json& j);

}  // namespace ptl::cli
