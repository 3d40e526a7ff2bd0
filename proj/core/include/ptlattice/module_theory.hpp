#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptlattice/representation.hpp"

namespace ptl {

struct RadicalTop {
  Submodule radical;
  std::vector<std::size_t> top_dims;
  bool unique_max = false;  // total top dimension is 1
};

RadicalTop radical_top(const Representation& m);
// Dimension vectors of rad^k M / rad^(k+1) M for k = 0, 1, ...
std::vector<std::vector<std::size_t>> radical_layers(const Representation& m);
// Stacked-digit name such as "1 3/2": composition factors of each radical layer.
std::string layer_label(const Representation& m);

std::size_t endomorphism_dim(const Representation& m);
bool is_brick(const Representation& m);

using MorphismPredicate = std::function<bool(const Morphism&)>;

// Looks for a combination of the basis satisfying a Zariski-open predicate whose
// failure locus has degree at most `degree`. Over GF(p) all combinations are
// tried. Over Q the grid {0..degree}^dim is exhaustive for such predicates
// (a nonzero polynomial of that degree cannot vanish on it); a few
// pseudo-random points are tried first. Throws IsoUndecided past the budget.
std::optional<Morphism> find_generic_combination(const std::vector<Morphism>& basis, Field f, std::size_t degree,
                                                 const MorphismPredicate& pred);

bool is_isomorphic(const Representation& m, const Representation& n);
// A single surjective morphism n -> m, if one exists.
std::optional<Morphism> find_epimorphism(const Representation& n, const Representation& m);
// A single injective morphism m -> n, if one exists.
std::optional<Morphism> find_monomorphism(const Representation& m, const Representation& n);

// Krull-Schmidt decomposition over GF(p) by splitting along Fitting
// decompositions of non-nilpotent non-invertible endomorphisms.
std::vector<Representation> decompose(const Representation& m);
inline constexpr std::size_t kMaxEndDimForDecompose = 12;

Representation simple_module(const AlgebraPtr& a, Field f, std::size_t v);
// P_v: paths starting at v, arrows acting by appending.
Representation projective_module(const AlgebraPtr& a, Field f, std::size_t v);
// I_v: dual of the paths ending at v.
Representation injective_module(const AlgebraPtr& a, Field f, std::size_t v);

struct SimplesAndProjectives {
  std::vector<Representation> simples;
  std::vector<Representation> projectives;
};
SimplesAndProjectives simples_and_projectives(const AlgebraPtr& a, Field f);

// Auslander-Reiten translate as the kernel of the Nakayama functor applied to
// a minimal projective presentation. Zero for projective modules.
Representation ar_translate(const Representation& m);
bool is_tau_rigid(const Representation& m);

}  // namespace ptl
