#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ptlattice/catalog.hpp"
#include "ptlattice/lattice.hpp"

namespace ptl {

// Module-theoretic data over a fixed catalog, cached per pair of indices.
// Subsets of the catalog stand for the additive closure of their members.
class PretorsionContext {
 public:
  explicit PretorsionContext(const IndecCatalog& c);

  [[nodiscard]] const IndecCatalog& catalog() const noexcept { return *catalog_; }
  [[nodiscard]] std::size_t size() const noexcept { return catalog_->size(); }
  [[nodiscard]] const Representation& module(std::size_t i) const { return (*catalog_)[i]; }
  [[nodiscard]] IndexSet empty_set() const { return IndexSet(size()); }
  [[nodiscard]] IndexSet full_set() const;
  [[nodiscard]] std::vector<Representation> modules_of(const IndexSet& s) const;

  [[nodiscard]] const HomSpace& hom(std::size_t i, std::size_t j) const;

  // trace of the members of s inside module j, and the reject of s in module j.
  [[nodiscard]] Submodule trace_in(const IndexSet& s, std::size_t j) const;
  [[nodiscard]] Submodule reject_in(const IndexSet& s, std::size_t j) const;

  // {i : trace(s, M_i) = M_i} and {i : reject(s, M_i) = 0}.
  [[nodiscard]] IndexSet gen_closure(const IndexSet& s) const;
  [[nodiscard]] IndexSet cogen_closure(const IndexSet& s) const;
  [[nodiscard]] bool in_gen(const IndexSet& s, const Representation& x) const;
  [[nodiscard]] bool in_cogen(const IndexSet& s, const Representation& x) const;

  // "0", "mod A" or "add(1, 1/2)".
  [[nodiscard]] std::string add_label(const IndexSet& s) const;

  // Morphisms m -> n factoring through a sum of members of z, in flattened coordinates.
  [[nodiscard]] const Subspace& z_trivial_subspace(std::size_t m, std::size_t n, const IndexSet& z) const;
  [[nodiscard]] Subspace z_trivial_subspace(const Representation& x, const Representation& y,
                                            const IndexSet& z) const;

 private:
  [[nodiscard]] const Submodule& trace_piece(std::size_t i, std::size_t j) const;
  [[nodiscard]] const Submodule& kernel_piece(std::size_t i, std::size_t j) const;

  const IndecCatalog* catalog_;
  mutable std::vector<std::optional<HomSpace>> hom_;
  mutable std::vector<std::optional<Submodule>> trace_;   // image of all maps M_i -> M_j
  mutable std::vector<std::optional<Submodule>> kernel_;  // common kernel of all maps M_j -> M_i
  mutable std::map<std::tuple<std::size_t, std::size_t, IndexSet>, Subspace> triv_;
};

FiniteLattice build_pretorsion_lattice(const PretorsionContext& ctx);
FiniteLattice build_pretorsionfree_lattice(const PretorsionContext& ctx);

struct ExtensionClosure {
  bool closed = true;
  // For a failure: catalog index of E outside the class and a submodule U
  // with U and E/U inside it.
  std::optional<std::size_t> extension;
  std::optional<Submodule> sub;
};

// Closed under extensions iff no indecomposable E outside t has E/trace(t, E) in t.
ExtensionClosure is_extension_closed(const PretorsionContext& ctx, const IndexSet& t);
// Dual test for a cogen-closed class: no E outside f has reject(f, E) in f.
ExtensionClosure is_extension_closed_free(const PretorsionContext& ctx, const IndexSet& f);

// Independent check by listing every submodule over GF(p) (rational catalogs
// are read over GF(2)). Throws SubmoduleEnumerationTooLarge past the budget.
ExtensionClosure is_extension_closed_by_enumeration(const PretorsionContext& ctx, const IndexSet& t,
                                                    std::size_t budget = std::size_t{1} << 16);

// Elements of the pretorsion lattice closed under extensions; joins are least upper bounds.
FiniteLattice build_torsion_lattice(const PretorsionContext& ctx, const FiniteLattice& pretorsion);

enum class TheoryRoute { Cond1, Cond3, FullCheck };
enum class TheoryGroup { FullSide, Classic, Cond1, Cond3, Full };
std::string route_name(TheoryRoute r);
std::string group_name(TheoryGroup g);

struct TheoryCandidate {
  IndexSet torsion;
  IndexSet free;
  [[nodiscard]] IndexSet trivial() const { return torsion & free; }
};

struct SequenceData {
  std::vector<std::size_t> torsion_dims;  // trace of the torsion class
  std::vector<std::size_t> free_dims;     // quotient by the reject of the free class
};

struct VerifiedPretorsionTheory {
  TheoryCandidate candidate;
  TheoryRoute route = TheoryRoute::FullCheck;
  TheoryGroup group = TheoryGroup::Full;
  std::vector<SequenceData> sequences;  // per catalog module
};

struct TheoryVerdict {
  bool accepted = false;
  std::string reason;  // why it was rejected
  std::optional<VerifiedPretorsionTheory> theory;
};

// Fast routes first, full definitional check as the last resort; with audit
// the full check always runs and must agree (InvariantBreach otherwise).
// Throws NotGenClosed / NotCogenClosed for malformed candidates.
TheoryVerdict is_pretorsion_theory(const PretorsionContext& ctx, const TheoryCandidate& cand, bool audit = false);

// Hom(T, F) is Z-trivial and, for each indecomposable M, trace(T, M) -> M ->
// M / reject(F, M) is Z-exact against every indecomposable test object.
// Additivity reduces both conditions to indecomposables.
bool full_pretorsion_check(const PretorsionContext& ctx, const TheoryCandidate& cand, std::string* reason = nullptr);

std::vector<VerifiedPretorsionTheory> enumerate_pretorsion_theories(const PretorsionContext& ctx,
                                                                     const FiniteLattice& pretorsion,
                                                                     const FiniteLattice& pretorsionfree,
                                                                     bool audit = false);

struct JoinIrreducibleReport {
  std::vector<IndexSet> pretorsion_ji;  // sets, in lattice order
  std::vector<IndexSet> torsion_ji;
  std::vector<IndexSet> gen_of_indecomposables;  // gen_closure({i}) per catalog index
  bool gen_bijection = false;  // Ji(L_t) is exactly {gen({i})}, pairwise distinct
  bool equal = false;          // Ji(L_t) == Ji(tors)
  bool all_bricks = false;
  bool lrd_criterion = false;
};
JoinIrreducibleReport join_irreducible_report(const PretorsionContext& ctx, const FiniteLattice& pretorsion,
                                              const FiniteLattice& torsion);

struct ClosureIdentification {
  bool identified = false;
  std::string failed_hypothesis;  // empty on success
  std::size_t pretorsion_size = 0;
  std::size_t closure_size = 0;   // |I(Ji(tors))|
  std::optional<std::vector<std::size_t>> phi;  // pretorsion index -> closure index
};
// T maps to the ideal {J in Ji(tors) : J contained in T} of I(Ji(tors)).
ClosureIdentification distributive_closure_identification(const PretorsionContext& ctx,
                                                          const FiniteLattice& pretorsion,
                                                          const FiniteLattice& torsion);

struct EpiRealization {
  Poset poset;            // catalog numbering; i <= j iff some epimorphism M_j -> M_i
  FiniteLattice ideals;   // I(E) over the catalog ground set
  bool same_elements = false;  // the down-sets are exactly the pretorsion classes
  std::optional<std::vector<std::size_t>> isomorphism;  // ideals -> pretorsion
};
// Throws HypothesisNotMet unless the pretorsion lattice is distributive,
// PreorderNotAntisymmetric if two modules are epimorphic images of each other.
EpiRealization epi_poset_realization(const PretorsionContext& ctx, const FiniteLattice& pretorsion);

}  // namespace ptl
