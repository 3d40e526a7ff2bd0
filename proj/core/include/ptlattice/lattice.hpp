#pragma once

#include <array>
#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptl {

// Subset of a ground index set 0..n-1.
using IndexSet = boost::dynamic_bitset<std::uint64_t>;

IndexSet make_index_set(std::size_t ground, const std::vector<std::size_t>& members);
std::vector<std::size_t> members_of(const IndexSet& s);
// Order used for lattice elements: size, then member lists lexicographically.
bool index_set_less(const IndexSet& a, const IndexSet& b);

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept;
};

class FiniteLattice {
 public:
  using ClosureFn = std::function<IndexSet(const IndexSet&)>;

  // Saturates {closure(empty)} and the closures of the generators under
  // x v y = closure(x | y). Throws ClosureNotIdempotent if a closed set is not fixed.
  static FiniteLattice generate_from_closure(std::size_t ground, const ClosureFn& closure,
                                             const std::vector<IndexSet>& generators);

  // A family closed under intersection with a largest member. Joins are
  // closure(x | y) when a closure is given, otherwise the least member above both.
  static FiniteLattice from_family(std::size_t ground, std::vector<IndexSet> elements,
                                   const ClosureFn& closure = nullptr);

  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] std::size_t ground_size() const noexcept { return ground_; }
  [[nodiscard]] const IndexSet& element(std::size_t i) const { return elements_.at(i); }
  [[nodiscard]] const std::vector<IndexSet>& elements() const noexcept { return elements_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const IndexSet& s) const;

  [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return elements_[i].is_subset_of(elements_[j]); }
  [[nodiscard]] std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  [[nodiscard]] std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  [[nodiscard]] std::size_t bottom() const noexcept { return 0; }
  [[nodiscard]] std::size_t top() const noexcept { return size() - 1; }

  [[nodiscard]] const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }
  [[nodiscard]] const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }

  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  FiniteLattice() = default;

  std::size_t ground_ = 0;
  std::vector<IndexSet> elements_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::string> labels_;
  std::vector<std::pair<IndexSet, std::size_t>> sorted_index_;  // for index_of
};

// Cover pairs (lower, upper), sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FiniteLattice& l);

struct DistributivityResult {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> witness;  // x, y, z with x^(yvz) != (x^y)v(x^z)
};
DistributivityResult is_distributive(const FiniteLattice& l);

struct KappaFailure {
  std::size_t element = 0;           // join-irreducible j (or meet-irreducible m)
  std::vector<std::size_t> set;      // {y : y^j = j_*} (or {y : yvm = m^*}), lacking a max (min)
};

struct SemidistributivityResult {
  bool join_semidistributive = true;
  bool meet_semidistributive = true;
  std::optional<std::array<std::size_t, 3>> join_witness;  // xvy = xvz != xv(y^z)
  std::optional<std::array<std::size_t, 3>> meet_witness;  // x^y = x^z != x^(yvz)
  std::vector<KappaFailure> meet_failures;  // per join-irreducible
  std::vector<KappaFailure> join_failures;  // per meet-irreducible
  [[nodiscard]] bool holds() const noexcept { return join_semidistributive && meet_semidistributive; }
};
SemidistributivityResult is_semidistributive(const FiniteLattice& l);

class Poset {
 public:
  Poset() = default;
  // Throws InvalidPoset unless leq is reflexive, antisymmetric and transitive.
  Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return leq_.at(i).at(j); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Cover pairs (lower, upper).
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

struct JoinIrreducibles {
  std::vector<std::size_t> elements;  // lattice indices, ascending
  Poset poset;                        // induced order, same numbering as elements
};
JoinIrreducibles join_irreducibles(const FiniteLattice& l);

// Down-sets ordered by inclusion; ground set = poset nodes.
FiniteLattice order_ideal_lattice(const Poset& p);

// Order isomorphism a -> b as a map of element indices, if any.
std::optional<std::vector<std::size_t>> lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

// Ground set of a followed by that of b; elements are pairs as disjoint unions.
FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b);

FiniteLattice chain_lattice(std::size_t n);  // n elements

}  // namespace ptl
