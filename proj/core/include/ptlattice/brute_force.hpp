#pragma once

#include <cstddef>
#include <vector>

#include "ptlattice/representation.hpp"

namespace ptl {

struct BruteForceOptions {
  int prime = 2;
  std::size_t dim_bound = 3;  // per vertex
  std::size_t tuple_budget = std::size_t{1} << 22;  // matrix tuples per dimension vector
};

struct BruteForceStats {
  std::size_t max_total_dim = 0;
  std::size_t tuples = 0;
  std::size_t dimension_vectors = 0;
};

struct BruteForceResult {
  std::vector<Representation> modules;
  BruteForceStats stats;
};

// Indecomposables over GF(p) with every vertex dimension within the bound,
// one per isomorphism class, in order of discovery by total dimension.
//
// The search stops at the first total dimension L+1 with no indecomposable
// inside the box, then probes every dimension vector of total <= L+1 outside
// the box. Since indecomposables occur in all lengths below any occurring
// length, an empty probe means nothing was missed; otherwise DimBoundReached.
// Throws EndResidueTooLarge when an indecomposable is not absolutely
// indecomposable, SearchBudgetExceeded or EndTooLarge past the budgets.
BruteForceResult enumerate_brute_force(const AlgebraPtr& a, const BruteForceOptions& opts = {});

}  // namespace ptl
