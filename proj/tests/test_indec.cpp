#include <gtest/gtest.h>

#include "ptlattice/brute_force.hpp"
#include "ptlattice/catalog.hpp"
#include "ptlattice/error.hpp"
#include "ptlattice/module_theory.hpp"
#include "ptlattice/pretorsion.hpp"
#include "ptlattice/strings.hpp"
#include "test_support.hpp"

using namespace ptl;
using ptl::testing::fixture_algebra;
using ptl::testing::fixture_data;

namespace {

const Field Q = Field::rationals();

std::vector<std::string> labels(const IndecCatalog& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.label(i));
  return out;
}

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvariantBreach;
}

}  // namespace

TEST(Strings, Counts) {
  EXPECT_EQ(enumerate_strings(*fixture_algebra("a2")).size(), 3u);
  EXPECT_EQ(enumerate_strings(*fixture_algebra("a3-sink")).size(), 6u);
  EXPECT_EQ(enumerate_strings(*fixture_algebra("loop-eps2")).size(), 2u);
  EXPECT_EQ(enumerate_strings(*fixture_algebra("loop-plus-arrow")).size(), 7u);
  EXPECT_EQ(error_of([] { enumerate_strings(*fixture_algebra("kronecker")); }), Errc::BandPresent);
  EXPECT_EQ(error_of([] { enumerate_strings(*fixture_algebra("d4-subspace")); }), Errc::NotStringAlgebra);
}

TEST(Strings, ToModule) {
  const auto a2 = fixture_algebra("a2");
  const auto trivial = string_to_module(a2, Q, StringWalk::trivial(0));
  EXPECT_TRUE(is_isomorphic(trivial, simple_module(a2, Q, 0)));
  const auto arrow = string_to_module(a2, Q, StringWalk(0, {Letter{0, false}}));
  EXPECT_EQ(arrow.dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(is_isomorphic(arrow, projective_module(a2, Q, 0)));
  const auto sink = fixture_algebra("a3-sink");
  const auto m = string_to_module(sink, Q, StringWalk(0, {Letter{0, false}, Letter{1, true}}));
  EXPECT_EQ(m.dims(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(layer_label(m), "1 3/2");
}

TEST(BruteForce, D4SubspaceHasTwelve) {
  const auto r = enumerate_brute_force(fixture_algebra("d4-subspace"), {2, 2});
  EXPECT_EQ(r.modules.size(), 12u);
  EXPECT_EQ(r.stats.max_total_dim, 5u);
}

TEST(BruteForce, D4OtherOrientationHasTwelve) {
  EXPECT_EQ(enumerate_brute_force(fixture_algebra("d4-source")).modules.size(), 12u);
}

TEST(BruteForce, A2WithUnitBound) {
  EXPECT_EQ(enumerate_brute_force(fixture_algebra("a2"), {2, 1}).modules.size(), 3u);
}

TEST(BruteForce, InfiniteTypeHitsBound) {
  EXPECT_EQ(error_of([] { enumerate_brute_force(fixture_algebra("kronecker"), {2, 1}); }), Errc::DimBoundReached);
  EXPECT_EQ(error_of([] { enumerate_brute_force(fixture_algebra("kronecker")); }), Errc::DimBoundReached);
  EXPECT_EQ(error_of([] { enumerate_brute_force(fixture_algebra("two-loops")); }), Errc::DimBoundReached);
}

TEST(BruteForce, OtherPrime) {
  EXPECT_EQ(enumerate_brute_force(fixture_algebra("a3-sink"), {3, 3}).modules.size(), 6u);
  EXPECT_EQ(enumerate_brute_force(fixture_algebra("loop-plus-arrow"), {3, 3}).modules.size(), 7u);
}

TEST(BruteForce, BudgetRefusal) {
  BruteForceOptions opts;
  opts.tuple_budget = 4;
  EXPECT_EQ(error_of([&] { enumerate_brute_force(fixture_algebra("d4-subspace"), opts); }),
            Errc::SearchBudgetExceeded);
}

TEST(Catalog, A3Linear) {
  const auto c = build_catalog(fixture_algebra("a3-linear"));
  EXPECT_EQ(c.method(), CatalogMethod::Strings);
  EXPECT_EQ(labels(c), (std::vector<std::string>{"1", "2", "3", "1/2", "2/3", "1/2/3"}));
}

TEST(Catalog, SmallCases) {
  EXPECT_EQ(build_catalog(fixture_algebra("a2")).size(), 3u);
  EXPECT_EQ(build_catalog(fixture_algebra("loop-eps2")).size(), 2u);
  const auto d4 = build_catalog(fixture_algebra("d4-subspace"));
  EXPECT_EQ(d4.method(), CatalogMethod::BruteForce);
  EXPECT_EQ(d4.size(), 12u);
  EXPECT_TRUE(d4.find("4 4/1 2 3").has_value());
  EXPECT_EQ(error_of([] { build_catalog(fixture_algebra("kronecker")); }), Errc::BandPresent);
}

TEST(Catalog, OrderIsTotalDimThenDescendingDims) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& c = *fixture_data(name).catalog;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_FALSE(catalog_order_less(c[i + 1], c[i])) << name;
  }
}

TEST(Catalog, LookupByLabelStringAndModule) {
  const auto& c = *fixture_data("a2").catalog;
  EXPECT_EQ(c.find("1/2"), std::optional<std::size_t>(2));
  EXPECT_EQ(c.find("a"), std::optional<std::size_t>(2));
  EXPECT_FALSE(c.find("3").has_value());
  EXPECT_EQ(c.index_of(projective_module(c.algebra_ptr(), Q, 0)), std::optional<std::size_t>(2));
}

TEST(CatalogProperty, StringAndBruteForceAgree) {
  for (const char* name : {"a2", "a3-linear", "a3-sink", "a3-source", "loop-eps2", "loop-eps3", "loop-plus-arrow",
                           "twocycle-rad", "d4-source-rel", "a1-a2", "single-vertex-no-loop"}) {
    const auto a = fixture_algebra(name);
    const auto strings = build_catalog(a);
    ASSERT_EQ(strings.method(), CatalogMethod::Strings) << name;
    const auto brute = enumerate_brute_force(a);
    ASSERT_EQ(brute.modules.size(), strings.size()) << name;
    const Field f = Field::prime(2);
    std::vector<bool> used(brute.modules.size(), false);
    for (const auto& m : strings.modules()) {
      const auto mf = m.over_field(f);
      bool matched = false;
      for (std::size_t j = 0; j < brute.modules.size() && !matched; ++j) {
        if (!used[j] && is_isomorphic(mf, brute.modules[j])) used[j] = matched = true;
      }
      EXPECT_TRUE(matched) << name << " " << m.label();
    }
  }
}

TEST(CatalogProperty, ModulesAreIndecomposable) {
  const Field f = Field::prime(2);
  for (const auto& name : ptl::testing::finite_fixtures()) {
    for (const auto& m : fixture_data(name).catalog->modules()) {
      const auto mf = m.field() == f ? m : m.over_field(f);
      EXPECT_EQ(decompose(mf).size(), 1u) << name << " " << m.label();
    }
  }
}

TEST(CatalogProperty, PairwiseNonIsomorphic) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& c = *fixture_data(name).catalog;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(is_isomorphic(c[i], c[j])) << name;
  }
}

TEST(CatalogProperty, GenClosuresAreDistinct) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    std::vector<IndexSet> gens;
    for (std::size_t i = 0; i < d.catalog->size(); ++i) {
      gens.push_back(d.ctx->gen_closure(make_index_set(d.catalog->size(), {i})));
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) EXPECT_NE(gens[i], gens[j]) << name;
  }
}
