#include <gtest/gtest.h>

#include "ptlattice/classify.hpp"
#include "ptlattice/error.hpp"
#include "ptlattice/module_theory.hpp"
#include "ptlattice/pretorsion.hpp"
#include "test_support.hpp"

using namespace ptl;
using ptl::testing::fixture_data;
using ptl::testing::member_labels;

namespace {

using Labels = std::vector<std::string>;

IndexSet set_of(const IndecCatalog& c, const Labels& labels) {
  IndexSet s(c.size());
  for (const auto& l : labels) s.set(*c.find(l));
  return s;
}

Labels sorted(Labels l) {
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace

TEST(GenClosure, Examples) {
  const auto& a2 = fixture_data("a2");
  EXPECT_EQ(member_labels(*a2.catalog, a2.ctx->gen_closure(set_of(*a2.catalog, {"1/2"}))), sorted({"1", "1/2"}));
  const auto& a3 = fixture_data("a3-linear");
  EXPECT_EQ(member_labels(*a3.catalog, a3.ctx->gen_closure(set_of(*a3.catalog, {"1/2/3"}))),
            sorted({"1/2/3", "1/2", "1"}));
  EXPECT_EQ(a2.ctx->gen_closure(a2.ctx->empty_set()), a2.ctx->empty_set());
}

TEST(CogenClosure, Examples) {
  const auto& a2 = fixture_data("a2");
  EXPECT_EQ(member_labels(*a2.catalog, a2.ctx->cogen_closure(set_of(*a2.catalog, {"1/2"}))), sorted({"2", "1/2"}));
  EXPECT_EQ(member_labels(*a2.catalog, a2.ctx->cogen_closure(set_of(*a2.catalog, {"1"}))), Labels{"1"});
}

TEST(PretorsionLattice, Sizes) {
  EXPECT_EQ(fixture_data("a2").pretorsion->size(), 6u);
  for (const char* f : {"a3-linear", "a3-sink", "a3-source"}) EXPECT_EQ(fixture_data(f).pretorsion->size(), 24u) << f;
  const auto& loop = fixture_data("loop-eps2");
  EXPECT_TRUE(lattice_isomorphic(*loop.pretorsion, chain_lattice(3)).has_value());
  EXPECT_EQ(loop.pretorsion->labels(), (Labels{"0", "add(1)", "mod A"}));
}

TEST(PretorsionFreeLattice, Sizes) {
  const auto& a2 = fixture_data("a2");
  EXPECT_EQ(a2.pretorsionfree->size(), 6u);
  EXPECT_EQ(join_irreducibles(*a2.pretorsionfree).elements.size(), 3u);
  EXPECT_TRUE(lattice_isomorphic(*fixture_data("single-vertex-no-loop").pretorsionfree, chain_lattice(2)).has_value());
}

TEST(ExtensionClosure, Examples) {
  const auto& a2 = fixture_data("a2");
  const auto r = is_extension_closed(*a2.ctx, set_of(*a2.catalog, {"1", "2"}));
  EXPECT_FALSE(r.closed);
  ASSERT_TRUE(r.extension.has_value());
  EXPECT_EQ(a2.catalog->label(*r.extension), "1/2");
  EXPECT_TRUE(is_extension_closed(*a2.ctx, a2.ctx->full_set()).closed);
}

TEST(TorsionLattice, Sizes) {
  const auto& loop = fixture_data("loop-eps2");
  EXPECT_EQ(loop.torsion->labels(), (Labels{"0", "mod A"}));
  EXPECT_EQ(fixture_data("a2").torsion->size(), 5u);
  for (const char* f : {"a3-linear", "a3-sink", "a3-source"}) EXPECT_EQ(fixture_data(f).torsion->size(), 14u) << f;
  EXPECT_EQ(fixture_data("d4-subspace").torsion->size(), 50u);
}

TEST(ZTrivial, Extremes) {
  const auto& d = fixture_data("a3-linear");
  const auto& ctx = *d.ctx;
  for (std::size_t m = 0; m < ctx.size(); ++m) {
    for (std::size_t n = 0; n < ctx.size(); ++n) {
      EXPECT_EQ(ctx.z_trivial_subspace(m, n, ctx.full_set()).dim(), ctx.hom(m, n).dim());
      EXPECT_EQ(ctx.z_trivial_subspace(m, n, ctx.empty_set()).dim(), 0u);
    }
  }
  // 1/2/3 -> 1 factors through 1 and through 1/2, not through 2 or 3.
  const std::size_t p = *d.catalog->find("1/2/3");
  const std::size_t s = *d.catalog->find("1");
  EXPECT_EQ(ctx.z_trivial_subspace(p, s, set_of(*d.catalog, {"2", "3"})).dim(), 0u);
  EXPECT_EQ(ctx.z_trivial_subspace(p, s, set_of(*d.catalog, {"1/2"})).dim(), 1u);
}

TEST(Theory, Examples) {
  const auto& a2 = fixture_data("a2");
  const auto& c = *a2.catalog;
  const auto cond1 = is_pretorsion_theory(*a2.ctx, {set_of(c, {"1", "1/2"}), set_of(c, {"2", "1/2"})});
  ASSERT_TRUE(cond1.accepted);
  EXPECT_EQ(cond1.theory->route, TheoryRoute::Cond1);
  const auto bad = is_pretorsion_theory(*a2.ctx, {set_of(c, {"1"}), set_of(c, {"1"})});
  EXPECT_FALSE(bad.accepted);
  EXPECT_FALSE(bad.reason.empty());
  for (std::size_t i = 0; i < a2.pretorsion->size(); ++i) {
    const auto v = is_pretorsion_theory(*a2.ctx, {a2.pretorsion->element(i), a2.ctx->full_set()});
    ASSERT_TRUE(v.accepted);
    EXPECT_EQ(v.theory->route, TheoryRoute::Cond3);
  }
  EXPECT_THROW(is_pretorsion_theory(*a2.ctx, {set_of(c, {"1/2"}), a2.ctx->full_set()}), Error);
}

TEST(Theory, A2Census) {
  const auto& a2 = fixture_data("a2");
  const auto theories = enumerate_pretorsion_theories(*a2.ctx, *a2.pretorsion, *a2.pretorsionfree, true);
  EXPECT_EQ(theories.size(), 17u);
  std::map<TheoryGroup, int> groups;
  for (const auto& t : theories) ++groups[t.group];
  EXPECT_EQ(groups[TheoryGroup::FullSide], 11);
  EXPECT_EQ(groups[TheoryGroup::Classic], 3);
  EXPECT_EQ(groups[TheoryGroup::Cond1], 1);
  EXPECT_EQ(groups[TheoryGroup::Cond3], 2);
}

TEST(Theory, SingleVertex) {
  const auto& d = fixture_data("single-vertex-no-loop");
  EXPECT_EQ(enumerate_pretorsion_theories(*d.ctx, *d.pretorsion, *d.pretorsionfree, true).size(), 3u);
}

TEST(Theory, LoopCountMatchesFullChecker) {
  const auto& d = fixture_data("loop-eps2");
  std::size_t by_full_check = 0;
  for (const auto& t : d.pretorsion->elements())
    for (const auto& f : d.pretorsionfree->elements()) by_full_check += full_pretorsion_check(*d.ctx, {t, f});
  EXPECT_EQ(enumerate_pretorsion_theories(*d.ctx, *d.pretorsion, *d.pretorsionfree).size(), by_full_check);
  EXPECT_EQ(by_full_check, 5u);
}

TEST(Theory, A3SinkCountMatchesFullChecker) {
  const auto& d = fixture_data("a3-sink");
  std::size_t by_full_check = 0;
  for (const auto& t : d.pretorsion->elements())
    for (const auto& f : d.pretorsionfree->elements()) by_full_check += full_pretorsion_check(*d.ctx, {t, f});
  const auto fast = enumerate_pretorsion_theories(*d.ctx, *d.pretorsion, *d.pretorsionfree, false);
  EXPECT_EQ(fast.size(), by_full_check);
  EXPECT_EQ(by_full_check, 163u);
}

TEST(TheoryProperty, FullSideBaselineAndAudit) {
  for (const char* name : {"a2", "a3-linear", "loop-eps2", "twocycle-rad", "a1-a2", "loop-plus-arrow"}) {
    const auto& d = fixture_data(name);
    const auto all = enumerate_pretorsion_theories(*d.ctx, *d.pretorsion, *d.pretorsionfree, true);
    const auto full = std::count_if(all.begin(), all.end(), [](const auto& t) { return t.group == TheoryGroup::FullSide; });
    EXPECT_EQ(static_cast<std::size_t>(full), d.pretorsion->size() + d.pretorsionfree->size() - 1) << name;
  }
}

TEST(TheoryProperty, DisconnectedAlgebraMultiplies) {
  const auto count = [](const char* name) {
    const auto& d = fixture_data(name);
    return enumerate_pretorsion_theories(*d.ctx, *d.pretorsion, *d.pretorsionfree).size();
  };
  EXPECT_EQ(count("a1-a2"), count("single-vertex-no-loop") * count("a2"));
}

TEST(JiReport, Examples) {
  const auto& loop = fixture_data("loop-eps2");
  const auto r = join_irreducible_report(*loop.ctx, *loop.pretorsion, *loop.torsion);
  EXPECT_EQ(r.pretorsion_ji.size(), 2u);
  EXPECT_EQ(r.torsion_ji.size(), 1u);
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.lrd_criterion);
  for (const char* f : {"a2", "a3-linear"}) {
    const auto& d = fixture_data(f);
    const auto rr = join_irreducible_report(*d.ctx, *d.pretorsion, *d.torsion);
    EXPECT_TRUE(rr.equal) << f;
    EXPECT_TRUE(rr.gen_bijection) << f;
  }
  const auto& a3 = fixture_data("a3-linear");
  EXPECT_TRUE(join_irreducible_report(*a3.ctx, *a3.pretorsion, *a3.torsion).lrd_criterion);
}

TEST(ClosureIdentification, Examples) {
  const auto& a3 = fixture_data("a3-linear");
  const auto ok = distributive_closure_identification(*a3.ctx, *a3.pretorsion, *a3.torsion);
  EXPECT_TRUE(ok.identified);
  EXPECT_TRUE(ok.phi.has_value());
  const auto& sink = fixture_data("a3-sink");
  const auto no = distributive_closure_identification(*sink.ctx, *sink.pretorsion, *sink.torsion);
  EXPECT_FALSE(no.identified);
  EXPECT_EQ(no.closure_size, 26u);
  EXPECT_EQ(no.closure_size, no.pretorsion_size + 2);
  const auto& loop = fixture_data("loop-eps2");
  const auto lo = distributive_closure_identification(*loop.ctx, *loop.pretorsion, *loop.torsion);
  EXPECT_FALSE(lo.identified);
  EXPECT_FALSE(lo.failed_hypothesis.empty());
}

TEST(EpiRealization, Examples) {
  for (const char* f : {"a3-linear", "a2"}) {
    const auto& d = fixture_data(f);
    const auto r = epi_poset_realization(*d.ctx, *d.pretorsion);
    EXPECT_TRUE(r.same_elements) << f;
    EXPECT_TRUE(r.isomorphism.has_value()) << f;
  }
  const auto& a2 = fixture_data("a2");
  const auto r = epi_poset_realization(*a2.ctx, *a2.pretorsion);
  EXPECT_TRUE(lattice_isomorphic(order_ideal_lattice(r.poset),
                                 order_ideal_lattice(join_irreducibles(*a2.pretorsion).poset))
                  .has_value());
  const auto& sink = fixture_data("a3-sink");
  try {
    epi_poset_realization(*sink.ctx, *sink.pretorsion);
    ADD_FAILURE() << "expected HypothesisNotMet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisNotMet);
  }
}

TEST(Semidistributivity, A3SinkWitness) {
  const auto& d = fixture_data("a3-sink");
  const auto s = is_semidistributive(*d.pretorsion);
  EXPECT_FALSE(s.meet_semidistributive);
  ASSERT_FALSE(s.meet_failures.empty());
  EXPECT_EQ(member_labels(*d.catalog, d.pretorsion->element(s.meet_failures[0].element)), sorted({"1 3/2", "3", "1"}));
  EXPECT_TRUE(is_semidistributive(*fixture_data("a2").torsion).holds());
}

TEST(PretorsionProperty, DistributiveIffJoinsAreUnions) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    const auto& l = *d.pretorsion;
    bool unions_closed = true;
    for (std::size_t i = 0; i < l.size() && unions_closed; ++i) {
      for (std::size_t j = i + 1; j < l.size() && unions_closed; ++j) {
        const IndexSet u = l.element(i) | l.element(j);
        unions_closed = d.ctx->gen_closure(u) == u;
      }
    }
    EXPECT_EQ(is_distributive(l).holds, unions_closed) << name;
  }
}

TEST(PretorsionProperty, TripleAgreement) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    bool all_unique_max = true;
    for (const auto& m : d.catalog->modules()) all_unique_max = all_unique_max && radical_top(m).unique_max;
    const bool criterion = distributivity_criterion(*d.algebra).holds;
    EXPECT_EQ(criterion, is_distributive(*d.pretorsion).holds) << name;
    EXPECT_EQ(criterion, all_unique_max) << name;
  }
}

TEST(PretorsionProperty, TauRigidIffGenIsExtensionClosed) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    for (std::size_t i = 0; i < d.catalog->size(); ++i) {
      const auto& m = (*d.catalog)[i];
      const IndexSet g = d.ctx->gen_closure(make_index_set(d.catalog->size(), {i}));
      const bool rigid = hom_space(m, ar_translate(m)).dim() == 0;
      EXPECT_EQ(is_extension_closed(*d.ctx, g).closed, rigid) << name << " " << m.label();
    }
  }
}

TEST(PretorsionProperty, ExtensionClosureMatchesSubmoduleEnumeration) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    if (d.pretorsion->size() > 100) continue;
    for (const auto& t : d.pretorsion->elements()) {
      EXPECT_EQ(is_extension_closed(*d.ctx, t).closed, is_extension_closed_by_enumeration(*d.ctx, t).closed) << name;
    }
  }
}

TEST(PretorsionProperty, TorsionLatticeShape) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    EXPECT_TRUE(is_semidistributive(*d.torsion).holds()) << name;
    bool single_simple = true;
    for (const auto& c : connected_components(*d.algebra)) single_simple = single_simple && c.num_vertices() == 1;
    EXPECT_EQ(is_distributive(*d.torsion).holds, single_simple) << name;
  }
}

TEST(PretorsionProperty, PretorsionFreeIsDualForHereditary) {
  // For A2 the two lattices have the same shape.
  const auto& d = fixture_data("a2");
  EXPECT_TRUE(lattice_isomorphic(*d.pretorsion, *d.pretorsionfree).has_value());
}

TEST(PretorsionProperty, GenClosureIsAClosure) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    for (const auto& t : d.pretorsion->elements()) EXPECT_EQ(d.ctx->gen_closure(t), t) << name;
    for (const auto& f : d.pretorsionfree->elements()) EXPECT_EQ(d.ctx->cogen_closure(f), f) << name;
  }
}
