#include <gtest/gtest.h>

#include <random>

#include "ptlattice/error.hpp"
#include "ptlattice/lattice.hpp"
#include "test_support.hpp"

using namespace ptl;
using ptl::testing::fixture_data;

namespace {

FiniteLattice boolean_lattice(std::size_t n) {
  std::vector<IndexSet> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(make_index_set(n, {i}));
  return FiniteLattice::generate_from_closure(n, [](const IndexSet& s) { return s; }, gens);
}

Poset antichain(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
    labels.push_back(std::to_string(i));
  }
  return Poset(labels, leq);
}

// N5: 0 < a < b < 1, 0 < c < 1.
FiniteLattice pentagon() {
  const std::size_t g = 3;
  return FiniteLattice::from_family(g, {make_index_set(g, {}), make_index_set(g, {0}), make_index_set(g, {0, 1}),
                                        make_index_set(g, {2}), make_index_set(g, {0, 1, 2})});
}

// M3: three atoms.
FiniteLattice diamond() {
  const std::size_t g = 3;
  return FiniteLattice::from_family(g, {make_index_set(g, {}), make_index_set(g, {0}), make_index_set(g, {1}),
                                        make_index_set(g, {2}), make_index_set(g, {0, 1, 2})});
}

void expect_lattice_laws(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x) {
    EXPECT_EQ(l.meet(x, x), x);
    EXPECT_EQ(l.join(x, x), x);
    for (std::size_t y = 0; y < n; ++y) {
      EXPECT_EQ(l.meet(x, y), l.meet(y, x));
      EXPECT_EQ(l.join(x, y), l.join(y, x));
      EXPECT_EQ(l.meet(x, l.join(x, y)), x);
      EXPECT_EQ(l.join(x, l.meet(x, y)), x);
      EXPECT_TRUE(l.leq(l.meet(x, y), x));
      EXPECT_TRUE(l.leq(x, l.join(x, y)));
      for (std::size_t z = 0; z < n; ++z) {
        EXPECT_EQ(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
        EXPECT_EQ(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
      }
    }
  }
}

}  // namespace

TEST(Generate, BooleanFromIdentityClosure) {
  const auto b = boolean_lattice(2);
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(hasse_edges(b).size(), 4u);
  expect_lattice_laws(b);
}

TEST(Generate, NonIdempotentClosureIsRejected) {
  const auto grow = [](const IndexSet& s) {
    IndexSet t = s;
    const std::size_t k = s.count();
    if (k < s.size()) t.set(k);
    return t;
  };
  EXPECT_THROW(FiniteLattice::generate_from_closure(3, grow, {make_index_set(3, {0})}), Error);
}

TEST(FromFamily, RequiresTop) {
  EXPECT_THROW(FiniteLattice::from_family(2, {make_index_set(2, {}), make_index_set(2, {0}), make_index_set(2, {1})}),
               Error);
}

TEST(Hasse, Chains) {
  EXPECT_EQ(hasse_edges(chain_lattice(3)).size(), 2u);
  EXPECT_EQ(hasse_edges(chain_lattice(1)).size(), 0u);
}

TEST(Distributive, SmallLattices) {
  EXPECT_TRUE(is_distributive(chain_lattice(5)).holds);
  EXPECT_TRUE(is_distributive(boolean_lattice(3)).holds);
  const auto n5 = is_distributive(pentagon());
  EXPECT_FALSE(n5.holds);
  ASSERT_TRUE(n5.witness.has_value());
  const auto& l = pentagon();
  const auto [x, y, z] = *n5.witness;
  EXPECT_NE(l.meet(x, l.join(y, z)), l.join(l.meet(x, y), l.meet(x, z)));
  EXPECT_FALSE(is_distributive(diamond()).holds);
}

TEST(Semidistributive, SmallLattices) {
  EXPECT_TRUE(is_semidistributive(pentagon()).holds());
  const auto m3 = is_semidistributive(diamond());
  EXPECT_FALSE(m3.join_semidistributive);
  EXPECT_FALSE(m3.meet_semidistributive);
  EXPECT_FALSE(m3.meet_failures.empty());
  EXPECT_TRUE(is_semidistributive(boolean_lattice(3)).holds());
}

TEST(JoinIrreducibles, Cases) {
  EXPECT_EQ(join_irreducibles(chain_lattice(4)).elements.size(), 3u);
  EXPECT_EQ(join_irreducibles(boolean_lattice(3)).elements.size(), 3u);
  EXPECT_EQ(join_irreducibles(*fixture_data("a2").pretorsion).elements.size(), 3u);
  for (const char* f : {"a3-linear", "a3-sink", "a3-source"}) {
    EXPECT_EQ(join_irreducibles(*fixture_data(f).pretorsion).elements.size(), 6u) << f;
  }
}

TEST(OrderIdeals, Cases) {
  EXPECT_EQ(order_ideal_lattice(antichain(2)).size(), 4u);
  EXPECT_EQ(order_ideal_lattice(Poset()).size(), 1u);
  const auto ji = join_irreducibles(*fixture_data("a2").pretorsion);
  // A two-element chain and an isolated point.
  EXPECT_EQ(ji.poset.covers().size(), 1u);
  EXPECT_EQ(order_ideal_lattice(ji.poset).size(), 6u);
}

TEST(Poset, RejectsCycles) {
  EXPECT_THROW(Poset({"a", "b"}, {{true, true}, {true, true}}), Error);
  EXPECT_THROW(Poset({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}), Error);
}

TEST(Isomorphic, Cases) {
  const auto& a2 = *fixture_data("a2").pretorsion;
  const auto self = lattice_isomorphic(a2, a2);
  ASSERT_TRUE(self.has_value());
  for (std::size_t i = 0; i < a2.size(); ++i) EXPECT_EQ((*self)[i], i);
  EXPECT_TRUE(lattice_isomorphic(a2, order_ideal_lattice(join_irreducibles(a2).poset)).has_value());
  EXPECT_FALSE(lattice_isomorphic(chain_lattice(3), boolean_lattice(2)).has_value());
  EXPECT_FALSE(lattice_isomorphic(chain_lattice(4), boolean_lattice(2)).has_value());
  EXPECT_FALSE(lattice_isomorphic(pentagon(), diamond()).has_value());
}

TEST(Product, Sizes) {
  const auto p = product_lattice(chain_lattice(2), chain_lattice(3));
  EXPECT_EQ(p.size(), 6u);
  expect_lattice_laws(p);
  EXPECT_TRUE(lattice_isomorphic(product_lattice(chain_lattice(2), chain_lattice(2)), boolean_lattice(2)).has_value());
}

TEST(LatticeProperty, LawsOnSmallFixtureLattices) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    for (const FiniteLattice* l : {d.pretorsion.get(), d.pretorsionfree.get(), d.torsion.get()}) {
      if (l->size() <= 64) expect_lattice_laws(*l);
    }
  }
}

TEST(LatticeProperty, BirkhoffOnFixtures) {
  for (const auto& name : ptl::testing::finite_fixtures()) {
    const auto& d = fixture_data(name);
    for (const FiniteLattice* l : {d.pretorsion.get(), d.pretorsionfree.get(), d.torsion.get()}) {
      const bool iso = lattice_isomorphic(*l, order_ideal_lattice(join_irreducibles(*l).poset)).has_value();
      EXPECT_EQ(is_distributive(*l).holds, iso) << name;
      if (is_distributive(*l).holds) {
        EXPECT_TRUE(is_semidistributive(*l).holds()) << name;
      }
    }
  }
}

TEST(LatticeProperty, RandomClosureSystems) {
  // Closure systems from random implication sets; Birkhoff and the lattice laws.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    std::vector<std::pair<IndexSet, std::size_t>> rules;
    for (int r = 0; r < 3; ++r) {
      IndexSet premise(n);
      premise.set(rng() % n);
      if (rng() % 2) premise.set(rng() % n);
      rules.emplace_back(premise, rng() % n);
    }
    const auto closure = [rules](IndexSet s) {
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [prem, concl] : rules) {
          if (prem.is_subset_of(s) && !s.test(concl)) {
            s.set(concl);
            changed = true;
          }
        }
      }
      return s;
    };
    std::vector<IndexSet> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(make_index_set(n, {i}));
    const auto l = FiniteLattice::generate_from_closure(n, closure, gens);
    expect_lattice_laws(l);
    const bool iso = lattice_isomorphic(l, order_ideal_lattice(join_irreducibles(l).poset)).has_value();
    EXPECT_EQ(is_distributive(l).holds, iso);
    for (std::size_t i = 0; i + 1 < l.size(); ++i) EXPECT_TRUE(index_set_less(l.element(i), l.element(i + 1)));
  }
}

TEST(IndexSet, HashAndOrder) {
  const auto a = make_index_set(70, {1, 65});
  const auto b = make_index_set(70, {1, 65});
  EXPECT_EQ(IndexSetHash{}(a), IndexSetHash{}(b));
  EXPECT_EQ(members_of(a), (std::vector<std::size_t>{1, 65}));
  EXPECT_TRUE(index_set_less(make_index_set(70, {3}), a));
  EXPECT_TRUE(index_set_less(make_index_set(70, {0, 2}), make_index_set(70, {1, 2})));
}
