#include "test_support.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptlattice_cli/quiver_file.hpp"

namespace ptl::testing {

std::string fixture_path(std::string_view name) {
  return std::string(PTLATTICE_FIXTURE_DIR) + "/" + std::string(name) + ".toml";
}

std::string golden_path(std::string_view name) {
  return std::string(PTLATTICE_GOLDEN_DIR) + "/" + std::string(name);
}

AlgebraPtr fixture_algebra(std::string_view name) { return cli::load_quiver_file(fixture_path(name)).algebra(); }

const std::vector<std::string>& finite_fixtures() {
  static const std::vector<std::string> names{
      "a1-a2",       "a2",          "a3-linear",       "a3-sink",
      "a3-source",   "d4-source",   "d4-source-rel",   "d4-subspace",
      "loop-eps2",   "loop-eps3",   "loop-plus-arrow", "single-vertex-no-loop",
      "twocycle-exit", "twocycle-rad"};
  return names;
}

const std::vector<std::string>& refused_fixtures() {
  static const std::vector<std::string> names{"kronecker", "two-loops", "loop-exit-norel", "loop-two-exits"};
  return names;
}

AlgebraPtr algebra(const std::vector<std::string>& vertices,
                   const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                   const std::vector<std::vector<std::string>>& relations) {
  Quiver q;
  for (const auto& v : vertices) q.add_vertex(v);
  for (const auto& [name, s, t] : arrows) q.add_arrow(name, s, t);
  return make_algebra(q, relations);
}

Representation rep(const AlgebraPtr& a, const std::vector<std::size_t>& dims,
                   const std::map<std::string, std::vector<long long>>& maps, Field f) {
  const Quiver& q = a->quiver();
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& arr = q.arrow(i);
    const std::size_t r = dims.at(arr.target);
    const std::size_t c = dims.at(arr.source);
    auto it = maps.find(arr.name);
    ms.push_back(it == maps.end() ? Matrix(f, r, c) : Matrix::from_ints(f, r, c, it->second));
  }
  for (const auto& [name, _] : maps) {
    if (!q.find_arrow(name)) throw std::invalid_argument("unknown arrow " + name);
  }
  return Representation(a, f, dims, std::move(ms));
}

const FixtureData& fixture_data(const std::string& name) {
  static std::map<std::string, FixtureData> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  FixtureData d;
  d.algebra = fixture_algebra(name);
  d.catalog = std::make_unique<IndecCatalog>(build_catalog(d.algebra));
  d.ctx = std::make_unique<PretorsionContext>(*d.catalog);
  d.pretorsion = std::make_unique<FiniteLattice>(build_pretorsion_lattice(*d.ctx));
  d.pretorsionfree = std::make_unique<FiniteLattice>(build_pretorsionfree_lattice(*d.ctx));
  d.torsion = std::make_unique<FiniteLattice>(build_torsion_lattice(*d.ctx, *d.pretorsion));
  return cache.emplace(name, std::move(d)).first->second;
}

std::vector<Morphism> all_morphisms(const Representation& m, const Representation& n) {
  const Field f = m.field();
  const int p = f.characteristic();
  if (p == 0) throw std::invalid_argument("all_morphisms needs a prime field");
  const HomSpace h = hom_space(m, n);
  std::vector<Morphism> out;
  std::vector<int> coeff(h.dim(), 0);
  while (true) {
    Vector v;
    for (int c : coeff) v.push_back(f.from_int(c));
    out.push_back(h.dim() == 0 ? zero_morphism(m, n) : linear_combination(h.basis, v));
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  return out;
}

namespace {

Representation over(const Representation& m, int p) {
  return m.field().characteristic() == p ? m : m.over_field(Field::prime(p));
}

// Breadth-first saturation of `start` under step, at most `rounds` times.
template <class Step>
std::vector<Submodule> saturate(const Submodule& start, std::size_t rounds, Step step) {
  std::vector<Submodule> frontier{start};
  std::vector<Submodule> seen{start};
  for (std::size_t r = 0; r < rounds && !frontier.empty(); ++r) {
    std::vector<Submodule> next;
    for (const auto& s : frontier) {
      for (auto& t : step(s)) {
        if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
          seen.push_back(t);
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

bool epi_oracle(const std::vector<Representation>& xs, const Representation& n, int p) {
  const Representation np = over(n, p);
  std::vector<Submodule> images;
  for (const auto& x : xs) {
    for (const auto& g : all_morphisms(over(x, p), np)) images.push_back(image(g, np));
  }
  const auto reached = saturate(Submodule::zero(np), np.total_dim(), [&](const Submodule& s) {
    std::vector<Submodule> out;
    for (const auto& im : images) out.push_back(s.sum(im));
    return out;
  });
  return std::any_of(reached.begin(), reached.end(), [](const Submodule& s) { return s.is_full(); });
}

bool mono_oracle(const std::vector<Representation>& ys, const Representation& n, int p) {
  const Representation np = over(n, p);
  std::vector<Submodule> kernels;
  for (const auto& y : ys) {
    for (const auto& g : all_morphisms(np, over(y, p))) kernels.push_back(kernel(g, np));
  }
  const auto reached = saturate(Submodule::full(np), np.total_dim(), [&](const Submodule& s) {
    std::vector<Submodule> out;
    for (const auto& k : kernels) out.push_back(s.intersect(k));
    return out;
  });
  return std::any_of(reached.begin(), reached.end(), [](const Submodule& s) { return s.is_zero(); });
}

std::vector<std::string> member_labels(const IndecCatalog& c, const IndexSet& s) {
  std::vector<std::string> out;
  for (std::size_t i : members_of(s)) out.push_back(c.label(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ptl::testing
