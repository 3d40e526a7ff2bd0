#include "ptlattice/module_theory.hpp"

#include <algorithm>
#include <random>

#include "ptlattice/error.hpp"

namespace ptl {

namespace {

constexpr std::size_t kPrimeSearchBudget = std::size_t{1} << 20;
constexpr std::size_t kGridBudget = std::size_t{1} << 16;
constexpr int kRandomAttempts = 16;
constexpr long long kRandomRange = 1000;

// Basis indices of paths x -> v, in basis order.
std::vector<std::size_t> paths_between(const BoundQuiverAlgebra& a, std::size_t x, std::size_t v) {
  std::vector<std::size_t> out;
  const auto& basis = a.path_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].source == x && basis[i].target == v) out.push_back(i);
  return out;
}

std::size_t position_of(const std::vector<std::size_t>& xs, std::size_t value) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == value) return i;
  throw Error(Errc::InvariantBreach, "path missing from its vertex basis");
}

// Unit vectors spanning a complement of rad M at each vertex.
std::vector<std::pair<std::size_t, Vector>> top_generators(const Representation& m) {
  const RadicalTop rt = radical_top(m);
  std::vector<std::pair<std::size_t, Vector>> out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    for (std::size_t c : rt.radical.space(v).non_pivots()) {
      Vector e(m.dim(v), m.field().zero());
      e[c] = m.field().one();
      out.emplace_back(v, std::move(e));
    }
  }
  return out;
}

Morphism power(const Morphism& f, std::size_t at_least) {
  Morphism p = f;
  for (std::size_t e = 1; e < at_least; e *= 2) p = compose(p, p);
  return p;
}

bool all_invertible(const Morphism& f) {
  for (const auto& c : f.components)
    if (!is_invertible(c)) return false;
  return true;
}

}  // namespace

RadicalTop radical_top(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Subspace> spaces;
  std::vector<std::size_t> top;
  std::size_t total_top = 0;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    std::vector<Vector> cols;
    for (std::size_t i : q.arrows_in(v)) {
      const Matrix& a = m.map(i);
      for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
    }
    spaces.push_back(Subspace::span(m.field(), m.dim(v), cols));
    top.push_back(m.dim(v) - spaces.back().dim());
    total_top += top.back();
  }
  return RadicalTop{Submodule(m, std::move(spaces)), std::move(top), total_top == 1};
}

std::vector<std::vector<std::size_t>> radical_layers(const Representation& m) {
  const BoundQuiverAlgebra& a = m.algebra();
  const std::size_t n = a.num_vertices();
  auto rad_power_dims = [&](std::size_t k) {
    std::vector<std::vector<Vector>> cols(n);
    for (const auto& p : a.path_basis()) {
      if (p.arrows.size() != k) continue;
      const Matrix pm = m.path_map(p.source, p.arrows);
      for (std::size_t c = 0; c < pm.cols(); ++c) cols[p.target].push_back(pm.column(c));
    }
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < n; ++v) dims.push_back(Subspace::span(m.field(), m.dim(v), cols[v]).dim());
    return dims;
  };
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> cur = m.dims();
  for (std::size_t k = 1; std::any_of(cur.begin(), cur.end(), [](std::size_t d) { return d > 0; }); ++k) {
    std::vector<std::size_t> next = rad_power_dims(k);
    std::vector<std::size_t> layer(n);
    for (std::size_t v = 0; v < n; ++v) layer[v] = cur[v] - next[v];
    layers.push_back(std::move(layer));
    cur = std::move(next);
  }
  return layers;
}

std::string layer_label(const Representation& m) {
  if (m.is_zero()) return "0";
  const Quiver& q = m.algebra().quiver();
  std::string out;
  for (const auto& layer : radical_layers(m)) {
    if (!out.empty()) out += '/';
    std::string part;
    for (std::size_t v = 0; v < layer.size(); ++v) {
      for (std::size_t k = 0; k < layer[v]; ++k) {
        if (!part.empty()) part += ' ';
        part += q.vertex_label(v);
      }
    }
    out += part;
  }
  return out;
}

std::size_t endomorphism_dim(const Representation& m) { return hom_space(m, m).dim(); }

bool is_brick(const Representation& m) { return endomorphism_dim(m) == 1; }

std::optional<Morphism> find_generic_combination(const std::vector<Morphism>& basis, Field f, std::size_t degree,
                                                 const MorphismPredicate& pred) {
  const std::size_t d = basis.size();
  if (d == 0) return std::nullopt;
  Vector coeffs(d, f.zero());
  if (!f.is_rational()) {
    const std::size_t p = static_cast<std::size_t>(f.characteristic());
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
      total *= p;
      if (total > kPrimeSearchBudget) throw Error(Errc::IsoUndecided, "hom space too large for exhaustive search");
    }
    std::vector<std::size_t> digits(d, 0);
    for (std::size_t it = 0; it < total; ++it) {
      for (std::size_t i = 0; i < d; ++i) coeffs[i] = f.from_int(static_cast<long long>(digits[i]));
      Morphism g = linear_combination(basis, coeffs);
      if (pred(g)) return g;
      for (std::size_t i = 0; i < d && ++digits[i] == p; ++i) digits[i] = 0;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long long> dist(-kRandomRange, kRandomRange);
  for (int t = 0; t < kRandomAttempts; ++t) {
    for (auto& c : coeffs) c = f.from_int(dist(rng));
    Morphism g = linear_combination(basis, coeffs);
    if (pred(g)) return g;
  }
  const std::size_t side = degree + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= side;
    if (total > kGridBudget) {
      throw Error(Errc::IsoUndecided, "generic-combination grid exceeds " + std::to_string(kGridBudget) + " points");
    }
  }
  std::vector<std::size_t> digits(d, 0);
  for (std::size_t it = 0; it < total; ++it) {
    for (std::size_t i = 0; i < d; ++i) coeffs[i] = f.from_int(static_cast<long long>(digits[i]));
    Morphism g = linear_combination(basis, coeffs);
    if (pred(g)) return g;
    for (std::size_t i = 0; i < d && ++digits[i] == side; ++i) digits[i] = 0;
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw Error(Errc::AlgebraMismatch, "modules over different algebras");
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const HomSpace h = hom_space(m, n);
  if (h.dim() == 0 || h.dim() != endomorphism_dim(m) || h.dim() != endomorphism_dim(n)) return false;
  return find_generic_combination(h.basis, m.field(), m.total_dim(), all_invertible).has_value();
}

std::optional<Morphism> find_epimorphism(const Representation& n, const Representation& m) {
  if (m.is_zero()) return zero_morphism(n, m);
  const HomSpace h = hom_space(n, m);
  return find_generic_combination(h.basis, m.field(), m.total_dim(), [&](const Morphism& g) {
    for (std::size_t v = 0; v < g.components.size(); ++v)
      if (rank(g.components[v]) != m.dim(v)) return false;
    return true;
  });
}

std::optional<Morphism> find_monomorphism(const Representation& m, const Representation& n) {
  if (m.is_zero()) return zero_morphism(m, n);
  const HomSpace h = hom_space(m, n);
  return find_generic_combination(h.basis, m.field(), m.total_dim(), [&](const Morphism& g) {
    for (std::size_t v = 0; v < g.components.size(); ++v)
      if (rank(g.components[v]) != m.dim(v)) return false;
    return true;
  });
}

std::vector<Representation> decompose(const Representation& m) {
  const Field f = m.field();
  if (f.is_rational()) throw Error(Errc::FieldMismatch, "decompose requires a prime field");
  if (m.is_zero()) return {};
  const HomSpace end = hom_space(m, m);
  const std::size_t d = end.dim();
  if (d > kMaxEndDimForDecompose) {
    throw Error(Errc::EndTooLarge, "End has dimension " + std::to_string(d) + " > " +
                                       std::to_string(kMaxEndDimForDecompose));
  }
  const std::size_t p = static_cast<std::size_t>(f.characteristic());
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  std::vector<std::size_t> digits(d, 0);
  Vector coeffs(d, f.zero());
  for (std::size_t it = 1; it < total; ++it) {
    for (std::size_t i = 0; i < d && ++digits[i] == p; ++i) digits[i] = 0;
    for (std::size_t i = 0; i < d; ++i) coeffs[i] = f.from_int(static_cast<long long>(digits[i]));
    const Morphism phi = power(linear_combination(end.basis, coeffs), m.total_dim());
    if (phi.is_zero() || all_invertible(phi)) continue;
    // Fitting: M = im(phi^N) + ker(phi^N), both nonzero here.
    std::vector<Representation> out = decompose(submodule_as_module(image(phi, m)).module);
    for (auto& part : decompose(submodule_as_module(kernel(phi, m)).module)) out.push_back(std::move(part));
    return out;
  }
  return {m};
}

Representation simple_module(const AlgebraPtr& a, Field f, std::size_t v) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  dims.at(v) = 1;
  std::vector<Matrix> maps;
  for (const auto& arrow : q.arrows()) maps.emplace_back(f, dims[arrow.target], dims[arrow.source]);
  return Representation(a, f, std::move(dims), std::move(maps), q.vertex_label(v));
}

Representation projective_module(const AlgebraPtr& a, Field f, std::size_t v) {
  const Quiver& q = a->quiver();
  std::vector<std::vector<std::size_t>> at(q.num_vertices());
  for (std::size_t x = 0; x < q.num_vertices(); ++x) at[x] = paths_between(*a, v, x);
  std::vector<std::size_t> dims;
  for (const auto& xs : at) dims.push_back(xs.size());
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& arrow = q.arrow(i);
    Matrix m(f, dims[arrow.target], dims[arrow.source]);
    for (std::size_t c = 0; c < at[arrow.source].size(); ++c) {
      Path ext = a->path_basis()[at[arrow.source][c]].arrows;
      ext.push_back(i);
      if (const auto idx = a->basis_index(v, ext)) m(position_of(at[arrow.target], *idx), c) = f.one();
    }
    maps.push_back(std::move(m));
  }
  Representation p(a, f, std::move(dims), std::move(maps));
  p.set_label(layer_label(p));
  return p;
}

Representation injective_module(const AlgebraPtr& a, Field f, std::size_t v) {
  const Quiver& q = a->quiver();
  std::vector<std::vector<std::size_t>> at(q.num_vertices());
  for (std::size_t x = 0; x < q.num_vertices(); ++x) at[x] = paths_between(*a, x, v);
  std::vector<std::size_t> dims;
  for (const auto& xs : at) dims.push_back(xs.size());
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& arrow = q.arrow(i);
    Matrix m(f, dims[arrow.target], dims[arrow.source]);
    for (std::size_t c = 0; c < at[arrow.source].size(); ++c) {
      const Path& path = a->path_basis()[at[arrow.source][c]].arrows;
      if (path.empty() || path.front() != i) continue;
      const Path tail(path.begin() + 1, path.end());
      if (const auto idx = a->basis_index(arrow.target, tail)) m(position_of(at[arrow.target], *idx), c) = f.one();
    }
    maps.push_back(std::move(m));
  }
  Representation inj(a, f, std::move(dims), std::move(maps));
  inj.set_label(layer_label(inj));
  return inj;
}

SimplesAndProjectives simples_and_projectives(const AlgebraPtr& a, Field f) {
  SimplesAndProjectives out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    out.simples.push_back(simple_module(a, f, v));
    out.projectives.push_back(projective_module(a, f, v));
  }
  return out;
}

namespace {

struct ProjectiveCover {
  Representation module;
  Morphism projection;
  std::vector<std::size_t> generator_vertex;
};

// Direct sum of P_v, one per generator (v, x), mapping e_v to x.
ProjectiveCover projective_cover(const Representation& m, const std::vector<std::pair<std::size_t, Vector>>& gens) {
  const AlgebraPtr& a = m.algebra_ptr();
  const Field f = m.field();
  const std::size_t n = a->num_vertices();
  std::vector<Representation> parts;
  std::vector<std::size_t> gv;
  for (const auto& [v, x] : gens) {
    parts.push_back(projective_module(a, f, v));
    gv.push_back(v);
  }
  Representation p0 = direct_sum(parts);
  Morphism pi;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix c(f, m.dim(x), p0.dim(x));
    std::size_t col = 0;
    for (const auto& [v, t] : gens) {
      for (std::size_t idx : paths_between(*a, v, x)) {
        const Vector img = m.path_map(v, a->path_basis()[idx].arrows).apply(t);
        for (std::size_t r = 0; r < img.size(); ++r) c(r, col) = img[r];
        ++col;
      }
    }
    pi.components.push_back(std::move(c));
  }
  return ProjectiveCover{std::move(p0), std::move(pi), std::move(gv)};
}

}  // namespace

Representation ar_translate(const Representation& m) {
  const AlgebraPtr& a = m.algebra_ptr();
  const Field f = m.field();
  if (m.is_zero()) return Representation::zero(a, f);
  const std::size_t n = a->num_vertices();

  const auto gens0 = top_generators(m);
  const ProjectiveCover cover = projective_cover(m, gens0);
  const Inclusion k = submodule_as_module(kernel(cover.projection, cover.module));
  if (k.module.is_zero()) return Representation::zero(a, f);

  // Second syzygy generators, written in P0 coordinates.
  std::vector<std::pair<std::size_t, Vector>> gens1;
  for (const auto& [w, x] : top_generators(k.module)) gens1.emplace_back(w, k.inclusion.components[w].apply(x));

  std::vector<Representation> i0_parts;
  for (std::size_t v : cover.generator_vertex) i0_parts.push_back(injective_module(a, f, v));
  std::vector<Representation> i1_parts;
  for (const auto& g : gens1) i1_parts.push_back(injective_module(a, f, g.first));
  const Representation i0 = direct_sum(i0_parts);
  const Representation i1 = direct_sum(i1_parts);

  // Nakayama image of the presentation map: the block from generator (w, u) of P1
  // to generator v of P0 sends delta_s to the sum of c_p delta_q over q p = s.
  Morphism nu;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix c(f, i0.dim(x), i1.dim(x));
    std::size_t col0 = 0;
    for (const auto& [w, u] : gens1) {
      const auto cols = paths_between(*a, x, w);
      std::size_t row0 = 0;
      std::size_t coord = 0;  // offset of generator v's block inside (P0)_w
      for (std::size_t v : cover.generator_vertex) {
        const auto rows = paths_between(*a, x, v);
        const auto pvw = paths_between(*a, v, w);
        for (std::size_t pi = 0; pi < pvw.size(); ++pi) {
          const Scalar& coeff = u[coord + pi];
          if (coeff.is_zero()) continue;
          const Path& p = a->path_basis()[pvw[pi]].arrows;
          for (std::size_t qi = 0; qi < rows.size(); ++qi) {
            Path qp = a->path_basis()[rows[qi]].arrows;
            qp.insert(qp.end(), p.begin(), p.end());
            if (const auto s = a->basis_index(x, qp)) c(row0 + qi, col0 + position_of(cols, *s)) += coeff;
          }
        }
        coord += pvw.size();
        row0 += rows.size();
      }
      col0 += cols.size();
    }
    nu.components.push_back(std::move(c));
  }
  if (!is_morphism(nu, i1, i0)) throw Error(Errc::InvariantBreach, "Nakayama image is not a module map");
  Representation tau = submodule_as_module(kernel(nu, i1)).module;
  tau.set_label(layer_label(tau));
  return tau;
}

bool is_tau_rigid(const Representation& m) {
  const Representation t = ar_translate(m);
  if (t.is_zero()) return true;
  return hom_space(m, t).dim() == 0;
}

}  // namespace ptl
