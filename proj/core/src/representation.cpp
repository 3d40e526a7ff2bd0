#include "ptlattice/representation.hpp"

#include <numeric>

#include "ptlattice/error.hpp"

namespace ptl {

namespace {

void check_same_algebra(const Representation& m, const Representation& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw Error(Errc::AlgebraMismatch, "modules over different algebras");
  if (!(m.field() == n.field())) throw Error(Errc::FieldMismatch, "modules over different fields");
}

}  // namespace

Representation::Representation(AlgebraPtr a, Field f, std::vector<std::size_t> dims, std::vector<Matrix> maps,
                               std::string label)
    : algebra_(std::move(a)), field_(f), dims_(std::move(dims)), maps_(std::move(maps)), label_(std::move(label)) {
  if (!algebra_) throw Error(Errc::InvalidRepresentation, "null algebra");
  const Quiver& q = algebra_->quiver();
  if (dims_.size() != q.num_vertices()) throw Error(Errc::InvalidRepresentation, "one dimension per vertex expected");
  if (maps_.size() != q.num_arrows()) throw Error(Errc::InvalidRepresentation, "one matrix per arrow expected");
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& arrow = q.arrow(i);
    const Matrix& m = maps_[i];
    if (!(m.field() == field_)) throw Error(Errc::FieldMismatch, "matrix of arrow " + arrow.name);
    if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source]) {
      throw Error(Errc::InvalidRepresentation, "matrix of arrow " + arrow.name + " has shape " +
                                                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
  }
  for (const auto& r : algebra_->relations()) {
    if (!path_map(q.arrow(r.front()).source, r).is_zero()) {
      throw Error(Errc::InvalidRepresentation, "relation " + algebra_->path_name(BasisPath{0, 0, r}) + " does not vanish");
    }
  }
}

Representation Representation::zero(AlgebraPtr a, Field f) {
  const Quiver& q = a->quiver();
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) maps.emplace_back(f, 0, 0);
  return Representation(a, f, std::vector<std::size_t>(q.num_vertices(), 0), std::move(maps), "0");
}

std::size_t Representation::total_dim() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix Representation::path_map(std::size_t source, const Path& p) const {
  Matrix m = Matrix::identity(field_, dims_.at(source));
  for (std::size_t arrow : p) m = maps_.at(arrow) * m;
  return m;
}

Representation Representation::over_field(Field f) const {
  std::vector<Matrix> maps;
  for (const auto& m : maps_) {
    Matrix out(f, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Scalar& s = m(r, c);
        if (s.characteristic() == 0) {
          const Rational& q = s.rational();
          if (denominator(q) != 1) throw Error(Errc::FieldMismatch, "non-integral entry " + q.str());
          out(r, c) = f.from_int(numerator(q).convert_to<long long>());
        } else {
          out(r, c) = f.from_int(s.residue());
        }
      }
    }
    maps.push_back(std::move(out));
  }
  return Representation(algebra_, f, dims_, std::move(maps), label_);
}

bool Morphism::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components.at(v) * f.components[v]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(f.components[v] + g.components.at(v));
  return h;
}

Morphism scale(const Morphism& f, const Scalar& s) {
  Morphism h;
  for (const auto& c : f.components) h.components.push_back(c.scaled(s));
  return h;
}

Morphism zero_morphism(const Representation& m, const Representation& n) {
  Morphism f;
  for (std::size_t v = 0; v < m.dims().size(); ++v) f.components.emplace_back(m.field(), n.dim(v), m.dim(v));
  return f;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (std::size_t d : m.dims()) f.components.push_back(Matrix::identity(m.field(), d));
  return f;
}

bool is_morphism(const Morphism& f, const Representation& m, const Representation& n) {
  const Quiver& q = m.algebra().quiver();
  if (f.components.size() != q.num_vertices()) return false;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (f.components[v].rows() != n.dim(v) || f.components[v].cols() != m.dim(v)) return false;
  }
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    if (!(n.map(i) * f.components[a.source] == f.components[a.target] * m.map(i))) return false;
  }
  return true;
}

Vector flatten(const Morphism& f) {
  Vector out;
  for (const auto& c : f.components)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) out.push_back(c(r, k));
  return out;
}

Morphism unflatten(const Vector& v, const Representation& m, const Representation& n) {
  Morphism f;
  std::size_t pos = 0;
  for (std::size_t u = 0; u < m.dims().size(); ++u) {
    Matrix c(m.field(), n.dim(u), m.dim(u));
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) c(r, k) = v.at(pos++);
    f.components.push_back(std::move(c));
  }
  if (pos != v.size()) throw Error(Errc::DimensionMismatch, "morphism coordinate vector has the wrong length");
  return f;
}

Morphism linear_combination(const std::vector<Morphism>& basis, const Vector& coeffs) {
  if (basis.empty()) throw Error(Errc::DimensionMismatch, "empty basis");
  Morphism out = scale(basis[0], coeffs.at(0));
  for (std::size_t i = 1; i < basis.size(); ++i) {
    if (!coeffs.at(i).is_zero()) out = add(out, scale(basis[i], coeffs[i]));
  }
  return out;
}

Subspace HomSpace::as_subspace() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < source.dims().size(); ++v) n += source.dim(v) * target.dim(v);
  std::vector<Vector> vecs;
  for (const auto& b : basis) vecs.push_back(flatten(b));
  return Subspace::span(source.field(), n, vecs);
}

HomSpace hom_space(const Representation& m, const Representation& n) {
  check_same_algebra(m, n);
  const Quiver& q = m.algebra().quiver();
  const Field f = m.field();
  std::vector<std::size_t> offset(q.num_vertices() + 1, 0);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset.back();
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * m.dim(v) + c; };

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += n.dim(a.target) * m.dim(a.source);
  Matrix sys(f, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    const Matrix& na = n.map(i);
    const Matrix& ma = m.map(i);
    // (N_a f_s - f_t M_a)(r, c) = 0
    for (std::size_t r = 0; r < n.dim(a.target); ++r) {
      for (std::size_t c = 0; c < m.dim(a.source); ++c, ++row) {
        for (std::size_t k = 0; k < n.dim(a.source); ++k) sys(row, var(a.source, k, c)) += na(r, k);
        for (std::size_t k = 0; k < m.dim(a.target); ++k) sys(row, var(a.target, r, k)) -= ma(k, c);
      }
    }
  }
  const Subspace sol = kernel_basis(sys);
  HomSpace h{m, n, {}};
  for (std::size_t i = 0; i < sol.dim(); ++i) h.basis.push_back(unflatten(sol.basis_vector(i), m, n));
  return h;
}

Submodule::Submodule(Representation parent, std::vector<Subspace> spaces)
    : parent_(std::move(parent)), spaces_(std::move(spaces)) {
  const Quiver& q = parent_.algebra().quiver();
  if (spaces_.size() != q.num_vertices()) throw Error(Errc::NotSubmodule, "one subspace per vertex expected");
  for (std::size_t v = 0; v < spaces_.size(); ++v) {
    if (spaces_[v].ambient_dim() != parent_.dim(v)) throw Error(Errc::NotSubmodule, "subspace ambient dimension mismatch");
  }
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    const Subspace& src = spaces_[a.source];
    for (std::size_t k = 0; k < src.dim(); ++k) {
      if (!spaces_[a.target].contains(parent_.map(i).apply(src.basis_vector(k)))) {
        throw Error(Errc::NotSubmodule, "arrow " + a.name + " leaves the subspace");
      }
    }
  }
}

Submodule Submodule::zero(const Representation& parent) {
  std::vector<Subspace> spaces;
  for (std::size_t d : parent.dims()) spaces.push_back(Subspace::zero(parent.field(), d));
  return Submodule(parent, std::move(spaces));
}

Submodule Submodule::full(const Representation& parent) {
  std::vector<Subspace> spaces;
  for (std::size_t d : parent.dims()) spaces.push_back(Subspace::full(parent.field(), d));
  return Submodule(parent, std::move(spaces));
}

std::vector<std::size_t> Submodule::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : spaces_) out.push_back(s.dim());
  return out;
}

std::size_t Submodule::total_dim() const {
  std::size_t t = 0;
  for (const auto& s : spaces_) t += s.dim();
  return t;
}

bool Submodule::contains(const Submodule& o) const {
  for (std::size_t v = 0; v < spaces_.size(); ++v)
    if (!spaces_[v].contains(o.spaces_.at(v))) return false;
  return true;
}

Submodule Submodule::sum(const Submodule& o) const {
  std::vector<Subspace> spaces;
  for (std::size_t v = 0; v < spaces_.size(); ++v) spaces.push_back(spaces_[v].sum(o.spaces_.at(v)));
  return Submodule(parent_, std::move(spaces));
}

Submodule Submodule::intersect(const Submodule& o) const {
  std::vector<Subspace> spaces;
  for (std::size_t v = 0; v < spaces_.size(); ++v) spaces.push_back(spaces_[v].intersect(o.spaces_.at(v)));
  return Submodule(parent_, std::move(spaces));
}

Submodule image(const Morphism& f, const Representation& target) {
  std::vector<Subspace> spaces;
  for (const auto& c : f.components) spaces.push_back(image_basis(c));
  return Submodule(target, std::move(spaces));
}

Submodule kernel(const Morphism& f, const Representation& source) {
  std::vector<Subspace> spaces;
  for (const auto& c : f.components) spaces.push_back(kernel_basis(c));
  return Submodule(source, std::move(spaces));
}

Submodule sum_of_images(const Representation& n, const std::vector<const HomSpace*>& homs) {
  std::vector<Subspace> spaces;
  for (std::size_t v = 0; v < n.dims().size(); ++v) {
    std::vector<Vector> cols;
    for (const HomSpace* h : homs) {
      for (const auto& g : h->basis) {
        const Matrix& c = g.components[v];
        for (std::size_t k = 0; k < c.cols(); ++k) cols.push_back(c.column(k));
      }
    }
    spaces.push_back(Subspace::span(n.field(), n.dim(v), cols));
  }
  return Submodule(n, std::move(spaces));
}

Submodule common_kernel(const Representation& n, const std::vector<const HomSpace*>& homs) {
  std::vector<Subspace> spaces;
  for (std::size_t v = 0; v < n.dims().size(); ++v) {
    std::vector<Vector> rows;
    for (const HomSpace* h : homs) {
      for (const auto& g : h->basis) {
        const Matrix& c = g.components[v];
        for (std::size_t r = 0; r < c.rows(); ++r) rows.push_back(c.row(r));
      }
    }
    spaces.push_back(kernel_basis(Matrix::from_rows(n.field(), n.dim(v), rows)));
  }
  return Submodule(n, std::move(spaces));
}

Submodule trace(const std::vector<Representation>& generators, const Representation& n) {
  std::vector<HomSpace> homs;
  homs.reserve(generators.size());
  for (const auto& g : generators) homs.push_back(hom_space(g, n));
  std::vector<const HomSpace*> ptrs;
  for (const auto& h : homs) ptrs.push_back(&h);
  return sum_of_images(n, ptrs);
}

Submodule reject(const std::vector<Representation>& cogenerators, const Representation& n) {
  std::vector<HomSpace> homs;
  homs.reserve(cogenerators.size());
  for (const auto& g : cogenerators) homs.push_back(hom_space(n, g));
  std::vector<const HomSpace*> ptrs;
  for (const auto& h : homs) ptrs.push_back(&h);
  return common_kernel(n, ptrs);
}

Quotient quotient_by(const Representation& n, const Submodule& s) {
  if (s.parent().algebra_ptr() != n.algebra_ptr() || s.parent().dims() != n.dims()) {
    throw Error(Errc::NotSubmodule, "submodule of a different module");
  }
  const Field f = n.field();
  const Quiver& q = n.algebra().quiver();
  std::vector<Matrix> proj;
  std::vector<Matrix> lift;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    const Subspace& sv = s.space(v);
    const auto free = sv.non_pivots();
    const auto& piv = sv.pivots();
    Matrix p(f, free.size(), n.dim(v));
    Matrix l(f, n.dim(v), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      p(j, free[j]) = f.one();
      for (std::size_t i = 0; i < piv.size(); ++i) p(j, piv[i]) = -sv.basis()(i, free[j]);
      l(free[j], j) = f.one();
    }
    dims.push_back(free.size());
    proj.push_back(std::move(p));
    lift.push_back(std::move(l));
  }
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    maps.push_back(proj[a.target] * n.map(i) * lift[a.source]);
  }
  Representation quot(n.algebra_ptr(), f, std::move(dims), std::move(maps));
  return Quotient{std::move(quot), Morphism{std::move(proj)}};
}

Inclusion submodule_as_module(const Submodule& s) {
  const Representation& n = s.parent();
  const Field f = n.field();
  const Quiver& q = n.algebra().quiver();
  std::vector<Matrix> incl;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) incl.push_back(s.space(v).basis().transpose());
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    const Subspace& src = s.space(a.source);
    const Subspace& tgt = s.space(a.target);
    Matrix m(f, tgt.dim(), src.dim());
    for (std::size_t k = 0; k < src.dim(); ++k) {
      const Vector coords = tgt.coordinates(n.map(i).apply(src.basis_vector(k)));
      for (std::size_t r = 0; r < coords.size(); ++r) m(r, k) = coords[r];
    }
    maps.push_back(std::move(m));
  }
  Representation sub(n.algebra_ptr(), f, s.dims(), std::move(maps));
  return Inclusion{std::move(sub), Morphism{std::move(incl)}};
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw Error(Errc::InvalidRepresentation, "direct sum of no modules");
  const Representation& first = parts.front();
  const Quiver& q = first.algebra().quiver();
  const Field f = first.field();
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  for (const auto& p : parts) {
    check_same_algebra(first, p);
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    Matrix m(f, dims[a.target], dims[a.source]);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& p : parts) {
      const Matrix& pm = p.map(i);
      for (std::size_t r = 0; r < pm.rows(); ++r)
        for (std::size_t c = 0; c < pm.cols(); ++c) m(r0 + r, c0 + c) = pm(r, c);
      r0 += p.dim(a.target);
      c0 += p.dim(a.source);
    }
    maps.push_back(std::move(m));
  }
  return Representation(first.algebra_ptr(), f, std::move(dims), std::move(maps));
}

}  // namespace ptl
