#include "ptlattice/pretorsion.hpp"

#include <algorithm>
#include <functional>

#include "ptlattice/classify.hpp"
#include "ptlattice/error.hpp"
#include "ptlattice/module_theory.hpp"

namespace ptl {

PretorsionContext::PretorsionContext(const IndecCatalog& c)
    : catalog_(&c),
      hom_(c.size() * c.size()),
      trace_(c.size() * c.size()),
      kernel_(c.size() * c.size()) {}

IndexSet PretorsionContext::full_set() const {
  IndexSet s(size());
  s.set();
  return s;
}

std::vector<Representation> PretorsionContext::modules_of(const IndexSet& s) const {
  std::vector<Representation> out;
  for (std::size_t i : members_of(s)) out.push_back(module(i));
  return out;
}

const HomSpace& PretorsionContext::hom(std::size_t i, std::size_t j) const {
  auto& slot = hom_.at(i * size() + j);
  if (!slot) slot = hom_space(module(i), module(j));
  return *slot;
}

const Submodule& PretorsionContext::trace_piece(std::size_t i, std::size_t j) const {
  auto& slot = trace_.at(i * size() + j);
  if (!slot) slot = sum_of_images(module(j), {&hom(i, j)});
  return *slot;
}

const Submodule& PretorsionContext::kernel_piece(std::size_t i, std::size_t j) const {
  auto& slot = kernel_.at(i * size() + j);
  if (!slot) slot = common_kernel(module(j), {&hom(j, i)});
  return *slot;
}

Submodule PretorsionContext::trace_in(const IndexSet& s, std::size_t j) const {
  Submodule out = Submodule::zero(module(j));
  for (std::size_t i : members_of(s)) {
    out = out.sum(trace_piece(i, j));
    if (out.is_full()) break;
  }
  return out;
}

Submodule PretorsionContext::reject_in(const IndexSet& s, std::size_t j) const {
  Submodule out = Submodule::full(module(j));
  for (std::size_t i : members_of(s)) {
    out = out.intersect(kernel_piece(i, j));
    if (out.is_zero()) break;
  }
  return out;
}

IndexSet PretorsionContext::gen_closure(const IndexSet& s) const {
  IndexSet out(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (s.test(j) || trace_in(s, j).is_full()) out.set(j);
  return out;
}

IndexSet PretorsionContext::cogen_closure(const IndexSet& s) const {
  IndexSet out(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (s.test(j) || (s.any() && reject_in(s, j).is_zero())) out.set(j);
  return out;
}

bool PretorsionContext::in_gen(const IndexSet& s, const Representation& x) const {
  if (x.is_zero()) return true;
  return trace(modules_of(s), x).is_full();
}

bool PretorsionContext::in_cogen(const IndexSet& s, const Representation& x) const {
  if (x.is_zero()) return true;
  if (s.none()) return false;
  return reject(modules_of(s), x).is_zero();
}

std::string PretorsionContext::add_label(const IndexSet& s) const {
  if (s.none()) return "0";
  if (s.all()) return "mod A";
  std::string out = "add(";
  bool first = true;
  for (std::size_t i : members_of(s)) {
    out += (first ? "" : ", ") + catalog_->label(i);
    first = false;
  }
  return out + ")";
}

Subspace PretorsionContext::z_trivial_subspace(const Representation& x, const Representation& y,
                                               const IndexSet& z) const {
  std::size_t ambient = 0;
  for (std::size_t v = 0; v < x.dims().size(); ++v) ambient += x.dim(v) * y.dim(v);
  std::vector<Vector> vecs;
  for (std::size_t i : members_of(z)) {
    const HomSpace in = hom_space(x, module(i));
    if (in.dim() == 0) continue;
    const HomSpace out = hom_space(module(i), y);
    for (const auto& h : in.basis)
      for (const auto& g : out.basis) vecs.push_back(flatten(compose(g, h)));
  }
  return Subspace::span(x.field(), ambient, vecs);
}

const Subspace& PretorsionContext::z_trivial_subspace(std::size_t m, std::size_t n, const IndexSet& z) const {
  auto key = std::make_tuple(m, n, z);
  auto it = triv_.find(key);
  if (it != triv_.end()) return it->second;
  std::size_t ambient = 0;
  for (std::size_t v = 0; v < module(m).dims().size(); ++v) ambient += module(m).dim(v) * module(n).dim(v);
  std::vector<Vector> vecs;
  for (std::size_t i : members_of(z)) {
    const HomSpace& in = hom(m, i);
    const HomSpace& out = hom(i, n);
    for (const auto& h : in.basis)
      for (const auto& g : out.basis) vecs.push_back(flatten(compose(g, h)));
  }
  return triv_.emplace(key, Subspace::span(module(m).field(), ambient, vecs)).first->second;
}

namespace {

std::vector<IndexSet> singletons(std::size_t n) {
  std::vector<IndexSet> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(make_index_set(n, {i}));
  return out;
}

void label_with_add(const PretorsionContext& ctx, FiniteLattice& l) {
  std::vector<std::string> labels;
  for (const auto& e : l.elements()) labels.push_back(ctx.add_label(e));
  l.set_labels(std::move(labels));
}

}  // namespace

FiniteLattice build_pretorsion_lattice(const PretorsionContext& ctx) {
  FiniteLattice l = FiniteLattice::generate_from_closure(
      ctx.size(), [&](const IndexSet& s) { return ctx.gen_closure(s); }, singletons(ctx.size()));
  label_with_add(ctx, l);
  return l;
}

FiniteLattice build_pretorsionfree_lattice(const PretorsionContext& ctx) {
  FiniteLattice l = FiniteLattice::generate_from_closure(
      ctx.size(), [&](const IndexSet& s) { return ctx.cogen_closure(s); }, singletons(ctx.size()));
  label_with_add(ctx, l);
  return l;
}

ExtensionClosure is_extension_closed(const PretorsionContext& ctx, const IndexSet& t) {
  for (std::size_t e = 0; e < ctx.size(); ++e) {
    if (t.test(e)) continue;
    Submodule tr = ctx.trace_in(t, e);
    if (tr.is_zero()) continue;  // E/0 = E is outside t
    if (ctx.in_gen(t, quotient_by(ctx.module(e), tr).module)) {
      return ExtensionClosure{false, e, std::move(tr)};
    }
  }
  return {};
}

ExtensionClosure is_extension_closed_free(const PretorsionContext& ctx, const IndexSet& f) {
  for (std::size_t e = 0; e < ctx.size(); ++e) {
    if (f.test(e)) continue;
    Submodule rej = ctx.reject_in(f, e);
    if (rej.is_full()) continue;
    if (ctx.in_cogen(f, submodule_as_module(rej).module)) {
      return ExtensionClosure{false, e, std::move(rej)};
    }
  }
  return {};
}

namespace {

// All subspaces of GF(p)^d, as reduced echelon bases.
std::vector<Subspace> all_subspaces(Field f, std::size_t d) {
  const int p = f.characteristic();
  std::vector<Subspace> out;
  std::vector<std::size_t> pivots;
  std::function<void(std::size_t)> choose = [&](std::size_t next) {
    // Free entries: row i may be nonzero at non-pivot columns right of its pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t c = pivots[i] + 1; c < d; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(i, c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      std::vector<Vector> rows(pivots.size(), Vector(d, f.zero()));
      for (std::size_t i = 0; i < pivots.size(); ++i) rows[i][pivots[i]] = f.one();
      for (std::size_t k = 0; k < free.size(); ++k) rows[free[k].first][free[k].second] = f.from_int(digits[k]);
      out.push_back(Subspace::span(f, d, rows));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
    }
    for (std::size_t c = next; c < d; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);
  return out;
}

bool arrow_stable(const Representation& m, const std::vector<Subspace>& spaces) {
  const Quiver& q = m.algebra().quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Subspace& src = spaces[arrow.source];
    for (std::size_t i = 0; i < src.dim(); ++i) {
      if (!spaces[arrow.target].contains(m.map(a).apply(src.basis_vector(i)))) return false;
    }
  }
  return true;
}

}  // namespace

ExtensionClosure is_extension_closed_by_enumeration(const PretorsionContext& ctx, const IndexSet& t,
                                                    std::size_t budget) {
  const Field f = ctx.catalog().field().characteristic() == 0 ? Field::prime(2) : ctx.catalog().field();
  std::vector<Representation> members;
  for (std::size_t i : members_of(t)) members.push_back(ctx.module(i).over_field(f));
  auto inside = [&](const Representation& x) { return x.is_zero() || trace(members, x).is_full(); };

  for (std::size_t e = 0; e < ctx.size(); ++e) {
    if (t.test(e)) continue;
    const Representation m = ctx.module(e).over_field(f);
    std::vector<std::vector<Subspace>> choices;
    std::size_t total = 1;
    for (std::size_t d : m.dims()) {
      choices.push_back(all_subspaces(f, d));
      total *= choices.back().size();
      if (total > budget) {
        throw Error(Errc::SubmoduleEnumerationTooLarge,
                    "module " + ctx.catalog().label(e) + " has more than " + std::to_string(budget) + " subspace tuples");
      }
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    for (std::size_t it = 0; it < total; ++it) {
      std::vector<Subspace> spaces;
      for (std::size_t v = 0; v < choices.size(); ++v) spaces.push_back(choices[v][idx[v]]);
      if (arrow_stable(m, spaces)) {
        Submodule u(m, spaces);
        if (inside(submodule_as_module(u).module) && inside(quotient_by(m, u).module)) {
          return ExtensionClosure{false, e, std::move(u)};
        }
      }
      for (std::size_t v = 0; v < idx.size() && ++idx[v] == choices[v].size(); ++v) idx[v] = 0;
    }
  }
  return {};
}

FiniteLattice build_torsion_lattice(const PretorsionContext& ctx, const FiniteLattice& pretorsion) {
  std::vector<IndexSet> elements;
  for (const auto& e : pretorsion.elements())
    if (is_extension_closed(ctx, e).closed) elements.push_back(e);
  FiniteLattice l = FiniteLattice::from_family(ctx.size(), std::move(elements));
  label_with_add(ctx, l);
  return l;
}

std::string route_name(TheoryRoute r) {
  switch (r) {
    case TheoryRoute::Cond1: return "cond1";
    case TheoryRoute::Cond3: return "cond3";
    case TheoryRoute::FullCheck: return "full";
  }
  return "?";
}

std::string group_name(TheoryGroup g) {
  switch (g) {
    case TheoryGroup::FullSide: return "full_side";
    case TheoryGroup::Classic: return "classic";
    case TheoryGroup::Cond1: return "cond1";
    case TheoryGroup::Cond3: return "cond3";
    case TheoryGroup::Full: return "full";
  }
  return "?";
}

namespace {

// Modules X (indecomposable) with Hom(T, X) = 0 for every T in t.
IndexSet right_perp(const PretorsionContext& ctx, const IndexSet& t) {
  IndexSet out(ctx.size());
  for (std::size_t x = 0; x < ctx.size(); ++x) {
    bool zero = true;
    for (std::size_t i : members_of(t)) zero = zero && ctx.hom(i, x).dim() == 0;
    if (zero) out.set(x);
  }
  return out;
}

IndexSet left_perp(const PretorsionContext& ctx, const IndexSet& f) {
  IndexSet out(ctx.size());
  for (std::size_t x = 0; x < ctx.size(); ++x) {
    bool zero = true;
    for (std::size_t i : members_of(f)) zero = zero && ctx.hom(x, i).dim() == 0;
    if (zero) out.set(x);
  }
  return out;
}

// Coefficient vectors c (over a Hom basis) whose image under `lin` lies in w.
std::vector<Vector> preimage_of(const std::vector<Vector>& images, const Subspace& w, Field f) {
  if (images.empty()) return {};
  std::vector<Vector> reduced;
  for (const auto& v : images) reduced.push_back(w.reduce(v));
  const Matrix m = Matrix::from_rows(f, w.ambient_dim(), reduced).transpose();
  const Subspace k = kernel_basis(m);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < k.dim(); ++i) out.push_back(k.basis_vector(i));
  return out;
}

bool fail(std::string* reason, std::string text) {
  if (reason) *reason = std::move(text);
  return false;
}

std::vector<SequenceData> sequence_data(const PretorsionContext& ctx, const TheoryCandidate& cand) {
  std::vector<SequenceData> out;
  for (std::size_t m = 0; m < ctx.size(); ++m) {
    const Submodule t = ctx.trace_in(cand.torsion, m);
    const Submodule r = ctx.reject_in(cand.free, m);
    std::vector<std::size_t> fd = ctx.module(m).dims();
    const auto rd = r.dims();
    for (std::size_t v = 0; v < fd.size(); ++v) fd[v] -= rd[v];
    out.push_back(SequenceData{t.dims(), fd});
  }
  return out;
}

}  // namespace

bool full_pretorsion_check(const PretorsionContext& ctx, const TheoryCandidate& cand, std::string* reason) {
  const IndexSet z = cand.trivial();
  const Field f = ctx.catalog().field();
  for (std::size_t i : members_of(cand.torsion)) {
    for (std::size_t j : members_of(cand.free)) {
      if (ctx.z_trivial_subspace(i, j, z).dim() != ctx.hom(i, j).dim()) {
        return fail(reason, "Hom(" + ctx.catalog().label(i) + ", " + ctx.catalog().label(j) + ") is not Z-trivial");
      }
    }
  }
  for (std::size_t m = 0; m < ctx.size(); ++m) {
    const Representation& mod = ctx.module(m);
    const std::string name = ctx.catalog().label(m);
    const Submodule t = ctx.trace_in(cand.torsion, m);
    const Submodule r = ctx.reject_in(cand.free, m);
    const Inclusion tin = submodule_as_module(t);
    const Inclusion rin = submodule_as_module(r);
    const Quotient q = quotient_by(mod, r);
    if (!ctx.in_gen(cand.torsion, tin.module)) return fail(reason, "trace in " + name + " is outside T");
    if (!ctx.in_cogen(cand.free, q.module)) return fail(reason, "free quotient of " + name + " is outside F");
    const Morphism composite = compose(q.projection, tin.inclusion);
    if (!ctx.z_trivial_subspace(tin.module, q.module, z).contains(flatten(composite))) {
      return fail(reason, "composite through " + name + " is not Z-trivial");
    }
    for (std::size_t x = 0; x < ctx.size(); ++x) {
      // Z-kernel: maps X -> M that become Z-trivial in M/r land in the trace.
      const HomSpace& into = ctx.hom(x, m);
      std::vector<Vector> images;
      for (const auto& l : into.basis) images.push_back(flatten(compose(q.projection, l)));
      const Subspace triv_q = ctx.z_trivial_subspace(ctx.module(x), q.module, z);
      for (const auto& c : preimage_of(images, triv_q, f)) {
        if (!t.contains(image(linear_combination(into.basis, c), mod))) {
          return fail(reason, "trace in " + name + " is not a Z-kernel (test object " + ctx.catalog().label(x) + ")");
        }
      }
      // Z-cokernel: maps M -> Y that are Z-trivial on the trace vanish on the reject.
      const HomSpace& out = ctx.hom(m, x);
      images.clear();
      for (const auto& mu : out.basis) images.push_back(flatten(compose(mu, tin.inclusion)));
      const Subspace triv_t = ctx.z_trivial_subspace(tin.module, ctx.module(x), z);
      for (const auto& c : preimage_of(images, triv_t, f)) {
        if (!compose(linear_combination(out.basis, c), rin.inclusion).is_zero()) {
          return fail(reason, "free quotient of " + name + " is not a Z-cokernel (test object " +
                                  ctx.catalog().label(x) + ")");
        }
      }
    }
  }
  return true;
}

TheoryVerdict is_pretorsion_theory(const PretorsionContext& ctx, const TheoryCandidate& cand, bool audit) {
  if (ctx.gen_closure(cand.torsion) != cand.torsion) {
    throw Error(Errc::NotGenClosed, ctx.add_label(cand.torsion) + " is not closed under quotients");
  }
  if (ctx.cogen_closure(cand.free) != cand.free) {
    throw Error(Errc::NotCogenClosed, ctx.add_label(cand.free) + " is not closed under submodules");
  }
  const IndexSet all = ctx.full_set();
  const IndexSet z = cand.trivial();

  TheoryVerdict v;
  std::optional<TheoryRoute> route;
  TheoryGroup group = TheoryGroup::Full;
  std::string reason;

  if (cand.torsion == all || cand.free == all) {
    route = TheoryRoute::Cond3;
    group = TheoryGroup::FullSide;
  } else {
    const bool lperp_ok = left_perp(ctx, cand.free).is_subset_of(cand.torsion);
    const bool rperp_ok = right_perp(ctx, cand.torsion).is_subset_of(cand.free);
    const bool classic_pair = is_extension_closed(ctx, cand.torsion).closed &&
                              is_extension_closed_free(ctx, cand.free).closed;
    if (classic_pair) {
      if (lperp_ok != rperp_ok) throw Error(Errc::InvariantBreach, "perpendicular conditions disagree on a torsion pair");
      if (lperp_ok) {
        route = TheoryRoute::Cond1;
        group = z.none() ? TheoryGroup::Classic : TheoryGroup::Cond1;
      } else {
        reason = "torsion and torsion-free, but the left perpendicular of F is not inside T";
      }
    } else if (!lperp_ok || !rperp_ok) {
      reason = !rperp_ok ? "right perpendicular of T is not inside F" : "left perpendicular of F is not inside T";
    } else if ((cand.torsion | cand.free) == all) {
      route = TheoryRoute::Cond3;
      group = TheoryGroup::Cond3;
    } else {
      if (full_pretorsion_check(ctx, cand, &reason)) {
        route = TheoryRoute::FullCheck;
        group = TheoryGroup::Full;
      }
    }
  }

  if (audit) {
    std::string audit_reason;
    const bool full = full_pretorsion_check(ctx, cand, &audit_reason);
    if (full != route.has_value()) {
      throw Error(Errc::InvariantBreach, "full check disagrees on (" + ctx.add_label(cand.torsion) + ", " +
                                             ctx.add_label(cand.free) + "): " +
                                             (full ? "accepted" : audit_reason));
    }
  }
  if (!route) {
    v.reason = reason;
    return v;
  }
  v.accepted = true;
  v.theory = VerifiedPretorsionTheory{cand, *route, group, sequence_data(ctx, cand)};
  return v;
}

std::vector<VerifiedPretorsionTheory> enumerate_pretorsion_theories(const PretorsionContext& ctx,
                                                                     const FiniteLattice& pretorsion,
                                                                     const FiniteLattice& pretorsionfree,
                                                                     bool audit) {
  std::vector<VerifiedPretorsionTheory> out;
  for (const auto& t : pretorsion.elements()) {
    for (const auto& f : pretorsionfree.elements()) {
      auto v = is_pretorsion_theory(ctx, TheoryCandidate{t, f}, audit);
      if (v.accepted) out.push_back(std::move(*v.theory));
    }
  }
  return out;
}

JoinIrreducibleReport join_irreducible_report(const PretorsionContext& ctx, const FiniteLattice& pretorsion,
                                              const FiniteLattice& torsion) {
  JoinIrreducibleReport r;
  for (std::size_t i : join_irreducibles(pretorsion).elements) r.pretorsion_ji.push_back(pretorsion.element(i));
  for (std::size_t i : join_irreducibles(torsion).elements) r.torsion_ji.push_back(torsion.element(i));
  for (std::size_t i = 0; i < ctx.size(); ++i) r.gen_of_indecomposables.push_back(ctx.gen_closure(make_index_set(ctx.size(), {i})));

  auto sorted = [](std::vector<IndexSet> v) {
    std::sort(v.begin(), v.end(), index_set_less);
    return v;
  };
  const auto gens = sorted(r.gen_of_indecomposables);
  const bool distinct = std::adjacent_find(gens.begin(), gens.end()) == gens.end();
  r.gen_bijection = distinct && gens == sorted(r.pretorsion_ji);
  r.equal = sorted(r.pretorsion_ji) == sorted(r.torsion_ji);
  r.all_bricks = std::all_of(ctx.catalog().modules().begin(), ctx.catalog().modules().end(),
                             [](const Representation& m) { return is_brick(m); });
  r.lrd_criterion = lrd_criterion(ctx.catalog().algebra()).holds;
  return r;
}

ClosureIdentification distributive_closure_identification(const PretorsionContext& ctx,
                                                          const FiniteLattice& pretorsion,
                                                          const FiniteLattice& torsion) {
  ClosureIdentification out;
  out.pretorsion_size = pretorsion.size();
  const JoinIrreducibles ji = join_irreducibles(torsion);
  const FiniteLattice closure = order_ideal_lattice(ji.poset);
  out.closure_size = closure.size();

  if (!lrd_criterion(ctx.catalog().algebra()).holds) {
    out.failed_hypothesis = is_distributive(pretorsion).holds ? "not locally representation directed"
                                                              : "pretorsion lattice is not distributive";
    return out;
  }
  std::vector<std::size_t> phi;
  std::vector<bool> hit(closure.size(), false);
  for (const auto& t : pretorsion.elements()) {
    IndexSet ideal(ji.elements.size());
    for (std::size_t k = 0; k < ji.elements.size(); ++k)
      if (torsion.element(ji.elements[k]).is_subset_of(t)) ideal.set(k);
    const auto idx = closure.index_of(ideal);
    if (!idx || hit[*idx]) {
      out.failed_hypothesis = "map to the order ideals is not a bijection";
      return out;
    }
    hit[*idx] = true;
    phi.push_back(*idx);
  }
  if (phi.size() != closure.size()) {
    out.failed_hypothesis = "map to the order ideals is not surjective";
    return out;
  }
  for (std::size_t a = 0; a < pretorsion.size(); ++a)
    for (std::size_t b = 0; b < pretorsion.size(); ++b)
      if (pretorsion.leq(a, b) != closure.leq(phi[a], phi[b])) {
        out.failed_hypothesis = "map to the order ideals is not an order isomorphism";
        return out;
      }
  out.identified = true;
  out.phi = std::move(phi);
  return out;
}

EpiRealization epi_poset_realization(const PretorsionContext& ctx, const FiniteLattice& pretorsion) {
  if (!is_distributive(pretorsion).holds) {
    throw Error(Errc::HypothesisNotMet, "the pretorsion lattice is not distributive");
  }
  const std::size_t n = ctx.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        leq[i][j] = true;
        continue;
      }
      const bool generated = ctx.trace_in(make_index_set(n, {j}), i).is_full();
      leq[i][j] = generated && find_epimorphism(ctx.module(j), ctx.module(i)).has_value();
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i]) {
        throw Error(Errc::PreorderNotAntisymmetric,
                    ctx.catalog().label(i) + " and " + ctx.catalog().label(j) + " are epimorphic images of each other");
      }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(ctx.catalog().label(i));
  Poset poset(std::move(labels), std::move(leq));
  FiniteLattice ideals = order_ideal_lattice(poset);
  std::vector<std::string> ideal_labels;
  for (const auto& e : ideals.elements()) ideal_labels.push_back(ctx.add_label(e));
  ideals.set_labels(std::move(ideal_labels));
  const bool same = ideals.elements() == pretorsion.elements();
  auto iso = lattice_isomorphic(ideals, pretorsion);
  return EpiRealization{std::move(poset), std::move(ideals), same, std::move(iso)};
}

}  // namespace ptl
