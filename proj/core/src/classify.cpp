#include "ptlattice/classify.hpp"

#include <algorithm>
#include <numeric>

#include "ptlattice/error.hpp"

namespace ptl {

namespace {

std::string arrow_list(const Quiver& q, const std::vector<std::size_t>& arrows) {
  std::string out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += ", ";
    out += q.arrow(arrows[i]).name;
  }
  return out;
}

bool kills(const BoundQuiverAlgebra& a, std::size_t first, std::size_t second) {
  return a.is_relation(Path{first, second});
}

// Primitive root length of a cyclic letter sequence.
std::size_t primitive_period(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return d;
  }
  return n;
}

bool powers_are_strings(const BoundQuiverAlgebra& a, const StringWalk& w) {
  // Any window of length <= maxlen + 1 meets at most maxlen + 2 consecutive copies.
  const std::size_t copies = std::max<std::size_t>(a.max_relation_length(), 1) + 2;
  std::vector<Letter> power;
  for (std::size_t k = 0; k < copies; ++k) power.insert(power.end(), w.letters().begin(), w.letters().end());
  return is_string(a, StringWalk(w.start(), std::move(power)));
}

StringWalk canonical_rotation(const Quiver& q, const StringWalk& w) {
  StringWalk best = w;
  for (const StringWalk& base : {w, w.inverse(q)}) {
    const auto& ls = base.letters();
    for (std::size_t r = 0; r < ls.size(); ++r) {
      std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(r), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(r));
      const std::size_t start = letter_source(q, rot.front());
      StringWalk cand(start, std::move(rot));
      if (cand.letters() < best.letters()) best = cand;
    }
  }
  return best;
}

}  // namespace

StringAlgebraVerdict is_string_algebra(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    const auto in = q.arrows_in(v);
    const auto out = q.arrows_out(v);
    if (in.size() > 2) {
      return {false, "a", "vertex " + q.vertex_label(v) + " has " + std::to_string(in.size()) + " entering arrows"};
    }
    if (out.size() > 2) {
      return {false, "a", "vertex " + q.vertex_label(v) + " has " + std::to_string(out.size()) + " exiting arrows"};
    }
  }
  for (std::size_t alpha = 0; alpha < q.num_arrows(); ++alpha) {
    std::vector<std::size_t> after;
    std::vector<std::size_t> before;
    for (std::size_t beta : q.arrows_out(q.arrow(alpha).target))
      if (!kills(a, alpha, beta)) after.push_back(beta);
    for (std::size_t gamma : q.arrows_in(q.arrow(alpha).source))
      if (!kills(a, gamma, alpha)) before.push_back(gamma);
    if (after.size() > 1) {
      return {false, "b", "arrow " + q.arrow(alpha).name + " continues by " + arrow_list(q, after) + " modulo I"};
    }
    if (before.size() > 1) {
      return {false, "b", "arrow " + q.arrow(alpha).name + " is preceded by " + arrow_list(q, before) + " modulo I"};
    }
  }
  return {};
}

std::optional<StringWalk> find_band(const BoundQuiverAlgebra& a) {
  const auto verdict = is_string_algebra(a);
  if (!verdict.holds) throw Error(Errc::NotStringAlgebra, verdict.detail);
  const Quiver& q = a.quiver();
  if (q.num_arrows() == 0) return std::nullopt;

  // Whether a letter can follow depends only on the last m letters, so a
  // string longer than m + (number of such suffixes) contains a pumpable
  // closed segment, i.e. a band no longer than the cap.
  const std::size_t m = std::max<std::size_t>(a.max_relation_length(), 2) - 1;
  std::size_t states = 1;
  for (std::size_t i = 0; i < m; ++i) states *= 2 * q.num_arrows();
  const std::size_t cap = m + states + 1;
  constexpr std::size_t kLevelBudget = 1'000'000;

  std::vector<StringWalk> level;
  for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
    for (bool inv : {false, true}) {
      Letter l{arrow, inv};
      level.emplace_back(letter_source(q, l), std::vector<Letter>{l});
    }
  }
  for (std::size_t len = 1; !level.empty(); ++len) {
    if (len > cap) throw Error(Errc::InvariantBreach, "string search exceeded the pumping bound without a band");
    std::optional<StringWalk> best;
    for (const auto& w : level) {
      if (w.end(q) != w.start()) continue;
      if (primitive_period(w.letters()) != w.length()) continue;
      if (!powers_are_strings(a, w)) continue;
      StringWalk c = canonical_rotation(q, w);
      if (!best || c.letters() < best->letters()) best = c;
    }
    if (best) return best;
    std::vector<StringWalk> next;
    for (const auto& w : level) {
      const std::size_t end = w.end(q);
      for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
        for (bool inv : {false, true}) {
          Letter l{arrow, inv};
          if (!can_append(a, w.letters(), end, l)) continue;
          std::vector<Letter> ext = w.letters();
          ext.push_back(l);
          next.emplace_back(w.start(), std::move(ext));
        }
      }
    }
    if (next.size() > kLevelBudget) throw Error(Errc::SearchBudgetExceeded, "band search level too large");
    level = std::move(next);
  }
  return std::nullopt;
}

DistributivityVerdict distributivity_criterion(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    const auto in = q.arrows_in(v);
    const auto out = q.arrows_out(v);
    const std::string label = q.vertex_label(v);
    if (in.size() >= 2) {
      std::vector<std::size_t> w(in.begin(), in.begin() + 2);
      return {false, ForbiddenConfiguration{"i", v, w, "two arrows enter vertex " + label + ": " + arrow_list(q, w)}};
    }
    if (out.size() >= 3) {
      std::vector<std::size_t> w(out.begin(), out.begin() + 3);
      return {false, ForbiddenConfiguration{"ii", v, w, "three arrows leave vertex " + label + ": " + arrow_list(q, w)}};
    }
    if (in.size() == 1 && out.size() == 2) {
      const std::size_t alpha = in[0];
      if (!kills(a, alpha, out[0]) && !kills(a, alpha, out[1])) {
        std::vector<std::size_t> w{alpha, out[0], out[1]};
        return {false, ForbiddenConfiguration{
                           "iii", v, w,
                           "at vertex " + label + " neither " + q.arrow(alpha).name + " " + q.arrow(out[0]).name +
                               " nor " + q.arrow(alpha).name + " " + q.arrow(out[1]).name + " lies in I"}};
      }
    }
  }
  return {};
}

LrdVerdict lrd_criterion(const BoundQuiverAlgebra& a) {
  const auto dist = distributivity_criterion(a);
  if (!dist.holds) return {false, "distributivity criterion fails: " + dist.witness->description};
  const Quiver& q = a.quiver();
  for (const auto& arrow : q.arrows()) {
    if (arrow.source == arrow.target) return {false, "loop " + arrow.name + " at vertex " + q.vertex_label(arrow.source)};
  }
  // Every cycle lies in I iff no nontrivial residue path is closed.
  for (const auto& p : a.path_basis()) {
    if (!p.arrows.empty() && p.source == p.target) return {false, "cycle " + a.path_name(p) + " is not in I"};
  }
  return {};
}

std::vector<BoundQuiverAlgebra> connected_components(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  const std::size_t n = q.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& arrow : q.arrows()) {
    const std::size_t ra = find(arrow.source);
    const std::size_t rb = find(arrow.target);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<BoundQuiverAlgebra> out;
  std::vector<bool> done(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (done[root]) continue;
    done[root] = true;
    Quiver sub;
    std::vector<std::size_t> vmap(n, n);
    for (std::size_t u = 0; u < n; ++u)
      if (find(u) == root) vmap[u] = sub.add_vertex(q.vertex_label(u));
    std::vector<std::size_t> amap(q.num_arrows(), q.num_arrows());
    for (std::size_t i = 0; i < q.num_arrows(); ++i) {
      const Arrow& arrow = q.arrow(i);
      if (find(arrow.source) == root) amap[i] = sub.add_arrow(arrow.name, vmap[arrow.source], vmap[arrow.target]);
    }
    std::vector<Path> rels;
    for (const auto& r : a.relations()) {
      if (find(q.arrow(r.front()).source) != root) continue;
      Path p;
      for (std::size_t arrow : r) p.push_back(amap[arrow]);
      rels.push_back(std::move(p));
    }
    out.push_back(validate_admissible(sub, rels));
  }
  return out;
}

ClassificationReport classify(const BoundQuiverAlgebra& a) {
  ClassificationReport r;
  r.string_algebra = is_string_algebra(a);
  if (r.string_algebra.holds) r.band = find_band(a);
  r.distributive = distributivity_criterion(a);
  r.lrd = lrd_criterion(a);
  r.components = connected_components(a);
  return r;
}

}  // namespace ptl
