#include "ptlattice/lattice.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "ptlattice/error.hpp"

namespace ptl {

IndexSet make_index_set(std::size_t ground, const std::vector<std::size_t>& members) {
  IndexSet s(ground);
  for (std::size_t i : members) s.set(i);
  return s;
}

std::vector<std::size_t> members_of(const IndexSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

bool index_set_less(const IndexSet& a, const IndexSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return members_of(a) < members_of(b);
}

std::size_t IndexSetHash::operator()(const IndexSet& s) const noexcept {
  std::size_t seed = s.size();
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(s, std::back_inserter(blocks));
  for (auto b : blocks) boost::hash_combine(seed, b);
  return seed;
}

FiniteLattice FiniteLattice::generate_from_closure(std::size_t ground, const ClosureFn& closure,
                                                   const std::vector<IndexSet>& generators) {
  std::unordered_map<IndexSet, IndexSet, IndexSetHash> memo;
  auto close = [&](const IndexSet& s) -> IndexSet {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    IndexSet c = closure(s);
    if (c.size() != ground || !s.is_subset_of(c)) {
      throw Error(Errc::ClosureNotIdempotent, "closure is not extensive");
    }
    memo.emplace(s, c);
    return c;
  };
  auto checked = [&](const IndexSet& c) {
    if (close(c) != c) throw Error(Errc::ClosureNotIdempotent, "closure of a closed set changed it");
  };

  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::vector<IndexSet> elements;
  auto add = [&](const IndexSet& c) {
    if (seen.insert(c).second) {
      checked(c);
      elements.push_back(c);
    }
  };
  add(close(IndexSet(ground)));
  for (const auto& g : generators) add(close(g));
  // Worklist: every new element is joined with all earlier ones.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const IndexSet u = elements[i] | elements[j];
      add(close(u));
    }
  }
  return from_family(ground, std::move(elements), close);
}

FiniteLattice FiniteLattice::from_family(std::size_t ground, std::vector<IndexSet> elements,
                                         const ClosureFn& closure) {
  if (elements.empty()) throw Error(Errc::InvalidPoset, "empty family");
  std::sort(elements.begin(), elements.end(), index_set_less);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  FiniteLattice l;
  l.ground_ = ground;
  l.elements_ = std::move(elements);
  const std::size_t n = l.size();
  for (const auto& e : l.elements_) {
    if (e.size() != ground) throw Error(Errc::InvalidPoset, "element over a different ground set");
  }
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(l.elements_[i], i);
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.elements_[0].is_subset_of(l.elements_[i]) || !l.elements_[i].is_subset_of(l.elements_[n - 1])) {
      throw Error(Errc::InvalidPoset, "family has no least or no greatest member");
    }
  }
  auto lookup = [&](const IndexSet& s, const char* what) -> std::uint32_t {
    auto it = index.find(s);
    if (it == index.end()) throw Error(Errc::InvariantBreach, std::string("family not closed under ") + what);
    return static_cast<std::uint32_t>(it->second);
  };
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const IndexSet& x = l.elements_[i];
      const IndexSet& y = l.elements_[j];
      const std::uint32_t m = lookup(x & y, "intersection");
      std::uint32_t jn = 0;
      if (closure) {
        jn = lookup(closure(x | y), "joins");
      } else {
        const IndexSet u = x | y;
        IndexSet lub = l.elements_[n - 1];
        for (const auto& e : l.elements_)
          if (u.is_subset_of(e)) lub &= e;
        jn = lookup(lub, "least upper bounds");
      }
      l.meet_[i * n + j] = l.meet_[j * n + i] = m;
      l.join_[i * n + j] = l.join_[j * n + i] = jn;
    }
  }
  l.lower_.assign(n, {});
  l.upper_.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !l.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (k != i && k != j && l.leq(i, k) && l.leq(k, j)) cover = false;
      }
      if (cover) {
        l.lower_[j].push_back(i);
        l.upper_[i].push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    for (std::size_t m : members_of(l.elements_[i])) {
      s += (first ? "" : ",") + std::to_string(m);
      first = false;
    }
    l.labels_.push_back(s + "}");
  }
  for (std::size_t i = 0; i < n; ++i) l.sorted_index_.emplace_back(l.elements_[i], i);
  std::sort(l.sorted_index_.begin(), l.sorted_index_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return l;
}

std::optional<std::size_t> FiniteLattice::index_of(const IndexSet& s) const {
  auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), s,
                             [](const auto& a, const IndexSet& key) { return a.first < key; });
  if (it != sorted_index_.end() && it->first == s) return it->second;
  return std::nullopt;
}

void FiniteLattice::set_labels(std::vector<std::string> labels) {
  if (labels.size() != size()) throw Error(Errc::DimensionMismatch, "label count differs from lattice size");
  labels_ = std::move(labels);
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FiniteLattice& l) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < l.size(); ++j)
    for (std::size_t i : l.lower_covers(j)) out.emplace_back(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

DistributivityResult is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return {false, std::array<std::size_t, 3>{x, y, z}};
        }
      }
  return {};
}

SemidistributivityResult is_semidistributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  SemidistributivityResult r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        if (!r.join_witness && l.join(x, y) == l.join(x, z) && l.join(x, l.meet(y, z)) != l.join(x, y)) {
          r.join_witness = std::array<std::size_t, 3>{x, y, z};
        }
        if (!r.meet_witness && l.meet(x, y) == l.meet(x, z) && l.meet(x, l.join(y, z)) != l.meet(x, y)) {
          r.meet_witness = std::array<std::size_t, 3>{x, y, z};
        }
      }
  r.join_semidistributive = !r.join_witness;
  r.meet_semidistributive = !r.meet_witness;

  for (std::size_t j = 0; j < n; ++j) {
    if (l.lower_covers(j).size() != 1) continue;
    const std::size_t below = l.lower_covers(j)[0];
    KappaFailure f{j, {}};
    for (std::size_t y = 0; y < n; ++y)
      if (l.meet(y, j) == below) f.set.push_back(y);
    const bool has_max = std::any_of(f.set.begin(), f.set.end(), [&](std::size_t m) {
      return std::all_of(f.set.begin(), f.set.end(), [&](std::size_t y) { return l.leq(y, m); });
    });
    if (!has_max) r.meet_failures.push_back(std::move(f));
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (l.upper_covers(m).size() != 1) continue;
    const std::size_t above = l.upper_covers(m)[0];
    KappaFailure f{m, {}};
    for (std::size_t y = 0; y < n; ++y)
      if (l.join(y, m) == above) f.set.push_back(y);
    const bool has_min = std::any_of(f.set.begin(), f.set.end(), [&](std::size_t b) {
      return std::all_of(f.set.begin(), f.set.end(), [&](std::size_t y) { return l.leq(b, y); });
    });
    if (!has_min) r.join_failures.push_back(std::move(f));
  }
  return r;
}

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n) throw Error(Errc::InvalidPoset, "relation size differs from node count");
  for (const auto& row : leq_)
    if (row.size() != n) throw Error(Errc::InvalidPoset, "relation matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw Error(Errc::InvalidPoset, "not reflexive at " + labels_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) {
        throw Error(Errc::InvalidPoset, "not antisymmetric: " + labels_[i] + ", " + labels_[j]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) throw Error(Errc::InvalidPoset, "not transitive");
      }
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq_[i][k] && leq_[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

JoinIrreducibles join_irreducibles(const FiniteLattice& l) {
  JoinIrreducibles out;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.lower_covers(i).size() == 1) out.elements.push_back(i);
  const std::size_t k = out.elements.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(l.label(out.elements[a]));
    for (std::size_t b = 0; b < k; ++b) leq[a][b] = l.leq(out.elements[a], out.elements[b]);
  }
  out.poset = Poset(std::move(labels), std::move(leq));
  return out;
}

FiniteLattice order_ideal_lattice(const Poset& p) {
  const std::size_t n = p.size();
  // Linear extension: sort by number of elements below.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto below = [&](std::size_t i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) c += p.leq(j, i) ? 1 : 0;
    return c;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below(a) < below(b); });

  std::vector<IndexSet> ideals;
  IndexSet cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      ideals.push_back(cur);
      return;
    }
    const std::size_t v = order[pos];
    rec(pos + 1);
    bool allowed = true;
    for (std::size_t u = 0; u < n && allowed; ++u)
      if (u != v && p.leq(u, v) && !cur.test(u)) allowed = false;
    if (allowed) {
      cur.set(v);
      rec(pos + 1);
      cur.reset(v);
    }
  };
  rec(0);
  FiniteLattice l = FiniteLattice::from_family(n, std::move(ideals), [](const IndexSet& s) { return s; });
  std::vector<std::string> labels;
  for (const auto& e : l.elements()) {
    std::string s = "{";
    bool first = true;
    for (std::size_t m : members_of(e)) {
      s += (first ? "" : ", ") + p.label(m);
      first = false;
    }
    labels.push_back(s + "}");
  }
  l.set_labels(std::move(labels));
  return l;
}

namespace {

struct ElementInvariant {
  std::size_t below = 0;
  std::size_t above = 0;
  std::size_t lower_covers = 0;
  std::size_t upper_covers = 0;
  friend auto operator<=>(const ElementInvariant&, const ElementInvariant&) = default;
};

std::vector<ElementInvariant> invariants(const FiniteLattice& l) {
  std::vector<ElementInvariant> out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l.leq(j, i)) ++out[i].below;
      if (l.leq(i, j)) ++out[i].above;
    }
    out[i].lower_covers = l.lower_covers(i).size();
    out[i].upper_covers = l.upper_covers(i).size();
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  const auto ia = invariants(a);
  const auto ib = invariants(b);
  {
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Assign a's elements in index order (a linear extension) to compatible b elements.
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || ia[i] != ib[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        if (a.leq(k, i) != b.leq(map[k], c) || a.leq(i, k) != b.leq(c, map[k])) ok = false;
      }
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (rec(i + 1)) return true;
      used[c] = false;
    }
    map[i] = n;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t ga = a.ground_size();
  const std::size_t ground = ga + b.ground_size();
  auto embed = [&](const IndexSet& x, const IndexSet& y) {
    IndexSet s(ground);
    for (std::size_t i : members_of(x)) s.set(i);
    for (std::size_t i : members_of(y)) s.set(ga + i);
    return s;
  };
  std::vector<IndexSet> elements;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) elements.push_back(embed(x, y));
  // Join componentwise via least members above each half.
  auto least_above = [](const FiniteLattice& l, const IndexSet& u) {
    IndexSet lub = l.element(l.top());
    for (const auto& e : l.elements())
      if (u.is_subset_of(e)) lub &= e;
    return lub;
  };
  auto closure = [&](const IndexSet& s) {
    IndexSet x(ga);
    IndexSet y(b.ground_size());
    for (std::size_t i : members_of(s)) {
      if (i < ga) x.set(i); else y.set(i - ga);
    }
    return embed(least_above(a, x), least_above(b, y));
  };
  FiniteLattice l = FiniteLattice::from_family(ground, std::move(elements), closure);
  std::vector<std::string> labels;
  for (const auto& e : l.elements()) {
    IndexSet x(ga);
    IndexSet y(b.ground_size());
    for (std::size_t i : members_of(e)) {
      if (i < ga) x.set(i); else y.set(i - ga);
    }
    labels.push_back("(" + a.label(*a.index_of(x)) + ", " + b.label(*b.index_of(y)) + ")");
  }
  l.set_labels(std::move(labels));
  return l;
}

FiniteLattice chain_lattice(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidPoset, "a lattice has at least one element");
  std::vector<IndexSet> elements;
  for (std::size_t k = 0; k < n; ++k) {
    IndexSet s(n - 1);
    for (std::size_t i = 0; i < k; ++i) s.set(i);
    elements.push_back(s);
  }
  return FiniteLattice::from_family(n - 1, std::move(elements));
}

}  // namespace ptl
