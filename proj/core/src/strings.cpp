#include "ptlattice/strings.hpp"

#include <set>

#include "ptlattice/classify.hpp"
#include "ptlattice/error.hpp"
#include "ptlattice/module_theory.hpp"

namespace ptl {

std::vector<StringWalk> enumerate_strings(const BoundQuiverAlgebra& a) {
  if (const auto band = find_band(a)) {
    throw Error(Errc::BandPresent, "band " + band->to_string(a.quiver()) + " gives infinitely many indecomposables");
  }
  const Quiver& q = a.quiver();
  std::set<StringWalk> found;
  std::vector<StringWalk> level;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) level.push_back(StringWalk::trivial(v));
  while (!level.empty()) {
    std::vector<StringWalk> next;
    for (const auto& w : level) {
      found.insert(w.canonical(q));
      const std::size_t end = w.end(q);
      for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
        for (bool inv : {false, true}) {
          const Letter l{arrow, inv};
          if (!can_append(a, w.letters(), end, l)) continue;
          std::vector<Letter> ext = w.letters();
          ext.push_back(l);
          next.emplace_back(w.start(), std::move(ext));
        }
      }
    }
    level = std::move(next);
  }
  return {found.begin(), found.end()};
}

Representation string_to_module(const AlgebraPtr& a, Field f, const StringWalk& w) {
  const Quiver& q = a->quiver();
  if (!is_string(*a, w)) throw Error(Errc::InvalidRepresentation, "not a string: " + w.to_string(q));
  const auto visits = w.vertices(q);
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  std::vector<std::size_t> slot;  // basis position of each visit inside its vertex space
  for (std::size_t v : visits) slot.push_back(dims[v]++);
  std::vector<Matrix> maps;
  for (const auto& arrow : q.arrows()) maps.emplace_back(f, dims[arrow.target], dims[arrow.source]);
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Letter l = w.letters()[i];
    // Direct letters map visit i to visit i+1; inverse letters map i+1 to i.
    const std::size_t from = l.inverse ? i + 1 : i;
    const std::size_t to = l.inverse ? i : i + 1;
    maps[l.arrow](slot[to], slot[from]) = f.one();
  }
  Representation m(a, f, std::move(dims), std::move(maps));
  m.set_label(layer_label(m));
  return m;
}

}  // namespace ptl
