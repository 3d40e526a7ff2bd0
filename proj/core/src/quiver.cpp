#include "ptlattice/quiver.hpp"

#include <algorithm>
#include <set>

#include "ptlattice/error.hpp"

namespace ptl {

std::size_t Quiver::add_vertex(std::string label) {
  if (find_vertex(label)) throw Error(Errc::InvalidQuiver, "duplicate vertex label '" + label + "'");
  vertices_.push_back(std::move(label));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::size_t source, std::size_t target) {
  if (find_arrow(name)) throw Error(Errc::InvalidQuiver, "duplicate arrow name '" + name + "'");
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw Error(Errc::InvalidQuiver, "arrow '" + name + "' has an undeclared endpoint");
  }
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrows_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::string_view source, std::string_view target) {
  const auto s = find_vertex(source);
  const auto t = find_vertex(target);
  if (!s || !t) throw Error(Errc::InvalidQuiver, "arrow '" + name + "' has an undeclared endpoint");
  return add_arrow(std::move(name), *s, *t);
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> Quiver::arrows_out(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::arrows_in(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v) out.push_back(i);
  return out;
}

std::size_t BoundQuiverAlgebra::max_relation_length() const noexcept {
  std::size_t m = 0;
  for (const auto& r : relations_) m = std::max(m, r.size());
  return m;
}

bool BoundQuiverAlgebra::is_composable(const Path& p) const {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= quiver_.num_arrows()) return false;
    if (i > 0 && quiver_.arrow(p[i - 1]).target != quiver_.arrow(p[i]).source) return false;
  }
  return true;
}

bool BoundQuiverAlgebra::contains_relation(const Path& p) const {
  for (const auto& r : relations_) {
    if (r.size() <= p.size() && std::search(p.begin(), p.end(), r.begin(), r.end()) != p.end()) return true;
  }
  return false;
}

bool BoundQuiverAlgebra::is_relation(const Path& p) const {
  return std::find(relations_.begin(), relations_.end(), p) != relations_.end();
}

std::optional<std::size_t> BoundQuiverAlgebra::basis_index(std::size_t source, const Path& p) const {
  auto it = index_.find({source, p});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> BoundQuiverAlgebra::basis_paths_from(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].source == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> BoundQuiverAlgebra::basis_paths_to(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].target == v) out.push_back(i);
  return out;
}

std::string BoundQuiverAlgebra::path_name(const BasisPath& p) const {
  if (p.arrows.empty()) return "e" + quiver_.vertex_label(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ' ';
    out += quiver_.arrow(p.arrows[i]).name;
  }
  return out;
}

BoundQuiverAlgebra validate_admissible(const Quiver& q, const std::vector<Path>& relations) {
  BoundQuiverAlgebra a;
  a.quiver_ = q;
  std::set<Path> seen;
  for (const auto& r : relations) {
    if (r.empty()) throw Error(Errc::RelationNotAPath, "empty relation");
    if (!a.is_composable(r)) throw Error(Errc::RelationNotAPath, "relation arrows do not compose");
    if (r.size() == 1) throw Error(Errc::ArrowInIdeal, "relation is the single arrow '" + q.arrow(r[0]).name + "'");
    if (seen.insert(r).second) a.relations_.push_back(r);
  }

  // A residue path of length L lies on a walk through the automaton whose
  // states are (last arrow, longest suffix that is a proper relation prefix);
  // there are at most |arrows| + |relations|*maxlen states. Surviving past the
  // cutoff below means some state repeats, so a cycle survives all relations.
  const std::size_t cutoff =
      a.relations_.size() * a.max_relation_length() * q.num_arrows() + q.num_arrows();

  std::vector<BasisPath> level;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) level.push_back(BasisPath{v, v, {}});
  std::size_t length = 0;
  while (!level.empty()) {
    if (length > cutoff) {
      throw Error(Errc::NotAdmissible, "residue path '" + a.path_name(level.front()) + "' of length " +
                                           std::to_string(length) + " exceeds the cutoff " +
                                           std::to_string(cutoff) + "; some cycle survives all relations");
    }
    for (const auto& p : level) a.basis_.push_back(p);
    std::vector<BasisPath> next;
    for (const auto& p : level) {
      for (std::size_t arrow : q.arrows_out(p.target)) {
        Path ext = p.arrows;
        ext.push_back(arrow);
        bool dead = false;
        for (const auto& r : a.relations_) {
          if (r.size() <= ext.size() && std::equal(r.rbegin(), r.rend(), ext.rbegin())) {
            dead = true;
            break;
          }
        }
        if (!dead) next.push_back(BasisPath{p.source, q.arrow(arrow).target, std::move(ext)});
      }
    }
    level = std::move(next);
    ++length;
  }
  for (std::size_t i = 0; i < a.basis_.size(); ++i) a.index_[{a.basis_[i].source, a.basis_[i].arrows}] = i;
  return a;
}

BoundQuiverAlgebra validate_admissible(const Quiver& q, const std::vector<std::vector<std::string>>& relations) {
  std::vector<Path> paths;
  for (const auto& names : relations) {
    Path p;
    for (const auto& n : names) {
      const auto idx = q.find_arrow(n);
      if (!idx) throw Error(Errc::RelationNotAPath, "unknown arrow '" + n + "' in relation");
      p.push_back(*idx);
    }
    paths.push_back(std::move(p));
  }
  return validate_admissible(q, paths);
}

AlgebraPtr make_algebra(const Quiver& q, const std::vector<Path>& relations) {
  return std::make_shared<const BoundQuiverAlgebra>(validate_admissible(q, relations));
}

AlgebraPtr make_algebra(const Quiver& q, const std::vector<std::vector<std::string>>& relations) {
  return std::make_shared<const BoundQuiverAlgebra>(validate_admissible(q, relations));
}

}  // namespace ptl
