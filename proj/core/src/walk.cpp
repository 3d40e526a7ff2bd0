#include "ptlattice/walk.hpp"

#include <algorithm>

namespace ptl {

std::size_t letter_source(const Quiver& q, Letter l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.inverse ? a.target : a.source;
}

std::size_t letter_target(const Quiver& q, Letter l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.inverse ? a.source : a.target;
}

std::size_t StringWalk::end(const Quiver& q) const {
  return letters_.empty() ? start_ : letter_target(q, letters_.back());
}

std::vector<std::size_t> StringWalk::vertices(const Quiver& q) const {
  std::vector<std::size_t> out{start_};
  for (const auto& l : letters_) out.push_back(letter_target(q, l));
  return out;
}

StringWalk StringWalk::inverse(const Quiver& q) const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(Letter{it->arrow, !it->inverse});
  return StringWalk(end(q), std::move(inv));
}

StringWalk StringWalk::canonical(const Quiver& q) const {
  if (letters_.empty()) return *this;
  StringWalk inv = inverse(q);
  return inv.letters_ < letters_ ? inv : *this;
}

std::string StringWalk::to_string(const Quiver& q) const {
  if (letters_.empty()) return "e" + q.vertex_label(start_);
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += q.arrow(letters_[i].arrow).name;
    if (letters_[i].inverse) out += "^-1";
  }
  return out;
}

bool can_append(const BoundQuiverAlgebra& a, const std::vector<Letter>& letters, std::size_t end, Letter l) {
  const Quiver& q = a.quiver();
  if (letter_source(q, l) != end) return false;
  if (!letters.empty() && letters.back().arrow == l.arrow && letters.back().inverse != l.inverse) return false;
  // Direct path spelled by the trailing run of letters with l's orientation.
  Path run;
  for (auto it = letters.rbegin(); it != letters.rend() && it->inverse == l.inverse; ++it) run.push_back(it->arrow);
  std::reverse(run.begin(), run.end());
  run.push_back(l.arrow);
  if (l.inverse) std::reverse(run.begin(), run.end());
  for (const auto& r : a.relations()) {
    if (r.size() > run.size()) continue;
    // Only relations touching the new letter matter; the rest were checked before.
    const bool hit = l.inverse ? std::equal(r.begin(), r.end(), run.begin())
                               : std::equal(r.rbegin(), r.rend(), run.rbegin());
    if (hit) return false;
  }
  return true;
}

bool is_string(const BoundQuiverAlgebra& a, const StringWalk& w) {
  const Quiver& q = a.quiver();
  if (w.start() >= q.num_vertices()) return false;
  std::vector<Letter> prefix;
  std::size_t end = w.start();
  for (const auto& l : w.letters()) {
    if (l.arrow >= q.num_arrows() || !can_append(a, prefix, end, l)) return false;
    prefix.push_back(l);
    end = letter_target(q, l);
  }
  return true;
}

}  // namespace ptl
