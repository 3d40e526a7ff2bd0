#include "ptlattice/brute_force.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "ptlattice/error.hpp"
#include "ptlattice/module_theory.hpp"

namespace ptl {

namespace {

constexpr int kMaxDim = 12;
constexpr std::size_t kEndScanBudget = std::size_t{1} << 16;

// Small dense matrix over GF(p), entries in [0, p).
struct GfMat {
  int r = 0;
  int c = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> e{};

  std::uint8_t& at(int i, int j) { return e[static_cast<std::size_t>(i * kMaxDim + j)]; }
  std::uint8_t at(int i, int j) const { return e[static_cast<std::size_t>(i * kMaxDim + j)]; }
};

using GfMorph = std::vector<GfMat>;

struct GfRep {
  std::vector<int> dims;
  std::vector<GfMat> maps;
};

class Gf {
 public:
  explicit Gf(int p) : p_(p), inv_(static_cast<std::size_t>(p), 0) {
    for (int x = 1; x < p; ++x)
      for (int y = 1; y < p; ++y)
        if (x * y % p == 1) inv_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y);
  }

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] std::uint8_t inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }

  [[nodiscard]] GfMat mul(const GfMat& a, const GfMat& b) const {
    GfMat out;
    out.r = a.r;
    out.c = b.c;
    for (int i = 0; i < a.r; ++i)
      for (int k = 0; k < a.c; ++k) {
        const int x = a.at(i, k);
        if (!x) continue;
        for (int j = 0; j < b.c; ++j) out.at(i, j) = static_cast<std::uint8_t>((out.at(i, j) + x * b.at(k, j)) % p_);
      }
    return out;
  }

  [[nodiscard]] static bool is_zero(const GfMat& m) {
    for (int i = 0; i < m.r; ++i)
      for (int j = 0; j < m.c; ++j)
        if (m.at(i, j)) return false;
    return true;
  }

  [[nodiscard]] int rank(GfMat m) const {
    int rank = 0;
    for (int col = 0; col < m.c && rank < m.r; ++col) {
      int piv = rank;
      while (piv < m.r && !m.at(piv, col)) ++piv;
      if (piv == m.r) continue;
      for (int j = 0; j < m.c; ++j) std::swap(m.at(piv, j), m.at(rank, j));
      const int iv = inv(m.at(rank, col));
      for (int j = 0; j < m.c; ++j) m.at(rank, j) = static_cast<std::uint8_t>(m.at(rank, j) * iv % p_);
      for (int i = 0; i < m.r; ++i) {
        if (i == rank || !m.at(i, col)) continue;
        const int f = m.at(i, col);
        for (int j = 0; j < m.c; ++j) m.at(i, j) = static_cast<std::uint8_t>((m.at(i, j) + (p_ - f) * m.at(rank, j)) % p_);
      }
      ++rank;
    }
    return rank;
  }

  [[nodiscard]] bool nilpotent(const GfMat& m) const {
    GfMat pw = m;
    for (int e = 1; e < m.r; e *= 2) pw = mul(pw, pw);
    return is_zero(pw);
  }

  // Null space basis of a system with `cols` unknowns.
  [[nodiscard]] std::vector<std::vector<std::uint8_t>> nullspace(std::vector<std::vector<std::uint8_t>> rows,
                                                                 std::size_t cols) const {
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && !rows[piv][col]) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      const int iv = inv(rows[rank][col]);
      for (auto& x : rows[rank]) x = static_cast<std::uint8_t>(x * iv % p_);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || !rows[i][col]) continue;
        const int f = rows[i][col];
        for (std::size_t j = 0; j < cols; ++j)
          rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + (p_ - f) * rows[rank][j]) % p_);
      }
      pivot_col.push_back(static_cast<int>(col));
      ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::uint8_t> x(cols, 0);
      x[free] = 1;
      for (std::size_t i = 0; i < rank; ++i)
        x[static_cast<std::size_t>(pivot_col[i])] = static_cast<std::uint8_t>((p_ - rows[i][free]) % p_);
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  int p_;
  std::vector<std::uint8_t> inv_;
};

GfMat zero_mat(int r, int c) {
  GfMat m;
  m.r = r;
  m.c = c;
  return m;
}

std::vector<GfMorph> hom_basis(const Gf& gf, const BoundQuiverAlgebra& a, const GfRep& m, const GfRep& n) {
  const Quiver& q = a.quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dims[v] * m.dims[v]);
  const std::size_t unknowns = offset.back();
  auto var = [&](std::size_t v, int r, int c) { return offset[v] + static_cast<std::size_t>(r * m.dims[v] + c); };
  const int p = gf.p();
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& arrow = q.arrow(i);
    const GfMat& na = n.maps[i];
    const GfMat& ma = m.maps[i];
    for (int r = 0; r < n.dims[arrow.target]; ++r) {
      for (int c = 0; c < m.dims[arrow.source]; ++c) {
        std::vector<std::uint8_t> row(unknowns, 0);
        for (int k = 0; k < n.dims[arrow.source]; ++k) {
          auto& x = row[var(arrow.source, k, c)];
          x = static_cast<std::uint8_t>((x + na.at(r, k)) % p);
        }
        for (int k = 0; k < m.dims[arrow.target]; ++k) {
          auto& x = row[var(arrow.target, r, k)];
          x = static_cast<std::uint8_t>((x + p - ma.at(k, c)) % p);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<GfMorph> out;
  for (const auto& sol : gf.nullspace(std::move(rows), unknowns)) {
    GfMorph f;
    for (std::size_t v = 0; v < nv; ++v) {
      GfMat c = zero_mat(n.dims[v], m.dims[v]);
      for (int r = 0; r < c.r; ++r)
        for (int k = 0; k < c.c; ++k) c.at(r, k) = sol[var(v, r, k)];
      f.push_back(c);
    }
    out.push_back(std::move(f));
  }
  return out;
}

// Calls visit(combination) for coefficient vectors in odometer order until it returns false.
void for_each_combination(const Gf& gf, const std::vector<GfMorph>& basis, std::size_t limit,
                          const std::function<bool(const GfMorph&)>& visit) {
  if (basis.empty()) return;
  const int p = gf.p();
  std::vector<int> digits(basis.size(), 0);
  GfMorph cur = basis[0];
  for (auto& c : cur) c.e.fill(0);
  for (std::size_t it = 0; it < limit; ++it) {
    if (!visit(cur)) return;
    // Increment the odometer and update cur incrementally.
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      // Wrapping p-1 -> 0 also adds one copy of the basis element mod p.
      const bool wraps = digits[i] + 1 == p;
      digits[i] = wraps ? 0 : digits[i] + 1;
      for (std::size_t v = 0; v < cur.size(); ++v) {
        GfMat& c = cur[v];
        const GfMat& b = basis[i][v];
        for (int r = 0; r < c.r; ++r)
          for (int k = 0; k < c.c; ++k) c.at(r, k) = static_cast<std::uint8_t>((c.at(r, k) + b.at(r, k)) % p);
      }
      if (!wraps) break;
    }
    if (i == digits.size()) return;
  }
}

enum class EndKind { Nilpotent, Unit, Neither };

EndKind classify_endo(const Gf& gf, const GfMorph& phi) {
  bool all_nil = true;
  bool all_unit = true;
  for (const auto& c : phi) {
    if (c.r == 0) continue;
    const bool nil = gf.nilpotent(c);
    const bool unit = !nil && gf.rank(c) == c.r;
    all_nil = all_nil && nil;
    all_unit = all_unit && unit;
    if (!all_nil && !all_unit) return EndKind::Neither;
  }
  return all_nil ? EndKind::Nilpotent : EndKind::Unit;
}

enum class Indec { Decomposable, Absolute, NotAbsolute };

std::size_t power_of(std::size_t base, std::size_t e, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    out *= base;
    if (out > cap) return cap + 1;
  }
  return out;
}

Indec test_indecomposable(const Gf& gf, const BoundQuiverAlgebra& a, const GfRep& m, std::size_t& end_dim) {
  const auto end = hom_basis(gf, a, m, m);
  end_dim = end.size();
  if (end.size() == 1) return Indec::Absolute;
  const std::size_t p = static_cast<std::size_t>(gf.p());
  const std::size_t total = power_of(p, end.size(), kEndScanBudget);
  std::size_t nilpotents = 0;
  bool split = false;
  for_each_combination(gf, end, std::min(total, kEndScanBudget), [&](const GfMorph& phi) {
    switch (classify_endo(gf, phi)) {
      case EndKind::Nilpotent: ++nilpotents; return true;
      case EndKind::Unit: return true;
      case EndKind::Neither: split = true; return false;
    }
    return true;
  });
  if (split) return Indec::Decomposable;
  if (total > kEndScanBudget) {
    throw Error(Errc::EndTooLarge, "End of dimension " + std::to_string(end.size()) + " exceeds the scan budget");
  }
  // Local: the nilpotents are the radical, of size p^(dim End - residue dim).
  std::size_t k = 0;
  for (std::size_t x = nilpotents; x > 1; x /= p) ++k;
  return end.size() - k == 1 ? Indec::Absolute : Indec::NotAbsolute;
}

bool gf_isomorphic(const Gf& gf, const BoundQuiverAlgebra& a, const GfRep& m, std::size_t end_m, const GfRep& n,
                   std::size_t end_n) {
  if (end_m != end_n) return false;
  const auto homs = hom_basis(gf, a, m, n);
  if (homs.size() != end_m) return false;
  const std::size_t total = power_of(static_cast<std::size_t>(gf.p()), homs.size(), kEndScanBudget);
  if (total > kEndScanBudget) throw Error(Errc::EndTooLarge, "hom space too large for isomorphism search");
  bool iso = false;
  for_each_combination(gf, homs, total, [&](const GfMorph& f) {
    for (const auto& c : f) {
      if (c.r > 0 && gf.rank(c) != c.r) return true;
    }
    iso = true;
    return false;
  });
  return iso;
}

// Matrices one arrow may be assumed to have after a change of basis.
std::vector<GfMat> rank_forms(int rows, int cols) {
  std::vector<GfMat> out;
  for (int r = 0; r <= std::min(rows, cols); ++r) {
    GfMat m = zero_mat(rows, cols);
    for (int i = 0; i < r; ++i) m.at(i, i) = 1;
    out.push_back(m);
  }
  return out;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<GfMat> nilpotent_jordan_forms(int d, int max_block) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(d, max_block, cur, parts);
  std::vector<GfMat> out;
  for (const auto& blocks : parts) {
    GfMat m = zero_mat(d, d);
    int start = 0;
    for (int b : blocks) {
      for (int i = 0; i + 1 < b; ++i) m.at(start + i + 1, start + i) = 1;
      start += b;
    }
    out.push_back(m);
  }
  return out;
}

// Smallest k with loop^k a relation, if any.
std::optional<int> loop_nilpotency(const BoundQuiverAlgebra& a, std::size_t loop) {
  std::optional<int> best;
  for (const auto& r : a.relations()) {
    if (std::all_of(r.begin(), r.end(), [&](std::size_t x) { return x == loop; })) {
      const int k = static_cast<int>(r.size());
      if (!best || k < *best) best = k;
    }
  }
  return best;
}

bool support_connected(const Quiver& q, const std::vector<int>& dims) {
  const std::size_t n = dims.size();
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < n; ++v)
    if (dims[v] > 0) support.push_back(v);
  if (support.empty()) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{support.front()};
  seen[support.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (const auto& arrow : q.arrows()) {
      for (auto [x, y] : {std::pair{arrow.source, arrow.target}, std::pair{arrow.target, arrow.source}}) {
        if (x == v && dims[y] > 0 && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return reached == support.size();
}

void dims_with_total(std::size_t nv, int total, int cap, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (cur.size() == nv) {
    if (total == 0) emit(cur);
    return;
  }
  for (int d = std::min(total, cap); d >= 0; --d) {
    cur.push_back(d);
    dims_with_total(nv, total - d, cap, cur, emit);
    cur.pop_back();
  }
}

struct Found {
  GfRep rep;
  std::size_t end_dim;
  bool absolute;
};

class Enumerator {
 public:
  Enumerator(const AlgebraPtr& a, const BruteForceOptions& opts) : a_(a), opts_(opts), gf_(opts.prime) {}

  // All new indecomposables of this dimension vector.
  std::vector<Found> run(const std::vector<int>& dims) {
    const Quiver& q = a_->quiver();
    const std::size_t na = q.num_arrows();
    const int p = gf_.p();
    ++stats.dimension_vectors;
    for (int d : dims) {
      if (d > kMaxDim) throw Error(Errc::SearchBudgetExceeded, "vertex dimension above " + std::to_string(kMaxDim));
    }

    // Normal forms on a vertex-disjoint set of arrows, largest first.
    std::vector<std::size_t> order(na);
    std::iota(order.begin(), order.end(), 0);
    auto bits = [&](std::size_t i) { return dims[q.arrow(i).source] * dims[q.arrow(i).target]; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return bits(x) > bits(y); });
    std::vector<std::vector<GfMat>> forms(na);
    std::vector<bool> used(q.num_vertices(), false);
    for (std::size_t i : order) {
      const Arrow& arrow = q.arrow(i);
      if (bits(i) == 0 || used[arrow.source] || used[arrow.target]) continue;
      const int ds = dims[arrow.source];
      const int dt = dims[arrow.target];
      if (arrow.source == arrow.target) {
        const auto k = loop_nilpotency(*a_, i);
        if (!k) continue;
        forms[i] = nilpotent_jordan_forms(ds, *k);
      } else {
        forms[i] = rank_forms(dt, ds);
      }
      used[arrow.source] = used[arrow.target] = true;
    }

    std::vector<std::size_t> options(na);
    std::size_t total = 1;
    for (std::size_t i = 0; i < na; ++i) {
      options[i] = forms[i].empty() ? power_of(static_cast<std::size_t>(p), static_cast<std::size_t>(bits(i)),
                                               opts_.tuple_budget)
                                    : forms[i].size();
      total *= options[i];
      if (total > opts_.tuple_budget) {
        throw Error(Errc::SearchBudgetExceeded, "dimension vector " + dims_string(dims) + " needs more than " +
                                                    std::to_string(opts_.tuple_budget) + " matrix tuples");
      }
    }

    GfRep rep;
    rep.dims = dims;
    for (std::size_t i = 0; i < na; ++i) rep.maps.push_back(zero_mat(dims[q.arrow(i).target], dims[q.arrow(i).source]));
    std::vector<std::size_t> idx(na, 0);
    std::vector<Found> found;
    for (std::size_t it = 0; it < total; ++it) {
      for (std::size_t i = 0; i < na; ++i) decode(i, idx[i], forms[i], rep.maps[i]);
      ++stats.tuples;
      if (satisfies_relations(rep)) consider(rep, found);
      for (std::size_t i = 0; i < na && ++idx[i] == options[i]; ++i) idx[i] = 0;
    }
    return found;
  }

  BruteForceStats stats;

  static std::string dims_string(const std::vector<int>& dims) {
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + ")";
  }

  Representation to_representation(const GfRep& rep) const {
    const Field f = Field::prime(gf_.p());
    std::vector<std::size_t> dims(rep.dims.begin(), rep.dims.end());
    std::vector<Matrix> maps;
    for (const auto& m : rep.maps) {
      Matrix out(f, static_cast<std::size_t>(m.r), static_cast<std::size_t>(m.c));
      for (int r = 0; r < m.r; ++r)
        for (int c = 0; c < m.c; ++c) out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = f.from_int(m.at(r, c));
      maps.push_back(std::move(out));
    }
    Representation out(a_, f, std::move(dims), std::move(maps));
    out.set_label(layer_label(out));
    return out;
  }

 private:
  void decode(std::size_t arrow, std::size_t index, const std::vector<GfMat>& forms, GfMat& m) const {
    if (!forms.empty()) {
      m = forms[index];
      return;
    }
    const int p = gf_.p();
    for (int r = 0; r < m.r; ++r)
      for (int c = 0; c < m.c; ++c) {
        m.at(r, c) = static_cast<std::uint8_t>(index % static_cast<std::size_t>(p));
        index /= static_cast<std::size_t>(p);
      }
    (void)arrow;
  }

  bool satisfies_relations(const GfRep& rep) const {
    const Quiver& q = a_->quiver();
    for (const auto& r : a_->relations()) {
      GfMat m = rep.maps[r[0]];
      for (std::size_t k = 1; k < r.size(); ++k) {
        m = gf_.mul(rep.maps[r[k]], m);
        if (Gf::is_zero(m)) break;
      }
      if (!Gf::is_zero(m)) return false;
      (void)q;
    }
    return true;
  }

  void consider(const GfRep& rep, std::vector<Found>& found) {
    std::size_t end_dim = 0;
    const Indec kind = test_indecomposable(gf_, *a_, rep, end_dim);
    if (kind == Indec::Decomposable) return;
    for (const auto& f : found)
      if (gf_isomorphic(gf_, *a_, rep, end_dim, f.rep, f.end_dim)) return;
    found.push_back(Found{rep, end_dim, kind == Indec::Absolute});
  }

  AlgebraPtr a_;
  BruteForceOptions opts_;
  Gf gf_;
};

}  // namespace

BruteForceResult enumerate_brute_force(const AlgebraPtr& a, const BruteForceOptions& opts) {
  (void)Field::prime(opts.prime);  // rejects a non-prime modulus
  const Quiver& q = a->quiver();
  const std::size_t nv = q.num_vertices();
  const int bound = static_cast<int>(opts.dim_bound);
  Enumerator en(a, opts);
  BruteForceResult result;
  bool not_absolute = false;
  std::string not_absolute_dims;
  int largest = 0;
  std::vector<int> cur;

  for (int total = 1; total <= bound * static_cast<int>(nv); ++total) {
    std::vector<Found> level;
    dims_with_total(nv, total, bound, cur, [&](const std::vector<int>& dims) {
      if (!support_connected(q, dims)) return;
      for (auto& f : en.run(dims)) level.push_back(std::move(f));
    });
    if (level.empty()) break;
    largest = total;
    for (const auto& f : level) {
      if (!f.absolute) {
        not_absolute = true;
        not_absolute_dims = Enumerator::dims_string(f.rep.dims);
      }
      result.modules.push_back(en.to_representation(f.rep));
    }
  }

  for (int total = 1; total <= largest + 1; ++total) {
    dims_with_total(nv, total, total, cur, [&](const std::vector<int>& dims) {
      if (std::none_of(dims.begin(), dims.end(), [&](int d) { return d > bound; })) return;
      if (!support_connected(q, dims)) return;
      if (!en.run(dims).empty()) {
        throw Error(Errc::DimBoundReached, "indecomposable of dimension vector " + Enumerator::dims_string(dims) +
                                               " lies outside the per-vertex bound " + std::to_string(bound) +
                                               "; raise --dim-bound or the algebra is representation-infinite");
      }
    });
  }
  if (not_absolute) {
    throw Error(Errc::EndResidueTooLarge, "an indecomposable of dimension vector " + not_absolute_dims +
                                              " is not absolutely indecomposable over GF(" +
                                              std::to_string(opts.prime) + ")");
  }
  result.stats = en.stats;
  result.stats.max_total_dim = static_cast<std::size_t>(largest);
  return result;
}

}  // namespace ptl
