#include "ptlattice/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ptlattice/classify.hpp"
#include "ptlattice/error.hpp"
#include "ptlattice/module_theory.hpp"
#include "ptlattice/strings.hpp"

namespace ptl {

namespace {

// Duplicate labels get "#k" suffixes, numbered in catalog order.
void disambiguate_labels(std::vector<Representation>& modules) {
  std::map<std::string, std::size_t> count;
  for (const auto& m : modules) ++count[m.label()];
  std::map<std::string, std::size_t> seen;
  for (auto& m : modules) {
    const std::string base = m.label();
    if (count[base] > 1) m.set_label(base + "#" + std::to_string(++seen[base]));
  }
}

}  // namespace

bool catalog_order_less(const Representation& x, const Representation& y) {
  if (x.total_dim() != y.total_dim()) return x.total_dim() < y.total_dim();
  return x.dims() > y.dims();
}

IndecCatalog::IndecCatalog(AlgebraPtr a, Field f, CatalogMethod method, std::vector<Representation> modules,
                           std::vector<StringWalk> strings)
    : algebra_(std::move(a)), field_(f), method_(method), modules_(std::move(modules)), strings_(std::move(strings)) {
  if (!strings_.empty() && strings_.size() != modules_.size()) {
    throw Error(Errc::InvariantBreach, "string list does not match the module list");
  }
  std::vector<std::size_t> order(modules_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return catalog_order_less(modules_[i], modules_[j]); });
  std::vector<Representation> sorted;
  std::vector<StringWalk> sorted_strings;
  for (std::size_t i : order) {
    sorted.push_back(std::move(modules_[i]));
    if (!strings_.empty()) sorted_strings.push_back(strings_[i]);
  }
  modules_ = std::move(sorted);
  strings_ = std::move(sorted_strings);
  disambiguate_labels(modules_);
}

std::optional<std::size_t> IndecCatalog::find(std::string_view label) const {
  for (std::size_t i = 0; i < modules_.size(); ++i)
    if (modules_[i].label() == label) return i;
  for (std::size_t i = 0; i < strings_.size(); ++i)
    if (strings_[i].to_string(algebra_->quiver()) == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> IndecCatalog::index_of(const Representation& m) const {
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    if (modules_[i].dims() == m.dims() && is_isomorphic(modules_[i], m)) return i;
  }
  return std::nullopt;
}

IndecCatalog build_catalog(const AlgebraPtr& a, const CatalogOptions& opts) {
  if (is_string_algebra(*a).holds) {
    std::vector<StringWalk> strings = enumerate_strings(*a);
    std::vector<Representation> modules;
    modules.reserve(strings.size());
    for (const auto& w : strings) modules.push_back(string_to_module(a, opts.field, w));
    return IndecCatalog(a, opts.field, CatalogMethod::Strings, std::move(modules), std::move(strings));
  }
  const int p = opts.field.characteristic() == 0 ? opts.prime : opts.field.characteristic();
  BruteForceOptions bf;
  bf.prime = p;
  bf.dim_bound = opts.dim_bound;
  bf.tuple_budget = opts.tuple_budget;
  auto result = enumerate_brute_force(a, bf);
  return IndecCatalog(a, Field::prime(p), CatalogMethod::BruteForce, std::move(result.modules));
}

}  // namespace ptl
