#include "subgroup.hpp"

#include <algorithm>

namespace engelrad {

Subgroup subgroup_from_sorted(const FiniteGroup& g, std::vector<ElementIndex> sorted) {
  Subgroup h;
  h.membership.assign(g.order(), 0);
  for (ElementIndex e : sorted) {
    g.check_index(e);
    h.membership[e] = 1;
  }
  h.elements = std::move(sorted);
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return subgroup_from_sorted(g, {g.identity()});
}

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<ElementIndex> all(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) all[i] = i;
  return subgroup_from_sorted(g, std::move(all));
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<ElementIndex>& gens) {
  std::vector<std::uint8_t> member(g.order(), 0);
  std::vector<ElementIndex> worklist;
  auto add = [&](ElementIndex e) {
    if (!member[e]) {
      member[e] = 1;
      worklist.push_back(e);
    }
  };
  add(g.identity());
  for (ElementIndex e : gens) {
    g.check_index(e);
    add(e);
  }
  // All pairwise products of the growing list; closure under products alone
  // suffices in a finite group.
  for (std::size_t i = 0; i < worklist.size(); ++i)
    for (std::size_t j = 0; j < worklist.size(); ++j) {
      add(g.mul(worklist[i], worklist[j]));
      if (worklist.size() == g.order()) goto done;
    }
done:
  std::vector<ElementIndex> sorted = worklist;
  std::sort(sorted.begin(), sorted.end());
  return subgroup_from_sorted(g, std::move(sorted));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<ElementIndex>& seeds) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<ElementIndex> conjugates;
  for (ElementIndex s : seeds) {
    g.check_index(s);
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      ElementIndex c = g.conjugate(s, x);
      if (!seen[c]) {
        seen[c] = 1;
        conjugates.push_back(c);
      }
    }
  }
  Subgroup h = subgroup_generated(g, conjugates);
  h.normal = true;
  return h;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<ElementIndex> gens;
  for (ElementIndex x : a.elements)
    for (ElementIndex y : b.elements) {
      ElementIndex c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_generated(g, gens);
}

bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.normal) return *h.normal;
  for (ElementIndex e : h.elements)
    for (std::uint32_t x = 0; x < g.order(); ++x)
      if (!h.contains(g.conjugate(e, x))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  for (ElementIndex a : h.elements)
    for (ElementIndex b : h.elements) {
      if (b >= a) break;
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  return true;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<ElementIndex> z;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::uint32_t b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return subgroup_from_sorted(g, std::move(z));
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Subgroup> series;
  series.push_back(h);
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back(), h);
    if (next.same_elements(series.back())) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Subgroup> series;
  series.push_back(h);
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back(), series.back());
    if (next.same_elements(series.back())) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g, const Subgroup& h) {
  auto series = lower_central_series(g, h);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<std::uint32_t>(series.size() - 1);
}

std::optional<std::uint32_t> derived_length(const FiniteGroup& g, const Subgroup& h) {
  auto series = derived_series(g, h);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<std::uint32_t>(series.size() - 1);
}

MaterializedSubgroup materialize_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::vector<ElementIndex> to_parent = h.elements;
  std::vector<std::int64_t> to_local(g.order(), -1);
  for (std::size_t i = 0; i < h.elements.size(); ++i)
    to_local[h.elements[i]] = static_cast<std::int64_t>(i);
  std::uint32_t n = h.size();
  TableSpec spec;
  spec.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      ElementIndex p = g.mul(h.elements[i], h.elements[j]);
      std::int64_t local = to_local[p];
      if (local < 0)
        throw Error(ErrorCode::InvalidArgument, "element set is not closed under products");
      spec.table[i][j] = static_cast<std::uint32_t>(local);
    }
  spec.labels.reserve(n);
  for (ElementIndex e : h.elements) spec.labels.push_back(g.element_label(e));
  spec.description = "subgroup(order=" + std::to_string(n) + ") of " + g.description();
  return MaterializedSubgroup{FiniteGroup::from_table(std::move(spec), GroupConfig{}),
                              std::move(to_parent), std::move(to_local)};
}

}  // namespace engelrad
