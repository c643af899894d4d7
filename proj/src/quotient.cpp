#include "quotient.hpp"

namespace engelrad {

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal_subgroup(g, n))
    throw Error(ErrorCode::InvalidArgument, "subgroup is not normal; quotient undefined");
  const ElementIndex unassigned = g.order();
  std::vector<ElementIndex> projection(g.order(), unassigned);
  std::vector<ElementIndex> reps;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (projection[i] != unassigned) continue;
    ElementIndex coset = static_cast<ElementIndex>(reps.size());
    reps.push_back(i);
    for (ElementIndex h : n.elements) projection[g.mul(i, h)] = coset;
  }
  std::uint32_t q = static_cast<std::uint32_t>(reps.size());
  TableSpec spec;
  spec.table.assign(q, std::vector<std::uint32_t>(q));
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      spec.table[a][b] = projection[g.mul(reps[a], reps[b])];
  spec.labels.reserve(q);
  for (ElementIndex r : reps) spec.labels.push_back("[" + g.element_label(r) + "]");
  spec.description = "quotient(order=" + std::to_string(q) + ") of " + g.description();
  return QuotientGroup{FiniteGroup::from_table(std::move(spec), GroupConfig{}),
                       std::move(projection), std::move(reps)};
}

Subgroup pull_back(const FiniteGroup& g, const QuotientGroup& q, const Subgroup& s) {
  std::vector<ElementIndex> members;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (s.contains(q.projection[i])) members.push_back(i);
  return subgroup_from_sorted(g, std::move(members));
}

}  // namespace engelrad
