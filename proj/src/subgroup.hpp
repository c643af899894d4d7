#pragma once

#include <optional>
#include <vector>

#include "group.hpp"

namespace engelrad {

/// An element subset of a parent group, stored as a sorted dense index set
/// with a membership bitmap. Subgroups do not hold a reference to the parent;
/// every operation takes the parent explicitly.
struct Subgroup {
  std::vector<ElementIndex> elements;    // sorted ascending, contains 0
  std::vector<std::uint8_t> membership;  // size = parent order

  std::optional<bool> normal;                              // cached
  std::optional<std::optional<std::uint32_t>> nil_class;   // cached verdict
  std::optional<std::optional<std::uint32_t>> der_length;  // cached verdict

  bool contains(ElementIndex i) const { return membership[i] != 0; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elements.size()); }
  bool same_elements(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup subgroup_from_sorted(const FiniteGroup& g, std::vector<ElementIndex> sorted);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

/// Smallest subgroup containing the given elements (closure iteration).
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<ElementIndex>& gens);

/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const FiniteGroup& g, const std::vector<ElementIndex>& seeds);

/// Subgroup generated by all commutators [a,b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);

/// gamma_1 = H, gamma_{i+1} = [gamma_i, H]; the list stops before the first
/// repeated term, so it ends with the trivial subgroup exactly when H is
/// nilpotent.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g, const Subgroup& h);

/// D_0 = H, D_{i+1} = [D_i, D_i]; same stopping rule.
std::vector<Subgroup> derived_series(const FiniteGroup& g, const Subgroup& h);

/// Number of nontrivial terms of the lower central series when it reaches the
/// trivial subgroup; nullopt for non-nilpotent H.
std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g, const Subgroup& h);
std::optional<std::uint32_t> derived_length(const FiniteGroup& g, const Subgroup& h);

/// A subgroup realized as a standalone group (Cayley-table backend) together
/// with the index maps between the two element spaces.
struct MaterializedSubgroup {
  FiniteGroup group;
  std::vector<ElementIndex> to_parent;  // local -> parent
  std::vector<std::int64_t> to_local;   // parent -> local, -1 outside
};
MaterializedSubgroup materialize_subgroup(const FiniteGroup& g, const Subgroup& h);

}  // namespace engelrad
