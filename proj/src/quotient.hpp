#pragma once

#include "subgroup.hpp"

namespace engelrad {

/// Coset group of a normal subgroup, realized as a Cayley-table group.
/// Cosets are ordered by their minimal parent representative, which puts the
/// identity coset at index 0.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<ElementIndex> projection;  // parent index -> coset index
  std::vector<ElementIndex> coset_rep;   // coset index -> minimal parent rep
};

/// Throws if N is not normal in G.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

/// Preimage of a subgroup of the quotient under the projection.
Subgroup pull_back(const FiniteGroup& g, const QuotientGroup& q, const Subgroup& s);

}  // namespace engelrad
