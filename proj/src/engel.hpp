#pragma once

#include <optional>

#include "subgroup.hpp"

namespace engelrad {

/// The orbit of c -> [c, base] starting from c_1 = [a, base]: the exact list
/// of distinct values of the iterated commutator, walked until the identity
/// appears or a value repeats. c_n equals iterated_engel(a, base, n), so the
/// orbit decides "exists n with e_n(a, base) = 1" exactly.
struct CommutationOrbit {
  std::vector<ElementIndex> values;      // distinct values in visit order
  bool reaches_identity = false;
  std::uint32_t identity_step = 0;       // 1-based n with c_n = identity
  std::uint32_t preperiod = 0;           // values before the cycle (when cycling)
  std::uint32_t period = 0;              // cycle length (when cycling)
};

CommutationOrbit commutation_orbit(const FiniteGroup& g, ElementIndex a, ElementIndex base);

struct NilVerdict {
  bool is_nil = false;
  std::optional<ElementIndex> witness;        // a whose orbit cycles, when not nil
  std::optional<std::uint32_t> engel_bound;   // max over a of the first-identity step
};

/// True iff the orbit of every a reaches the identity. Also yields the
/// minimal uniform Engel bound when it exists (in a finite group that is
/// exactly the nil case).
NilVerdict nil_verdict(const FiniteGroup& g, ElementIndex e);

bool is_nil_element(const FiniteGroup& g, ElementIndex e);
std::optional<std::uint32_t> engel_bound(const FiniteGroup& g, ElementIndex e);

/// Exact set of nil elements, computed per element (parallelizable).
std::vector<ElementIndex> nil_element_set(const FiniteGroup& g, unsigned threads = 1);

/// Ascending chain H_1 = <g>, H_{n} = <H_{n-1}, h_n g h_n^-1> where h_n is
/// the first element (canonical order) conjugating g outside the current
/// link. Stops at a normal link, or early at a non-nilpotent link; for a nil
/// element every link is nilpotent and the terminal link is a nilpotent
/// normal subgroup containing g.
struct BaerChain {
  ElementIndex element = 0;
  std::vector<Subgroup> links;
  std::vector<ElementIndex> conjugators;  // h_n for links 2..; size = links-1
  std::vector<std::optional<std::uint32_t>> link_classes;
  bool terminal_normal = false;
};

BaerChain baer_chain(const FiniteGroup& g, ElementIndex e);

}  // namespace engelrad
