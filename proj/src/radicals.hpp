#pragma once

#include <optional>

#include "quotient.hpp"
#include "subgroup.hpp"

namespace engelrad {

/// Fitting subgroup computed as the set of nil elements (in a finite group
/// the two coincide by Baer's theorem). The result is asserted to be a
/// normal nilpotent subgroup before returning; a failure is an internal
/// error, never a property of the input.
Subgroup fitting_subgroup(const FiniteGroup& g, unsigned threads = 1);

/// Independent route: g lies in the Fitting subgroup iff its normal closure
/// is nilpotent. Deliberately shares no code with fitting_subgroup.
Subgroup fitting_oracle(const FiniteGroup& g);

/// 1 = R_0 < R_1 < ... < R_L with R_{i+1}/R_i the Fitting subgroup of
/// G/R_i; stops when that Fitting subgroup is trivial. length() == L.
struct RadicalSeries {
  std::vector<Subgroup> members;
  std::size_t length() const { return members.size() - 1; }
  const Subgroup& top() const { return members.back(); }
  /// Least i with g in R_i (0 only for the identity).
  std::uint32_t depth_of(ElementIndex e) const;
};

RadicalSeries upper_radical_series(const FiniteGroup& g, unsigned threads = 1);

/// Top of the upper radical series; in a finite group this is the solvable
/// radical. Asserted solvable and normal.
Subgroup solvable_radical(const FiniteGroup& g, unsigned threads = 1);

/// Independent route: g lies in the solvable radical iff its normal closure
/// is solvable.
Subgroup solvable_radical_oracle(const FiniteGroup& g);

/// Trivial Fitting subgroup: no nontrivial nilpotent normal subgroups.
bool is_semisimple(const FiniteGroup& g, unsigned threads = 1);

struct PairwiseSolvableResult {
  bool all_solvable = true;
  std::optional<std::pair<ElementIndex, ElementIndex>> witness;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
};

/// Checks that every 2-generated subgroup <a,b> is solvable. Exhaustive over
/// unordered pairs up to order 200, sampled above; subgroup verdicts are
/// memoized on the generated element set.
PairwiseSolvableResult pairwise_solvable(const FiniteGroup& g, std::uint64_t sample_pairs = 10000,
                                         std::uint64_t seed = 0);

}  // namespace engelrad
