#pragma once

#include <optional>
#include <string>

#include "subgroup.hpp"
#include "words.hpp"

namespace engelrad {

enum class CheckMode { Exhaustive, Sampled };

/// Outcome of checking one identity on one group. A failing verdict always
/// carries a witness assignment that evaluates to a non-identity element; a
/// sampled "holds" is evidence, not proof, and the mode says so.
struct IdentityVerdict {
  std::string descriptor;
  bool holds = false;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
  std::vector<ElementIndex> witness;  // assignment (x_1..x_k, y) on failure
};

struct IdentityBudget {
  std::uint64_t exhaustive_pairs = 1'000'000;    // |G|^2 cap for 2-variable scans
  std::uint64_t exhaustive_tuples = 10'000'000;  // |G|^(k+1) cap for tower scans
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// e_n(x, y) = 1 over all pairs (exhaustive when |G|^2 fits the budget,
/// sampled otherwise).
IdentityVerdict satisfies_engel_identity(const FiniteGroup& g, std::uint32_t n,
                                         const IdentityBudget& budget = {});

/// Least n <= n_max with the n-Engel identity holding exhaustively (the scan
/// is forced exhaustive regardless of the sampling budget).
std::optional<std::uint32_t> min_engel_n(const FiniteGroup& g, std::uint32_t n_max = 8,
                                         unsigned threads = 1);

/// Tower identity for the Engel sequence at the given index tuple, evaluated
/// via the recursive element form (inner value substituted as an element).
IdentityVerdict satisfies_tower_identity(const FiniteGroup& g, const TowerIndex& idx,
                                         const IdentityBudget& budget = {});

/// A custom word identity w(x_1..x_k, y) = 1.
IdentityVerdict satisfies_word_identity(const FiniteGroup& g, const Word& w,
                                        const IdentityBudget& budget = {});

/// Hypotheses: 1 = N_0 <= N_1 <= ... <= N_k = G, every N_i normal in G, and
/// each factor N_i/N_{i-1} satisfying the e_{n_i} identity. Conclusion: G
/// satisfies the tower identity at (n_k, n_{k-1}+1, ..., n_1+1).
struct ProductContainmentReport {
  bool chain_ok = false;
  std::string chain_error;
  std::vector<IdentityVerdict> factor_checks;
  bool hypothesis_ok = false;
  TowerIndex conclusion_index;
  IdentityVerdict conclusion;
  bool pass = false;
};

ProductContainmentReport check_product_containment(const FiniteGroup& g,
                                                   const std::vector<Subgroup>& chain,
                                                   const std::vector<std::uint32_t>& engel_ns,
                                                   const IdentityBudget& budget = {});

/// Survey of the groups satisfying a fixed Engel identity: nilpotency class
/// and minimal generator count (exact scans up to the budget, greedy upper
/// bound above it, exactness flagged). Cells aggregate the maximal class
/// per generator count.
struct SurveyRow {
  std::string name;
  std::uint32_t order = 0;
  bool satisfies = false;
  std::optional<std::uint32_t> nil_class;
  std::uint32_t generators = 0;
  bool generators_exact = false;
};

struct EngelClassSurvey {
  std::uint32_t engel_n = 0;
  std::vector<SurveyRow> rows;
  std::optional<std::uint32_t> max_class;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;  // (generators, max class)
};

EngelClassSurvey engel_class_survey(
    const std::vector<std::pair<std::string, const FiniteGroup*>>& groups, std::uint32_t n,
    const IdentityBudget& budget = {});

struct GeneratorCount {
  std::uint32_t count = 0;
  bool exact = false;
};

/// Minimal generating set size: exhaustive singles, exhaustive pairs and
/// triples while the scan fits the budget, then a greedy upper bound
/// (capped at 4 exact levels).
GeneratorCount minimal_generator_count(const FiniteGroup& g, std::uint64_t scan_budget = 200000);

}  // namespace engelrad
