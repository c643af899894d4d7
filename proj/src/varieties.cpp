#include "varieties.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "quotient.hpp"

namespace engelrad {

namespace {

/// e_n(a, base) with early exit once the value collapses to the identity
/// (it then stays there).
inline ElementIndex engel_value(const FiniteGroup& g, ElementIndex a, ElementIndex base,
                                std::uint32_t n) {
  ElementIndex c = g.commutator(a, base);
  for (std::uint32_t i = 1; i < n && c != g.identity(); ++i) c = g.commutator(c, base);
  return c;
}

void atomic_min(std::atomic<std::uint32_t>& slot, std::uint32_t v) {
  std::uint32_t cur = slot.load(std::memory_order_relaxed);
  while (v < cur && !slot.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

std::string tower_descriptor(const TowerIndex& idx) {
  std::ostringstream out;
  out << "tower(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out << ',';
    out << idx[i];
  }
  out << ')';
  return out.str();
}

/// Shared scanner for Engel-tower identities. Scan order: y outermost, then
/// x_1 .. x_k; the witness is the first failing assignment in that order,
/// independent of the thread count.
IdentityVerdict tower_scan(const FiniteGroup& g, const TowerIndex& idx,
                           std::uint64_t exhaustive_budget, const IdentityBudget& budget,
                           std::string descriptor) {
  IdentityVerdict verdict;
  verdict.descriptor = std::move(descriptor);
  std::uint32_t n = g.order();
  std::size_t k = idx.size();

  std::uint64_t combos = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i <= k; ++i) {
    combos *= n;
    if (combos > exhaustive_budget) {
      exhaustive = false;
      break;
    }
  }

  // Evaluates the tower below level i with inner value v; returns true on a
  // failure and leaves the failing x-assignment in xs.
  auto scan_tail = [&](auto&& self, std::size_t i, ElementIndex v,
                       std::vector<ElementIndex>& xs) -> bool {
    for (std::uint32_t x = 0; x < n; ++x) {
      xs[i] = x;
      ElementIndex w = engel_value(g, x, v, idx[i]);
      if (i + 1 == k) {
        if (w != g.identity()) return true;
      } else if (self(self, i + 1, w, xs)) {
        return true;
      }
    }
    return false;
  };

  if (exhaustive) {
    verdict.mode = CheckMode::Exhaustive;
    verdict.checked = combos;
    std::vector<std::vector<ElementIndex>> fail(n);
    std::atomic<std::uint32_t> first_fail{n};
    parallel_chunks(n, budget.threads, [&](std::size_t begin, std::size_t end) {
      std::vector<ElementIndex> xs(k);
      for (std::size_t y = begin; y < end; ++y) {
        if (y > first_fail.load(std::memory_order_relaxed)) continue;
        if (scan_tail(scan_tail, 0, static_cast<ElementIndex>(y), xs)) {
          fail[y] = xs;
          atomic_min(first_fail, static_cast<std::uint32_t>(y));
        }
      }
    });
    for (std::uint32_t y = 0; y < n; ++y) {
      if (fail[y].empty()) continue;
      verdict.holds = false;
      verdict.witness = fail[y];
      verdict.witness.push_back(y);
      return verdict;
    }
    verdict.holds = true;
    return verdict;
  }

  verdict.mode = CheckMode::Sampled;
  verdict.seed = budget.seed;
  std::mt19937_64 rng(budget.seed);
  std::vector<ElementIndex> xs(k);
  for (std::uint64_t t = 0; t < budget.samples; ++t) {
    ElementIndex y = static_cast<ElementIndex>(rng() % n);
    for (std::size_t i = 0; i < k; ++i) xs[i] = static_cast<ElementIndex>(rng() % n);
    ElementIndex v = y;
    for (std::size_t i = 0; i < k; ++i) v = engel_value(g, xs[i], v, idx[i]);
    ++verdict.checked;
    if (v != g.identity()) {
      verdict.holds = false;
      verdict.witness = xs;
      verdict.witness.push_back(y);
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

}  // namespace

IdentityVerdict satisfies_engel_identity(const FiniteGroup& g, std::uint32_t n,
                                         const IdentityBudget& budget) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Engel level must be >= 1");
  return tower_scan(g, TowerIndex{n}, budget.exhaustive_pairs, budget,
                    "engel(" + std::to_string(n) + ")");
}

std::optional<std::uint32_t> min_engel_n(const FiniteGroup& g, std::uint32_t n_max,
                                         unsigned threads) {
  IdentityBudget forced;
  forced.exhaustive_pairs = UINT64_MAX;
  forced.threads = threads;
  for (std::uint32_t n = 1; n <= n_max; ++n)
    if (satisfies_engel_identity(g, n, forced).holds) return n;
  return std::nullopt;
}

IdentityVerdict satisfies_tower_identity(const FiniteGroup& g, const TowerIndex& idx,
                                         const IdentityBudget& budget) {
  if (idx.empty()) throw Error(ErrorCode::InvalidArgument, "tower index must be nonempty");
  for (std::uint32_t v : idx)
    if (v == 0) throw Error(ErrorCode::InvalidArgument, "tower index entries must be >= 1");
  return tower_scan(g, idx, budget.exhaustive_tuples, budget, tower_descriptor(idx));
}

IdentityVerdict satisfies_word_identity(const FiniteGroup& g, const Word& w,
                                        const IdentityBudget& budget) {
  IdentityVerdict verdict;
  verdict.descriptor = "word(" + w.str() + ")";
  std::uint32_t n = g.order();
  std::int32_t max_x = w.max_x_var();
  std::vector<std::int32_t> vars;  // variables that actually occur
  if (w.uses_var(kVarY)) vars.push_back(kVarY);
  for (std::int32_t x = 1; x <= max_x; ++x)
    if (w.uses_var(x)) vars.push_back(x);

  std::uint64_t combos = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    combos *= n;
    if (combos > budget.exhaustive_tuples) {
      exhaustive = false;
      break;
    }
  }
  auto record_witness = [&](const VarAssignment& assign) {
    for (std::int32_t x = 1; x <= max_x; ++x)
      verdict.witness.push_back(assign.get(x).value_or(g.identity()));
    verdict.witness.push_back(assign.get(kVarY).value_or(g.identity()));
  };

  if (exhaustive) {
    verdict.mode = CheckMode::Exhaustive;
    verdict.checked = vars.empty() ? 1 : combos;
    // Odometer over the occurring variables, first variable most significant.
    std::vector<ElementIndex> values(vars.size(), 0);
    while (true) {
      VarAssignment assign(static_cast<std::size_t>(std::max(max_x, 1)));
      assign.set(kVarY, g.identity());
      for (std::int32_t x = 1; x <= max_x; ++x) assign.set(x, g.identity());
      for (std::size_t i = 0; i < vars.size(); ++i) assign.set(vars[i], values[i]);
      if (evaluate_word(g, w, assign) != g.identity()) {
        verdict.holds = false;
        record_witness(assign);
        return verdict;
      }
      std::size_t pos = vars.size();
      while (pos > 0) {
        if (++values[pos - 1] < n) break;
        values[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      if (vars.empty()) break;
    }
    verdict.holds = true;
    return verdict;
  }

  verdict.mode = CheckMode::Sampled;
  verdict.seed = budget.seed;
  std::mt19937_64 rng(budget.seed);
  for (std::uint64_t t = 0; t < budget.samples; ++t) {
    VarAssignment assign(static_cast<std::size_t>(std::max(max_x, 1)));
    assign.set(kVarY, g.identity());
    for (std::int32_t x = 1; x <= max_x; ++x) assign.set(x, g.identity());
    for (std::int32_t v : vars) assign.set(v, static_cast<ElementIndex>(rng() % n));
    ++verdict.checked;
    if (evaluate_word(g, w, assign) != g.identity()) {
      verdict.holds = false;
      record_witness(assign);
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

ProductContainmentReport check_product_containment(const FiniteGroup& g,
                                                   const std::vector<Subgroup>& chain,
                                                   const std::vector<std::uint32_t>& engel_ns,
                                                   const IdentityBudget& budget) {
  ProductContainmentReport rep;
  auto chain_fail = [&](std::string why) {
    rep.chain_ok = false;
    rep.chain_error = std::move(why);
    return rep;
  };
  if (chain.size() < 2) return chain_fail("chain needs at least the trivial and full subgroup");
  if (engel_ns.size() != chain.size() - 1)
    return chain_fail("need one Engel level per chain factor");
  for (std::uint32_t v : engel_ns)
    if (v == 0) return chain_fail("Engel levels must be >= 1");
  if (chain.front().size() != 1) return chain_fail("chain must start at the trivial subgroup");
  if (chain.back().size() != g.order()) return chain_fail("chain must end at the full group");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_normal_subgroup(g, chain[i]))
      return chain_fail("chain member " + std::to_string(i) + " is not normal");
    if (i > 0)
      for (ElementIndex e : chain[i - 1].elements)
        if (!chain[i].contains(e))
          return chain_fail("chain member " + std::to_string(i - 1) +
                            " is not contained in member " + std::to_string(i));
  }
  rep.chain_ok = true;

  rep.hypothesis_ok = true;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    MaterializedSubgroup upper = materialize_subgroup(g, chain[i]);
    std::vector<ElementIndex> lower_local;
    for (ElementIndex e : chain[i - 1].elements)
      lower_local.push_back(static_cast<ElementIndex>(upper.to_local[e]));
    Subgroup lower = subgroup_from_sorted(upper.group, std::move(lower_local));
    QuotientGroup factor = quotient(upper.group, lower);
    IdentityVerdict check = satisfies_engel_identity(factor.group, engel_ns[i - 1], budget);
    if (!check.holds) rep.hypothesis_ok = false;
    rep.factor_checks.push_back(std::move(check));
  }

  std::size_t k = engel_ns.size();
  rep.conclusion_index.push_back(engel_ns[k - 1]);
  for (std::size_t i = k - 1; i-- > 0;) rep.conclusion_index.push_back(engel_ns[i] + 1);
  rep.conclusion = satisfies_tower_identity(g, rep.conclusion_index, budget);
  rep.pass = rep.chain_ok && rep.hypothesis_ok && rep.conclusion.holds;
  return rep;
}

GeneratorCount minimal_generator_count(const FiniteGroup& g, std::uint64_t scan_budget) {
  std::uint32_t n = g.order();
  if (n == 1) return {0, true};
  for (std::uint32_t e = 0; e < n; ++e)
    if (g.element_order(e) == n) return {1, true};
  std::uint32_t exhausted = 1;  // all sets of this size are known to fail

  auto generates = [&](const std::vector<ElementIndex>& gens) {
    return subgroup_generated(g, gens).size() == n;
  };

  if (static_cast<std::uint64_t>(n) * n <= scan_budget) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        if (generates({a, b})) return {2, true};
    exhausted = 2;
    if (static_cast<std::uint64_t>(n) * n * n <= scan_budget) {
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
          for (std::uint32_t c = b + 1; c < n; ++c)
            if (generates({a, b, c})) return {3, true};
      exhausted = 3;
      if (static_cast<std::uint64_t>(n) * n * n * n <= scan_budget) {
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t b = a + 1; b < n; ++b)
            for (std::uint32_t c = b + 1; c < n; ++c)
              for (std::uint32_t d = c + 1; d < n; ++d)
                if (generates({a, b, c, d})) return {4, true};
        exhausted = 4;
      }
    }
  }

  // Greedy upper bound: repeatedly add the element that enlarges the
  // generated subgroup the most (ties broken by canonical order).
  std::vector<ElementIndex> picked;
  std::uint32_t current = 1;
  while (current < n) {
    std::uint32_t best_size = current;
    std::optional<ElementIndex> best;
    for (std::uint32_t e = 0; e < n; ++e) {
      std::vector<ElementIndex> cand = picked;
      cand.push_back(e);
      std::uint32_t size = subgroup_generated(g, cand).size();
      if (size > best_size) {
        best_size = size;
        best = e;
        if (size == n) break;
      }
    }
    if (!best) break;  // cannot happen: some element always extends
    picked.push_back(*best);
    current = best_size;
  }
  std::uint32_t count = static_cast<std::uint32_t>(picked.size());
  return {count, count == exhausted + 1};
}

EngelClassSurvey engel_class_survey(
    const std::vector<std::pair<std::string, const FiniteGroup*>>& groups, std::uint32_t n,
    const IdentityBudget& budget) {
  EngelClassSurvey survey;
  survey.engel_n = n;
  IdentityBudget forced = budget;
  forced.exhaustive_pairs = UINT64_MAX;  // survey membership is exhaustive by definition
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (const auto& [name, gp] : groups) {
    SurveyRow row;
    row.name = name;
    row.order = gp->order();
    row.satisfies = satisfies_engel_identity(*gp, n, forced).holds;
    if (row.satisfies) {
      row.nil_class = nilpotency_class(*gp, full_subgroup(*gp));
      GeneratorCount gc = minimal_generator_count(*gp);
      row.generators = gc.count;
      row.generators_exact = gc.exact;
      if (row.nil_class) {
        if (!survey.max_class || *row.nil_class > *survey.max_class)
          survey.max_class = row.nil_class;
        auto it = std::find_if(cells.begin(), cells.end(),
                               [&](const auto& c) { return c.first == row.generators; });
        if (it == cells.end())
          cells.emplace_back(row.generators, *row.nil_class);
        else
          it->second = std::max(it->second, *row.nil_class);
      }
    }
    survey.rows.push_back(std::move(row));
  }
  std::sort(cells.begin(), cells.end());
  survey.cells = std::move(cells);
  return survey;
}

}  // namespace engelrad
