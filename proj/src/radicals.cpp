#include "radicals.hpp"

#include <random>
#include <unordered_map>

#include "engel.hpp"

namespace engelrad {

namespace {

void assert_subgroup_closed(const FiniteGroup& g, const Subgroup& h, const char* what) {
  for (ElementIndex a : h.elements) {
    if (!h.contains(g.inv(a)))
      throw Error(ErrorCode::Internal, std::string(what) + ": set not closed under inverse");
    for (ElementIndex b : h.elements)
      if (!h.contains(g.mul(a, b)))
        throw Error(ErrorCode::Internal, std::string(what) + ": set not closed under product");
  }
}

}  // namespace

Subgroup fitting_subgroup(const FiniteGroup& g, unsigned threads) {
  Subgroup fit = subgroup_from_sorted(g, nil_element_set(g, threads));
  assert_subgroup_closed(g, fit, "nil-element set");
  if (!is_normal_subgroup(g, fit))
    throw Error(ErrorCode::Internal, "nil-element set is not normal");
  auto cls = nilpotency_class(g, fit);
  if (!cls) throw Error(ErrorCode::Internal, "nil-element set is not nilpotent");
  fit.normal = true;
  fit.nil_class = cls;
  return fit;
}

Subgroup fitting_oracle(const FiniteGroup& g) {
  std::vector<ElementIndex> members;
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    Subgroup ncl = normal_closure(g, {e});
    if (nilpotency_class(g, ncl)) members.push_back(e);
  }
  Subgroup fit = subgroup_from_sorted(g, std::move(members));
  assert_subgroup_closed(g, fit, "fitting oracle set");
  if (!is_normal_subgroup(g, fit))
    throw Error(ErrorCode::Internal, "fitting oracle set is not normal");
  auto cls = nilpotency_class(g, fit);
  if (!cls) throw Error(ErrorCode::Internal, "fitting oracle set is not nilpotent");
  fit.normal = true;
  fit.nil_class = cls;
  return fit;
}

std::uint32_t RadicalSeries::depth_of(ElementIndex e) const {
  for (std::uint32_t i = 0; i < members.size(); ++i)
    if (members[i].contains(e)) return i;
  throw Error(ErrorCode::InvalidArgument, "element lies outside the radical");
}

RadicalSeries upper_radical_series(const FiniteGroup& g, unsigned threads) {
  RadicalSeries series;
  series.members.push_back(trivial_subgroup(g));
  // First step needs no quotient: R_1 is the Fitting subgroup of G itself.
  Subgroup first = fitting_subgroup(g, threads);
  if (first.size() == 1) return series;
  series.members.push_back(std::move(first));
  while (series.members.back().size() < g.order()) {
    QuotientGroup q = quotient(g, series.members.back());
    Subgroup fit_q = fitting_subgroup(q.group, threads);
    if (fit_q.size() == 1) break;
    Subgroup next = pull_back(g, q, fit_q);
    next.normal = true;
    series.members.push_back(std::move(next));
  }
  return series;
}

Subgroup solvable_radical(const FiniteGroup& g, unsigned threads) {
  RadicalSeries series = upper_radical_series(g, threads);
  Subgroup rad = series.top();
  if (!derived_length(g, rad))
    throw Error(ErrorCode::Internal, "top of the radical series is not solvable");
  if (!is_normal_subgroup(g, rad))
    throw Error(ErrorCode::Internal, "top of the radical series is not normal");
  rad.normal = true;
  return rad;
}

Subgroup solvable_radical_oracle(const FiniteGroup& g) {
  std::vector<ElementIndex> members;
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    Subgroup ncl = normal_closure(g, {e});
    if (derived_length(g, ncl)) members.push_back(e);
  }
  Subgroup rad = subgroup_from_sorted(g, std::move(members));
  assert_subgroup_closed(g, rad, "solvable radical oracle set");
  if (!is_normal_subgroup(g, rad))
    throw Error(ErrorCode::Internal, "solvable radical oracle set is not normal");
  if (!derived_length(g, rad))
    throw Error(ErrorCode::Internal, "solvable radical oracle set is not solvable");
  rad.normal = true;
  return rad;
}

bool is_semisimple(const FiniteGroup& g, unsigned threads) {
  return fitting_subgroup(g, threads).size() == 1;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<ElementIndex>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (ElementIndex e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

PairwiseSolvableResult pairwise_solvable(const FiniteGroup& g, std::uint64_t sample_pairs,
                                         std::uint64_t seed) {
  PairwiseSolvableResult res;
  std::unordered_map<std::vector<ElementIndex>, bool, VectorHash> memo;
  auto pair_solvable = [&](ElementIndex a, ElementIndex b) {
    if (g.mul(a, b) == g.mul(b, a)) return true;  // abelian subgroup
    Subgroup h = subgroup_generated(g, {a, b});
    auto it = memo.find(h.elements);
    if (it != memo.end()) return it->second;
    bool solvable = derived_length(g, h).has_value();
    memo.emplace(std::move(h.elements), solvable);
    return solvable;
  };
  if (g.order() <= 200) {
    res.exhaustive = true;
    for (std::uint32_t a = 0; a < g.order(); ++a)
      for (std::uint32_t b = a; b < g.order(); ++b) {
        ++res.pairs_checked;
        if (!pair_solvable(a, b)) {
          res.all_solvable = false;
          res.witness = {a, b};
          return res;
        }
      }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < sample_pairs; ++t) {
      ElementIndex a = static_cast<ElementIndex>(rng() % g.order());
      ElementIndex b = static_cast<ElementIndex>(rng() % g.order());
      ++res.pairs_checked;
      if (!pair_solvable(a, b)) {
        res.all_solvable = false;
        res.witness = {a, b};
        return res;
      }
    }
  }
  return res;
}

}  // namespace engelrad
