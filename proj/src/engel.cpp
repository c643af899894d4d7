#include "engel.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace engelrad {

CommutationOrbit commutation_orbit(const FiniteGroup& g, ElementIndex a, ElementIndex base) {
  g.check_index(a);
  g.check_index(base);
  CommutationOrbit orbit;
  std::vector<std::uint32_t> first_seen(g.order(), 0);  // 1-based position
  ElementIndex inv_base = g.inv(base);
  ElementIndex c = g.mul(g.mul(g.inv(a), inv_base), g.mul(a, base));
  while (true) {
    if (c == g.identity()) {
      orbit.values.push_back(c);
      orbit.reaches_identity = true;
      orbit.identity_step = static_cast<std::uint32_t>(orbit.values.size());
      return orbit;
    }
    if (first_seen[c] != 0) {
      orbit.preperiod = first_seen[c] - 1;
      orbit.period = static_cast<std::uint32_t>(orbit.values.size()) - orbit.preperiod;
      return orbit;
    }
    orbit.values.push_back(c);
    first_seen[c] = static_cast<std::uint32_t>(orbit.values.size());
    c = g.mul(g.mul(g.inv(c), inv_base), g.mul(c, base));
  }
}

namespace {

/// Orbit walk that only reports whether the identity is reached and at which
/// step; uses caller-provided scratch to stay allocation-free in hot loops.
bool orbit_reaches_identity(const FiniteGroup& g, ElementIndex a, ElementIndex base,
                            IndexStamp& stamp, std::uint32_t* step_out) {
  ElementIndex inv_base = g.inv(base);
  ElementIndex c = g.mul(g.mul(g.inv(a), inv_base), g.mul(a, base));
  stamp.clear();
  std::uint32_t step = 1;
  while (true) {
    if (c == g.identity()) {
      if (step_out) *step_out = step;
      return true;
    }
    if (stamp.test_and_set(c)) return false;
    c = g.mul(g.mul(g.inv(c), inv_base), g.mul(c, base));
    ++step;
  }
}

}  // namespace

NilVerdict nil_verdict(const FiniteGroup& g, ElementIndex e) {
  g.check_index(e);
  NilVerdict v;
  IndexStamp stamp(g.order());
  std::uint32_t bound = 0;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    std::uint32_t step = 0;
    if (!orbit_reaches_identity(g, a, e, stamp, &step)) {
      v.is_nil = false;
      v.witness = a;
      return v;
    }
    bound = std::max(bound, step);
  }
  v.is_nil = true;
  v.engel_bound = bound;
  return v;
}

bool is_nil_element(const FiniteGroup& g, ElementIndex e) { return nil_verdict(g, e).is_nil; }

std::optional<std::uint32_t> engel_bound(const FiniteGroup& g, ElementIndex e) {
  return nil_verdict(g, e).engel_bound;
}

std::vector<ElementIndex> nil_element_set(const FiniteGroup& g, unsigned threads) {
  std::vector<std::uint8_t> verdict(g.order(), 0);
  parallel_chunks(g.order(), threads, [&](std::size_t begin, std::size_t end) {
    IndexStamp stamp(g.order());
    for (std::size_t e = begin; e < end; ++e) {
      bool nil = true;
      for (std::uint32_t a = 0; a < g.order(); ++a)
        if (!orbit_reaches_identity(g, a, static_cast<ElementIndex>(e), stamp, nullptr)) {
          nil = false;
          break;
        }
      verdict[e] = nil ? 1 : 0;
    }
  });
  std::vector<ElementIndex> out;
  for (std::uint32_t e = 0; e < g.order(); ++e)
    if (verdict[e]) out.push_back(e);
  return out;
}

BaerChain baer_chain(const FiniteGroup& g, ElementIndex e) {
  g.check_index(e);
  BaerChain chain;
  chain.element = e;
  chain.links.push_back(subgroup_generated(g, {e}));
  while (true) {
    Subgroup& link = chain.links.back();
    chain.link_classes.push_back(nilpotency_class(g, link));
    if (is_normal_subgroup(g, link)) {
      chain.terminal_normal = true;
      return chain;
    }
    if (!chain.link_classes.back()) return chain;  // non-nilpotent link, stop
    std::optional<ElementIndex> conjugator;
    for (std::uint32_t h = 0; h < g.order(); ++h) {
      ElementIndex image = g.mul(g.mul(h, e), g.inv(h));
      if (!link.contains(image)) {
        conjugator = h;
        break;
      }
    }
    if (!conjugator)
      throw Error(ErrorCode::Internal,
                  "link is not normal yet every conjugate of g lies inside it");
    chain.conjugators.push_back(*conjugator);
    std::vector<ElementIndex> gens = link.elements;
    gens.push_back(g.mul(g.mul(*conjugator, e), g.inv(*conjugator)));
    chain.links.push_back(subgroup_generated(g, gens));
  }
}

}  // namespace engelrad
