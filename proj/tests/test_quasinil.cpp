#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "catalog.hpp"
#include "engel.hpp"
#include "quasinil.hpp"
#include "words.hpp"

using namespace engelrad;

namespace {

ElementIndex by_cycles(const FiniteGroup& g, const std::string& cycles) {
  return g.index_of_permutation(parse_cycle_string(cycles, g.permutation_degree()));
}

// Independent plain-index check: no index tuple of the counterexample's
// length makes the tower vanish along the tuple.
bool no_index_tuple_vanishes(const FiniteGroup& g, ElementIndex base,
                             const std::vector<ElementIndex>& tuple, std::size_t at = 0) {
  if (at == tuple.size()) return base != g.identity();
  ElementIndex c = g.commutator(tuple[at], base);
  std::vector<std::uint8_t> seen(g.order(), 0);
  while (true) {
    if (c == g.identity()) return false;  // this index choice vanishes
    if (seen[c]) return true;             // cycled; all deeper values visited
    seen[c] = 1;
    if (!no_index_tuple_vanishes(g, c, tuple, at + 1)) return false;
    c = g.commutator(c, base);
  }
}

// Literal nested-quantifier evaluation of quasi-nilness at k = 2, bounded by
// the group order, recomputing every Engel value from scratch.
bool direct_quasi_nil_2(const FiniteGroup& g, ElementIndex e) {
  std::uint32_t bound = g.order() + 1;
  for (std::uint32_t a1 = 0; a1 < g.order(); ++a1) {
    bool exists_n1 = false;
    for (std::uint32_t n1 = 1; n1 <= bound && !exists_n1; ++n1) {
      ElementIndex v = iterated_engel(g, a1, e, n1);
      bool v_is_nil = true;
      for (std::uint32_t a2 = 0; a2 < g.order() && v_is_nil; ++a2) {
        bool exists_n2 = false;
        for (std::uint32_t n2 = 1; n2 <= bound && !exists_n2; ++n2)
          exists_n2 = iterated_engel(g, a2, v, n2) == g.identity();
        v_is_nil = exists_n2;
      }
      exists_n1 = v_is_nil;
    }
    if (!exists_n1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("quasi-nil base cases") {
  FiniteGroup g = parse_catalog_spec("s3");
  QuasiNilClassifier cls(g);
  CHECK(cls.is_quasi_nil(g.identity(), 0));
  for (std::uint32_t e = 1; e < g.order(); ++e) CHECK(!cls.is_quasi_nil(e, 0));
}

TEST_CASE("nilpotent groups are quasi-nil at k = 1") {
  for (const char* name : {"q8", "c12", "ut3_3"}) {
    FiniteGroup g = parse_catalog_spec(name);
    QuasiNilClassifier cls(g);
    for (std::uint32_t e = 0; e < g.order(); ++e) CHECK(cls.is_quasi_nil(e, 1));
  }
}

TEST_CASE("a transposition in S_3 has nil-order 2") {
  FiniteGroup g = parse_catalog_spec("s3");
  QuasiNilClassifier cls(g);
  ElementIndex t = by_cycles(g, "(1 2)");
  CHECK(!cls.is_quasi_nil(t, 1));
  CHECK(cls.is_quasi_nil(t, 2));
  NilOrderResult r = cls.nil_order(t);
  CHECK(r.nil_order == 2);
}

TEST_CASE("quasi-nilness is monotone in k across the catalog up to 60") {
  for (const std::string& name : builtin_catalog()) {
    FiniteGroup g = parse_catalog_spec(name);
    if (g.order() > 60) continue;
    CAPTURE(name);
    QuasiNilClassifier cls(g);
    for (std::uint32_t e = 0; e < g.order(); ++e)
      for (std::uint32_t k = 0; k < cls.kmax(); ++k)
        if (cls.is_quasi_nil(e, k)) CHECK(cls.is_quasi_nil(e, k + 1));
  }
}

TEST_CASE("nil orders in S_4 follow the radical series depths") {
  FiniteGroup g = parse_catalog_spec("s4");
  QuasiNilClassifier cls(g);
  CHECK(cls.nil_order(g.identity()).nil_order == 0);
  CHECK(cls.nil_order(by_cycles(g, "(1 2)(3 4)")).nil_order == 1);
  CHECK(cls.nil_order(by_cycles(g, "(1 2 3)")).nil_order == 2);
  CHECK(cls.nil_order(by_cycles(g, "(1 2)")).nil_order == 3);
  CHECK(cls.nil_order(by_cycles(g, "(1 2 3 4)")).nil_order == 3);
}

TEST_CASE("A_5 elements are not quasi-nil and carry failure traces") {
  FiniteGroup g = parse_catalog_spec("a5");
  QuasiNilClassifier cls(g);
  for (std::uint32_t e = 1; e < g.order(); e += 7) {
    NilOrderResult r = cls.nil_order(e);
    CHECK(!r.nil_order.has_value());
    REQUIRE(r.counterexample.size() == cls.kmax());
    // The verified flag must agree with the independent plain-tuple oracle.
    CHECK(r.counterexample_verified == no_index_tuple_vanishes(g, e, r.counterexample));
    // Trace property: every orbit value of (a_i, base) fails quasi-nilness
    // at the remaining depth, and the base descends along the first value.
    ElementIndex base = e;
    for (std::size_t i = 0; i < r.counterexample.size(); ++i) {
      std::uint32_t depth = cls.kmax() - static_cast<std::uint32_t>(i);
      CommutationOrbit orbit = commutation_orbit(g, r.counterexample[i], base);
      REQUIRE(!orbit.reaches_identity);
      for (ElementIndex v : orbit.values) CHECK(!cls.is_quasi_nil(v, depth - 1));
      base = orbit.values.front();
    }
  }
}

TEST_CASE("quasi-nil sets") {
  SUBCASE("nilpotent group: everything") {
    FiniteGroup g = parse_catalog_spec("q8");
    CHECK(QuasiNilClassifier(g).quasi_nil_set().size() == 8);
  }
  SUBCASE("S_4: everything (the radical is the whole group)") {
    FiniteGroup g = parse_catalog_spec("s4");
    CHECK(QuasiNilClassifier(g).quasi_nil_set().size() == 24);
  }
  SUBCASE("A_5: only the identity") {
    FiniteGroup g = parse_catalog_spec("a5");
    auto qs = QuasiNilClassifier(g).quasi_nil_set();
    REQUIRE(qs.size() == 1);
    CHECK(qs[0] == g.identity());
  }
  SUBCASE("verdicts are independent of the thread count") {
    FiniteGroup g = parse_catalog_spec("s4xc6");
    QuasiNilClassifier a(g), b(g);
    CHECK(a.quasi_nil_set(1) == b.quasi_nil_set(4));
  }
}

TEST_CASE("recursive decision agrees with the direct nested search at k = 2") {
  for (const char* name : {"s3", "a4", "q8", "d5", "c9"}) {
    FiniteGroup g = parse_catalog_spec(name);
    QuasiNilClassifier cls(g);
    CAPTURE(name);
    for (std::uint32_t e = 0; e < g.order(); ++e)
      CHECK(cls.is_quasi_nil(e, 2) == direct_quasi_nil_2(g, e));
  }
}

TEST_CASE("radical agreement reports") {
  for (const char* name : {"s3", "s5", "c6", "a5xc2", "sl2_3"}) {
    CAPTURE(name);
    SetAgreementReport rep = verify_quasinil_radical(parse_catalog_spec(name));
    CHECK(rep.pass);
    CHECK(rep.only_left.empty());
    CHECK(rep.only_right.empty());
  }
}

TEST_CASE("nil-order depth agreement reports") {
  for (const char* name : {"s3", "s4", "a4", "d6", "q8", "c12", "sl2_3", "a5"}) {
    CAPTURE(name);
    DepthAgreementReport rep = verify_nil_order_depths(parse_catalog_spec(name));
    CHECK(rep.pass);
  }
}

TEST_CASE("quasi-nil existence reports") {
  SUBCASE("semisimple contrapositive on A_5") {
    NilExistenceReport rep = verify_quasinil_implies_nil(parse_catalog_spec("a5"));
    CHECK(rep.pass);
    CHECK(rep.semisimple);
    CHECK(!rep.quasi_nil_example.has_value());
  }
  SUBCASE("S_3 exhibits both witnesses") {
    NilExistenceReport rep = verify_quasinil_implies_nil(parse_catalog_spec("s3"));
    CHECK(rep.pass);
    CHECK(rep.quasi_nil_example.has_value());
    CHECK(rep.nil_example.has_value());
  }
  SUBCASE("trivial group passes vacuously") {
    NilExistenceReport rep = verify_quasinil_implies_nil(parse_catalog_spec("c1"));
    CHECK(rep.pass);
  }
}

TEST_CASE("monotonicity under subgroups and quotients") {
  FiniteGroup g = parse_catalog_spec("s4");
  SUBCASE("H = G, N = 1 keeps orders equal") {
    MonotonicityReport rep =
        verify_quasinil_monotone(g, full_subgroup(g), trivial_subgroup(g));
    CHECK(rep.pass);
  }
  SUBCASE("A_4 and V_4 inside S_4") {
    Subgroup a4 = normal_closure(g, {by_cycles(g, "(1 2 3)")});
    Subgroup v4 = normal_closure(g, {by_cycles(g, "(1 2)(3 4)")});
    MonotonicityReport rep = verify_quasinil_monotone(g, a4, v4);
    CHECK(rep.pass);
    CHECK(rep.subgroup_checked == 12);
    CHECK(rep.quotient_checked == 24);
  }
}

TEST_CASE("memo statistics move and verdicts repeat deterministically") {
  FiniteGroup g = parse_catalog_spec("s4");
  QuasiNilClassifier a(g), b(g);
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    NilOrderResult ra = a.nil_order(e), rb = b.nil_order(e);
    CHECK(ra.nil_order == rb.nil_order);
    CHECK(ra.counterexample == rb.counterexample);
  }
  CHECK(a.memo_misses() > 0);
  CHECK(a.memo_misses() == b.memo_misses());
}

TEST_CASE("kmax default dominates the series length") {
  CHECK(QuasiNilClassifier::default_kmax(1) == 1);
  CHECK(QuasiNilClassifier::default_kmax(6) == 4);
  CHECK(QuasiNilClassifier::default_kmax(8) == 4);
  CHECK(QuasiNilClassifier::default_kmax(120) == 8);
  for (const char* name : {"s4", "d16", "sl2_3"}) {
    FiniteGroup g = parse_catalog_spec(name);
    RadicalSeries s = upper_radical_series(g);
    CHECK(s.length() < QuasiNilClassifier::default_kmax(g.order()));
  }
}
