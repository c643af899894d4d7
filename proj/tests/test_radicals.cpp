#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "catalog.hpp"
#include "quotient.hpp"
#include "radicals.hpp"

using namespace engelrad;

TEST_CASE("fitting subgroup") {
  SUBCASE("nilpotent groups are their own Fitting subgroup") {
    for (const char* name : {"q8", "c12", "ut3_2", "ut4_3"}) {
      FiniteGroup g = parse_catalog_spec(name);
      CHECK(fitting_subgroup(g).size() == g.order());
    }
  }
  SUBCASE("S_3 gives A_3") {
    FiniteGroup g = parse_catalog_spec("s3");
    Subgroup f = fitting_subgroup(g);
    CHECK(f.size() == 3);
    CHECK(is_normal_subgroup(g, f));
  }
  SUBCASE("A_5 gives the trivial subgroup") {
    CHECK(fitting_subgroup(parse_catalog_spec("a5")).size() == 1);
  }
}

TEST_CASE("fitting oracle via normal closures") {
  SUBCASE("abelian groups") {
    FiniteGroup g = parse_catalog_spec("c10");
    CHECK(fitting_oracle(g).size() == 10);
  }
  SUBCASE("S_4 gives V_4") {
    FiniteGroup g = parse_catalog_spec("s4");
    Subgroup f = fitting_oracle(g);
    CHECK(f.size() == 4);
    for (ElementIndex e : f.elements)
      if (e != g.identity()) CHECK(g.element_order(e) == 2);
  }
  SUBCASE("D_6 gives C_6") {
    FiniteGroup g = parse_catalog_spec("d6");
    Subgroup f = fitting_oracle(g);
    CHECK(f.size() == 6);
    bool has_order6 = false;
    for (ElementIndex e : f.elements) has_order6 |= g.element_order(e) == 6;
    CHECK(has_order6);  // cyclic of order 6
  }
}

TEST_CASE("the two fitting routes agree over the whole catalog up to 200") {
  for (const std::string& name : builtin_catalog()) {
    FiniteGroup g = parse_catalog_spec(name);
    if (g.order() > 200) continue;
    CAPTURE(name);
    CHECK(fitting_subgroup(g).elements == fitting_oracle(g).elements);
  }
}

TEST_CASE("the two radical routes agree over the whole catalog up to 200") {
  for (const std::string& name : builtin_catalog()) {
    FiniteGroup g = parse_catalog_spec(name);
    if (g.order() > 200) continue;
    CAPTURE(name);
    CHECK(solvable_radical(g).elements == solvable_radical_oracle(g).elements);
  }
}

TEST_CASE("series invariants over the catalog") {
  for (const std::string& name : builtin_catalog()) {
    FiniteGroup g = parse_catalog_spec(name);
    if (g.order() > 120) continue;
    CAPTURE(name);
    RadicalSeries s = upper_radical_series(g);
    // length stays within log2 of the order
    std::uint32_t log2n = 0;
    while ((1u << (log2n + 1)) <= g.order()) ++log2n;
    CHECK(s.length() <= log2n);
    // strictly increasing normal members, nilpotent factors
    for (std::size_t i = 1; i < s.members.size(); ++i) {
      CHECK(s.members[i].size() > s.members[i - 1].size());
      CHECK(is_normal_subgroup(g, s.members[i]));
      MaterializedSubgroup upper = materialize_subgroup(g, s.members[i]);
      std::vector<ElementIndex> lower;
      for (ElementIndex e : s.members[i - 1].elements)
        lower.push_back(static_cast<ElementIndex>(upper.to_local[e]));
      QuotientGroup factor = quotient(upper.group, subgroup_from_sorted(upper.group, lower));
      CHECK(nilpotency_class(factor.group, full_subgroup(factor.group)).has_value());
    }
    // the quotient by the top is semisimple
    QuotientGroup top = quotient(g, s.top());
    CHECK(is_semisimple(top.group));
  }
}

TEST_CASE("upper radical series") {
  SUBCASE("nilpotent group: 1 < G") {
    FiniteGroup g = parse_catalog_spec("q8");
    RadicalSeries s = upper_radical_series(g);
    REQUIRE(s.length() == 1);
    CHECK(s.members[0].size() == 1);
    CHECK(s.members[1].size() == 8);
  }
  SUBCASE("S_4: sizes 1, 4, 12, 24") {
    FiniteGroup g = parse_catalog_spec("s4");
    RadicalSeries s = upper_radical_series(g);
    REQUIRE(s.length() == 3);
    std::vector<std::uint32_t> sizes;
    for (const auto& m : s.members) sizes.push_back(m.size());
    CHECK(sizes == std::vector<std::uint32_t>{1, 4, 12, 24});
  }
  SUBCASE("A_5: the series never leaves the identity") {
    RadicalSeries s = upper_radical_series(parse_catalog_spec("a5"));
    CHECK(s.length() == 0);
    CHECK(s.members[0].size() == 1);
  }
  SUBCASE("factors are nilpotent and the top quotient is semisimple") {
    FiniteGroup g = parse_catalog_spec("s4");
    RadicalSeries s = upper_radical_series(g);
    for (std::size_t i = 1; i < s.members.size(); ++i) {
      MaterializedSubgroup upper = materialize_subgroup(g, s.members[i]);
      std::vector<ElementIndex> lower;
      for (ElementIndex e : s.members[i - 1].elements)
        lower.push_back(static_cast<ElementIndex>(upper.to_local[e]));
      QuotientGroup factor = quotient(upper.group, subgroup_from_sorted(upper.group, lower));
      CHECK(nilpotency_class(factor.group, full_subgroup(factor.group)).has_value());
    }
    QuotientGroup top = quotient(g, s.top());
    CHECK(is_semisimple(top.group));
  }
  SUBCASE("series length stays within log2 of the order") {
    for (const char* name : {"s3", "s4", "s5", "d6", "d16", "a4", "sl2_3", "s4xc6"}) {
      FiniteGroup g = parse_catalog_spec(name);
      RadicalSeries s = upper_radical_series(g);
      std::uint32_t log2n = 0;
      while ((1u << (log2n + 1)) <= g.order()) ++log2n;
      CHECK(s.length() <= log2n);
    }
  }
}

TEST_CASE("solvable radical") {
  SUBCASE("solvable groups are their own radical") {
    for (const char* name : {"s4", "d10", "sl2_3", "c18"}) {
      FiniteGroup g = parse_catalog_spec(name);
      CHECK(solvable_radical(g).size() == g.order());
    }
  }
  SUBCASE("S_5 has trivial radical") {
    CHECK(solvable_radical(parse_catalog_spec("s5")).size() == 1);
  }
  SUBCASE("A_4 x A_5 has radical A_4 x 1") {
    FiniteGroup g = parse_catalog_spec("a4xa5");
    Subgroup rad = solvable_radical(g);
    REQUIRE(rad.size() == 12);
    // elements of the radical are exactly the pairs (x, identity)
    for (ElementIndex e : rad.elements) CHECK(e % 60 == 0);
  }
}

TEST_CASE("solvable radical oracle") {
  CHECK(solvable_radical_oracle(parse_catalog_spec("c1")).size() == 1);
  CHECK(solvable_radical_oracle(parse_catalog_spec("s4")).size() == 24);
  CHECK(solvable_radical_oracle(parse_catalog_spec("a5")).size() == 1);
  for (const char* name : {"s3", "s5", "a4", "d12", "sl2_3", "a5xc2", "s4xc6"}) {
    FiniteGroup g = parse_catalog_spec(name);
    CAPTURE(name);
    CHECK(solvable_radical(g).elements == solvable_radical_oracle(g).elements);
  }
}

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple(parse_catalog_spec("a5")));
  CHECK(is_semisimple(parse_catalog_spec("s5")));
  CHECK(!is_semisimple(parse_catalog_spec("q8")));
  CHECK(!is_semisimple(parse_catalog_spec("s3")));
  CHECK(!is_semisimple(parse_catalog_spec("a5xc2")));
}

TEST_CASE("pairwise solvability") {
  SUBCASE("solvable groups pass outright") {
    PairwiseSolvableResult r = pairwise_solvable(parse_catalog_spec("s4"));
    CHECK(r.all_solvable);
    CHECK(r.exhaustive);
  }
  SUBCASE("Q8 passes") {
    CHECK(pairwise_solvable(parse_catalog_spec("q8")).all_solvable);
  }
  SUBCASE("A_5 fails with a pair generating a nonsolvable subgroup") {
    FiniteGroup g = parse_catalog_spec("a5");
    PairwiseSolvableResult r = pairwise_solvable(g);
    REQUIRE(!r.all_solvable);
    REQUIRE(r.witness.has_value());
    Subgroup h = subgroup_generated(g, {r.witness->first, r.witness->second});
    CHECK(!derived_length(g, h).has_value());
    CHECK(h.size() == 60);  // the witness pair generates all of A_5
  }
  SUBCASE("matches radical fullness on a catalog slice") {
    for (const char* name : {"s3", "s4", "s5", "a4", "a5", "q8", "d14", "sl2_3",
                             "a5xc2", "s4xc6"}) {
      FiniteGroup g = parse_catalog_spec(name);
      CAPTURE(name);
      bool radical_full = solvable_radical(g).size() == g.order();
      CHECK(pairwise_solvable(g).all_solvable == radical_full);
    }
  }
}
