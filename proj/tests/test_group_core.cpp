#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "catalog.hpp"
#include "group.hpp"
#include "quotient.hpp"
#include "subgroup.hpp"

using namespace engelrad;

namespace {

// Test-local composition oracle: images computed point by point, independent
// of the library's permutation arithmetic.
std::vector<std::uint16_t> oracle_compose(const std::vector<std::uint16_t>& a,
                                          const std::vector<std::uint16_t>& b) {
  std::vector<std::uint16_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

// Exhaustive closure oracle over sets of permutations.
std::set<std::vector<std::uint16_t>> oracle_closure(
    std::set<std::vector<std::uint16_t>> current) {
  while (true) {
    std::set<std::vector<std::uint16_t>> next = current;
    for (const auto& a : current)
      for (const auto& b : current) next.insert(oracle_compose(a, b));
    if (next == current) return current;
    current = std::move(next);
  }
}

FiniteGroup s3() { return parse_catalog_spec("s3"); }
FiniteGroup s4() { return parse_catalog_spec("s4"); }

ElementIndex by_cycles(const FiniteGroup& g, const std::string& cycles) {
  return g.index_of_permutation(parse_cycle_string(cycles, g.permutation_degree()));
}

}  // namespace

TEST_CASE("permutation generators enumerate the full group") {
  FiniteGroup g = FiniteGroup::from_permutations(
      {3, {parse_cycle_string("(1 2 3)", 3), parse_cycle_string("(1 2)", 3)}});
  CHECK(g.order() == 6);
  CHECK(g.identity() == 0);
  CHECK(g.element_label(0) == "()");
}

TEST_CASE("empty generator list gives the trivial group") {
  FiniteGroup g = FiniteGroup::from_permutations({5, {}});
  CHECK(g.order() == 1);
}

TEST_CASE("unitriangular groups have order p^(n(n-1)/2)") {
  // Oracle: count strictly-upper-triangular unipotent matrices.
  CHECK(parse_catalog_spec("ut3_2").order() == 1u << 3);
  CHECK(parse_catalog_spec("ut4_2").order() == 1u << 6);
  CHECK(parse_catalog_spec("ut3_3").order() == 27);
}

TEST_CASE("element arithmetic satisfies the group axioms") {
  FiniteGroup g = s3();
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == g.identity());
    CHECK(g.mul(g.identity(), a) == a);
    for (std::uint32_t b = 0; b < g.order(); ++b)
      CHECK(g.conjugate(g.identity(), b) == g.identity());
  }
}

TEST_CASE("products agree with direct image-of-points composition") {
  FiniteGroup g = s4();
  std::vector<std::vector<std::uint16_t>> images;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    images.push_back(parse_cycle_string(g.element_label(i), 4));
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      ElementIndex p = g.mul(a, b);
      CHECK(images[p] == oracle_compose(images[a], images[b]));
    }
}

TEST_CASE("commutators match brute-force composition") {
  FiniteGroup g = s3();
  ElementIndex a = by_cycles(g, "(1 2)");
  ElementIndex b = by_cycles(g, "(1 2 3)");
  ElementIndex direct = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
  CHECK(g.commutator(a, b) == direct);
  CHECK(g.commutator(a, b) != g.identity());
  CHECK(g.commutator(a, g.identity()) == g.identity());
  // commuting pair
  FiniteGroup c = parse_catalog_spec("c6");
  for (std::uint32_t x = 0; x < c.order(); ++x)
    for (std::uint32_t y = 0; y < c.order(); ++y)
      CHECK(c.commutator(x, y) == c.identity());
}

TEST_CASE("subgroup generation matches the exhaustive closure oracle") {
  FiniteGroup g = s4();
  SUBCASE("empty set gives the trivial subgroup") {
    CHECK(subgroup_generated(g, {}).size() == 1);
  }
  SUBCASE("a 3-cycle generates C_3") {
    FiniteGroup h = s3();
    CHECK(subgroup_generated(h, {by_cycles(h, "(1 2 3)")}).size() == 3);
  }
  SUBCASE("two disjoint transpositions in S_4") {
    ElementIndex a = by_cycles(g, "(1 2)");
    ElementIndex b = by_cycles(g, "(3 4)");
    Subgroup h = subgroup_generated(g, {a, b});
    auto closure = oracle_closure({parse_cycle_string("(1 2)", 4),
                                   parse_cycle_string("(3 4)", 4),
                                   parse_cycle_string("", 4)});
    CHECK(h.size() == closure.size());
    for (ElementIndex e : h.elements)
      CHECK(closure.count(parse_cycle_string(g.element_label(e), 4)) == 1);
  }
}

TEST_CASE("normal closure matches the conjugate-closure oracle") {
  FiniteGroup g3 = s3();
  CHECK(normal_closure(g3, {g3.identity()}).size() == 1);
  CHECK(normal_closure(g3, {by_cycles(g3, "(1 2)")}).size() == 6);

  FiniteGroup g4 = s4();
  Subgroup v4 = normal_closure(g4, {by_cycles(g4, "(1 2)(3 4)")});
  // Oracle: close the full conjugate set exhaustively.
  std::set<std::vector<std::uint16_t>> seeds;
  for (std::uint32_t x = 0; x < g4.order(); ++x)
    seeds.insert(parse_cycle_string(
        g4.element_label(g4.conjugate(by_cycles(g4, "(1 2)(3 4)"), x)), 4));
  seeds.insert(parse_cycle_string("", 4));
  CHECK(v4.size() == oracle_closure(seeds).size());
  CHECK(v4.size() == 4);
  CHECK(is_normal_subgroup(g4, v4));
}

TEST_CASE("commutator subgroups") {
  FiniteGroup g = s3();
  Subgroup whole = full_subgroup(g);
  CHECK(commutator_subgroup(g, whole, trivial_subgroup(g)).size() == 1);
  Subgroup derived = commutator_subgroup(g, whole, whole);
  CHECK(derived.size() == 3);  // A_3
  CHECK(derived.contains(by_cycles(g, "(1 2 3)")));

  // Commuting factors inside a direct product.
  FiniteGroup p = parse_catalog_spec("c2xc3");
  Subgroup a = subgroup_generated(p, {3});  // (1, 0)
  Subgroup b = subgroup_generated(p, {1});  // (0, 1)
  CHECK(commutator_subgroup(p, a, b).size() == 1);
}

TEST_CASE("derived and lower central series") {
  FiniteGroup g = s4();
  auto ds = derived_series(g, full_subgroup(g));
  REQUIRE(ds.size() == 4);  // S_4 > A_4 > V_4 > 1
  CHECK(ds[0].size() == 24);
  CHECK(ds[1].size() == 12);
  CHECK(ds[2].size() == 4);
  CHECK(ds[3].size() == 1);
  CHECK(derived_length(g, full_subgroup(g)) == 3);

  FiniteGroup a5 = parse_catalog_spec("a5");
  auto perfect = derived_series(a5, full_subgroup(a5));
  CHECK(perfect.size() == 1);  // stabilizes at A_5
  CHECK(!derived_length(a5, full_subgroup(a5)).has_value());

  FiniteGroup c12 = parse_catalog_spec("c12");
  auto lcs = lower_central_series(c12, full_subgroup(c12));
  REQUIRE(lcs.size() == 2);
  CHECK(lcs[1].size() == 1);

  // Series members are normal in H and decreasing.
  for (const auto& series : {ds, lcs})
    for (std::size_t i = 1; i < series.size(); ++i)
      CHECK(series[i].size() < series[i - 1].size());

  // For a proper subgroup H the terms are normal in H itself.
  Subgroup a4 = normal_closure(g, {by_cycles(g, "(1 2 3)")});
  for (const Subgroup& term : derived_series(g, a4))
    for (ElementIndex e : term.elements)
      for (ElementIndex h : a4.elements) CHECK(term.contains(g.conjugate(e, h)));
}

TEST_CASE("nilpotency and solvability verdicts") {
  FiniteGroup c1 = parse_catalog_spec("c1");
  CHECK(nilpotency_class(c1, full_subgroup(c1)) == 0);
  CHECK(derived_length(c1, full_subgroup(c1)) == 0);

  FiniteGroup ut32 = parse_catalog_spec("ut3_2");
  CHECK(nilpotency_class(ut32, full_subgroup(ut32)) == 2);

  FiniteGroup g3 = s3();
  CHECK(!nilpotency_class(g3, full_subgroup(g3)).has_value());
  CHECK(derived_length(g3, full_subgroup(g3)) == 2);
}

TEST_CASE("unitriangular nilpotency classes are n-1") {
  const std::pair<std::uint32_t, std::uint32_t> cases[] = {
      {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (auto [n, p] : cases) {
    FiniteGroup g = catalog_group("ut", {std::to_string(n), std::to_string(p)});
    CHECK(nilpotency_class(g, full_subgroup(g)) == n - 1);
  }
}

TEST_CASE("quotients") {
  FiniteGroup g = s4();
  SUBCASE("by the trivial subgroup") {
    QuotientGroup q = quotient(g, trivial_subgroup(g));
    CHECK(q.group.order() == g.order());
    for (std::uint32_t a = 0; a < g.order(); ++a)
      for (std::uint32_t b = 0; b < g.order(); ++b)
        CHECK(q.group.mul(q.projection[a], q.projection[b]) == q.projection[g.mul(a, b)]);
  }
  SUBCASE("S_4 / V_4 has order 6 and trivial center") {
    Subgroup v4 = normal_closure(g, {by_cycles(g, "(1 2)(3 4)")});
    QuotientGroup q = quotient(g, v4);
    CHECK(q.group.order() == 6);
    CHECK(center(q.group).size() == 1);
    // projection is a homomorphism with kernel V_4
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      for (std::uint32_t b = 0; b < g.order(); ++b)
        CHECK(q.group.mul(q.projection[a], q.projection[b]) == q.projection[g.mul(a, b)]);
      CHECK((q.projection[a] == 0) == v4.contains(a));
    }
  }
  SUBCASE("by the full group") {
    CHECK(quotient(g, full_subgroup(g)).group.order() == 1);
  }
  SUBCASE("non-normal subgroup rejected") {
    Subgroup h = subgroup_generated(g, {by_cycles(g, "(1 2)")});
    CHECK_THROWS_AS(quotient(g, h), Error);
  }
  SUBCASE("sampled homomorphism property on a larger quotient") {
    FiniteGroup big = parse_catalog_spec("a4xa5");
    std::vector<ElementIndex> kernel;
    for (std::uint32_t i = 0; i < 12; ++i) kernel.push_back(i * 60);  // A_4 x 1
    QuotientGroup q = quotient(big, subgroup_from_sorted(big, std::move(kernel)));
    CHECK(q.group.order() == 60);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10000; ++t) {
      ElementIndex a = static_cast<ElementIndex>(rng() % big.order());
      ElementIndex b = static_cast<ElementIndex>(rng() % big.order());
      CHECK(q.group.mul(q.projection[a], q.projection[b]) == q.projection[big.mul(a, b)]);
    }
  }
}

TEST_CASE("catalog constructions") {
  CHECK(parse_catalog_spec("c1").order() == 1);
  CHECK(parse_catalog_spec("a5").order() == 60);
  CHECK(catalog_group("ut", {"4", "2"}).order() == 64);
  CHECK(parse_catalog_spec("q8").order() == 8);
  CHECK(parse_catalog_spec("sl2_3").order() == 24);
  CHECK(parse_catalog_spec("gl2_3").order() == 48);
  CHECK(parse_catalog_spec("d6").order() == 12);
  CHECK(parse_catalog_spec("s3xc2").order() == 12);
  CHECK(parse_catalog_spec("direct_product,a4,c2").order() == 24);
  CHECK(catalog_group("cyclic", {"1"}).order() == 1);
  CHECK(catalog_group("alternating", {"5"}).order() == 60);
  CHECK_THROWS_AS(parse_catalog_spec("nosuch"), Error);
  CHECK_THROWS_AS(catalog_group("cyclic", {"0"}), Error);
}

TEST_CASE("catalog orders match the closed-form counts") {
  auto factorial = [](std::uint32_t n) {
    std::uint32_t f = 1;
    for (std::uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (std::uint32_t n = 1; n <= 12; ++n)
    CHECK(catalog_group("cyclic", {std::to_string(n)}).order() == n);
  for (std::uint32_t n = 2; n <= 10; ++n)
    CHECK(catalog_group("dihedral", {std::to_string(n)}).order() == 2 * n);
  for (std::uint32_t n = 2; n <= 6; ++n)
    CHECK(catalog_group("symmetric", {std::to_string(n)}).order() == factorial(n));
  for (std::uint32_t n = 3; n <= 6; ++n)
    CHECK(catalog_group("alternating", {std::to_string(n)}).order() == factorial(n) / 2);
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    CHECK(catalog_group("sl2", {std::to_string(p)}).order() == p * (p * p - 1));
  for (std::uint32_t p : {2u, 3u, 5u})
    CHECK(catalog_group("gl2", {std::to_string(p)}).order() ==
          (p * p - 1) * (p * p - p));
  for (std::uint32_t n = 2; n <= 4; ++n)
    for (std::uint32_t p : {2u, 3u}) {
      std::uint32_t expect = 1;
      for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) expect *= p;
      CHECK(catalog_group("ut", {std::to_string(n), std::to_string(p)}).order() == expect);
    }
  CHECK(parse_catalog_spec("a4xa5").order() == 12 * 60);
}

TEST_CASE("element ordering is deterministic") {
  FiniteGroup a = s4(), b = s4();
  for (std::uint32_t i = 0; i < a.order(); ++i)
    CHECK(a.element_label(i) == b.element_label(i));
}

TEST_CASE("closure invariant on catalog groups") {
  for (const char* name : {"s4", "q8", "d10", "sl2_3", "ut3_3", "c2xc2"}) {
    FiniteGroup g = parse_catalog_spec(name);
    for (std::uint32_t a = 0; a < g.order(); ++a)
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        ElementIndex p = g.mul(a, b);
        REQUIRE(p < g.order());
      }
  }
}

TEST_CASE("order cap is enforced") {
  GroupConfig cfg;
  cfg.max_order = 100;
  CHECK_THROWS_AS(parse_catalog_spec("s5", cfg), Error);
  try {
    parse_catalog_spec("s5", cfg);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderCap);
  }
}

TEST_CASE("matrix backend validation") {
  MatrixSpec bad;
  bad.prime = 3;
  bad.dim = 2;
  bad.generators.push_back({1, 1, 1, 1});  // determinant 0
  CHECK_THROWS_AS(FiniteGroup::from_matrices(std::move(bad)), Error);
  MatrixSpec not_prime;
  not_prime.prime = 4;
  not_prime.dim = 2;
  CHECK_THROWS_AS(FiniteGroup::from_matrices(std::move(not_prime)), Error);
}

TEST_CASE("cayley table validation") {
  SUBCASE("valid C_3 table") {
    TableSpec spec;
    spec.table = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    FiniteGroup g = FiniteGroup::from_table(std::move(spec));
    CHECK(g.order() == 3);
    CHECK(g.inv(1) == 2);
  }
  SUBCASE("Latin square violation") {
    TableSpec spec;
    spec.table = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(std::move(spec)), Error);
  }
  SUBCASE("identity row violation") {
    TableSpec spec;
    spec.table = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(std::move(spec)), Error);
  }
  SUBCASE("non-associative Latin square is rejected") {
    // Row/column 0 is the identity but (1*1)*2 != 1*(1*2).
    TableSpec spec;
    spec.table = {{0, 1, 2, 3, 4},
                  {1, 0, 3, 4, 2},
                  {2, 4, 0, 1, 3},
                  {3, 2, 4, 0, 1},
                  {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(std::move(spec)), Error);
  }
}

TEST_CASE("element orders and powers") {
  FiniteGroup g = parse_catalog_spec("q8");
  std::uint32_t order2 = 0;
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    std::uint32_t o = g.element_order(e);
    CHECK(g.power(e, o) == g.identity());
    CHECK(g.power(e, -1) == g.inv(e));
    if (o == 2) ++order2;
  }
  CHECK(order2 == 1);  // Q8 has a unique involution
}

TEST_CASE("materialized subgroups multiply like the parent") {
  FiniteGroup g = s4();
  Subgroup a4 = normal_closure(g, {by_cycles(g, "(1 2 3)")});
  MaterializedSubgroup m = materialize_subgroup(g, a4);
  CHECK(m.group.order() == 12);
  for (std::uint32_t i = 0; i < m.group.order(); ++i)
    for (std::uint32_t j = 0; j < m.group.order(); ++j) {
      ElementIndex parent = g.mul(m.to_parent[i], m.to_parent[j]);
      CHECK(m.to_parent[m.group.mul(i, j)] == parent);
    }
}
