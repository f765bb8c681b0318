#include <doctest.h>

#include <cstdint>

#include "lexhit/extension.hpp"
#include "lexhit/independent_family.hpp"
#include "lexhit/reference.hpp"
#include "test_util.hpp"

using namespace lexhit;
using lexhit::testing::set_from_mask;

namespace {

Hypergraph path3() {
  return Hypergraph({"a", "b", "c"}, {VertexSet(3, {0, 1}), VertexSet(3, {1, 2})});
}

// Reference answer: scan the brute-force transversal list.
bool oracle_extension(const std::vector<VertexSet>& transversals,
                      const VertexSet& include, const VertexSet& exclude) {
  for (const auto& t : transversals)
    if (include.is_subset_of(t) && !t.intersects(exclude)) return true;
  return false;
}

}  // namespace

TEST_CASE("query construction rejects bad input") {
  const Hypergraph h = path3();
  CHECK_THROWS_AS(ExtensionQuery(h, VertexSet(3, {0}), VertexSet(3, {0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtensionQuery(h, VertexSet(2), VertexSet(3)), std::invalid_argument);
}

TEST_CASE("build_witness_systems preprocessing verdicts") {
  // Empty edge, empty include: the full universe cannot hit it.
  const Hypergraph hollow({"a"}, {VertexSet(1)});
  const auto b1 = build_witness_systems(ExtensionQuery(hollow, VertexSet(1), VertexSet(1)));
  CHECK(b1.verdict == WitnessBuild::Verdict::False);
  CHECK(b1.reason == WitnessBuild::Reason::EmptyIncludeNotHitting);

  const Hypergraph h = path3();
  // {a,b}: every edge containing a also contains b, so S_a is empty.
  const auto b2 = build_witness_systems(ExtensionQuery(h, VertexSet(3, {0, 1}), VertexSet(3)));
  CHECK(b2.verdict == WitnessBuild::Verdict::False);
  CHECK(b2.reason == WitnessBuild::Reason::EmptySystem);
  CHECK(b2.empty_system_member == 0);

  // {b}: both edges are potential witnesses, no forbidden edges remain.
  const auto b3 = build_witness_systems(ExtensionQuery(h, VertexSet(3, {1}), VertexSet(3)));
  CHECK(b3.verdict == WitnessBuild::Verdict::True);
  CHECK(b3.reason == WitnessBuild::Reason::NoForbidden);
  REQUIRE(b3.systems.systems.size() == 1);
  CHECK(b3.systems.systems[0].size() == 2);

  // Empty include over a hittable graph.
  const auto b4 = build_witness_systems(ExtensionQuery(h, VertexSet(3), VertexSet(3)));
  CHECK(b4.verdict == WitnessBuild::Verdict::True);
  CHECK(b4.reason == WitnessBuild::Reason::EmptyIncludeHitting);
}

TEST_CASE("extend_decide on the worked examples") {
  const Hypergraph h = path3();
  CHECK_FALSE(extend_decide(ExtensionQuery(h, VertexSet(3, {0}), VertexSet(3, {2}))).extends);
  CHECK(extend_decide(ExtensionQuery(h, VertexSet(3, {0}), VertexSet(3))).extends);

  const Hypergraph triangle({"a", "b", "c"},
                            {VertexSet(3, {0, 1}), VertexSet(3, {0, 2}), VertexSet(3, {1, 2})});
  CHECK_FALSE(
      extend_decide(ExtensionQuery(triangle, VertexSet::full(3), VertexSet(3))).extends);
}

TEST_CASE("oracle agrees with brute force and respects budgets") {
  auto check_instance = [](const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    const auto transversals = bf_all_minimal_transversals(h);
    for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << n); ++xm) {
      for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << n); ++ym) {
        if ((xm & ym) != 0) continue;
        const VertexSet x = set_from_mask(xm, n), y = set_from_mask(ym, n);
        const ExtensionQuery q(h, x, y);
        const auto decision = extend_decide(q);
        REQUIRE(decision.extends == oracle_extension(transversals, x, y));

        std::size_t stored = decision.stats.forbidden_size;
        for (std::size_t s : decision.stats.system_sizes) stored += s;
        REQUIRE(stored <= h.edge_count());
        REQUIRE(decision.stats.tuples_examined <= decision.stats.tuple_budget());

        // Reduction route must agree, in both witness modes.
        for (auto mode : {WitnessMode::Unpunctured, WitnessMode::Punctured}) {
          const auto inst = reduce_to_mcif(q, mode);
          REQUIRE(solve_mcif_bruteforce(inst).satisfiable == decision.extends);
        }
      }
    }
  };

  // Exhaustive over every hypergraph on up to 3 vertices.
  for (std::size_t n = 0; n <= 3; ++n) {
    const std::uint64_t edge_space = std::uint64_t{1} << n;
    for (std::uint64_t picked = 0; picked < (std::uint64_t{1} << edge_space); ++picked) {
      std::vector<VertexSet> edges;
      for (std::uint64_t e = 0; e < edge_space; ++e)
        if ((picked >> e) & 1u) edges.push_back(set_from_mask(e, n));
      check_instance(Hypergraph::with_default_names(n, std::move(edges)));
    }
  }

  // Random instances on larger universes.
  auto rng = lexhit::testing::seeded_rng(23);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 4 + rng() % 5;
    check_instance(lexhit::testing::random_hypergraph(rng, n, 1 + rng() % 8));
  }
}

TEST_CASE("reduce_to_mcif worked examples") {
  // Empty include, no empty edge: fixed true-instance.
  const Hypergraph h = path3();
  const auto sentinel =
      reduce_to_mcif(ExtensionQuery(h, VertexSet(3), VertexSet(3)));
  CHECK(sentinel.parameter() == 1);
  REQUIRE(sentinel.colours[0].size() == 1);
  CHECK(sentinel.colours[0][0].empty());
  CHECK(sentinel.forbidden.empty());
  CHECK(solve_mcif_bruteforce(sentinel).satisfiable);

  // X={b}: one colour with both edges, nothing forbidden.
  const auto inst = reduce_to_mcif(ExtensionQuery(h, VertexSet(3, {1}), VertexSet(3)));
  CHECK(inst.parameter() == 1);
  REQUIRE(inst.colours[0].size() == 2);
  CHECK(inst.forbidden.empty());
  CHECK(solve_mcif_bruteforce(inst).satisfiable);

  // {{a,b},{c}}, X={a}: S_a = {{a,b}}, T = {{c}}; {a,b} does not cover {c}.
  const Hypergraph h2({"a", "b", "c"}, {VertexSet(3, {0, 1}), VertexSet(3, {2})});
  const auto inst2 = reduce_to_mcif(ExtensionQuery(h2, VertexSet(3, {0}), VertexSet(3)));
  CHECK(inst2.parameter() == 1);
  REQUIRE(inst2.colours[0].size() == 1);
  CHECK(inst2.colours[0][0] == VertexSet(3, {0, 1}));
  REQUIRE(inst2.forbidden.size() == 1);
  CHECK(inst2.forbidden[0] == VertexSet(3, {2}));
  CHECK(solve_mcif_bruteforce(inst2).satisfiable);

  // Degenerate empty-system case maps to the fixed false-instance.
  const auto dead = reduce_to_mcif(ExtensionQuery(h, VertexSet(3, {0, 1}), VertexSet(3)));
  CHECK_FALSE(solve_mcif_bruteforce(dead).satisfiable);
}

TEST_CASE("reduce_to_mcif re-densifies the universe after exclusion") {
  const Hypergraph h = path3();
  const auto inst =
      reduce_to_mcif(ExtensionQuery(h, VertexSet(3, {0}), VertexSet(3, {1})));
  CHECK(inst.universe_size == 2);
  CHECK(inst.element_names == std::vector<std::string>{"a", "c"});
}

TEST_CASE("lex_smallest_contains agrees with the oracle") {
  const Hypergraph h = path3();
  CHECK(lex_smallest_contains(h, VertexSet(3, {1})));
  CHECK_FALSE(lex_smallest_contains(h, VertexSet(3, {0, 1})));
  CHECK(lex_smallest_contains(Hypergraph({"a"}, {}), VertexSet(1)));

  auto rng = lexhit::testing::seeded_rng(29);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + rng() % 7;
    const Hypergraph g = lexhit::testing::random_hypergraph(rng, n, 1 + rng() % 7);
    for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << n); ++xm) {
      const VertexSet x = set_from_mask(xm, n);
      REQUIRE(lex_smallest_contains(g, x) ==
              extend_decide(ExtensionQuery(g, x, VertexSet(n))).extends);
    }
  }
}
