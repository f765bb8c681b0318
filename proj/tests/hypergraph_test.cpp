#include <doctest.h>

#include <sstream>

#include "lexhit/extension.hpp"
#include "lexhit/hypergraph.hpp"
#include "lexhit/reference.hpp"
#include "test_util.hpp"

using namespace lexhit;
using lexhit::testing::set_from_mask;

namespace {

// {{a,b},{b,c}} over a,b,c.
Hypergraph path3() {
  return Hypergraph({"a", "b", "c"}, {VertexSet(3, {0, 1}), VertexSet(3, {1, 2})});
}

}  // namespace

TEST_CASE("is_hitting_set") {
  const Hypergraph h = path3();
  CHECK(h.is_hitting_set(VertexSet(3, {1})));
  CHECK_FALSE(h.is_hitting_set(VertexSet(3, {0})));

  const Hypergraph empty_edge({"a", "b", "c"}, {VertexSet(3)});
  CHECK_FALSE(empty_edge.is_hitting_set(VertexSet::full(3)));

  const Hypergraph no_edges({"a"}, {});
  CHECK(no_edges.is_hitting_set(VertexSet(1)));
}

TEST_CASE("check_minimal") {
  const Hypergraph h = path3();

  const auto good = h.check_minimal(VertexSet(3, {1}));
  REQUIRE(good.status == MinimalityCheck::Status::Minimal);
  REQUIRE(good.record.witnesses.size() == 1);
  CHECK(good.record.witnesses[0].first == 1);
  // Either edge works as b's witness.
  CHECK(h.edge(good.record.witnesses[0].second).contains(1));

  const auto expendable = h.check_minimal(VertexSet(3, {0, 1}));
  REQUIRE(expendable.status == MinimalityCheck::Status::Expendable);
  CHECK(expendable.expendable_vertex == 0);

  const auto not_hitting = h.check_minimal(VertexSet(3, {0}));
  REQUIRE(not_hitting.status == MinimalityCheck::Status::NotHitting);
  CHECK(not_hitting.violated_edge == 1);

  const Hypergraph no_edges({"a"}, {});
  const auto trivial = no_edges.check_minimal(VertexSet(1));
  REQUIRE(trivial.status == MinimalityCheck::Status::Minimal);
  CHECK(trivial.record.witnesses.empty());
}

TEST_CASE("check_minimal agrees with the subset-scan oracle") {
  auto rng = lexhit::testing::seeded_rng(11);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const Hypergraph h = lexhit::testing::random_hypergraph(rng, n, 1 + rng() % 8);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet s = set_from_mask(mask, n);
      const bool expected = lexhit::testing::subset_scan_is_minimal_transversal(h, s);
      const auto check = h.check_minimal(s);
      REQUIRE(static_cast<bool>(check) == expected);
      if (check) {
        for (const auto& [x, edge] : check.record.witnesses) {
          CHECK(h.edge(edge).intersection_count(s) == 1);
          CHECK(h.edge(edge).contains(x));
        }
      }
    }
  }
}

TEST_CASE("rank") {
  CHECK(path3().rank() == 2);
  CHECK(Hypergraph({"a"}, {}).rank() == 0);
  CHECK(Hypergraph({"a"}, {VertexSet(1), VertexSet(1, {0})}).rank() == 1);
}

TEST_CASE("restrict") {
  const Hypergraph h = path3();
  const Restriction r = h.restrict(VertexSet(3, {1}));
  CHECK(r.hypergraph.vertex_count() == 2);
  CHECK(r.hypergraph.names() == std::vector<std::string>{"a", "c"});
  REQUIRE(r.hypergraph.edge_count() == 2);
  CHECK(r.hypergraph.edge(0) == VertexSet(2, {0}));
  CHECK(r.hypergraph.edge(1) == VertexSet(2, {1}));
  CHECK(r.to_original == std::vector<VertexId>{0, 2});
  CHECK(r.from_original == std::vector<VertexId>{0, kNoVertex, 1});

  // Edge emptied by the restriction is kept.
  const Hypergraph single({"a"}, {VertexSet(1, {0})});
  const Restriction r2 = single.restrict(VertexSet(1, {0}));
  REQUIRE(r2.hypergraph.edge_count() == 1);
  CHECK(r2.hypergraph.edge(0).empty());

  // Duplicates created by the restriction are merged.
  const Hypergraph two({"a", "b", "c"}, {VertexSet(3, {0, 1}), VertexSet(3, {0, 2})});
  const Restriction r3 = two.restrict(VertexSet(3, {1, 2}));
  REQUIRE(r3.hypergraph.edge_count() == 1);
  CHECK(r3.hypergraph.edge(0) == VertexSet(1, {0}));
}

TEST_CASE("restrict-then-extend equals extend-with-exclusion") {
  auto rng = lexhit::testing::seeded_rng(13);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const Hypergraph h = lexhit::testing::random_hypergraph(rng, n, 1 + rng() % 8);
    const VertexSet y = lexhit::testing::random_subset(rng, n, 0.3);
    VertexSet x = lexhit::testing::random_subset(rng, n, 0.25);
    x -= y;

    const bool direct = extend_decide(ExtensionQuery(h, x, y)).extends;
    const Restriction r = h.restrict(y);
    VertexSet xr(r.hypergraph.vertex_count());
    x.for_each([&](VertexId v) { xr.insert(r.from_original[v]); });
    const bool via_restrict =
        extend_decide(ExtensionQuery(r.hypergraph, xr,
                                     VertexSet(r.hypergraph.vertex_count())))
            .extends;
    REQUIRE(direct == via_restrict);
  }
}

TEST_CASE("edge deduplication preserves the transversal hypergraph") {
  auto rng = lexhit::testing::seeded_rng(17);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<VertexSet> edges;
    std::vector<std::uint64_t> raw_masks;
    const std::size_t m = 1 + rng() % 6;
    for (std::size_t i = 0; i < m; ++i) {
      edges.push_back(lexhit::testing::random_subset(rng, n, 0.4));
      raw_masks.push_back(lexhit::testing::mask_from_set(edges.back()));
    }
    // Duplicate a few edges on purpose.
    for (std::size_t i = 0; i < m; i += 2) {
      edges.push_back(edges[i]);
      raw_masks.push_back(raw_masks[i]);
    }

    const Hypergraph deduped = Hypergraph::with_default_names(n, std::move(edges));
    CHECK(deduped.edge_count() <= m);

    // Reference scan over the raw edge list, duplicates included.
    std::vector<std::uint64_t> got;
    for (const auto& t : bf_all_minimal_transversals(deduped))
      got.push_back(lexhit::testing::mask_from_set(t));
    std::sort(got.begin(), got.end());
    CHECK(got == lexhit::testing::subset_scan_transversal_masks(raw_masks, n));
  }
}

TEST_CASE("superset-edge removal preserves the transversal hypergraph") {
  auto rng = lexhit::testing::seeded_rng(19);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const Hypergraph h = lexhit::testing::random_hypergraph(rng, n, 1 + rng() % 8, 0.5);
    const Hypergraph reduced = h.without_superset_edges();
    CHECK(bf_all_minimal_transversals(h) == bf_all_minimal_transversals(reduced));
  }
}

TEST_CASE("parser accepts the documented format") {
  std::istringstream in(
      "# a comment\n"
      "\n"
      "vertices: a b c   # trailing comment\n"
      "edge: a b\n"
      "edge:\n"
      "edge: b c\n");
  const Hypergraph h = parse_hypergraph(in);
  CHECK(h.vertex_count() == 3);
  REQUIRE(h.edge_count() == 3);
  CHECK(h.edge(1).empty());
  CHECK(h.vertex_named("c") == VertexId{2});
  CHECK_FALSE(h.vertex_named("d").has_value());
}

TEST_CASE("parser reports line numbers") {
  auto lines_of = [](const char* text) {
    std::istringstream in(text);
    try {
      parse_hypergraph(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(lines_of("vertices: a\nedge: a\nedge: b\n") == 3);   // unknown name
  CHECK(lines_of("edge: a\n") == 1);                         // header missing
  CHECK(lines_of("vertices: a a\n") == 1);                   // duplicate name
  CHECK(lines_of("vertices: a\nfoo: bar\n") == 2);           // bad keyword
  CHECK(lines_of("# only a comment\n") == 1);                // no header at all
}

TEST_CASE("writer round-trips") {
  const Hypergraph h = path3();
  std::ostringstream out;
  write_hypergraph(out, h);
  std::istringstream in(out.str());
  const Hypergraph back = parse_hypergraph(in);
  CHECK(back.names() == h.names());
  CHECK(back.edges() == h.edges());
}

TEST_CASE("empty universe") {
  std::istringstream in("vertices:\nedge:\n");
  const Hypergraph h = parse_hypergraph(in);
  CHECK(h.vertex_count() == 0);
  CHECK(h.edge_count() == 1);
  CHECK(h.rank() == 0);
}
