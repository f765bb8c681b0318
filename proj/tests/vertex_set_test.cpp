#include <doctest.h>

#include <cstdint>
#include <set>

#include "lexhit/vertex_set.hpp"
#include "test_util.hpp"

using namespace lexhit;
using lexhit::testing::set_from_mask;

namespace {

// Independent ordering oracle: the smallest differing bit decides, and it
// favours the set that contains it. Reversing the bit order maps this to a
// plain integer comparison (descending).
std::uint64_t reversed_bits(std::uint64_t mask, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) out |= std::uint64_t{1} << (n - 1 - i);
  return out;
}

std::strong_ordering oracle_order(std::uint64_t a, std::uint64_t b, std::size_t n) {
  const std::uint64_t ra = reversed_bits(a, n), rb = reversed_bits(b, n);
  if (ra == rb) return std::strong_ordering::equal;
  return ra > rb ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

TEST_CASE("lex_compare on the worked examples") {
  // Universe a,b,c as indices 0,1,2.
  const VertexSet ac(3, {0, 2}), b(3, {1}), ab(3, {0, 1}), empty(3);
  CHECK(lex_compare(ac, b) == std::strong_ordering::less);
  CHECK(lex_compare(empty, VertexSet(3)) == std::strong_ordering::equal);
  CHECK(lex_compare(b, ab) == std::strong_ordering::greater);
}

TEST_CASE("lex_compare rejects mismatched universes") {
  CHECK_THROWS_AS(lex_compare(VertexSet(3), VertexSet(4)), std::invalid_argument);
}

TEST_CASE("lex_compare matches the reversed-bit oracle exhaustively (n=10)") {
  constexpr std::size_t n = 10;
  for (std::uint64_t a = 0; a < (1u << n); ++a) {
    const VertexSet sa = set_from_mask(a, n);
    for (std::uint64_t b = 0; b < (1u << n); ++b) {
      const VertexSet sb = set_from_mask(b, n);
      REQUIRE(lex_compare(sa, sb) == oracle_order(a, b, n));
    }
  }
}

TEST_CASE("lex_compare is a total order (exhaustive transitivity, n=5)") {
  constexpr std::size_t n = 5;
  std::vector<VertexSet> sets;
  for (std::uint64_t m = 0; m < (1u << n); ++m) sets.push_back(set_from_mask(m, n));
  for (const auto& a : sets)
    for (const auto& b : sets) {
      const auto ab = lex_compare(a, b);
      // Antisymmetry and totality.
      CHECK(lex_compare(b, a) == (ab == std::strong_ordering::less
                                      ? std::strong_ordering::greater
                                      : ab == std::strong_ordering::greater
                                            ? std::strong_ordering::less
                                            : std::strong_ordering::equal));
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      if (ab == std::strong_ordering::equal) continue;
      for (const auto& c : sets) {
        if (ab == std::strong_ordering::less &&
            lex_compare(b, c) == std::strong_ordering::less)
          CHECK(lex_compare(a, c) == std::strong_ordering::less);
      }
    }
}

TEST_CASE("set algebra agrees with std::set on random data") {
  auto rng = lexhit::testing::seeded_rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 130);
    const VertexSet a = lexhit::testing::random_subset(rng, n, 0.3);
    const VertexSet b = lexhit::testing::random_subset(rng, n, 0.3);
    std::set<VertexId> ra, rb;
    a.for_each([&](VertexId v) { ra.insert(v); });
    b.for_each([&](VertexId v) { rb.insert(v); });

    std::set<VertexId> runion = ra;
    runion.insert(rb.begin(), rb.end());
    std::set<VertexId> rinter, rdiff;
    for (VertexId v : ra) {
      if (rb.count(v)) rinter.insert(v);
      else rdiff.insert(v);
    }

    auto as_std = [](const VertexSet& s) {
      std::set<VertexId> out;
      s.for_each([&](VertexId v) { out.insert(v); });
      return out;
    };
    CHECK(as_std(a | b) == runion);
    CHECK(as_std(a & b) == rinter);
    CHECK(as_std(a - b) == rdiff);
    CHECK(a.intersects(b) == !rinter.empty());
    CHECK(a.is_subset_of(b) == (rdiff.empty()));
    CHECK(a.count() == ra.size());
    CHECK((a & b).count() == a.intersection_count(b));
    CHECK(a.first() == (ra.empty() ? kNoVertex : *ra.begin()));
  }
}

TEST_CASE("full, padded, insert bounds") {
  const VertexSet f = VertexSet::full(70);
  CHECK(f.count() == 70);
  CHECK(f.contains(69));
  VertexSet s(3, {1});
  const VertexSet p = s.padded(100);
  CHECK(p.universe_size() == 100);
  CHECK(p.count() == 1);
  CHECK(p.contains(1));
  CHECK_THROWS_AS(s.insert(3), std::out_of_range);
  CHECK_THROWS_AS(p.padded(50), std::invalid_argument);
  CHECK(VertexSet::full(0).empty());
}
