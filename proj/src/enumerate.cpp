#include "lexhit/enumerate.hpp"

#include <algorithm>
#include <string>

#include "lexhit/check.hpp"
#include "lexhit/extension.hpp"

namespace lexhit {

void EnumerationStats::check_bounds(std::size_t vertex_count) const {
  const std::uint64_t node_bound =
      vertex_count == 0 ? 1 : 2 * static_cast<std::uint64_t>(vertex_count) - 1;
  LEXHIT_CHECK(max_nodes_between_outputs <= node_bound,
               "more than 2n-1 nodes between consecutive outputs");
  if (outputs > 0) {
    LEXHIT_CHECK(nodes_before_first_output <= node_bound,
                 "more than 2n-1 nodes before the first output");
  } else if (complete) {
    LEXHIT_CHECK(nodes_visited <= 1, "fruitless traversal left the root");
  }
  if (complete) {
    LEXHIT_CHECK(max_include_size_queried <= observed_kstar + 1,
                 "oracle include-argument larger than k*+1");
  }
}

namespace {

std::vector<VertexId> inverse_permutation(const std::vector<VertexId>& order,
                                          std::size_t n) {
  if (order.size() != n)
    throw std::invalid_argument("enumeration order: wrong length");
  std::vector<VertexId> inv(n, kNoVertex);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const VertexId v = order[rank];
    if (v >= n || inv[v] != kNoVertex)
      throw std::invalid_argument("enumeration order: not a permutation");
    inv[v] = static_cast<VertexId>(rank);
  }
  return inv;
}

Hypergraph permute(const Hypergraph& h, const std::vector<VertexId>& order,
                   const std::vector<VertexId>& inv) {
  std::vector<std::string> names;
  names.reserve(h.vertex_count());
  for (VertexId v : order) names.push_back(h.name(v));
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    VertexSet mapped(h.vertex_count());
    e.for_each([&](VertexId v) { mapped.insert(inv[v]); });
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(std::move(names), std::move(edges));
}

}  // namespace

Enumeration::Enumeration(const Hypergraph& h)
    : original_(&h),
      include_(h.vertex_count()),
      exclude_(h.vertex_count()) {}

Enumeration::Enumeration(const Hypergraph& h, const std::vector<VertexId>& order)
    : original_(&h),
      include_(h.vertex_count()),
      exclude_(h.vertex_count()) {
  const auto inv = inverse_permutation(order, h.vertex_count());
  bool identity = true;
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    if (order[rank] != rank) {
      identity = false;
      break;
    }
  if (!identity) {
    permuted_ = permute(h, order, inv);
    order_ = order;
  }
}

void Enumeration::count_node() {
  ++stats_.nodes_visited;
  ++stats_.nodes_since_last_output;
}

bool Enumeration::oracle_accepts() {
  ++stats_.oracle_calls;
  stats_.max_include_size_queried =
      std::max(stats_.max_include_size_queried, include_.count());
  return extend_decide(ExtensionQuery(work(), include_, exclude_)).extends;
}

VertexSet Enumeration::map_back(const VertexSet& s) const {
  if (order_.empty()) return s;
  VertexSet out(s.universe_size());
  s.for_each([&](VertexId rank) { out.insert(order_[rank]); });
  return out;
}

std::optional<VertexSet> Enumeration::next() {
  if (done_) return std::nullopt;
  const Hypergraph& h = work();
  const std::size_t n = h.vertex_count();

  for (;;) {
    if (descending_) {
      // Entering the node at depth |stack_| from its parent.
      count_node();
      const std::size_t depth = stack_.size();
      if (depth == n) {
        // Leaf. Descents are oracle-guarded, so the label is a minimal
        // transversal -- except at an edgeless-universe root, which no oracle
        // ever vetted.
        if (n == 0 && h.edge_count() > 0) {
          done_ = true;
          stats_.complete = true;
          return std::nullopt;
        }
        ++stats_.outputs;
        stats_.observed_kstar = std::max(stats_.observed_kstar, include_.count());
        const std::uint64_t strictly_between = stats_.nodes_since_last_output - 1;
        if (stats_.outputs == 1) {
          stats_.nodes_before_first_output = strictly_between;
        } else {
          stats_.max_nodes_between_outputs =
              std::max(stats_.max_nodes_between_outputs, strictly_between);
          LEXHIT_CHECK(strictly_between <= 2 * static_cast<std::uint64_t>(n) - 1,
                       "more than 2n-1 nodes between consecutive outputs");
        }
        stats_.nodes_since_last_output = 0;
        descending_ = false;
        return map_back(include_);
      }
      const VertexId v = static_cast<VertexId>(depth);
      include_.insert(v);
      if (oracle_accepts()) {  // left child: include v
        stack_.push_back({true});
        continue;
      }
      include_.erase(v);
      exclude_.insert(v);
      if (oracle_accepts()) {  // right child: exclude v
        stack_.push_back({false});
        continue;
      }
      exclude_.erase(v);
      descending_ = false;  // both subtrees pruned, return to parent
      continue;
    }

    // Ascending: re-enter the parent of the current node.
    if (stack_.empty()) {
      done_ = true;
      stats_.complete = true;
      return std::nullopt;
    }
    count_node();
    Frame& frame = stack_.back();
    const VertexId v = static_cast<VertexId>(stack_.size() - 1);
    if (frame.right_pending) {
      // Back from the left child: undo the inclusion, try the exclude child.
      frame.right_pending = false;
      include_.erase(v);
      exclude_.insert(v);
      if (oracle_accepts()) {
        descending_ = true;
        continue;
      }
      exclude_.erase(v);
      stack_.pop_back();
    } else {
      // Back from the right child: pass through towards the root.
      exclude_.erase(v);
      stack_.pop_back();
    }
  }
}

EnumerationResult all_minimal_transversals(const Hypergraph& h) {
  Enumeration e(h);
  EnumerationResult result;
  while (auto s = e.next()) result.transversals.push_back(std::move(*s));
  result.stats = e.stats();
  return result;
}

EnumerationResult all_minimal_transversals_under_order(
    const Hypergraph& h, const std::vector<VertexId>& order) {
  Enumeration e(h, order);
  EnumerationResult result;
  while (auto s = e.next()) result.transversals.push_back(std::move(*s));
  result.stats = e.stats();
  return result;
}

std::optional<VertexSet> lex_smallest(const Hypergraph& h) {
  Enumeration e(h);
  return e.next();
}

std::optional<VertexSet> lex_largest_greedy(const Hypergraph& h) {
  if (h.has_empty_edge()) return std::nullopt;
  const std::size_t n = h.vertex_count();
  VertexSet s = VertexSet::full(n);
  for (VertexId v = 0; v < n; ++v) {
    s.erase(v);
    if (!h.is_hitting_set(s)) s.insert(v);  // v has become irreplaceable
  }
  return s;
}

// Lives here rather than with the other extension-oracle operations because
// it runs the enumerator; declared in extension.hpp.
bool lex_smallest_contains(const Hypergraph& h, const VertexSet& candidate) {
  if (candidate.universe_size() != h.vertex_count())
    throw std::invalid_argument("lex_smallest_contains: set over a different universe");
  const std::size_t n = h.vertex_count();
  std::vector<VertexId> order;
  order.reserve(n);
  candidate.for_each([&](VertexId v) { order.push_back(v); });
  for (VertexId v = 0; v < n; ++v)
    if (!candidate.contains(v)) order.push_back(v);

  Enumeration e(h, order);
  const auto smallest = e.next();
  return smallest.has_value() && candidate.is_subset_of(*smallest);
}

}  // namespace lexhit
