#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lexhit/hypergraph.hpp"
#include "lexhit/vertex_set.hpp"

namespace lexhit {

// Traversal counters for one enumeration. A node is counted every time its
// body executes, including leaf checks and pass-throughs while backtracking.
struct EnumerationStats {
  std::uint64_t outputs = 0;
  std::uint64_t nodes_visited = 0;
  std::uint64_t nodes_since_last_output = 0;       // rolling
  std::uint64_t max_nodes_between_outputs = 0;     // strictly between two outputs
  std::uint64_t nodes_before_first_output = 0;     // strictly before the first
  std::uint64_t oracle_calls = 0;
  std::size_t max_include_size_queried = 0;        // largest |X| handed to the oracle
  std::size_t observed_kstar = 0;                  // largest output size so far
  bool complete = false;

  // Throws BoundViolation when an instrumented bound fails: at most 2n-1
  // nodes between consecutive outputs, a root-only traversal when nothing is
  // enumerable, and (on complete runs) oracle include-arguments of size at
  // most k*+1.
  void check_bounds(std::size_t vertex_count) const;
};

// Streams the minimal transversals of a hypergraph in lexicographically
// ascending order by pre-order traversal of the pruned binary decision tree.
// Each level decides the next vertex in precedence order; the left child
// includes it, the right child excludes it, and the extension oracle prunes
// both. State is O(n); no work happens past the last requested output. One
// producer is single-threaded; independent producers over the same hypergraph
// may run concurrently.
class Enumeration {
 public:
  explicit Enumeration(const Hypergraph& h);

  // Enumerates under a re-ordered universe: order[p] is the vertex with
  // precedence rank p. Outputs are mapped back to original vertex ids (and
  // arrive in ascending lexicographic order of the given order).
  Enumeration(const Hypergraph& h, const std::vector<VertexId>& order);

  // Next minimal transversal, or nullopt when exhausted.
  std::optional<VertexSet> next();

  bool finished() const { return done_; }
  const EnumerationStats& stats() const { return stats_; }

 private:
  const Hypergraph& work() const { return permuted_ ? *permuted_ : *original_; }
  bool oracle_accepts();
  void count_node();
  VertexSet map_back(const VertexSet& s) const;

  const Hypergraph* original_;
  std::optional<Hypergraph> permuted_;
  std::vector<VertexId> order_;  // rank -> original id (empty for identity)

  VertexSet include_;
  VertexSet exclude_;
  // Frame d records the branch state of the depth-d node deciding vertex d:
  // right_pending until its exclude child has been tried.
  struct Frame {
    bool right_pending;
  };
  std::vector<Frame> stack_;
  bool descending_ = true;
  bool done_ = false;
  EnumerationStats stats_;
};

struct EnumerationResult {
  std::vector<VertexSet> transversals;
  EnumerationStats stats;
};

// Runs an enumeration to completion.
EnumerationResult all_minimal_transversals(const Hypergraph& h);
EnumerationResult all_minimal_transversals_under_order(const Hypergraph& h,
                                                       const std::vector<VertexId>& order);

// First output of the enumeration; nullopt when no transversal exists.
std::optional<VertexSet> lex_smallest(const Hypergraph& h);

// Lexicographically largest minimal transversal via the greedy scan: start
// from the full vertex set and drop every vertex, in ascending precedence
// order, whose removal keeps the set hitting. Equals the final enumeration
// output; nullopt when no transversal exists.
std::optional<VertexSet> lex_largest_greedy(const Hypergraph& h);

}  // namespace lexhit
