#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexhit/vertex_set.hpp"

namespace lexhit {

inline constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

// A minimal transversal together with one witness edge per member:
// edges[witnesses[i].second] intersects the set exactly in witnesses[i].first.
struct TransversalRecord {
  VertexSet set;
  std::vector<std::pair<VertexId, std::size_t>> witnesses;
};

// Result of the witness-based minimality test.
struct MinimalityCheck {
  enum class Status { Minimal, NotHitting, Expendable };

  Status status = Status::Minimal;
  TransversalRecord record;                // valid when Minimal
  std::size_t violated_edge = kNoEdge;     // valid when NotHitting
  VertexId expendable_vertex = kNoVertex;  // valid when Expendable

  explicit operator bool() const { return status == Status::Minimal; }
};

struct Restriction;

// Hypergraph over an ordered universe. The vertex order is the order of
// appearance in the input; edges are deduplicated at construction. Empty
// edges and isolated vertices are allowed. Immutable after construction and
// safe to share across threads.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<std::string> names, std::vector<VertexSet> edges);

  // Universe of n vertices named v0, v1, ...
  static Hypergraph with_default_names(std::size_t n, std::vector<VertexSet> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<VertexId> vertex_named(std::string_view name) const;

  // Maximum edge cardinality; 0 for an edgeless hypergraph.
  std::size_t rank() const;

  bool has_empty_edge() const;

  // True iff every edge intersects s; vacuously true without edges.
  bool is_hitting_set(const VertexSet& s) const;

  // Witness characterization: s is a minimal transversal iff every member has
  // an edge meeting s in exactly that member.
  MinimalityCheck check_minimal(const VertexSet& s) const;

  // Hypergraph on V minus removed, edges {E minus removed}, deduplicated;
  // remaining vertices are re-densified preserving relative order.
  Restriction restrict(const VertexSet& removed) const;

  // Drops edges that are supersets of another edge. Optional preprocessing;
  // the minimal transversals are unchanged.
  Hypergraph without_superset_edges() const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> edges_;
  std::unordered_map<std::string, VertexId> index_;
};

struct Restriction {
  Hypergraph hypergraph;
  std::vector<VertexId> to_original;    // new id -> original id
  std::vector<VertexId> from_original;  // original id -> new id, kNoVertex if removed
};

// Error in the hypergraph or instance text formats; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: '#' starts a comment, blank lines are ignored, the first
// significant line is `vertices: <name> ...` (fixing universe and order),
// every following significant line is `edge: <name> ...` (zero names for the
// empty edge).
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// Members in vertex order, space-separated ("{}" for the empty set).
std::string format_set(const VertexSet& s, const std::vector<std::string>& names);

}  // namespace lexhit
