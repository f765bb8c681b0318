#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lexhit/hypergraph.hpp"
#include "lexhit/independent_family.hpp"
#include "lexhit/vertex_set.hpp"

namespace lexhit {

// One extension question: does some minimal transversal H of the hypergraph
// satisfy include <= H <= V minus exclude?
class ExtensionQuery {
 public:
  ExtensionQuery(const Hypergraph& h, VertexSet include, VertexSet exclude);

  const Hypergraph& hypergraph() const { return *h_; }
  const VertexSet& include() const { return include_; }
  const VertexSet& exclude() const { return exclude_; }

 private:
  const Hypergraph* h_;
  VertexSet include_;
  VertexSet exclude_;
};

// Per-member potential-witness systems S_x = {E in H | E cap X = {x}} and the
// forbidden system T = {E in H | E cap X = empty}, both with the excluded
// vertices removed. The source edges are pairwise distinct, so the total
// number of stored sets is at most m.
struct WitnessSystems {
  std::vector<VertexId> members;                // X in vertex order
  std::vector<std::vector<VertexSet>> systems;  // parallel to members
  std::vector<VertexSet> forbidden;
};

struct OracleStats {
  std::uint64_t tuples_examined = 0;
  std::vector<std::size_t> system_sizes;  // |S_x| per member
  std::size_t forbidden_size = 0;

  // Product of the system sizes, saturating at uint64 max.
  std::uint64_t tuple_budget() const;
};

enum class WitnessMode {
  Unpunctured,  // S_x holds E minus Y
  Punctured,    // S_x holds (E minus {x}) minus Y
};

// Preprocessing phase of the extension algorithm. Either decides the query
// outright or hands over fully built witness systems.
struct WitnessBuild {
  enum class Verdict { Undecided, True, False };
  enum class Reason {
    None,
    EmptyIncludeHitting,     // X empty and V minus Y hits everything -> true
    EmptyIncludeNotHitting,  // X empty and some edge inside Y -> false
    EmptySystem,             // some member has no potential witness -> false
    NoForbidden,             // T empty -> true
  };

  Verdict verdict = Verdict::Undecided;
  Reason reason = Reason::None;
  VertexId empty_system_member = kNoVertex;
  WitnessSystems systems;  // classification is complete even on a verdict
};

WitnessBuild build_witness_systems(const ExtensionQuery& q,
                                   WitnessMode mode = WitnessMode::Unpunctured);

struct ExtensionDecision {
  bool extends = false;
  OracleStats stats;
};

// Decides the query by scanning the Cartesian product of the witness systems
// in odometer order (last member fastest), stopping at the first selection
// whose union covers no forbidden set.
ExtensionDecision extend_decide(const ExtensionQuery& q);

// The query as a Multicoloured Independent Family instance over the universe
// V minus exclude, with one colour per include member. The degenerate cases
// (empty include, or a member without potential witnesses) map to fixed
// constant-answer instances.
MultiColouredInstance reduce_to_mcif(const ExtensionQuery& q,
                                     WitnessMode mode = WitnessMode::Unpunctured);

// Reorders the universe so that the candidate set forms an initial segment,
// takes the lexicographically smallest minimal transversal under that order,
// and reports whether it contains the candidate set. Agrees with
// extend_decide(h, candidate, empty); exists as an equivalence check, not for
// speed.
bool lex_smallest_contains(const Hypergraph& h, const VertexSet& candidate);

}  // namespace lexhit
