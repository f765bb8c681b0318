#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lexhit/circuit.hpp"
#include "lexhit/formula.hpp"
#include "lexhit/hypergraph.hpp"
#include "lexhit/vertex_set.hpp"

namespace lexhit {

// Brute-force ground-truth oracles. Deliberately naive and kept independent
// of the optimized search paths; they share only the core set and instance
// types. Used by tests and the `verify` command.

// Refusal guard against 2^n blowups.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BruteForceOptions {
  std::size_t max_universe = 20;  // refuse scans beyond 2^max_universe subsets
  bool parallel = true;           // OpenMP scan when available
};

// All minimal transversals by scanning every vertex subset, sorted
// lexicographically. A subset qualifies when it hits every edge and no
// single-element removal still does. The scan is order-insensitive, so the
// parallel kernel partitions the subset range and merges before sorting.
std::vector<VertexSet> bf_all_minimal_transversals(const Hypergraph& h,
                                                   const BruteForceOptions& opts = {});

// True iff some minimal transversal contains `include` and avoids `exclude`.
bool bf_extension(const Hypergraph& h, const VertexSet& include,
                  const VertexSet& exclude, const BruteForceOptions& opts = {});

// Weighted satisfiability by scanning all weight-k assignments. k = 0 tests
// the all-false assignment.
bool bf_weight_k_sat(const Circuit& c, std::size_t k,
                     const BruteForceOptions& opts = {});
bool bf_weight_k_sat(const Antimonotone3NFormula& f, std::size_t k,
                     const BruteForceOptions& opts = {});

}  // namespace lexhit
