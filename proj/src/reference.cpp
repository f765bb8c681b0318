#include "lexhit/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lexhit {

namespace {

void require_cap(std::size_t actual, std::size_t cap, const char* what) {
  if (actual > cap)
    throw CapExceeded(std::string(what) + " has " + std::to_string(actual) +
                      " elements, above the brute-force cap of " + std::to_string(cap) +
                      "; raise the cap to force the scan");
}

bool mask_hits_all(std::uint64_t mask, const std::vector<std::uint64_t>& edges) {
  for (std::uint64_t e : edges)
    if ((mask & e) == 0) return false;
  return true;
}

// Minimal transversal test on bit masks: hitting, and every single-element
// removal stops hitting.
bool mask_is_minimal_transversal(std::uint64_t mask,
                                 const std::vector<std::uint64_t>& edges) {
  if (!mask_hits_all(mask, edges)) return false;
  for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
    const std::uint64_t without = mask & ~(bits & (~bits + 1));
    if (mask_hits_all(without, edges)) return false;
  }
  return true;
}

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint64_t> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::uint64_t mask = 0;
    e.for_each([&](VertexId v) { mask |= std::uint64_t{1} << v; });
    edges.push_back(mask);
  }
  return edges;
}

VertexSet set_from_mask(std::uint64_t mask, std::size_t n) {
  VertexSet s(n);
  for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
    s.insert(static_cast<VertexId>(std::countr_zero(bits)));
  }
  return s;
}

std::vector<std::uint64_t> scan_serial(std::uint64_t subsets,
                                       const std::vector<std::uint64_t>& edges) {
  std::vector<std::uint64_t> found;
  for (std::uint64_t mask = 0; mask < subsets; ++mask)
    if (mask_is_minimal_transversal(mask, edges)) found.push_back(mask);
  return found;
}

#ifdef _OPENMP
std::vector<std::uint64_t> scan_parallel(std::uint64_t subsets,
                                         const std::vector<std::uint64_t>& edges) {
  std::vector<std::vector<std::uint64_t>> per_thread(omp_get_max_threads());
#pragma omp parallel
  {
    auto& mine = per_thread[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(subsets); ++mask)
      if (mask_is_minimal_transversal(static_cast<std::uint64_t>(mask), edges))
        mine.push_back(static_cast<std::uint64_t>(mask));
  }
  std::vector<std::uint64_t> found;
  for (const auto& chunk : per_thread)
    found.insert(found.end(), chunk.begin(), chunk.end());
  return found;
}
#endif

}  // namespace

std::vector<VertexSet> bf_all_minimal_transversals(const Hypergraph& h,
                                                   const BruteForceOptions& opts) {
  const std::size_t n = h.vertex_count();
  require_cap(n, opts.max_universe, "universe");
  const auto edges = edge_masks(h);
  const std::uint64_t subsets = std::uint64_t{1} << n;

  std::vector<std::uint64_t> found;
#ifdef _OPENMP
  if (opts.parallel && n >= 12) {
    found = scan_parallel(subsets, edges);
  } else {
    found = scan_serial(subsets, edges);
  }
#else
  found = scan_serial(subsets, edges);
#endif

  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (std::uint64_t mask : found) out.push_back(set_from_mask(mask, n));
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

bool bf_extension(const Hypergraph& h, const VertexSet& include,
                  const VertexSet& exclude, const BruteForceOptions& opts) {
  for (const auto& t : bf_all_minimal_transversals(h, opts))
    if (include.is_subset_of(t) && !t.intersects(exclude)) return true;
  return false;
}

namespace {

// All weight-k assignments over `universe` positions, ascending-combination
// order; stops early when the visitor returns true.
template <typename Visit>
bool any_weight_k(std::size_t universe, std::size_t k, Visit&& visit) {
  if (k > universe) return false;
  std::vector<VertexId> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<VertexId>(i);
  for (;;) {
    VertexSet assignment(universe);
    for (VertexId v : pick) assignment.insert(v);
    if (visit(assignment)) return true;
    std::size_t pos = k;
    bool advanced = false;
    while (pos-- > 0) {
      if (pick[pos] != pos + universe - k) {
        ++pick[pos];
        for (std::size_t j = pos + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return false;
  }
}

}  // namespace

bool bf_weight_k_sat(const Circuit& c, std::size_t k, const BruteForceOptions& opts) {
  require_cap(static_cast<std::size_t>(c.input_count), opts.max_universe,
              "circuit input layer");
  return any_weight_k(static_cast<std::size_t>(c.input_count), k,
                      [&](const VertexSet& a) { return evaluate_circuit(c, a); });
}

bool bf_weight_k_sat(const Antimonotone3NFormula& f, std::size_t k,
                     const BruteForceOptions& opts) {
  require_cap(f.variable_count, opts.max_universe, "variable set");
  return any_weight_k(f.variable_count, k,
                      [&](const VertexSet& a) { return eval_wa3ns(f, a); });
}

}  // namespace lexhit
