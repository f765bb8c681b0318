#include "lexhit/extension.hpp"

#include <limits>

#include "lexhit/check.hpp"

namespace lexhit {

ExtensionQuery::ExtensionQuery(const Hypergraph& h, VertexSet include, VertexSet exclude)
    : h_(&h), include_(std::move(include)), exclude_(std::move(exclude)) {
  if (include_.universe_size() != h.vertex_count() ||
      exclude_.universe_size() != h.vertex_count())
    throw std::invalid_argument("ExtensionQuery: sets over a different universe");
  if (include_.intersects(exclude_))
    throw std::invalid_argument("ExtensionQuery: include and exclude overlap");
}

std::uint64_t OracleStats::tuple_budget() const {
  std::uint64_t budget = 1;
  for (std::size_t size : system_sizes) {
    if (size != 0 && budget > std::numeric_limits<std::uint64_t>::max() / size)
      return std::numeric_limits<std::uint64_t>::max();
    budget *= size;
  }
  return budget;
}

WitnessBuild build_witness_systems(const ExtensionQuery& q, WitnessMode mode) {
  const Hypergraph& h = q.hypergraph();
  const VertexSet& include = q.include();
  const VertexSet& exclude = q.exclude();
  WitnessBuild out;

  if (include.empty()) {
    // X empty: extendable avoiding Y iff V minus Y is a hitting set, i.e. no
    // edge lies inside Y.
    bool hitting = true;
    for (const auto& e : h.edges())
      if (e.is_subset_of(exclude)) {
        hitting = false;
        break;
      }
    out.verdict = hitting ? WitnessBuild::Verdict::True : WitnessBuild::Verdict::False;
    out.reason = hitting ? WitnessBuild::Reason::EmptyIncludeHitting
                         : WitnessBuild::Reason::EmptyIncludeNotHitting;
    return out;
  }

  WitnessSystems& sys = out.systems;
  sys.members = include.elements();
  sys.systems.resize(sys.members.size());
  std::vector<std::size_t> slot(h.vertex_count(), 0);
  for (std::size_t i = 0; i < sys.members.size(); ++i) slot[sys.members[i]] = i;

  for (const auto& e : h.edges()) {
    const std::size_t overlap = e.intersection_count(include);
    if (overlap >= 2) continue;  // cannot witness any single member
    VertexSet reduced = e - exclude;
    if (overlap == 0) {
      sys.forbidden.push_back(std::move(reduced));
    } else {
      const VertexId x = (e & include).first();
      if (mode == WitnessMode::Punctured) reduced.erase(x);
      sys.systems[slot[x]].push_back(std::move(reduced));
    }
  }

  for (std::size_t i = 0; i < sys.members.size(); ++i) {
    if (sys.systems[i].empty()) {
      out.verdict = WitnessBuild::Verdict::False;
      out.reason = WitnessBuild::Reason::EmptySystem;
      out.empty_system_member = sys.members[i];
      return out;
    }
  }
  if (sys.forbidden.empty()) {
    out.verdict = WitnessBuild::Verdict::True;
    out.reason = WitnessBuild::Reason::NoForbidden;
  }
  return out;
}

namespace {

OracleStats stats_from(const WitnessSystems& sys) {
  OracleStats stats;
  stats.system_sizes.reserve(sys.systems.size());
  for (const auto& s : sys.systems) stats.system_sizes.push_back(s.size());
  stats.forbidden_size = sys.forbidden.size();
  return stats;
}

void check_budgets(const OracleStats& stats, std::size_t edge_count) {
  std::size_t stored = stats.forbidden_size;
  for (std::size_t size : stats.system_sizes) stored += size;
  LEXHIT_CHECK(stored <= edge_count,
               "witness systems exceed the disjointness budget");
  LEXHIT_CHECK(stats.tuples_examined <= stats.tuple_budget(),
               "tuple scan exceeded the Cartesian product budget");
}

}  // namespace

ExtensionDecision extend_decide(const ExtensionQuery& q) {
  WitnessBuild build = build_witness_systems(q);
  ExtensionDecision result;
  result.stats = stats_from(build.systems);
  check_budgets(result.stats, q.hypergraph().edge_count());
  if (build.verdict != WitnessBuild::Verdict::Undecided) {
    result.extends = build.verdict == WitnessBuild::Verdict::True;
    return result;
  }

  const WitnessSystems& sys = build.systems;
  const std::size_t k = sys.members.size();
  std::vector<std::size_t> pick(k, 0);
  VertexSet unioned(q.hypergraph().vertex_count());

  for (;;) {
    ++result.stats.tuples_examined;
    unioned.clear();
    for (std::size_t i = 0; i < k; ++i) unioned |= sys.systems[i][pick[i]];
    bool independent = true;
    for (const auto& t : sys.forbidden)
      if (t.is_subset_of(unioned)) {
        independent = false;
        break;
      }
    if (independent) {
      result.extends = true;
      break;
    }
    // Odometer step, last member fastest.
    std::size_t pos = k;
    while (pos-- > 0) {
      if (++pick[pos] < sys.systems[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) {
        check_budgets(result.stats, q.hypergraph().edge_count());
        return result;  // product exhausted, not extendable
      }
    }
  }
  check_budgets(result.stats, q.hypergraph().edge_count());
  return result;
}

namespace {

MultiColouredInstance constant_instance(bool answer) {
  MultiColouredInstance inst;
  inst.universe_size = 0;
  inst.colours.push_back({VertexSet(0)});
  if (!answer) inst.forbidden.push_back(VertexSet(0));  // empty set is always covered
  return inst;
}

}  // namespace

MultiColouredInstance reduce_to_mcif(const ExtensionQuery& q, WitnessMode mode) {
  WitnessBuild build = build_witness_systems(q, mode);
  if (build.verdict != WitnessBuild::Verdict::Undecided &&
      (build.reason == WitnessBuild::Reason::EmptyIncludeHitting ||
       build.reason == WitnessBuild::Reason::EmptyIncludeNotHitting ||
       build.reason == WitnessBuild::Reason::EmptySystem)) {
    return constant_instance(build.verdict == WitnessBuild::Verdict::True);
  }

  // Re-densify the universe to V minus exclude.
  const Hypergraph& h = q.hypergraph();
  const std::size_t n = h.vertex_count();
  std::vector<VertexId> to_new(n, kNoVertex);
  MultiColouredInstance inst;
  for (VertexId v = 0; v < n; ++v) {
    if (!q.exclude().contains(v)) {
      to_new[v] = static_cast<VertexId>(inst.universe_size++);
      inst.element_names.push_back(h.name(v));
    }
  }
  auto remap = [&](const VertexSet& s) {
    VertexSet mapped(inst.universe_size);
    s.for_each([&](VertexId v) { mapped.insert(to_new[v]); });
    return mapped;
  };

  inst.colours.reserve(build.systems.systems.size());
  for (const auto& sx : build.systems.systems) {
    std::vector<VertexSet> colour;
    colour.reserve(sx.size());
    for (const auto& e : sx) colour.push_back(remap(e));
    inst.colours.push_back(std::move(colour));
  }
  inst.forbidden.reserve(build.systems.forbidden.size());
  for (const auto& t : build.systems.forbidden) inst.forbidden.push_back(remap(t));
  return inst;
}

}  // namespace lexhit
