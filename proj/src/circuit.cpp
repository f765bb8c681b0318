#include "lexhit/circuit.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lexhit/hypergraph.hpp"  // ParseError

namespace lexhit {

Circuit if_to_circuit(const SingleColouredInstance& inst) {
  Circuit c;
  const std::int32_t sets = static_cast<std::int32_t>(inst.candidates.size());
  const std::int32_t elems = static_cast<std::int32_t>(inst.universe_size);
  c.input_count = sets;

  for (std::int32_t i = 0; i < sets; ++i) c.gates.push_back({GateKind::Input, {}});

  // Layer 1: one OR per universe element, fed by the candidates containing it.
  const std::int32_t element_base = sets;
  for (std::int32_t u = 0; u < elems; ++u) {
    Gate g{GateKind::Or, {}};
    for (std::int32_t i = 0; i < sets; ++i)
      if (inst.candidates[i].contains(static_cast<VertexId>(u)))
        g.inputs.push_back(i);
    c.gates.push_back(std::move(g));
  }

  // Layer 2: one AND per forbidden set, fed by its element gates.
  const std::int32_t forbidden_base = element_base + elems;
  for (const auto& t : inst.forbidden) {
    Gate g{GateKind::And, {}};
    t.for_each([&](VertexId u) {
      g.inputs.push_back(element_base + static_cast<std::int32_t>(u));
    });
    c.gates.push_back(std::move(g));
  }

  // Layer 3: collecting OR, then the negated output.
  Gate collect{GateKind::Or, {}};
  for (std::size_t t = 0; t < inst.forbidden.size(); ++t)
    collect.inputs.push_back(forbidden_base + static_cast<std::int32_t>(t));
  const std::int32_t collect_id = static_cast<std::int32_t>(c.gates.size());
  c.gates.push_back(std::move(collect));
  c.gates.push_back({GateKind::Not, {collect_id}});
  c.output = collect_id + 1;
  return c;
}

bool evaluate_circuit(const Circuit& c, const VertexSet& true_inputs) {
  if (c.output < 0 || static_cast<std::size_t>(c.output) >= c.gates.size())
    throw std::invalid_argument("evaluate_circuit: invalid output id");
  if (true_inputs.universe_size() != static_cast<std::size_t>(c.input_count))
    throw std::invalid_argument("evaluate_circuit: assignment universe mismatch");

  std::vector<char> value(c.gates.size(), 0);
  for (std::size_t id = 0; id < c.gates.size(); ++id) {
    const Gate& g = c.gates[id];
    switch (g.kind) {
      case GateKind::Input:
        value[id] = true_inputs.contains(static_cast<VertexId>(id));
        break;
      case GateKind::And: {
        bool v = true;
        for (std::int32_t in : g.inputs) v = v && value[in];
        value[id] = v;
        break;
      }
      case GateKind::Or: {
        bool v = false;
        for (std::int32_t in : g.inputs) v = v || value[in];
        value[id] = v;
        break;
      }
      case GateKind::Not:
        if (g.inputs.size() != 1)
          throw std::invalid_argument("evaluate_circuit: NOT gate needs one input");
        value[id] = !value[g.inputs[0]];
        break;
    }
  }
  return value[c.output] != 0;
}

CircuitPathReport analyze_paths(const Circuit& c) {
  CircuitPathReport report;
  if (c.output < 0) return report;

  struct Reach {
    bool reachable = false;
    std::size_t min_large = 0, max_large = 0;
    std::size_t min_depth = 0, max_depth = 0;
  };
  std::vector<Reach> reach(c.gates.size());
  for (std::int32_t i = 0; i < c.input_count; ++i) reach[i].reachable = true;

  for (std::size_t id = 0; id < c.gates.size(); ++id) {
    const Gate& g = c.gates[id];
    if (g.kind == GateKind::Input) continue;
    const std::size_t own = c.is_large(static_cast<std::int32_t>(id)) ? 1 : 0;
    Reach& r = reach[id];
    for (std::int32_t in : g.inputs) {
      const Reach& f = reach[in];
      if (!f.reachable) continue;
      const std::size_t lo = f.min_large + own, hi = f.max_large + own;
      const std::size_t dlo = f.min_depth + 1, dhi = f.max_depth + 1;
      if (!r.reachable) {
        r = {true, lo, hi, dlo, dhi};
      } else {
        r.min_large = std::min(r.min_large, lo);
        r.max_large = std::max(r.max_large, hi);
        r.min_depth = std::min(r.min_depth, dlo);
        r.max_depth = std::max(r.max_depth, dhi);
      }
    }
  }

  const Reach& out = reach[c.output];
  report.any_path = out.reachable;
  if (out.reachable) {
    report.weft = out.max_large;
    report.min_large = out.min_large;
    report.min_depth = out.min_depth;
    report.max_depth = out.max_depth;
  }
  return report;
}

bool passes_weft3_check(const Circuit& c) { return analyze_paths(c).weft <= 3; }

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Input: return "input";
    case GateKind::And: return "and";
    case GateKind::Or: return "or";
    case GateKind::Not: return "not";
  }
  return "?";
}

}  // namespace

void write_circuit(std::ostream& out, const Circuit& c) {
  for (std::size_t id = 0; id < c.gates.size(); ++id) {
    out << "gate " << id << ' ' << kind_name(c.gates[id].kind);
    for (std::int32_t in : c.gates[id].inputs) out << ' ' << in;
    out << '\n';
  }
  out << "output " << c.output << '\n';
}

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  std::string raw;
  std::size_t lineno = 0;
  bool have_output = false;
  bool inputs_done = false;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;

    if (head == "gate") {
      if (have_output) throw ParseError(lineno, "gate after 'output' line");
      long long id = -1;
      std::string kind;
      if (!(fields >> id >> kind))
        throw ParseError(lineno, "expected 'gate <id> <kind> ...'");
      if (id != static_cast<long long>(c.gates.size()))
        throw ParseError(lineno, "gate ids must be dense and ascending");
      Gate g;
      if (kind == "input") g.kind = GateKind::Input;
      else if (kind == "and") g.kind = GateKind::And;
      else if (kind == "or") g.kind = GateKind::Or;
      else if (kind == "not") g.kind = GateKind::Not;
      else throw ParseError(lineno, "unknown gate kind '" + kind + "'");

      long long ref;
      while (fields >> ref) {
        if (ref < 0 || ref >= id)
          throw ParseError(lineno, "gate input must reference an earlier gate");
        g.inputs.push_back(static_cast<std::int32_t>(ref));
      }
      if (g.kind == GateKind::Input) {
        if (!g.inputs.empty())
          throw ParseError(lineno, "input nodes take no inputs");
        if (inputs_done)
          throw ParseError(lineno, "input nodes must precede all other gates");
        ++c.input_count;
      } else {
        inputs_done = true;
        if (g.kind == GateKind::Not && g.inputs.size() != 1)
          throw ParseError(lineno, "'not' takes exactly one input");
      }
      c.gates.push_back(std::move(g));
    } else if (head == "output") {
      long long id = -1;
      if (!(fields >> id) || id < 0 || id >= static_cast<long long>(c.gates.size()))
        throw ParseError(lineno, "output must name an existing gate");
      c.output = static_cast<std::int32_t>(id);
      have_output = true;
    } else {
      throw ParseError(lineno, "unknown keyword '" + head + "'");
    }
  }
  if (!have_output) throw ParseError(lineno, "missing 'output' line");
  return c;
}

}  // namespace lexhit
