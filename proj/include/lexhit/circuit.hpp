#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lexhit/independent_family.hpp"
#include "lexhit/vertex_set.hpp"

namespace lexhit {

enum class GateKind { Input, And, Or, Not };

struct Gate {
  GateKind kind = GateKind::Input;
  std::vector<std::int32_t> inputs;  // ids of feeding gates, all smaller than own id
};

// Boolean circuit as a topologically ordered gate list. AND/OR gates have
// unbounded fan-in; a gate is "large" when its fan-in exceeds 2.
struct Circuit {
  std::vector<Gate> gates;
  std::int32_t output = -1;
  std::int32_t input_count = 0;  // gates [0, input_count) are the input nodes

  bool is_large(std::int32_t id) const { return gates[id].inputs.size() > 2; }
};

// The weighted-satisfiability circuit of an Independent Family instance:
// one input node per candidate set, a layer of OR gates (one per universe
// element, fed by the candidates containing it), a layer of AND gates (one
// per forbidden set, fed by its elements), a single collecting OR, and a
// negation as output. Setting exactly the inputs of a selection to true
// satisfies the circuit iff the selection's union covers no forbidden set.
Circuit if_to_circuit(const SingleColouredInstance& inst);

// Standard gate semantics; true_inputs ranges over [0, input_count).
bool evaluate_circuit(const Circuit& c, const VertexSet& true_inputs);

// Path statistics over all input-to-output paths, by forward traversal.
struct CircuitPathReport {
  bool any_path = false;
  std::size_t weft = 0;       // max number of large gates on a path
  std::size_t min_large = 0;  // min number of large gates on a path
  std::size_t min_depth = 0;  // path length in edges
  std::size_t max_depth = 0;
};

CircuitPathReport analyze_paths(const Circuit& c);

// True when no input-to-output path crosses more than 3 large gates.
bool passes_weft3_check(const Circuit& c);

// Gate list format: `gate <id> <kind> <inputs...>` lines (kind one of input,
// and, or, not) in ascending id order, then `output <id>`. '#' comments and
// blank lines are ignored.
void write_circuit(std::ostream& out, const Circuit& c);
Circuit parse_circuit(std::istream& in);

}  // namespace lexhit
