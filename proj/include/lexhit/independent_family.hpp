#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lexhit/vertex_set.hpp"

namespace lexhit {

// k systems of candidate sets (one list per colour) plus forbidden sets, all
// over a common universe. Satisfiable when one set per colour can be chosen
// so that the union covers no forbidden set.
struct MultiColouredInstance {
  std::size_t universe_size = 0;
  std::vector<std::string> element_names;       // may be empty; e0, e1, ... then
  std::vector<std::vector<VertexSet>> colours;  // k >= 1 lists
  std::vector<VertexSet> forbidden;

  std::size_t parameter() const { return colours.size(); }
};

// Single list of candidate sets; satisfiable when k distinct candidates can
// be chosen so that their union covers no forbidden set. The candidate list
// may contain equal sets as separate entries; selections pick distinct list
// positions.
struct SingleColouredInstance {
  std::size_t universe_size = 0;
  std::vector<std::string> element_names;  // may be empty
  std::vector<VertexSet> candidates;
  std::vector<VertexSet> forbidden;
  std::size_t k = 1;
};

struct McifSolution {
  bool satisfiable = false;
  std::vector<std::size_t> selection;  // per colour: index into colours[i]
};

struct IfSolution {
  bool satisfiable = false;
  std::vector<std::size_t> selection;  // k distinct candidate indices, ascending
};

// Exhaustive scan over one-set-per-colour selections; false (with empty
// witness) when some colour list is empty.
McifSolution solve_mcif_bruteforce(const MultiColouredInstance& inst);

// Exhaustive scan over k-subsets of candidate positions; false when fewer
// than k candidates exist.
IfSolution solve_if_bruteforce(const SingleColouredInstance& inst);

// Tags every candidate with a fresh per-(set, colour) element, pools the
// colours into one list, and forbids picking two same-colour tags. Preserves
// the answer. Tag elements are appended after the original universe in
// colour-major, set-minor order.
SingleColouredInstance mcif_to_if(const MultiColouredInstance& inst);

// k tagged copies of the candidate list, one per colour; picking two copies
// of the same candidate is forbidden. Preserves the answer.
MultiColouredInstance if_to_mcif(const SingleColouredInstance& inst);

// Name of element v, falling back to "e<v>" when no names are attached.
std::string element_name(const std::vector<std::string>& names, VertexId v);

// Instance text format (shared by both kinds): '#' comments and blank lines
// are ignored; `universe: <name> ...` fixes the elements; `colours: <k>` or
// `k: <int>` fixes the parameter; each `colour <i>: <name> ...` /
// `candidates: <name> ...` / `forbidden: <name> ...` line adds one set.
void write_instance(std::ostream& out, const MultiColouredInstance& inst);
void write_instance(std::ostream& out, const SingleColouredInstance& inst);
MultiColouredInstance parse_mcif(std::istream& in);
SingleColouredInstance parse_if(std::istream& in);

}  // namespace lexhit
