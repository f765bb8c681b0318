#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lexhit/independent_family.hpp"
#include "lexhit/vertex_set.hpp"

namespace lexhit {

// Conjunction of DNF subformulas whose literals are all negative: an AND of
// ORs of ANDs of negated variables. subformulas[h][i] lists the variables of
// term i of subformula h; a term holds iff none of its variables is true.
struct Antimonotone3NFormula {
  std::size_t variable_count = 0;
  std::vector<std::string> variable_names;  // may be empty; x1, x2, ... then
  std::vector<std::vector<std::vector<VertexId>>> subformulas;
};

bool eval_wa3ns(const Antimonotone3NFormula& f, const VertexSet& true_variables);

// Encodes weighted satisfiability of the formula as an Independent Family
// instance: the universe is the set of terms, each variable contributes the
// set of terms it appears in, and each subformula contributes its term set as
// a forbidden set. The instance is satisfiable for k distinct variables
// exactly when the formula has a weight-k satisfying assignment.
SingleColouredInstance wa3ns_to_if(const Antimonotone3NFormula& f, std::size_t k);

}  // namespace lexhit
