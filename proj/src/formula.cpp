#include "lexhit/formula.hpp"

#include <stdexcept>

namespace lexhit {

bool eval_wa3ns(const Antimonotone3NFormula& f, const VertexSet& true_variables) {
  if (true_variables.universe_size() != f.variable_count)
    throw std::invalid_argument("eval_wa3ns: assignment universe mismatch");
  for (const auto& subformula : f.subformulas) {
    bool some_term = false;
    for (const auto& term : subformula) {
      bool satisfied = true;
      for (VertexId x : term) {
        if (x >= f.variable_count)
          throw std::invalid_argument("eval_wa3ns: variable index out of range");
        if (true_variables.contains(x)) {
          satisfied = false;
          break;
        }
      }
      if (satisfied) {
        some_term = true;
        break;
      }
    }
    if (!some_term) return false;
  }
  return true;
}

SingleColouredInstance wa3ns_to_if(const Antimonotone3NFormula& f, std::size_t k) {
  if (k == 0) throw std::invalid_argument("wa3ns_to_if: k must be positive");

  SingleColouredInstance inst;
  inst.k = k;
  // Universe: one element per term, in subformula-major order.
  std::vector<std::vector<VertexId>> term_id(f.subformulas.size());
  for (std::size_t h = 0; h < f.subformulas.size(); ++h) {
    for (std::size_t i = 0; i < f.subformulas[h].size(); ++i) {
      term_id[h].push_back(static_cast<VertexId>(inst.universe_size++));
      inst.element_names.push_back("t" + std::to_string(h + 1) + "_" +
                                   std::to_string(i + 1));
    }
  }

  // One candidate per variable: the terms it appears in.
  inst.candidates.assign(f.variable_count, VertexSet(inst.universe_size));
  for (std::size_t h = 0; h < f.subformulas.size(); ++h) {
    for (std::size_t i = 0; i < f.subformulas[h].size(); ++i) {
      for (VertexId x : f.subformulas[h][i]) {
        if (x >= f.variable_count)
          throw std::invalid_argument("wa3ns_to_if: variable index out of range");
        inst.candidates[x].insert(term_id[h][i]);
      }
    }
  }

  // One forbidden set per subformula: all of its terms.
  for (std::size_t h = 0; h < f.subformulas.size(); ++h) {
    VertexSet t(inst.universe_size);
    for (VertexId id : term_id[h]) t.insert(id);
    inst.forbidden.push_back(std::move(t));
  }
  return inst;
}

}  // namespace lexhit
