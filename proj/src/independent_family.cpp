#include "lexhit/independent_family.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lexhit/hypergraph.hpp"  // ParseError

namespace lexhit {

namespace {

bool covers_any(const std::vector<VertexSet>& forbidden, const VertexSet& unioned) {
  for (const auto& t : forbidden)
    if (t.is_subset_of(unioned)) return true;
  return false;
}

}  // namespace

McifSolution solve_mcif_bruteforce(const MultiColouredInstance& inst) {
  if (inst.colours.empty())
    throw std::invalid_argument("solve_mcif_bruteforce: instance has no colours");
  McifSolution out;
  const std::size_t k = inst.colours.size();
  for (const auto& colour : inst.colours)
    if (colour.empty()) return out;  // no selection exists

  std::vector<std::size_t> pick(k, 0);
  VertexSet unioned(inst.universe_size);
  for (;;) {
    unioned.clear();
    for (std::size_t i = 0; i < k; ++i) unioned |= inst.colours[i][pick[i]];
    if (!covers_any(inst.forbidden, unioned)) {
      out.satisfiable = true;
      out.selection = pick;
      return out;
    }
    std::size_t pos = k;
    while (pos-- > 0) {
      if (++pick[pos] < inst.colours[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

IfSolution solve_if_bruteforce(const SingleColouredInstance& inst) {
  if (inst.k == 0)
    throw std::invalid_argument("solve_if_bruteforce: k must be positive");
  IfSolution out;
  const std::size_t n = inst.candidates.size();
  const std::size_t k = inst.k;
  if (k > n) return out;  // fewer candidates than selections

  // Ascending index combinations, lexicographically.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  VertexSet unioned(inst.universe_size);
  for (;;) {
    unioned.clear();
    for (std::size_t i : pick) unioned |= inst.candidates[i];
    if (!covers_any(inst.forbidden, unioned)) {
      out.satisfiable = true;
      out.selection = pick;
      return out;
    }
    std::size_t pos = k;
    while (pos-- > 0) {
      if (pick[pos] != pos + n - k) {
        ++pick[pos];
        for (std::size_t j = pos + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (pos == 0) return out;
    }
  }
}

namespace {

std::string fresh_name(std::string base, std::unordered_set<std::string>& used) {
  while (used.count(base) != 0) base += '\'';
  used.insert(base);
  return base;
}

std::unordered_set<std::string> name_pool(const std::vector<std::string>& names) {
  return {names.begin(), names.end()};
}

std::vector<std::string> padded_names(const std::vector<std::string>& names,
                                      std::size_t universe_size) {
  std::vector<std::string> out;
  out.reserve(universe_size);
  for (std::size_t v = 0; v < universe_size; ++v)
    out.push_back(element_name(names, static_cast<VertexId>(v)));
  return out;
}

}  // namespace

std::string element_name(const std::vector<std::string>& names, VertexId v) {
  return v < names.size() ? names[v] : "e" + std::to_string(v);
}

SingleColouredInstance mcif_to_if(const MultiColouredInstance& inst) {
  if (inst.colours.empty())
    throw std::invalid_argument("mcif_to_if: instance has no colours");
  std::size_t tags = 0;
  for (const auto& colour : inst.colours) tags += colour.size();

  SingleColouredInstance out;
  out.universe_size = inst.universe_size + tags;
  out.k = inst.colours.size();
  out.element_names = padded_names(inst.element_names, inst.universe_size);
  auto used = name_pool(out.element_names);

  // Tag elements in colour-major, set-minor order.
  std::vector<std::vector<VertexId>> tag(inst.colours.size());
  VertexId next = static_cast<VertexId>(inst.universe_size);
  for (std::size_t i = 0; i < inst.colours.size(); ++i) {
    for (std::size_t j = 0; j < inst.colours[i].size(); ++j) {
      tag[i].push_back(next++);
      out.element_names.push_back(fresh_name(
          "x_" + std::to_string(i + 1) + "_" + std::to_string(j), used));
    }
  }

  for (std::size_t i = 0; i < inst.colours.size(); ++i) {
    for (std::size_t j = 0; j < inst.colours[i].size(); ++j) {
      VertexSet s = inst.colours[i][j].padded(out.universe_size);
      s.insert(tag[i][j]);
      out.candidates.push_back(std::move(s));
    }
  }
  for (const auto& t : inst.forbidden)
    out.forbidden.push_back(t.padded(out.universe_size));
  for (std::size_t i = 0; i < inst.colours.size(); ++i) {
    for (std::size_t j = 0; j < tag[i].size(); ++j) {
      for (std::size_t l = j + 1; l < tag[i].size(); ++l) {
        VertexSet pair(out.universe_size);
        pair.insert(tag[i][j]);
        pair.insert(tag[i][l]);
        out.forbidden.push_back(std::move(pair));
      }
    }
  }
  return out;
}

MultiColouredInstance if_to_mcif(const SingleColouredInstance& inst) {
  if (inst.k == 0)
    throw std::invalid_argument("if_to_mcif: k must be positive");
  const std::size_t copies = inst.k;
  const std::size_t sets = inst.candidates.size();

  MultiColouredInstance out;
  out.universe_size = inst.universe_size + copies * sets;
  out.element_names = padded_names(inst.element_names, inst.universe_size);
  auto used = name_pool(out.element_names);

  // tag(i, j): copy i of candidate j, colour-major then set-minor.
  auto tag = [&](std::size_t i, std::size_t j) {
    return static_cast<VertexId>(inst.universe_size + i * sets + j);
  };
  for (std::size_t i = 0; i < copies; ++i)
    for (std::size_t j = 0; j < sets; ++j)
      out.element_names.push_back(fresh_name(
          "x_" + std::to_string(i + 1) + "_" + std::to_string(j), used));

  out.colours.resize(copies);
  for (std::size_t i = 0; i < copies; ++i) {
    out.colours[i].reserve(sets);
    for (std::size_t j = 0; j < sets; ++j) {
      VertexSet s = inst.candidates[j].padded(out.universe_size);
      s.insert(tag(i, j));
      out.colours[i].push_back(std::move(s));
    }
  }
  for (const auto& t : inst.forbidden)
    out.forbidden.push_back(t.padded(out.universe_size));
  for (std::size_t j = 0; j < sets; ++j) {
    for (std::size_t i = 0; i < copies; ++i) {
      for (std::size_t l = i + 1; l < copies; ++l) {
        VertexSet pair(out.universe_size);
        pair.insert(tag(i, j));
        pair.insert(tag(l, j));
        out.forbidden.push_back(std::move(pair));
      }
    }
  }
  return out;
}

namespace {

void write_set_line(std::ostream& out, const char* keyword,
                    const std::vector<std::string>& names, const VertexSet& s) {
  out << keyword;
  s.for_each([&](VertexId v) { out << ' ' << element_name(names, v); });
  out << '\n';
}

void write_universe(std::ostream& out, const std::vector<std::string>& names,
                    std::size_t universe_size) {
  out << "universe:";
  for (std::size_t v = 0; v < universe_size; ++v)
    out << ' ' << element_name(names, static_cast<VertexId>(v));
  out << '\n';
}

// Shared line scanner for the instance formats.
class StanzaReader {
 public:
  explicit StanzaReader(std::istream& in) : in_(in) {}

  // Next significant line, split at the first ':'; returns false at EOF.
  bool next(std::string& keyword, std::vector<std::string>& values,
            std::size_t& lineno) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++lineno_;
      std::string line = raw;
      if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
      const auto first = line.find_first_not_of(" \t\r\n");
      if (first == std::string::npos) continue;
      const auto colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError(lineno_, "expected '<keyword>: ...'");
      keyword = line.substr(first, colon - first);
      while (!keyword.empty() && (keyword.back() == ' ' || keyword.back() == '\t'))
        keyword.pop_back();
      values.clear();
      std::istringstream rest(line.substr(colon + 1));
      std::string tok;
      while (rest >> tok) values.push_back(tok);
      lineno = lineno_;
      return true;
    }
    return false;
  }

  std::size_t line() const { return lineno_; }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

struct UniverseIndex {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;

  void load(const std::vector<std::string>& tokens, std::size_t lineno) {
    names = tokens;
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto [it, inserted] = ids.emplace(names[i], static_cast<VertexId>(i));
      if (!inserted)
        throw ParseError(lineno, "duplicate element name '" + names[i] + "'");
    }
  }

  VertexSet set_of(const std::vector<std::string>& tokens, std::size_t lineno) const {
    VertexSet s(names.size());
    for (const auto& tok : tokens) {
      auto it = ids.find(tok);
      if (it == ids.end())
        throw ParseError(lineno, "unknown element name '" + tok + "'");
      s.insert(it->second);
    }
    return s;
  }
};

std::size_t parse_count(const std::vector<std::string>& values, std::size_t lineno,
                        const char* what) {
  if (values.size() != 1)
    throw ParseError(lineno, std::string("expected one integer after '") + what + ":'");
  long long parsed = -1;
  try {
    parsed = std::stoll(values[0]);
  } catch (const std::exception&) {
    parsed = -1;
  }
  if (parsed < 1)
    throw ParseError(lineno, std::string("invalid ") + what + " value '" + values[0] + "'");
  return static_cast<std::size_t>(parsed);
}

}  // namespace

void write_instance(std::ostream& out, const MultiColouredInstance& inst) {
  write_universe(out, inst.element_names, inst.universe_size);
  out << "colours: " << inst.colours.size() << '\n';
  for (std::size_t i = 0; i < inst.colours.size(); ++i) {
    const std::string keyword = "colour " + std::to_string(i + 1) + ":";
    for (const auto& s : inst.colours[i])
      write_set_line(out, keyword.c_str(), inst.element_names, s);
  }
  for (const auto& t : inst.forbidden)
    write_set_line(out, "forbidden:", inst.element_names, t);
}

void write_instance(std::ostream& out, const SingleColouredInstance& inst) {
  write_universe(out, inst.element_names, inst.universe_size);
  out << "k: " << inst.k << '\n';
  for (const auto& s : inst.candidates)
    write_set_line(out, "candidates:", inst.element_names, s);
  for (const auto& t : inst.forbidden)
    write_set_line(out, "forbidden:", inst.element_names, t);
}

MultiColouredInstance parse_mcif(std::istream& in) {
  StanzaReader reader(in);
  UniverseIndex universe;
  MultiColouredInstance inst;
  std::string keyword;
  std::vector<std::string> values;
  std::size_t lineno = 0;
  bool have_universe = false, have_k = false;

  while (reader.next(keyword, values, lineno)) {
    if (keyword == "universe") {
      if (have_universe) throw ParseError(lineno, "duplicate 'universe:' line");
      universe.load(values, lineno);
      inst.universe_size = universe.names.size();
      inst.element_names = universe.names;
      have_universe = true;
    } else if (keyword == "colours") {
      if (!have_universe) throw ParseError(lineno, "'universe:' must come first");
      if (have_k) throw ParseError(lineno, "duplicate 'colours:' line");
      inst.colours.resize(parse_count(values, lineno, "colours"));
      have_k = true;
    } else if (keyword.rfind("colour ", 0) == 0) {
      if (!have_k) throw ParseError(lineno, "'colours:' must precede colour lines");
      const std::size_t i =
          parse_count({keyword.substr(7)}, lineno, "colour index");
      if (i > inst.colours.size())
        throw ParseError(lineno, "colour index out of range");
      inst.colours[i - 1].push_back(universe.set_of(values, lineno));
    } else if (keyword == "forbidden") {
      if (!have_universe) throw ParseError(lineno, "'universe:' must come first");
      inst.forbidden.push_back(universe.set_of(values, lineno));
    } else {
      throw ParseError(lineno, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_universe) throw ParseError(reader.line(), "missing 'universe:' line");
  if (!have_k) throw ParseError(reader.line(), "missing 'colours:' line");
  return inst;
}

SingleColouredInstance parse_if(std::istream& in) {
  StanzaReader reader(in);
  UniverseIndex universe;
  SingleColouredInstance inst;
  std::string keyword;
  std::vector<std::string> values;
  std::size_t lineno = 0;
  bool have_universe = false, have_k = false;

  while (reader.next(keyword, values, lineno)) {
    if (keyword == "universe") {
      if (have_universe) throw ParseError(lineno, "duplicate 'universe:' line");
      universe.load(values, lineno);
      inst.universe_size = universe.names.size();
      inst.element_names = universe.names;
      have_universe = true;
    } else if (keyword == "k") {
      if (have_k) throw ParseError(lineno, "duplicate 'k:' line");
      inst.k = parse_count(values, lineno, "k");
      have_k = true;
    } else if (keyword == "candidates") {
      if (!have_universe) throw ParseError(lineno, "'universe:' must come first");
      inst.candidates.push_back(universe.set_of(values, lineno));
    } else if (keyword == "forbidden") {
      if (!have_universe) throw ParseError(lineno, "'universe:' must come first");
      inst.forbidden.push_back(universe.set_of(values, lineno));
    } else {
      throw ParseError(lineno, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_universe) throw ParseError(reader.line(), "missing 'universe:' line");
  if (!have_k) throw ParseError(reader.line(), "missing 'k:' line");
  return inst;
}

}  // namespace lexhit
