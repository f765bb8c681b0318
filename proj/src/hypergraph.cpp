#include "lexhit/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lexhit {

Hypergraph::Hypergraph(std::vector<std::string> names, std::vector<VertexSet> edges)
    : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw std::invalid_argument("Hypergraph: empty vertex name");
    auto [it, inserted] = index_.emplace(names_[i], static_cast<VertexId>(i));
    if (!inserted)
      throw std::invalid_argument("Hypergraph: duplicate vertex name '" + names_[i] + "'");
  }
  edges_.reserve(edges.size());
  for (auto& e : edges) {
    if (e.universe_size() != names_.size())
      throw std::invalid_argument("Hypergraph: edge over a different universe");
    if (std::find(edges_.begin(), edges_.end(), e) == edges_.end())
      edges_.push_back(std::move(e));
  }
}

Hypergraph Hypergraph::with_default_names(std::size_t n, std::vector<VertexSet> edges) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return Hypergraph(std::move(names), std::move(edges));
}

std::optional<VertexId> Hypergraph::vertex_named(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? std::nullopt : std::optional<VertexId>(it->second);
}

std::size_t Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges_) r = std::max(r, e.count());
  return r;
}

bool Hypergraph::has_empty_edge() const {
  for (const auto& e : edges_)
    if (e.empty()) return true;
  return false;
}

bool Hypergraph::is_hitting_set(const VertexSet& s) const {
  for (const auto& e : edges_)
    if (!e.intersects(s)) return false;
  return true;
}

MinimalityCheck Hypergraph::check_minimal(const VertexSet& s) const {
  MinimalityCheck result;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!edges_[i].intersects(s)) {
      result.status = MinimalityCheck::Status::NotHitting;
      result.violated_edge = i;
      return result;
    }
  }
  result.record.set = s;
  bool ok = true;
  s.for_each([&](VertexId x) {
    if (!ok) return;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].intersection_count(s) == 1 && edges_[i].contains(x)) {
        result.record.witnesses.emplace_back(x, i);
        return;
      }
    }
    ok = false;
    result.status = MinimalityCheck::Status::Expendable;
    result.expendable_vertex = x;
  });
  if (!ok) result.record = TransversalRecord{};
  return result;
}

Restriction Hypergraph::restrict(const VertexSet& removed) const {
  const std::size_t n = vertex_count();
  if (removed.universe_size() != n)
    throw std::invalid_argument("restrict: set over a different universe");

  Restriction out;
  out.from_original.assign(n, kNoVertex);
  std::vector<std::string> names;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed.contains(v)) {
      out.from_original[v] = static_cast<VertexId>(out.to_original.size());
      out.to_original.push_back(v);
      names.push_back(names_[v]);
    }
  }
  const std::size_t kept = out.to_original.size();
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) {
    VertexSet mapped(kept);
    e.for_each([&](VertexId v) {
      if (out.from_original[v] != kNoVertex) mapped.insert(out.from_original[v]);
    });
    edges.push_back(std::move(mapped));
  }
  out.hypergraph = Hypergraph(std::move(names), std::move(edges));
  return out;
}

Hypergraph Hypergraph::without_superset_edges() const {
  std::vector<VertexSet> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < edges_.size() && !dominated; ++j)
      if (j != i && edges_[j].is_subset_of(edges_[i]) && edges_[j] != edges_[i])
        dominated = true;
    if (!dominated) kept.push_back(edges_[i]);
  }
  return Hypergraph(names_, std::move(kept));
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

// Strips comments and surrounding whitespace; empty result means "skip line".
std::string significant_part(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<VertexSet> edges;
  bool have_header = false;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = significant_part(raw);
    if (line.empty()) continue;

    if (!have_header) {
      if (line.rfind("vertices:", 0) != 0)
        throw ParseError(lineno, "expected 'vertices:' header");
      names = tokenize(line.substr(9));
      for (std::size_t i = 0; i < names.size(); ++i) {
        auto [it, inserted] = ids.emplace(names[i], static_cast<VertexId>(i));
        if (!inserted)
          throw ParseError(lineno, "duplicate vertex name '" + names[i] + "'");
      }
      have_header = true;
      continue;
    }

    if (line.rfind("edge:", 0) != 0)
      throw ParseError(lineno, "expected 'edge:' line");
    VertexSet e(names.size());
    for (const auto& tok : tokenize(line.substr(5))) {
      auto it = ids.find(tok);
      if (it == ids.end())
        throw ParseError(lineno, "unknown vertex name '" + tok + "'");
      e.insert(it->second);
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(lineno, "missing 'vertices:' header");
  return Hypergraph(std::move(names), std::move(edges));
}

Hypergraph parse_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "vertices:";
  for (const auto& name : h.names()) out << ' ' << name;
  out << '\n';
  for (const auto& e : h.edges()) {
    out << "edge:";
    e.for_each([&](VertexId v) { out << ' ' << h.name(v); });
    out << '\n';
  }
}

std::string format_set(const VertexSet& s, const std::vector<std::string>& names) {
  if (s.empty()) return "{}";
  std::string out;
  s.for_each([&](VertexId v) {
    if (!out.empty()) out += ' ';
    out += v < names.size() ? names[v] : "?" + std::to_string(v);
  });
  return out;
}

}  // namespace lexhit
