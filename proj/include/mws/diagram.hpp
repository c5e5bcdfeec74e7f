#pragma once

// Chord diagrams on ordered strand components: the text format, relabeling,
// canonical keys, exhaustive tree-diagram enumeration and seeded sampling.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mws {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
  using error::error;
};

class realize_error : public error {
public:
  using error::error;
};

/// Exact integer weight-system value; the evaluators only ever produce -1, 0 or +1.
using WeightValue = int;

struct Endpoint {
  int component = 0;  // component label
  int position = 0;   // 0-based slot along the component, bottom to top
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

// A diagram is determined by the endpoint orders alone: each component keeps
// the bottom-to-top sequence of chord names, and every chord name occurs
// exactly twice across all components.
struct ChordDiagram {
  struct Component {
    int label = 0;
    std::vector<std::string> order;  // chord names, bottom to top
    friend bool operator==(const Component&, const Component&) = default;
  };

  std::string name;                   // optional, not part of diagram identity
  std::vector<Component> components;  // ascending label order

  int degree() const {
    int endpoints = 0;
    for (const auto& c : components) endpoints += static_cast<int>(c.order.size());
    return endpoints / 2;
  }

  const Component* find(int label) const {
    for (const auto& c : components)
      if (c.label == label) return &c;
    return nullptr;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.label);
    return out;
  }

  /// Chord names in first-appearance order (components in label order).
  std::vector<std::string> chord_names() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& c : components)
      for (const auto& id : c.order)
        if (seen.insert(id).second) out.push_back(id);
    return out;
  }

  std::vector<Endpoint> endpoints_of(const std::string& chord) const {
    std::vector<Endpoint> out;
    for (const auto& c : components)
      for (int p = 0; p < static_cast<int>(c.order.size()); ++p)
        if (c.order[p] == chord) out.push_back({c.label, p});
    return out;
  }

  /// Component labels of a chord's two endpoints, as an ordered (min,max) pair.
  std::pair<int, int> chord_pair(const std::string& chord) const {
    auto eps = endpoints_of(chord);
    if (eps.size() != 2) throw error("chord '" + chord + "' does not occur exactly twice");
    return std::minmax(eps[0].component, eps[1].component);
  }

  // Identity is the components with their endpoint orders; the name is decoration.
  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.components == b.components;
  }
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Deterministic name for the i-th generated chord: a..z, aa, ab, ...
inline std::string chord_name(int i) {
  std::string s;
  ++i;
  while (i > 0) {
    --i;
    s.push_back(static_cast<char>('a' + i % 26));
    i /= 26;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

/// Deterministic bounded draw; tiny modulo bias is irrelevant for test sampling.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace detail

inline void validate(const ChordDiagram& d) {
  std::set<int> labels;
  std::map<std::string, int> counts;
  for (const auto& c : d.components) {
    if (c.label <= 0) throw parse_error("component label must be positive");
    if (!labels.insert(c.label).second)
      throw parse_error("duplicate component label " + std::to_string(c.label));
    for (const auto& id : c.order) ++counts[id];
  }
  for (const auto& [id, n] : counts)
    if (n != 2)
      throw parse_error("chord '" + id + "' occurs " + std::to_string(n) + " times, expected 2");
}

// Diagram file format: optional "diagram <name>" header, then one
// "component <label>: <id> <id> ..." line per component.  '#' lines are comments.
inline ChordDiagram parse_diagram(const std::string& text) {
  ChordDiagram d;
  std::istringstream in(text);
  std::string raw;
  bool saw_content = false;
  while (std::getline(in, raw)) {
    std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "diagram") {
      if (saw_content) throw parse_error("misplaced 'diagram' header");
      std::string rest;
      std::getline(ls, rest);
      d.name = detail::trim(rest);
      saw_content = true;
      continue;
    }
    if (keyword != "component") throw parse_error("unrecognized line: " + line);
    saw_content = true;
    std::string rest;
    std::getline(ls, rest);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw parse_error("missing ':' in component line: " + line);
    std::string label_text = detail::trim(rest.substr(0, colon));
    ChordDiagram::Component comp;
    try {
      size_t used = 0;
      comp.label = std::stoi(label_text, &used);
      if (used != label_text.size()) throw std::invalid_argument(label_text);
    } catch (const std::exception&) {
      throw parse_error("bad component label '" + label_text + "'");
    }
    comp.order = detail::tokens(rest.substr(colon + 1));
    d.components.push_back(std::move(comp));
  }
  std::sort(d.components.begin(), d.components.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });
  validate(d);
  return d;
}

inline std::string render_diagram(const ChordDiagram& d) {
  std::ostringstream out;
  if (!d.name.empty()) out << "diagram " << d.name << "\n";
  for (const auto& c : d.components) {
    out << "component " << c.label << ":";
    for (const auto& id : c.order) out << ' ' << id;
    out << "\n";
  }
  return out.str();
}

/// One-line rendering used in FAIL diagnostics; still parseable after
/// replacing " / " with newlines.
inline std::string render_inline(const ChordDiagram& d) {
  std::string s;
  for (const auto& c : d.components) {
    if (!s.empty()) s += " / ";
    s += "component " + std::to_string(c.label) + ":";
    for (const auto& id : c.order) s += " " + id;
  }
  return s;
}

/// Components in label order with chords renamed in first-appearance order.
inline ChordDiagram canonical_form(const ChordDiagram& d) {
  ChordDiagram out;
  std::map<std::string, std::string> rename;
  int next = 0;
  for (const auto& c : d.components) {
    ChordDiagram::Component comp{c.label, {}};
    for (const auto& id : c.order) {
      auto it = rename.find(id);
      if (it == rename.end()) it = rename.emplace(id, detail::chord_name(next++)).first;
      comp.order.push_back(it->second);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

/// Equal keys iff the diagrams agree up to renaming of the chords.
inline std::string canonical_key(const ChordDiagram& d) {
  std::string key;
  for (const auto& c : canonical_form(d).components) {
    key += std::to_string(c.label) + ":";
    for (const auto& id : c.order) key += id + " ";
    key += "|";
  }
  return key;
}

// Index (i_1,...,i_n; j) of a mu-invariant without repeating labels.
struct MuIndex {
  std::vector<int> leading;
  int target = 0;

  int degree() const { return static_cast<int>(leading.size()); }
};

inline void validate(const MuIndex& idx) {
  std::set<int> seen(idx.leading.begin(), idx.leading.end());
  seen.insert(idx.target);
  if (seen.size() != idx.leading.size() + 1)
    throw error("mu-index labels must be pairwise distinct");
}

// Renames component i_k to k and j to n+1.  Returns nullopt (the evaluation is 0)
// when some chord endpoint lies on a component outside the index set; components
// outside the set are dropped only when they carry no endpoints.  Index labels
// missing from the diagram become empty components so the result is on 1..n+1.
inline std::optional<ChordDiagram> relabel_for_index(const ChordDiagram& d, const MuIndex& idx) {
  validate(idx);
  std::map<int, int> rename;
  for (int k = 0; k < idx.degree(); ++k) rename[idx.leading[k]] = k + 1;
  rename[idx.target] = idx.degree() + 1;

  ChordDiagram out;
  out.name = d.name;
  out.components.resize(idx.degree() + 1);
  for (int k = 0; k <= idx.degree(); ++k) out.components[k].label = k + 1;
  for (const auto& c : d.components) {
    auto it = rename.find(c.label);
    if (it == rename.end()) {
      if (!c.order.empty()) return std::nullopt;
      continue;
    }
    out.components[it->second - 1].order = c.order;
  }
  return out;
}

namespace detail {

/// Labeled tree on 1..m decoded from a Pruefer sequence (values in 1..m).
inline std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int m) {
  std::vector<int> deg(m + 1, 1);
  for (int v : seq) ++deg[v];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 1; v <= m; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m - 1);
  for (int v : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--deg[v] == 1) leaves.push(v);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return edges;
}

}  // namespace detail

// Visits exactly one representative of every degree-n diagram on components
// 1..n+1 whose connection graph is a spanning tree: all labeled trees (Pruefer
// sequences) combined with all endpoint orders at each component.
inline void for_each_tree_diagram(int degree,
                                  const std::function<void(const ChordDiagram&)>& fn) {
  if (degree < 1) throw std::invalid_argument("tree diagram enumeration needs degree >= 1");
  const int m = degree + 1;

  auto emit_tree = [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> incident(m + 1);
    for (int e = 0; e < degree; ++e) {
      incident[edges[e].first].push_back(e);
      incident[edges[e].second].push_back(e);
    }
    // Odometer over the per-component permutations of incident chords.
    auto arr = incident;
    while (true) {
      ChordDiagram d;
      for (int v = 1; v <= m; ++v) {
        ChordDiagram::Component comp{v, {}};
        for (int e : arr[v]) comp.order.push_back(detail::chord_name(e));
        d.components.push_back(std::move(comp));
      }
      fn(d);
      int v = 1;
      while (v <= m && !std::next_permutation(arr[v].begin(), arr[v].end())) ++v;
      if (v > m) break;
    }
  };

  if (m == 2) {
    emit_tree({{1, 2}});
    return;
  }
  std::vector<int> seq(m - 2, 1);
  while (true) {
    emit_tree(detail::prufer_decode(seq, m));
    int i = 0;
    while (i < m - 2 && seq[i] == m) seq[i++] = 1;
    if (i == m - 2) break;
    ++seq[i];
  }
}

inline std::vector<ChordDiagram> enumerate_tree_diagrams(int degree) {
  std::vector<ChordDiagram> out;
  for_each_tree_diagram(degree, [&](const ChordDiagram& d) { out.push_back(d); });
  return out;
}

// Seeded uniform chord placement on components 1..k; same-component chords and
// parallel chords can occur, which the vanishing tests rely on.
inline ChordDiagram random_diagram(int degree, int components, std::uint64_t seed) {
  if (degree < 0 || components < 1) throw std::invalid_argument("random_diagram: bad size");
  std::mt19937_64 rng(seed);
  ChordDiagram d;
  d.components.resize(components);
  for (int i = 0; i < components; ++i) d.components[i].label = i + 1;
  for (int c = 0; c < degree; ++c) {
    const std::string id = detail::chord_name(c);
    for (int endpoint = 0; endpoint < 2; ++endpoint) {
      auto& comp = d.components[detail::pick(rng, components)];
      auto pos = detail::pick(rng, comp.order.size() + 1);
      comp.order.insert(comp.order.begin() + static_cast<long>(pos), id);
    }
  }
  return d;
}

}  // namespace mws
