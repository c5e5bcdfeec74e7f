#pragma once

// Graph views of a chord diagram: the connection multigraph, the mod-2
// directed intersection graph, its consecutive-pairs simplification, the
// branched form with the goodness test, diagram reconstruction and DOT export.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mws/diagram.hpp"

namespace mws {

struct ConnectionGraph {
  std::vector<int> vertices;                 // component labels, ascending
  std::vector<std::pair<int, int>> edges;    // one (min,max) pair per chord; loops allowed
};

inline ConnectionGraph connection_graph(const ChordDiagram& d) {
  ConnectionGraph g;
  g.vertices = d.labels();
  for (const auto& id : d.chord_names()) g.edges.push_back(d.chord_pair(id));
  return g;
}

/// Connected, loop-free, multi-edge-free, with |edges| = |vertices|-1.
inline bool is_tree(const ConnectionGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (static_cast<int>(g.edges.size()) != n - 1) return false;
  std::set<std::pair<int, int>> simple;
  for (const auto& e : g.edges) {
    if (e.first == e.second) return false;        // loop
    if (!simple.insert(e).second) return false;   // multi-edge
  }
  std::map<int, int> comp;
  for (int i = 0; i < n; ++i) comp[g.vertices[i]] = i;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    auto a = comp.find(e.first), b = comp.find(e.second);
    if (a == comp.end() || b == comp.end()) return false;
    parent[find(a->second)] = find(b->second);
  }
  for (int i = 0; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

// Vertices are the chords, labeled by their component pair.  A directed edge
// v -> w survives when the mod-2 count of endpoint pairs (e1 of v below e2 of w
// on a shared component) is odd; surviving opposite pairs merge into one
// undirected edge.  The same carrier serves the simplified graph, which counts
// only directly-consecutive endpoint pairs.
struct IntersectionGraph {
  std::map<std::string, std::pair<int, int>> labels;            // chord -> {min,max}
  std::set<std::pair<std::string, std::string>> directed;       // (from, to); self-loops possible
  std::set<std::pair<std::string, std::string>> undirected;     // lexicographically normalized

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;
};

using SimplifiedIntersectionGraph = IntersectionGraph;

namespace detail {

inline IntersectionGraph adjacency_graph(const ChordDiagram& d, bool consecutive_only) {
  IntersectionGraph g;
  for (const auto& id : d.chord_names()) g.labels[id] = d.chord_pair(id);
  std::map<std::pair<std::string, std::string>, int> count;
  for (const auto& c : d.components) {
    const int t = static_cast<int>(c.order.size());
    for (int p = 0; p < t; ++p) {
      const int qmax = consecutive_only ? std::min(p + 2, t) : t;
      for (int q = p + 1; q < qmax; ++q) ++count[{c.order[p], c.order[q]}];
    }
  }
  for (const auto& [pr, n] : count) {
    if (n % 2 == 0) continue;
    if (pr.first == pr.second) {
      g.directed.insert(pr);
      continue;
    }
    auto rev = count.find({pr.second, pr.first});
    const bool rev_odd = rev != count.end() && rev->second % 2 == 1;
    if (rev_odd) {
      if (pr.first < pr.second) g.undirected.insert(pr);
    } else {
      g.directed.insert(pr);
    }
  }
  return g;
}

}  // namespace detail

inline IntersectionGraph intersection_graph(const ChordDiagram& d) {
  return detail::adjacency_graph(d, false);
}

inline SimplifiedIntersectionGraph simplified_graph(const ChordDiagram& d) {
  return detail::adjacency_graph(d, true);
}

/// Key equal for two diagrams iff their intersection graphs agree after
/// canonical chord renaming.
inline std::string gamma_key(const ChordDiagram& d) {
  auto g = intersection_graph(canonical_form(d));
  std::string key;
  for (const auto& [id, lab] : g.labels)
    key += id + "{" + std::to_string(lab.first) + "," + std::to_string(lab.second) + "};";
  key += "|";
  for (const auto& e : g.directed) key += e.first + ">" + e.second + ";";
  key += "|";
  for (const auto& e : g.undirected) key += e.first + "-" + e.second + ";";
  return key;
}

// The rebranching of a rooted-tree simplified intersection graph: per component
// the chords split into the left branch (smaller partner label) and right
// branch (larger partner label), both chained bottom-to-top into the top chord.
struct BranchedSig {
  struct Branch {
    int component = 0;
    std::string top;                   // r_i
    std::vector<std::string> left;     // bottom to top along the component
    std::vector<std::string> right;
  };

  std::map<std::string, std::pair<int, int>> labels;
  std::string root;
  std::vector<Branch> branches;        // indexed by component label - 1
  std::set<std::pair<std::string, std::string>> edges;
  int left_total = 0;                  // sum of |left| over components other than the top one
};

// Defined only when the diagram has degree m-1 on components exactly 1..m, and
// the simplified graph is a spanning rooted directed tree (all edges directed,
// one vertex of outdegree 0, the rest of outdegree 1, no cycles) whose root is
// labeled {i, m}.
inline std::optional<BranchedSig> build_bsig(const ChordDiagram& d) {
  const int m = static_cast<int>(d.components.size());
  for (int i = 0; i < m; ++i)
    if (d.components[i].label != i + 1) return std::nullopt;
  const int n = d.degree();
  if (n != m - 1 || n < 1) return std::nullopt;
  const auto chords = d.chord_names();
  for (const auto& id : chords) {
    auto pr = d.chord_pair(id);
    if (pr.first == pr.second) return std::nullopt;  // same-component chord
  }
  for (const auto& c : d.components)
    if (c.order.empty()) return std::nullopt;

  auto sig = simplified_graph(d);
  if (!sig.undirected.empty()) return std::nullopt;
  std::map<std::string, std::string> succ;
  for (const auto& [from, to] : sig.directed) {
    if (succ.count(from)) return std::nullopt;  // outdegree > 1
    succ[from] = to;
  }
  std::string root;
  for (const auto& id : chords)
    if (!succ.count(id)) {
      if (!root.empty()) return std::nullopt;  // two roots
      root = id;
    }
  if (root.empty()) return std::nullopt;
  for (const auto& id : chords) {  // every vertex must reach the root acyclically
    std::string v = id;
    int steps = 0;
    while (v != root) {
      if (++steps > n) return std::nullopt;
      v = succ[v];
    }
  }
  auto root_label = sig.labels[root];
  if (root_label.second != m) return std::nullopt;

  BranchedSig b;
  b.labels = sig.labels;
  b.root = root;
  b.branches.resize(m);
  std::map<std::string, int> top_count;
  for (const auto& c : d.components) {
    auto& br = b.branches[c.label - 1];
    br.component = c.label;
    br.top = c.order.back();
    ++top_count[br.top];
    for (int p = 0; p + 1 < static_cast<int>(c.order.size()); ++p) {
      const auto& id = c.order[p];
      auto lab = sig.labels[id];
      const int partner = lab.first == c.label ? lab.second : lab.first;
      (partner < c.label ? br.left : br.right).push_back(id);
    }
  }
  if (top_count[root] != 2) return std::nullopt;
  for (const auto& id : chords)
    if (id != root && top_count[id] != 1) return std::nullopt;

  for (const auto& br : b.branches) {
    for (const auto* chain : {&br.left, &br.right}) {
      for (size_t i = 0; i + 1 < chain->size(); ++i)
        b.edges.insert({(*chain)[i], (*chain)[i + 1]});
      if (!chain->empty()) b.edges.insert({chain->back(), br.top});
    }
    if (br.component != m) b.left_total += static_cast<int>(br.left.size());
  }
  return b;
}

// Branch orderings must be monotone in partner labels: increasing bottom-to-top
// for all chords on the top component (root included) and within each right
// branch, decreasing within each left branch.
inline bool is_good(const BranchedSig& b) {
  const int m = static_cast<int>(b.branches.size());
  auto partner = [&](const std::string& id, int comp) {
    auto lab = b.labels.at(id);
    return lab.first == comp ? lab.second : lab.first;
  };
  auto monotone = [&](const std::vector<std::string>& seq, int comp, bool increasing) {
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      const int a = partner(seq[i], comp), c = partner(seq[i + 1], comp);
      if (increasing ? a >= c : a <= c) return false;
    }
    return true;
  };
  auto top_seq = b.branches[m - 1].left;
  top_seq.push_back(b.branches[m - 1].top);
  if (!monotone(top_seq, m, true)) return false;
  for (int i = 0; i + 1 < m; ++i) {
    if (!monotone(b.branches[i].left, i + 1, false)) return false;
    if (!monotone(b.branches[i].right, i + 1, true)) return false;
  }
  return true;
}

// Rebuilds the unique diagram with the given intersection graph.  Requires the
// vertex labels to induce a tree connection graph and every edge directed; the
// per-component orders are then the unique consistent orderings of the edges.
inline ChordDiagram reconstruct(const IntersectionGraph& g) {
  if (!g.undirected.empty())
    throw error("reconstruct: undirected edge present, tree hypothesis violated");
  ConnectionGraph c;
  {
    std::set<int> verts;
    for (const auto& [id, lab] : g.labels) {
      if (lab.first == lab.second) throw error("reconstruct: same-component chord label");
      verts.insert(lab.first);
      verts.insert(lab.second);
      c.edges.push_back(lab);
    }
    c.vertices.assign(verts.begin(), verts.end());
  }
  if (!is_tree(c)) throw error("reconstruct: vertex labels do not form a tree");

  ChordDiagram d;
  for (int v : c.vertices) {
    std::vector<std::string> on_comp;
    for (const auto& [id, lab] : g.labels)
      if (lab.first == v || lab.second == v) on_comp.push_back(id);
    // Within one component the directed edges form a tournament whose
    // transitive order is recovered by internal outdegree.
    std::map<std::string, int> outdeg;
    for (const auto& a : on_comp)
      for (const auto& b : on_comp) {
        if (a == b) continue;
        const bool ab = g.directed.count({a, b}) != 0;
        const bool ba = g.directed.count({b, a}) != 0;
        if (a < b && ab == ba)
          throw error("reconstruct: directions inconsistent on component " + std::to_string(v));
        if (ab) ++outdeg[a];
      }
    std::sort(on_comp.begin(), on_comp.end(), [&](const auto& a, const auto& b) {
      return outdeg[a] > outdeg[b];
    });
    for (size_t i = 0; i + 1 < on_comp.size(); ++i)
      if (outdeg[on_comp[i]] <= outdeg[on_comp[i + 1]])
        throw error("reconstruct: directions inconsistent on component " + std::to_string(v));
    d.components.push_back({v, std::move(on_comp)});
  }
  if (intersection_graph(d) != g) throw error("reconstruct: graph is not realizable");
  return d;
}

inline std::string to_dot(const ConnectionGraph& g) {
  std::ostringstream out;
  out << "digraph C {\n";
  for (int v : g.vertices) out << "  " << v << ";\n";
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) out << "  " << e.first << " -> " << e.second << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const IntersectionGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& [id, lab] : g.labels)
    out << "  " << id << " [label=\"{" << lab.first << "," << lab.second << "}\"];\n";
  for (const auto& e : g.directed) out << "  " << e.first << " -> " << e.second << ";\n";
  for (const auto& e : g.undirected)
    out << "  " << e.first << " -> " << e.second << " [dir=both];\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const BranchedSig& b) {
  std::ostringstream out;
  out << "digraph BSIG {\n";
  for (const auto& [id, lab] : b.labels) {
    out << "  " << id << " [label=\"{" << lab.first << "," << lab.second << "}\"";
    if (id == b.root) out << " shape=doublecircle";
    out << "];\n";
  }
  for (const auto& e : b.edges) out << "  " << e.first << " -> " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mws
