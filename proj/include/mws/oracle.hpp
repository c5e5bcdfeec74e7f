#pragma once

// Ground truth for the weight systems: mu-invariants of string links from the
// Wirtinger presentation evaluated through the truncated Magnus expansion,
// realization of chord diagrams as singular string links, and the alternating
// resolution sums.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mws/diagram.hpp"
#include "mws/magnus.hpp"
#include "mws/stringlink.hpp"

namespace mws {

/// (strand label, arc index); arc k is the run between the k-th and (k+1)-th
/// under-passages of the strand.
using ArcId = std::pair<int, int>;

namespace detail {

struct CrossingIndex {
  std::map<std::string, ArcId> over_arc;                 // crossing -> arc carrying its over passage
  std::map<std::string, std::pair<int, int>> strands_of; // crossing -> the two strand labels
};

inline CrossingIndex index_crossings(const StringLinkDiagram& sl) {
  CrossingIndex idx;
  std::map<std::string, std::vector<int>> strand_hits;
  for (const auto& s : sl.strands) {
    int arc = 0;
    for (const auto& p : s.passages) {
      strand_hits[p.crossing].push_back(s.label);
      if (p.kind == PassageKind::over) idx.over_arc[p.crossing] = {s.label, arc};
      if (p.kind == PassageKind::under) ++arc;
    }
  }
  for (const auto& [id, hits] : strand_hits)
    idx.strands_of[id] = std::minmax(hits[0], hits[1]);
  return idx;
}

}  // namespace detail

// Arc meridians by fixpoint iteration of the Wirtinger rewriting: the bottom
// arc of strand i is 1+K_i, and an under-passage beneath arc b with sign e
// conjugates the running value by w(b)^e.  Each sweep is exact one degree
// deeper; after max_degree+1 sweeps a further sweep must change nothing.
inline std::map<ArcId, MagnusSeries> arc_meridians(const StringLinkDiagram& sl,
                                                   int max_degree) {
  if (sl.has_singular())
    throw std::invalid_argument("arc_meridians: diagram has unresolved singular passages");
  const auto idx = detail::index_crossings(sl);

  std::map<ArcId, MagnusSeries> table;
  for (const auto& s : sl.strands) {
    int unders = 0;
    for (const auto& p : s.passages)
      if (p.kind == PassageKind::under) ++unders;
    for (int a = 0; a <= unders; ++a)
      table.emplace(ArcId{s.label, a}, MagnusSeries::meridian(s.label, max_degree));
  }

  auto sweep = [&](std::map<ArcId, MagnusSeries>& t) {
    bool changed = false;
    for (const auto& s : sl.strands) {
      MagnusSeries cur = MagnusSeries::meridian(s.label, max_degree);
      int arc = 0;
      for (const auto& p : s.passages) {
        if (p.kind != PassageKind::under) continue;
        const MagnusSeries& over = t.at(idx.over_arc.at(p.crossing));
        cur = conjugate(cur, over, p.sign);
        auto& slot = t.at({s.label, ++arc});
        if (!(slot == cur)) {
          slot = cur;
          changed = true;
        }
      }
    }
    return changed;
  };

  // A stable sweep stays stable, so stopping early keeps the contract that one
  // sweep beyond the budget changes nothing.
  bool stable = false;
  for (int i = 0; i <= max_degree && !stable; ++i) stable = !sweep(table);
  if (!stable && sweep(table))
    throw std::logic_error("arc_meridians: iteration failed to stabilize");
  return table;
}

/// Magnus expansion of the longitude of `target`: the ordered product of
/// w(over-arc)^sign over its under-passages.  Empty product for an
/// all-overcrossing strand.
inline MagnusSeries longitude(const StringLinkDiagram& sl, int target, int max_degree) {
  if (!sl.find(target)) throw std::invalid_argument("longitude: unknown strand");
  const auto idx = detail::index_crossings(sl);
  const auto arcs = arc_meridians(sl, max_degree);
  MagnusSeries out = MagnusSeries::one(max_degree);
  for (const auto& p : sl.find(target)->passages) {
    if (p.kind != PassageKind::under) continue;
    out = out * magnus_pow(arcs.at(idx.over_arc.at(p.crossing)), p.sign);
  }
  return out;
}

/// Coefficient of K_{i_1}...K_{i_n} in the longitude of the target strand.
inline long long mu(const StringLinkDiagram& sl, const MuIndex& idx) {
  validate(idx);
  for (int label : idx.leading)
    if (!sl.find(label)) throw std::invalid_argument("mu: unknown strand in index");
  return coefficient(longitude(sl, idx.target, idx.degree()), idx.leading);
}

/// Half the signed count of crossings between strands i and j.
inline long long linking(const StringLinkDiagram& sl, int i, int j) {
  if (i == j) throw std::invalid_argument("linking: strands must differ");
  if (sl.has_singular()) throw std::invalid_argument("linking: diagram not resolved");
  const auto idx = detail::index_crossings(sl);
  long long sum = 0;
  long long count = 0;
  const std::pair<int, int> want = std::minmax(i, j);
  std::set<std::string> seen;
  for (const auto& s : sl.strands)
    for (const auto& p : s.passages) {
      if (!seen.insert(p.crossing).second) continue;
      if (idx.strands_of.at(p.crossing) != want) continue;
      sum += p.sign;
      ++count;
    }
  if (count % 2 != 0)
    throw error("linking: odd crossing count between strands, not a string link");
  return sum / 2;
}

// Realizes a chord diagram as a singular string link: chords become singular
// crossings placed bottom-up in a topological order of the per-component
// below/above constraints; the lower-labeled strand detours rightward over
// every intermediate strand (outbound sign +1, return -1) to meet its partner.
// Throws realize_error when the constraints are cyclic.
inline StringLinkDiagram realize(const ChordDiagram& d) {
  const auto chords = d.chord_names();
  const int n = static_cast<int>(chords.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[chords[i]] = i;

  // height constraints: chord at a lower slot precedes a distinct chord above it
  std::vector<std::set<int>> after(n);
  std::vector<int> indegree(n, 0);
  for (const auto& c : d.components)
    for (size_t p = 0; p < c.order.size(); ++p)
      for (size_t q = p + 1; q < c.order.size(); ++q) {
        const int a = index[c.order[p]], b = index[c.order[q]];
        if (a != b && after[a].insert(b).second) ++indegree[b];
      }
  std::vector<int> order;
  std::set<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert(i);
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : after[v])
      if (--indegree[w] == 0) ready.insert(w);
  }
  if (static_cast<int>(order.size()) != n)
    throw realize_error("realize: cyclic height constraints, not monotonically realizable");

  StringLinkDiagram sl;
  for (const auto& c : d.components) sl.strands.push_back({c.label, {}});
  std::set<std::string> used(chords.begin(), chords.end());
  auto fresh = [&](std::string base) {
    std::string id;
    for (char ch : base)
      if (std::isalnum(static_cast<unsigned char>(ch))) id.push_back(ch);
    if (id.empty()) id = "c";
    while (!used.insert(id).second) id += "x";
    return id;
  };
  std::map<std::string, std::string> singular_id;
  for (const auto& id : chords) {
    std::string s;
    for (char ch : id)
      if (std::isalnum(static_cast<unsigned char>(ch))) s.push_back(ch);
    singular_id[id] = (s == id) ? id : fresh(id);
  }

  for (int v : order) {
    const auto& chord = chords[v];
    auto eps = d.endpoints_of(chord);
    int a = eps[0].component, b = eps[1].component;
    if (a > b) std::swap(a, b);
    if (a == b) {
      auto* s = sl.find(a);
      s->passages.push_back({PassageKind::singular, singular_id[chord], 0});
      s->passages.push_back({PassageKind::singular, singular_id[chord], 0});
      continue;
    }
    auto* sa = sl.find(a);
    std::vector<std::string> return_ids;
    for (int t = a + 1; t < b; ++t) {
      const std::string out_id = fresh(singular_id[chord] + "o" + std::to_string(t));
      const std::string ret_id = fresh(singular_id[chord] + "r" + std::to_string(t));
      sa->passages.push_back({PassageKind::over, out_id, 1});
      sl.find(t)->passages.push_back({PassageKind::under, out_id, 1});
      sl.find(t)->passages.push_back({PassageKind::under, ret_id, -1});
      return_ids.push_back(ret_id);
    }
    sa->passages.push_back({PassageKind::singular, singular_id[chord], 0});
    sl.find(b)->passages.push_back({PassageKind::singular, singular_id[chord], 0});
    for (auto it = return_ids.rbegin(); it != return_ids.rend(); ++it)
      sa->passages.push_back({PassageKind::over, *it, -1});
  }
  return sl;
}

/// Full alternating sum over the resolutions of a singular string link; zero
/// whenever the number of singular points exceeds the leading index length.
inline long long finite_type_sum(const StringLinkDiagram& sl, const MuIndex& idx) {
  long long total = 0;
  for (const auto& res : resolutions(sl)) total += res.coefficient * mu(res.resolved, idx);
  return total;
}

/// Weight of a chord diagram computed through the oracle: realize, resolve,
/// and sum with signs.  Requires |leading| = degree(D).
inline long long weight_via_mu(const ChordDiagram& d, const MuIndex& idx) {
  validate(idx);
  if (idx.degree() != d.degree())
    throw std::invalid_argument("weight_via_mu: index length must equal the degree");
  return finite_type_sum(realize(d), idx);
}

}  // namespace mws
