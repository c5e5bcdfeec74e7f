#pragma once

// Weight-system evaluators for the string-link homotopy invariants: the
// recursive chord-splitting evaluation (normative) and the closed form read
// off the branched simplified intersection graph, plus the interlacing
// shortcut and the four-term quadruple builder.

#include <array>
#include <variant>

#include "mws/diagram.hpp"
#include "mws/graphs.hpp"

namespace mws {

enum class SplitZeroReason { erased_endpoint, size_mismatch, out_of_range_endpoint };

struct SplitPieces {
  int sign = 1;
  ChordDiagram d_inf;   // components 1..k; degree k-1
  ChordDiagram d_zero;  // components k+1..n+1 (original labels); degree n-k
};

using SplitResult = std::variant<SplitZeroReason, SplitPieces>;

namespace detail {

inline bool labels_are_1_to_m(const ChordDiagram& d) {
  for (int i = 0; i < static_cast<int>(d.components.size()); ++i)
    if (d.components[i].label != i + 1) return false;
  return true;
}

inline ChordDiagram shift_labels(const ChordDiagram& d, int delta) {
  ChordDiagram out = d;
  for (auto& c : out.components) c.label += delta;
  return out;
}

}  // namespace detail

// Splits a diagram on components 1..n+1 at a chord c between components k and
// n+1.  J is the set of chords with an endpoint on components 1..k-1; these
// survive into d_inf, whose merged component k runs through the lower part of
// n+1 and then back down the lower part of k (that segment is reversed, which
// costs a sign per endpoint on it).  The remaining chords survive into d_zero,
// whose merged component n+1 runs up the lower part of k and the upper part of
// n+1.  Any endpoint on a section erased by the merge kills the product.
inline SplitResult split(const ChordDiagram& d, const std::string& chord) {
  const int m = static_cast<int>(d.components.size());
  auto eps = d.endpoints_of(chord);
  if (eps.size() != 2) throw error("split: chord '" + chord + "' does not occur exactly twice");
  if (eps[0].component == eps[1].component)
    throw error("split: both endpoints of '" + chord + "' on one component");
  if (eps[0].component != m && eps[1].component != m)
    throw error("split: chord '" + chord + "' is not incident to the top component");
  const Endpoint on_top = eps[0].component == m ? eps[0] : eps[1];
  const Endpoint on_k = eps[0].component == m ? eps[1] : eps[0];
  const int k = on_k.component;

  const auto& comp_k = *d.find(k);
  const auto& comp_m = *d.find(m);
  auto segment = [](const std::vector<std::string>& order, int from, int to) {
    return std::vector<std::string>(order.begin() + from, order.begin() + to);
  };
  const auto lower_k = segment(comp_k.order, 0, on_k.position);
  const auto upper_k = segment(comp_k.order, on_k.position + 1, comp_k.order.size());
  const auto lower_m = segment(comp_m.order, 0, on_top.position);
  const auto upper_m = segment(comp_m.order, on_top.position + 1, comp_m.order.size());

  std::set<std::string> in_j;
  for (const auto& id : d.chord_names()) {
    if (id == chord) continue;
    for (const auto& e : d.endpoints_of(id))
      if (e.component < k) in_j.insert(id);
  }
  auto touches = [](const std::vector<std::string>& seg, const std::string& id) {
    return std::find(seg.begin(), seg.end(), id) != seg.end();
  };
  for (const auto& id : d.chord_names()) {
    if (id == chord) continue;
    const bool j = in_j.count(id) != 0;
    if (j && (touches(upper_k, id) || touches(upper_m, id)))
      return SplitZeroReason::erased_endpoint;
    if (!j && (touches(upper_k, id) || touches(lower_m, id)))
      return SplitZeroReason::erased_endpoint;
  }
  for (const auto& id : in_j)
    for (const auto& e : d.endpoints_of(id))
      if (e.component > k && e.component < m) return SplitZeroReason::out_of_range_endpoint;
  if (static_cast<int>(in_j.size()) != k - 1) return SplitZeroReason::size_mismatch;

  auto keep = [&](const std::vector<std::string>& seg, bool want_j) {
    std::vector<std::string> out;
    for (const auto& id : seg)
      if (id != chord && (in_j.count(id) != 0) == want_j) out.push_back(id);
    return out;
  };

  SplitPieces pieces;
  for (int i = 1; i < k; ++i) pieces.d_inf.components.push_back(*d.find(i));
  {
    ChordDiagram::Component merged{k, keep(lower_m, true)};
    auto tail = keep(lower_k, true);
    merged.order.insert(merged.order.end(), tail.rbegin(), tail.rend());
    pieces.d_inf.components.push_back(std::move(merged));
  }
  for (int i = k + 1; i < m; ++i) pieces.d_zero.components.push_back(*d.find(i));
  {
    ChordDiagram::Component merged{m, keep(lower_k, false)};
    auto tail = keep(upper_m, false);
    merged.order.insert(merged.order.end(), tail.begin(), tail.end());
    pieces.d_zero.components.push_back(std::move(merged));
  }
  int reversed_endpoints = 0;
  for (const auto& id : lower_k)
    if (in_j.count(id)) ++reversed_endpoints;
  pieces.sign = reversed_endpoints % 2 == 0 ? 1 : -1;
  return pieces;
}

// Recursive skein evaluation of M_{1..m-1, m}.  Zero unless the diagram has
// degree m-1, no same-component chord and a tree connection graph; the
// single-component degree-0 diagram evaluates to 1.  The split chord is the
// one with the lowest endpoint on the top component (any admissible choice
// gives the same value; asserted by test, not assumed).
inline WeightValue eval_recursive(const ChordDiagram& d) {
  if (!detail::labels_are_1_to_m(d))
    throw std::invalid_argument("eval_recursive: components must be labeled 1..m");
  const int m = static_cast<int>(d.components.size());
  if (d.degree() != m - 1) return 0;
  for (const auto& id : d.chord_names()) {
    auto pr = d.chord_pair(id);
    if (pr.first == pr.second) return 0;
  }
  if (!is_tree(connection_graph(d))) return 0;
  if (m == 1) return 1;

  const auto res = split(d, d.components.back().order.front());
  if (std::holds_alternative<SplitZeroReason>(res)) return 0;
  const auto& pieces = std::get<SplitPieces>(res);
  const int k = static_cast<int>(pieces.d_inf.components.size());
  const WeightValue lhs = eval_recursive(pieces.d_inf);
  if (lhs == 0) return 0;
  return pieces.sign * lhs * eval_recursive(detail::shift_labels(pieces.d_zero, -k));
}

// Closed form: (-1)^L when the branched simplified intersection graph exists
// and is good, 0 otherwise.  The empty single-component diagram is 1 to match
// the recursion's base case.
inline WeightValue eval_closed(const ChordDiagram& d) {
  if (!detail::labels_are_1_to_m(d))
    throw std::invalid_argument("eval_closed: components must be labeled 1..m");
  if (d.components.size() == 1 && d.degree() == 0) return 1;
  auto b = build_bsig(d);
  if (!b || !is_good(*b)) return 0;
  return b->left_total % 2 == 0 ? 1 : -1;
}

/// True iff chords {i,j} and {k,l} with i < k < j < l exist; such a pair
/// forces the weight to vanish.
inline bool has_interlaced_pair(const ChordDiagram& d) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& id : d.chord_names()) pairs.push_back(d.chord_pair(id));
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      if (a.first < b.first && b.first < a.second && a.second < b.second) return true;
    }
  return false;
}

// The four placements of chord c's free endpoint immediately around the two
// endpoints of chord d, with signs making the sum vanish under any weight
// system.  `base` must contain chord c exactly once and chord d (and every
// other chord) exactly twice.
inline std::array<std::pair<int, ChordDiagram>, 4> fourterm_quadruple(
    const ChordDiagram& base, const std::string& chord_c, const std::string& chord_d) {
  if (base.endpoints_of(chord_c).size() != 1)
    throw error("fourterm_quadruple: chord '" + chord_c + "' must occur exactly once");
  auto d_eps = base.endpoints_of(chord_d);
  if (d_eps.size() != 2)
    throw error("fourterm_quadruple: chord '" + chord_d + "' must occur exactly twice");
  std::sort(d_eps.begin(), d_eps.end());

  auto place = [&](Endpoint at, int offset) {
    ChordDiagram out = base;
    for (auto& comp : out.components)
      if (comp.label == at.component) {
        comp.order.insert(comp.order.begin() + at.position + offset, chord_c);
        return out;
      }
    throw error("fourterm_quadruple: endpoint component missing");
  };
  return {{{+1, place(d_eps[0], 1)},
           {-1, place(d_eps[0], 0)},
           {-1, place(d_eps[1], 1)},
           {+1, place(d_eps[1], 0)}}};
}

}  // namespace mws
