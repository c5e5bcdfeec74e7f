#pragma once

// String links as per-strand Gauss sequences of crossing passages.  A crossing
// id occurs exactly twice: once over and once under with equal signs, or twice
// singular.  Planarity of hand-written codes is not verified; the generators
// in this file only emit honestly realizable diagrams (stacked clasps, kinks
// and over-passes).

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mws/diagram.hpp"

namespace mws {

enum class PassageKind { over, under, singular };

struct Passage {
  PassageKind kind = PassageKind::over;
  std::string crossing;
  int sign = 0;  // +1 or -1; 0 for singular passages

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct StringLinkDiagram {
  struct Strand {
    int label = 0;
    std::vector<Passage> passages;
    friend bool operator==(const Strand&, const Strand&) = default;
  };

  std::string name;
  std::vector<Strand> strands;  // ascending label order

  const Strand* find(int label) const {
    for (const auto& s : strands)
      if (s.label == label) return &s;
    return nullptr;
  }

  Strand* find(int label) {
    for (auto& s : strands)
      if (s.label == label) return &s;
    return nullptr;
  }

  std::vector<std::string> crossing_ids() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& s : strands)
      for (const auto& p : s.passages)
        if (seen.insert(p.crossing).second) out.push_back(p.crossing);
    return out;
  }

  bool has_singular() const {
    for (const auto& s : strands)
      for (const auto& p : s.passages)
        if (p.kind == PassageKind::singular) return true;
    return false;
  }

  std::vector<std::string> singular_ids() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& s : strands)
      for (const auto& p : s.passages)
        if (p.kind == PassageKind::singular && seen.insert(p.crossing).second)
          out.push_back(p.crossing);
    return out;
  }

  friend bool operator==(const StringLinkDiagram& a, const StringLinkDiagram& b) {
    return a.strands == b.strands;
  }
};

inline void validate(const StringLinkDiagram& sl) {
  std::set<int> labels;
  for (const auto& s : sl.strands) {
    if (s.label <= 0) throw parse_error("strand label must be positive");
    if (!labels.insert(s.label).second)
      throw parse_error("duplicate strand label " + std::to_string(s.label));
  }
  std::map<std::string, std::vector<Passage>> by_id;
  for (const auto& s : sl.strands)
    for (const auto& p : s.passages) by_id[p.crossing].push_back(p);
  for (const auto& [id, ps] : by_id) {
    if (ps.size() != 2)
      throw parse_error("crossing '" + id + "' occurs " + std::to_string(ps.size()) +
                        " times, expected 2");
    const bool both_singular =
        ps[0].kind == PassageKind::singular && ps[1].kind == PassageKind::singular;
    const bool over_under =
        (ps[0].kind == PassageKind::over && ps[1].kind == PassageKind::under) ||
        (ps[0].kind == PassageKind::under && ps[1].kind == PassageKind::over);
    if (both_singular) continue;
    if (!over_under) throw parse_error("crossing '" + id + "' needs one over and one under");
    if (ps[0].sign != ps[1].sign || (ps[0].sign != 1 && ps[0].sign != -1))
      throw parse_error("crossing '" + id + "' has mismatched signs");
  }
}

namespace detail {

inline Passage parse_passage(const std::string& role, const std::string& body) {
  Passage p;
  if (role == "s") {
    p.kind = PassageKind::singular;
    p.crossing = body;
    p.sign = 0;
  } else {
    p.kind = role == "o" ? PassageKind::over : PassageKind::under;
    if (body.size() < 2) throw parse_error("bad passage '" + role + body + "'");
    const char sign = body.back();
    if (sign != '+' && sign != '-') throw parse_error("bad passage sign in '" + body + "'");
    p.crossing = body.substr(0, body.size() - 1);
    p.sign = sign == '+' ? 1 : -1;
  }
  if (p.crossing.empty()) throw parse_error("empty crossing id");
  for (char ch : p.crossing)
    if (!std::isalnum(static_cast<unsigned char>(ch)))
      throw parse_error("crossing id '" + p.crossing + "' must be alphanumeric");
  return p;
}

}  // namespace detail

// Gauss-code format: optional "stringlink <name>" header, then
// "strand <label>: <passage> ..." with passages o<id><sign>, u<id><sign> or
// s<id>.  The role letter may also stand alone before the id token.
inline StringLinkDiagram parse_gauss(const std::string& text) {
  StringLinkDiagram sl;
  std::istringstream in(text);
  std::string raw;
  bool saw_content = false;
  while (std::getline(in, raw)) {
    std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "stringlink") {
      if (saw_content) throw parse_error("misplaced 'stringlink' header");
      std::string rest;
      std::getline(ls, rest);
      sl.name = detail::trim(rest);
      saw_content = true;
      continue;
    }
    if (keyword != "strand") throw parse_error("unrecognized line: " + line);
    saw_content = true;
    std::string rest;
    std::getline(ls, rest);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw parse_error("missing ':' in strand line: " + line);
    StringLinkDiagram::Strand strand;
    std::string label_text = detail::trim(rest.substr(0, colon));
    try {
      size_t used = 0;
      strand.label = std::stoi(label_text, &used);
      if (used != label_text.size()) throw std::invalid_argument(label_text);
    } catch (const std::exception&) {
      throw parse_error("bad strand label '" + label_text + "'");
    }
    auto toks = detail::tokens(rest.substr(colon + 1));
    for (size_t i = 0; i < toks.size(); ++i) {
      const std::string& t = toks[i];
      if (t == "o" || t == "u" || t == "s") {
        if (i + 1 >= toks.size()) throw parse_error("dangling passage role '" + t + "'");
        strand.passages.push_back(detail::parse_passage(t, toks[++i]));
      } else {
        if (t.size() < 2 || (t[0] != 'o' && t[0] != 'u' && t[0] != 's'))
          throw parse_error("bad passage token '" + t + "'");
        strand.passages.push_back(detail::parse_passage(t.substr(0, 1), t.substr(1)));
      }
    }
    sl.strands.push_back(std::move(strand));
  }
  std::sort(sl.strands.begin(), sl.strands.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });
  validate(sl);
  return sl;
}

inline std::string render_gauss(const StringLinkDiagram& sl) {
  std::ostringstream out;
  if (!sl.name.empty()) out << "stringlink " << sl.name << "\n";
  for (const auto& s : sl.strands) {
    out << "strand " << s.label << ":";
    for (const auto& p : s.passages) {
      out << ' ';
      switch (p.kind) {
        case PassageKind::over: out << 'o'; break;
        case PassageKind::under: out << 'u'; break;
        case PassageKind::singular: out << 's'; break;
      }
      out << p.crossing;
      if (p.kind != PassageKind::singular) out << (p.sign > 0 ? '+' : '-');
    }
    out << "\n";
  }
  return out.str();
}

inline std::string render_gauss_inline(const StringLinkDiagram& sl) {
  std::string text = render_gauss(sl);
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("stringlink", 0) == 0) continue;
    if (!out.empty()) out += " / ";
    out += line;
  }
  return out;
}

/// Over/under roles swapped and the sign negated on both passages.
inline StringLinkDiagram switch_crossing(const StringLinkDiagram& sl, const std::string& id) {
  StringLinkDiagram out = sl;
  bool found = false;
  for (auto& s : out.strands)
    for (auto& p : s.passages)
      if (p.crossing == id) {
        if (p.kind == PassageKind::singular)
          throw error("switch_crossing: '" + id + "' is singular");
        p.kind = p.kind == PassageKind::over ? PassageKind::under : PassageKind::over;
        p.sign = -p.sign;
        found = true;
      }
  if (!found) throw error("switch_crossing: unknown crossing '" + id + "'");
  return out;
}

struct SingularResolution {
  std::map<std::string, int> assignment;  // singular crossing id -> +1 or -1
  int coefficient = 1;                    // product of assigned signs
  StringLinkDiagram resolved;
};

// All 2^s resolutions of the singular crossings.  Assignment +1 makes the
// first passage in strand order an over-crossing of sign +1; assignment -1
// gives the crossing-changed form with sign -1.
inline std::vector<SingularResolution> resolutions(const StringLinkDiagram& sl) {
  const auto ids = sl.singular_ids();
  const int s = static_cast<int>(ids.size());
  std::vector<SingularResolution> out;
  out.reserve(1u << s);
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    SingularResolution res;
    res.resolved = sl;
    for (int i = 0; i < s; ++i) {
      const int sign = (mask >> i) & 1 ? -1 : 1;
      res.assignment[ids[i]] = sign;
      res.coefficient *= sign;
      bool first = true;
      for (auto& strand : res.resolved.strands)
        for (auto& p : strand.passages) {
          if (p.crossing != ids[i]) continue;
          const bool over = (sign == 1) == first;
          p.kind = over ? PassageKind::over : PassageKind::under;
          p.sign = sign;
          first = false;
        }
    }
    out.push_back(std::move(res));
  }
  return out;
}

// --- generators for honestly realizable diagrams -------------------------

/// Appends a clasp of strands u and v (both crossings of the given sign) at
/// the top of the diagram; strands strictly between u and v are passed over
/// twice with canceling signs.
inline void append_clasp(StringLinkDiagram& sl, int u, int v, int sign,
                         const std::string& id_prefix) {
  if (u == v) throw std::invalid_argument("append_clasp: need distinct strands");
  if (u > v) std::swap(u, v);
  auto* su = sl.find(u);
  auto* sv = sl.find(v);
  if (!su || !sv) throw std::invalid_argument("append_clasp: unknown strand");
  for (int t = u + 1; t < v; ++t) {
    su->passages.push_back({PassageKind::over, id_prefix + "o" + std::to_string(t), 1});
    sl.find(t)->passages.push_back({PassageKind::under, id_prefix + "o" + std::to_string(t), 1});
  }
  su->passages.push_back({PassageKind::under, id_prefix + "a", sign});
  sv->passages.push_back({PassageKind::over, id_prefix + "a", sign});
  su->passages.push_back({PassageKind::over, id_prefix + "b", sign});
  sv->passages.push_back({PassageKind::under, id_prefix + "b", sign});
  for (int t = v - 1; t > u; --t) {
    su->passages.push_back({PassageKind::over, id_prefix + "r" + std::to_string(t), -1});
    sl.find(t)->passages.push_back({PassageKind::under, id_prefix + "r" + std::to_string(t), -1});
  }
}

/// Appends a single self-crossing of strand t.
inline void append_kink(StringLinkDiagram& sl, int t, int sign, bool over_first,
                        const std::string& id) {
  auto* s = sl.find(t);
  if (!s) throw std::invalid_argument("append_kink: unknown strand");
  s->passages.push_back({over_first ? PassageKind::over : PassageKind::under, id, sign});
  s->passages.push_back({over_first ? PassageKind::under : PassageKind::over, id, sign});
}

/// Strand u reaches over strand v and back: two crossings with u on top and
/// canceling signs.  Leaves every linking number unchanged.
inline void append_overpass(StringLinkDiagram& sl, int u, int v, const std::string& id_prefix) {
  auto* su = sl.find(u);
  auto* sv = sl.find(v);
  if (!su || !sv || u == v) throw std::invalid_argument("append_overpass: bad strands");
  su->passages.push_back({PassageKind::over, id_prefix + "a", 1});
  sv->passages.push_back({PassageKind::under, id_prefix + "a", 1});
  su->passages.push_back({PassageKind::over, id_prefix + "b", -1});
  sv->passages.push_back({PassageKind::under, id_prefix + "b", -1});
}

inline StringLinkDiagram trivial_link(int strands) {
  StringLinkDiagram sl;
  for (int i = 1; i <= strands; ++i) sl.strands.push_back({i, {}});
  return sl;
}

/// The clasp commutator A13 A23 A13^{-1} A23^{-1}; its closure is the
/// Borromean rings.
inline StringLinkDiagram borromean_string_link() {
  StringLinkDiagram sl = trivial_link(3);
  append_clasp(sl, 1, 3, 1, "p");
  append_clasp(sl, 2, 3, 1, "q");
  append_clasp(sl, 1, 3, -1, "r");
  append_clasp(sl, 2, 3, -1, "s");
  return sl;
}

/// Seeded random honest string link built from stacked clasps and kinks.
inline StringLinkDiagram random_string_link(int strands, int target_crossings,
                                            std::uint64_t seed) {
  if (strands < 2) throw std::invalid_argument("random_string_link: need >= 2 strands");
  std::mt19937_64 rng(seed);
  StringLinkDiagram sl = trivial_link(strands);
  int crossings = 0;
  int event = 0;
  while (crossings < target_crossings) {
    const std::string prefix = "e" + std::to_string(event++);
    if (detail::pick(rng, 4) == 0) {
      append_kink(sl, 1 + static_cast<int>(detail::pick(rng, strands)),
                  detail::pick(rng, 2) ? 1 : -1, detail::pick(rng, 2) != 0, prefix + "k");
      ++crossings;
      continue;
    }
    int u = 1 + static_cast<int>(detail::pick(rng, strands));
    int v = 1 + static_cast<int>(detail::pick(rng, strands));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    const int cost = 2 + 2 * (v - u - 1);
    if (crossings + cost > target_crossings + 1) {
      v = u + 1;  // fall back to an adjacent clasp near the budget
      if (v > strands) continue;
    }
    append_clasp(sl, u, v, detail::pick(rng, 2) ? 1 : -1, prefix);
    crossings += 2 + 2 * (v - u - 1);
  }
  return sl;
}

}  // namespace mws
