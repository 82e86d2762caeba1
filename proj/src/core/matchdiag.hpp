#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace weblab::matchdiag {

// Arc between boundary points, 1-based, left < right.
struct Arc {
  int l = 0;
  int r = 0;
  bool operator==(const Arc& o) const { return l == o.l && r == o.r; }
  bool operator<(const Arc& o) const { return l != o.l ? l < o.l : r < o.r; }
};

// Noncrossing matching on a subset of 1..m.
struct Matching {
  std::vector<Arc> arcs;  // sorted by left endpoint
  bool operator==(const Matching& o) const { return arcs == o.arcs; }
};

// Pairs each `right` symbol with the nearest open `left` symbol (stack
// discipline); the unique noncrossing matching for a balanced prefix-valid
// word. Throws Unbalanced / YamanouchiViolation otherwise.
Matching matching_from_word(const std::string& word, char left, char right);

struct MDiagram {
  Matching upper;  // '+' to '0'
  Matching lower;  // '0' to '-'
  std::string word;
};

MDiagram m_diagram_of_word(const std::string& word);

// Proper interleaving, p.l < q.l < p.r < q.r in either order. Arcs sharing an
// endpoint do not cross.
bool arcs_cross(const Arc& a, const Arc& b);
bool arc_contains(const Arc& outer, const Arc& inner);  // strict span containment

// Count of upper/lower arc pairs that properly cross.
int crossing_number(const MDiagram& m);

// Sum over arcs of the number of arcs lying above (containing, not crossing).
int nesting_number(const std::vector<Arc>& arcs);
int nesting_number(const Matching& m);
int nesting_number(const MDiagram& m);  // over all arcs of both matchings

// depths[k] = #'+' - #'-' among the first k symbols, k = 0..m.
struct DepthProfile {
  std::vector<int> depths;
  int size() const { return static_cast<int>(depths.size()); }
  int64_t weight() const;
  bool operator==(const DepthProfile& o) const { return depths == o.depths; }
};

DepthProfile depth_profile(const std::string& word);
std::string word_of_profile(const DepthProfile& p);  // inverse, for sanity checks

// Pointwise dominance; lhs strictly below rhs somewhere for `strict`.
bool profile_leq(const DepthProfile& a, const DepthProfile& b);
bool profile_lt(const DepthProfile& a, const DepthProfile& b);

struct BandDiagram {
  Matching arcs;
  int closed_loops = 0;
};

BandDiagram band_from_word(const std::string& word);

// Level d holds the closed intervals where the depth is >= d; levels nest.
struct Shadow {
  std::vector<std::vector<Arc>> levels;  // levels[d-1] for d = 1..
  bool operator==(const Shadow& o) const { return levels == o.levels; }
};

Shadow shadow_from_profile(const DepthProfile& p);

// Sum over unmatched points (the middle-row points of a reduced web) of the
// number of band arcs strictly above them.
int dot_depth(const BandDiagram& b, const std::string& word);

// Closed-form transposition-order ranks.
int rank_formula_m(const MDiagram& m);                          // nesting + crossings
int rank_formula_band(const BandDiagram& b, const std::string& word);  // nesting + dot depth - arcs

}  // namespace weblab::matchdiag
