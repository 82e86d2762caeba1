#include "matchdiag.hpp"

#include <algorithm>

namespace weblab::matchdiag {

Matching matching_from_word(const std::string& word, char left, char right) {
  Matching m;
  std::vector<int> open;
  for (int pos = 1; pos <= static_cast<int>(word.size()); ++pos) {
    char s = word[pos - 1];
    if (s == left) {
      open.push_back(pos);
    } else if (s == right) {
      if (open.empty())
        fail(Err::YamanouchiViolation,
             std::string("no open '") + left + "' for '" + right + "' at position " +
                 std::to_string(pos));
      m.arcs.push_back({open.back(), pos});
      open.pop_back();
    }
  }
  if (!open.empty())
    fail(Err::Unbalanced, std::string("unmatched '") + left + "' symbols remain");
  std::sort(m.arcs.begin(), m.arcs.end());
  return m;
}

MDiagram m_diagram_of_word(const std::string& word) {
  MDiagram m;
  m.word = word;
  m.upper = matching_from_word(word, '+', '0');
  m.lower = matching_from_word(word, '0', '-');
  return m;
}

bool arcs_cross(const Arc& a, const Arc& b) {
  return (a.l < b.l && b.l < a.r && a.r < b.r) || (b.l < a.l && a.l < b.r && b.r < a.r);
}

bool arc_contains(const Arc& outer, const Arc& inner) {
  return outer.l < inner.l && inner.r < outer.r;
}

int crossing_number(const MDiagram& m) {
  int c = 0;
  for (const Arc& u : m.upper.arcs)
    for (const Arc& l : m.lower.arcs)
      if (arcs_cross(u, l)) ++c;
  return c;
}

int nesting_number(const std::vector<Arc>& arcs) {
  int n = 0;
  for (const Arc& a : arcs)
    for (const Arc& b : arcs)
      if (arc_contains(b, a) && !arcs_cross(a, b)) ++n;
  return n;
}

int nesting_number(const Matching& m) { return nesting_number(m.arcs); }

int nesting_number(const MDiagram& m) {
  std::vector<Arc> all = m.upper.arcs;
  all.insert(all.end(), m.lower.arcs.begin(), m.lower.arcs.end());
  return nesting_number(all);
}

DepthProfile depth_profile(const std::string& word) {
  DepthProfile p;
  p.depths.resize(word.size() + 1);
  p.depths[0] = 0;
  for (size_t k = 0; k < word.size(); ++k) {
    int step = word[k] == '+' ? 1 : word[k] == '-' ? -1 : 0;
    p.depths[k + 1] = p.depths[k] + step;
    if (p.depths[k + 1] < 0)
      fail(Err::YamanouchiViolation, "word not (+-)-Yamanouchi");
  }
  if (p.depths.back() != 0) fail(Err::Unbalanced, "word not (+-)-balanced");
  return p;
}

std::string word_of_profile(const DepthProfile& p) {
  std::string w;
  for (size_t k = 1; k < p.depths.size(); ++k) {
    int d = p.depths[k] - p.depths[k - 1];
    w += d > 0 ? '+' : d < 0 ? '-' : '0';
  }
  return w;
}

int64_t DepthProfile::weight() const {
  int64_t s = 0;
  for (int d : depths) s += d;
  return s;
}

bool profile_leq(const DepthProfile& a, const DepthProfile& b) {
  if (a.depths.size() != b.depths.size()) fail(Err::InvalidArgument, "profile sizes differ");
  for (size_t k = 0; k < a.depths.size(); ++k)
    if (a.depths[k] > b.depths[k]) return false;
  return true;
}

bool profile_lt(const DepthProfile& a, const DepthProfile& b) {
  return profile_leq(a, b) && a.depths != b.depths;
}

BandDiagram band_from_word(const std::string& word) {
  BandDiagram b;
  b.arcs = matching_from_word(word, '+', '-');
  return b;
}

Shadow shadow_from_profile(const DepthProfile& p) {
  Shadow s;
  int maxd = *std::max_element(p.depths.begin(), p.depths.end());
  s.levels.resize(maxd);
  for (int d = 1; d <= maxd; ++d) {
    auto& level = s.levels[d - 1];
    int start = -1;
    // depths[k] is the depth on the open interval (k, k+1).
    for (int k = 0; k < p.size(); ++k) {
      bool in = k < p.size() - 1 && p.depths[k] >= d;
      if (in && start < 0) start = k;
      if (!in && start >= 0) {
        level.push_back({start, k});
        start = -1;
      }
    }
  }
  return s;
}

int dot_depth(const BandDiagram& b, const std::string& word) {
  std::vector<char> endpoint(word.size() + 1, 0);
  for (const Arc& a : b.arcs.arcs) endpoint[a.l] = endpoint[a.r] = 1;
  int total = 0;
  for (int i = 1; i <= static_cast<int>(word.size()); ++i) {
    if (endpoint[i]) continue;
    for (const Arc& a : b.arcs.arcs)
      if (a.l < i && i < a.r) ++total;
  }
  return total;
}

int rank_formula_m(const MDiagram& m) { return nesting_number(m) + crossing_number(m); }

int rank_formula_band(const BandDiagram& b, const std::string& word) {
  return nesting_number(b.arcs) + dot_depth(b, word) - static_cast<int>(b.arcs.arcs.size());
}

}  // namespace weblab::matchdiag
