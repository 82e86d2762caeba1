#pragma once

#include <map>
#include <random>
#include <string>

#include "common.hpp"
#include "matchdiag.hpp"
#include "tableaux.hpp"
#include "webgraph.hpp"

namespace weblab::skein {

// Formal integer combination of reduced webs keyed by tableau index.
struct WebCombo {
  Kind kind = Kind::SL2;
  Shape shape;
  std::map<int64_t, int64_t> terms;

  void add(int64_t index, int64_t coeff);
  WebCombo& operator+=(const WebCombo& o);
  bool operator==(const WebCombo& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

WebCombo scaled(const WebCombo& c, int64_t k);

// Reduced web of a two-row word: arcs become plain edges.
webgraph::PlaneWeb web_from_matching(const matchdiag::Matching& m, int points);

// Oriented web of a three-row word via its arc diagram: crossings become a
// source over a sink joined by a vertical edge; each middle-row point feeds a
// sink that absorbs both of its arcs.
webgraph::PlaneWeb web_from_m_diagram(const matchdiag::MDiagram& m);

// Basis web of a tableau (either kind).
webgraph::PlaneWeb basis_web(const Shape& shape, const tableaux::RowSeq& rows);

// Rewrites any web to its expansion over reduced webs. Deterministic site
// order by default; pass an RNG to randomise site selection (the result must
// not change — that is what the confluence tests check).
WebCombo reduce(webgraph::PlaneWeb w, const tableaux::Ranker& ranker, std::mt19937* rng = nullptr);

// Appends the two-term smoothing at boundary positions i, i+1 in place.
// The first term of the action is the untouched web; this builds the other.
void insert_smoothing(webgraph::PlaneWeb& w, int i);

WebCombo s_action(const Shape& shape, int i, int64_t index, const tableaux::Ranker& ranker,
                  std::mt19937* rng = nullptr);

WebCombo s_action_combo(const Shape& shape, int i, const WebCombo& combo,
                        const tableaux::Ranker& ranker);

}  // namespace weblab::skein
