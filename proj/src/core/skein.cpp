#include "skein.hpp"

#include <algorithm>
#include <cassert>

namespace weblab::skein {

using webgraph::PlaneWeb;
using webgraph::twin;

void WebCombo::add(int64_t index, int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms.find(index);
  if (it == terms.end()) {
    terms.emplace(index, coeff);
  } else {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
  }
}

WebCombo& WebCombo::operator+=(const WebCombo& o) {
  for (auto& [k, v] : o.terms) add(k, v);
  return *this;
}

WebCombo scaled(const WebCombo& c, int64_t k) {
  WebCombo out{c.kind, c.shape, {}};
  if (k == 0) return out;
  for (auto& [idx, v] : c.terms) out.terms.emplace(idx, checked_mul(v, k));
  return out;
}

PlaneWeb web_from_matching(const matchdiag::Matching& m, int points) {
  PlaneWeb w = PlaneWeb::with_boundary(Kind::SL2, points);
  for (const auto& arc : m.arcs) {
    auto e = w.alloc_edge(true);
    w.ring_insert_after(e.dart_u, arc.l, w.floor_east_dart(arc.l));
    w.ring_insert_after(e.dart_v, arc.r, w.floor_east_dart(arc.r));
  }
  w.validate();
  return w;
}

namespace {

// Crossing of an upper and a lower arc, with its exact x position.
struct Crossing {
  int upper, lower;
  int64_t num, den;  // x = num/den, den > 0
  bool lower_from_left;  // lower arc enters the upper arc's span from the left
  int sink = -1, source = -1;
  int dart_sink_vert = -1, dart_source_vert = -1;  // darts of the vertical edge
  int utail = -1, uhead = -1, ltail = -1, lhead = -1;
};

bool x_less(const Crossing& a, const Crossing& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

}  // namespace

PlaneWeb web_from_m_diagram(const matchdiag::MDiagram& m) {
  const std::string& word = m.word;
  int points = static_cast<int>(word.size());
  PlaneWeb w = PlaneWeb::with_boundary(Kind::SL3, points);

  // Middle-row points each get an absorbing vertex just above the axis.
  std::vector<int> mid_sink(points + 1, -1);
  std::vector<int> mid_upper_dart(points + 1, -1), mid_lower_dart(points + 1, -1),
      mid_boundary_dart(points + 1, -1);
  for (int z = 1; z <= points; ++z) {
    if (word[z - 1] != '0') continue;
    mid_sink[z] = w.add_internal_vertex();
    auto e = w.alloc_edge(true);  // axis point -> sink
    w.ring_insert_after(e.dart_u, z, w.floor_east_dart(z));
    mid_boundary_dart[z] = e.dart_v;
  }

  std::vector<Crossing> crossings;
  for (size_t ui = 0; ui < m.upper.arcs.size(); ++ui) {
    const auto& u = m.upper.arcs[ui];
    for (size_t li = 0; li < m.lower.arcs.size(); ++li) {
      const auto& l = m.lower.arcs[li];
      if (!matchdiag::arcs_cross(u, l)) continue;
      Crossing c;
      c.upper = static_cast<int>(ui);
      c.lower = static_cast<int>(li);
      c.num = static_cast<int64_t>(u.l) * u.r - static_cast<int64_t>(l.l) * l.r;
      c.den = (u.l + u.r) - (l.l + l.r);
      if (c.den < 0) {
        c.den = -c.den;
        c.num = -c.num;
      }
      c.lower_from_left = l.l < u.l;
      c.sink = w.add_internal_vertex();
      c.source = w.add_internal_vertex();
      auto v = w.alloc_edge(true);  // source -> sink
      c.dart_source_vert = v.dart_u;
      c.dart_sink_vert = v.dart_v;
      crossings.push_back(c);
    }
  }

  // Arcs become chains of edges through their crossings, oriented from the
  // outer-row endpoint towards the middle-row endpoint.
  auto walk = [&](const matchdiag::Arc& arc, bool is_upper, int arc_idx) {
    std::vector<int> on_arc;
    for (size_t ci = 0; ci < crossings.size(); ++ci)
      if ((is_upper ? crossings[ci].upper : crossings[ci].lower) == arc_idx)
        on_arc.push_back(static_cast<int>(ci));
    std::sort(on_arc.begin(), on_arc.end(), [&](int a, int b) {
      bool lt = x_less(crossings[a], crossings[b]);
      return is_upper ? lt : !lt;  // lower arcs run right to left
    });
    int start = is_upper ? arc.l : arc.r;  // '+' or '-' endpoint
    int end = is_upper ? arc.r : arc.l;    // '0' endpoint
    int from_vertex = start;
    int from_slot = -1;  // -1: attach at the boundary ring
    for (int ci : on_arc) {
      Crossing& c = crossings[ci];
      auto e = w.alloc_edge(true);
      if (from_slot < 0) w.ring_insert_after(e.dart_u, from_vertex, w.floor_east_dart(from_vertex));
      else (is_upper ? crossings[from_slot].uhead : crossings[from_slot].lhead) = e.dart_u;
      (is_upper ? c.utail : c.ltail) = e.dart_v;
      from_vertex = c.source;
      from_slot = ci;
    }
    auto e = w.alloc_edge(true);
    if (from_slot < 0) w.ring_insert_after(e.dart_u, from_vertex, w.floor_east_dart(from_vertex));
    else (is_upper ? crossings[from_slot].uhead : crossings[from_slot].lhead) = e.dart_u;
    (is_upper ? mid_upper_dart[end] : mid_lower_dart[end]) = e.dart_v;
  };
  for (size_t ui = 0; ui < m.upper.arcs.size(); ++ui)
    walk(m.upper.arcs[ui], true, static_cast<int>(ui));
  for (size_t li = 0; li < m.lower.arcs.size(); ++li)
    walk(m.lower.arcs[li], false, static_cast<int>(li));

  for (int z = 1; z <= points; ++z) {
    if (mid_sink[z] < 0) continue;
    w.ring_set(mid_sink[z], {mid_lower_dart[z], mid_upper_dart[z], mid_boundary_dart[z]});
  }
  for (Crossing& c : crossings) {
    // The source always feeds the vertical edge and the two onward strand
    // halves; the sink absorbs the incoming halves. Which vertex floats
    // above the other decides the cyclic order.
    if (c.lower_from_left) {
      // Both strands run upward here: sink below, source above.
      w.ring_set(c.sink, {c.dart_sink_vert, c.utail, c.ltail});
      w.ring_set(c.source, {c.uhead, c.lhead, c.dart_source_vert});
    } else {
      // Both strands run downward: sink above, source below.
      w.ring_set(c.sink, {c.ltail, c.utail, c.dart_sink_vert});
      w.ring_set(c.source, {c.dart_source_vert, c.lhead, c.uhead});
    }
  }
  // Edge darts at crossing sinks point along the strand (into the sink), so
  // their orientation flags are already correct from alloc_edge.
  w.validate();
  return w;
}

PlaneWeb basis_web(const Shape& shape, const tableaux::RowSeq& rows) {
  std::string word = tableaux::word_of(shape, rows);
  if (shape.rows == 2)
    return web_from_matching(matchdiag::matching_from_word(word, '+', '-'), shape.size());
  return web_from_m_diagram(matchdiag::m_diagram_of_word(word));
}

namespace {

// Joins the far ends of two legs whose corner vertices are being removed.
// Both legs being one edge means the strand closes into a circle.
void splice_legs(PlaneWeb& w, int leg_a, int leg_b) {
  if (leg_a / 2 == leg_b / 2) {
    w.delete_edge(leg_a / 2);
    ++w.free_loops;
    return;
  }
  int ta = twin(leg_a), tb = twin(leg_b);
  if (w.origin(ta) < 0 || w.origin(tb) < 0) fail(Err::Internal, "splice leg already detached");
  bool out_a = w.oriented_out(ta);
  if (w.kind == Kind::SL3 && out_a == w.oriented_out(tb))
    fail(Err::Internal, "splice would break the orientation discipline");
  auto ne = w.alloc_edge(out_a);
  w.ring_replace(ta, ne.dart_u);
  w.ring_replace(tb, ne.dart_v);
  w.delete_edge(leg_a / 2);
  w.delete_edge(leg_b / 2);
}

int third_dart(const PlaneWeb& w, int v, int d1, int d2) {
  int d = w.some_dart(v);
  for (int k = 0; k < 3; ++k, d = w.next_at_vertex(d))
    if (d != d1 && d != d2) return d;
  fail(Err::Internal, "no third dart at a trivalent vertex");
}

void apply_bigon(PlaneWeb& w, int face_dart_1) {
  int d1 = face_dart_1;
  int d2 = w.prev_at_vertex(twin(d1));
  int u = w.origin(d1), v = w.origin(d2);
  int leg_u = third_dart(w, u, d1, twin(d2));
  int leg_v = third_dart(w, v, d2, twin(d1));
  splice_legs(w, leg_u, leg_v);
  w.delete_edge(d1 / 2);
  w.delete_edge(d2 / 2);
  w.delete_vertex(u);
  w.delete_vertex(v);
}

void apply_square(PlaneWeb& w, int face_dart_0, bool second_resolution) {
  int d[4], g[4], corner[4];
  d[0] = face_dart_0;
  for (int k = 1; k < 4; ++k) d[k] = w.prev_at_vertex(twin(d[k - 1]));
  for (int k = 0; k < 4; ++k) {
    corner[k] = w.origin(d[k]);
    g[k] = third_dart(w, corner[k], d[k], twin(d[(k + 3) & 3]));
  }
  for (int k = 0; k < 4; ++k) {
    int far = w.origin(twin(g[k]));
    for (int j = 0; j < 4; ++j)
      if (far == corner[j] && g[k] / 2 != g[j] / 2)
        fail(Err::Internal, "square leg lands on another corner");
  }
  if (!second_resolution) {
    splice_legs(w, g[0], g[1]);
    splice_legs(w, g[2], g[3]);
  } else {
    splice_legs(w, g[1], g[2]);
    splice_legs(w, g[3], g[0]);
  }
  for (int k = 0; k < 4; ++k) w.delete_edge(d[k] / 2);
  for (int k = 0; k < 4; ++k) w.delete_vertex(corner[k]);
}

int64_t reduce_closed(PlaneWeb w, std::mt19937* rng);

std::vector<int> component_of(const PlaneWeb& w, int start, std::vector<uint8_t>& seen) {
  std::vector<int> verts, stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    verts.push_back(v);
    int d0 = w.some_dart(v);
    if (d0 < 0) continue;
    int d = d0;
    do {
      int u = w.origin(twin(d));
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
      d = w.next_at_vertex(d);
    } while (d != d0);
  }
  return verts;
}

// Copies the listed vertices (and their edges) into a fresh closed web and
// deletes them from `w`.
PlaneWeb carve_out(PlaneWeb& w, const std::vector<int>& verts) {
  PlaneWeb comp = PlaneWeb::closed(w.kind);
  std::vector<int> vmap(w.vertex_limit(), -1);
  for (int ov : verts) vmap[ov] = comp.add_internal_vertex();
  std::vector<int> emap(w.dart_limit() / 2, -1);
  for (int ov : verts) {
    int d0 = w.some_dart(ov);
    if (d0 < 0) continue;
    std::vector<int> ring;
    int dd = d0;
    do {
      int e = dd / 2;
      if (emap[e] < 0) emap[e] = comp.alloc_edge(w.oriented_out(2 * e)).edge;
      ring.push_back(2 * emap[e] + (dd & 1));
      dd = w.next_at_vertex(dd);
    } while (dd != d0);
    comp.ring_set(vmap[ov], ring);
  }
  for (int e = 0; e < static_cast<int>(emap.size()); ++e)
    if (emap[e] >= 0) w.delete_edge(e);
  for (int ov : verts) w.delete_vertex(ov);
  return comp;
}

// Splits off every connected component of `w` not touching the axis and
// reduces it to its scalar value.
int64_t extract_detached(PlaneWeb& w, std::mt19937* rng) {
  int64_t scalar = 1;
  std::vector<uint8_t> seen(w.vertex_limit(), 0);
  if (w.vertex_limit() > 0 && w.vertex_live(0)) component_of(w, 0, seen);
  for (int v = 0; v < static_cast<int>(seen.size()); ++v) {
    if (!w.vertex_live(v) || seen[v]) continue;
    auto verts = component_of(w, v, seen);
    scalar = checked_mul(scalar, reduce_closed(carve_out(w, verts), rng));
  }
  return scalar;
}

struct Site {
  int face_dart;
  bool square;
};

// First (or random) bigon, else first (or random) square, among faces not
// touching the axis.
bool find_site(const PlaneWeb& w, std::mt19937* rng, Site& out) {
  webgraph::Faces f = webgraph::trace_faces(w);
  std::vector<int> bigons, squares;
  for (int i = 0; i < f.nfaces; ++i) {
    if (f.on_floor[i]) continue;
    if (f.web_sides[i] == 2) bigons.push_back(f.first_dart[i]);
    else if (f.web_sides[i] == 4) squares.push_back(f.first_dart[i]);
  }
  auto pick = [&](std::vector<int>& v) {
    if (!rng) return v.front();
    return v[(*rng)() % v.size()];
  };
  if (!bigons.empty()) {
    out = {pick(bigons), false};
    return true;
  }
  if (!squares.empty()) {
    out = {pick(squares), true};
    return true;
  }
  return false;
}

int64_t circle_factor(Kind k) { return k == Kind::SL3 ? 3 : -2; }

int64_t reduce_closed(PlaneWeb w, std::mt19937* rng) {
  int64_t scalar = 1;
  while (w.free_loops > 0) {
    scalar = checked_mul(scalar, circle_factor(w.kind));
    --w.free_loops;
  }
  if (w.vertex_count() == 0) return scalar;
  if (w.kind == Kind::SL2) fail(Err::Internal, "closed sl2 piece with vertices");
  // Disjoint closed pieces multiply; peel them off until one remains.
  {
    std::vector<uint8_t> seen(w.vertex_limit(), 0);
    int seed = -1;
    for (int v = 0; v < w.vertex_limit(); ++v)
      if (w.vertex_live(v)) {
        seed = v;
        break;
      }
    component_of(w, seed, seen);
    for (int v = 0; v < w.vertex_limit(); ++v) {
      if (!w.vertex_live(v) || seen[v]) continue;
      auto verts = component_of(w, v, seen);
      scalar = checked_mul(scalar, reduce_closed(carve_out(w, verts), rng));
    }
  }
  Site site;
  if (!find_site(w, rng, site)) fail(Err::Internal, "closed web with no removable face");
  if (!site.square) {
    apply_bigon(w, site.face_dart);
    return checked_mul(scalar, checked_mul(-2, reduce_closed(std::move(w), rng)));
  }
  PlaneWeb other = w;
  apply_square(w, site.face_dart, false);
  // The copy shares dart ids, so the recorded face dart is valid in it too.
  apply_square(other, site.face_dart, true);
  return checked_mul(
      scalar, checked_add(reduce_closed(std::move(w), rng), reduce_closed(std::move(other), rng)));
}

}  // namespace

WebCombo reduce(PlaneWeb w0, const tableaux::Ranker& ranker, std::mt19937* rng) {
  WebCombo out{w0.kind, ranker.shape(), {}};
  struct Job {
    PlaneWeb w;
    int64_t coeff;
  };
  std::vector<Job> jobs;
  jobs.push_back({std::move(w0), 1});
  while (!jobs.empty()) {
    Job job = std::move(jobs.back());
    jobs.pop_back();
    PlaneWeb& w = job.w;
    while (w.free_loops > 0) {
      job.coeff = checked_mul(job.coeff, circle_factor(w.kind));
      --w.free_loops;
    }
    job.coeff = checked_mul(job.coeff, extract_detached(w, rng));
    while (w.free_loops > 0) {
      job.coeff = checked_mul(job.coeff, circle_factor(w.kind));
      --w.free_loops;
    }
    Site site;
    if (!find_site(w, rng, site)) {
      std::string word = webgraph::boundary_word_of_web(w);
      out.add(ranker.rank_word(word), job.coeff);
      continue;
    }
    int before = w.vertex_count();
    if (!site.square) {
      apply_bigon(w, site.face_dart);
      if (w.vertex_count() >= before) fail(Err::Internal, "rewrite failed to shrink the web");
      w.validate();
      jobs.push_back({std::move(w), checked_mul(job.coeff, -2)});
    } else {
      PlaneWeb other = w;
      apply_square(w, site.face_dart, false);
      apply_square(other, site.face_dart, true);
      if (w.vertex_count() >= before) fail(Err::Internal, "rewrite failed to shrink the web");
      w.validate();
      other.validate();
      jobs.push_back({std::move(w), job.coeff});
      jobs.push_back({std::move(other), job.coeff});
    }
  }
  return out;
}

void insert_smoothing(PlaneWeb& w, int i) {
  if (i < 1 || i >= w.m) fail(Err::InvalidArgument, "transposition position out of range");
  int di = w.boundary_dart(i), dj = w.boundary_dart(i + 1);
  if (di < 0 || dj < 0) fail(Err::InvalidArgument, "boundary vertex has no strand");
  int ei = di / 2, ej = dj / 2;
  if (w.kind == Kind::SL2) {
    if (ei == ej) {
      auto cap = w.alloc_edge(true);
      w.ring_replace(di, cap.dart_u);
      w.ring_replace(dj, cap.dart_v);
      w.delete_edge(ei);
      ++w.free_loops;
      return;
    }
    int fx = twin(di), fy = twin(dj);
    auto cap = w.alloc_edge(true);
    w.ring_replace(di, cap.dart_u);
    w.ring_replace(dj, cap.dart_v);
    auto cup = w.alloc_edge(true);
    w.ring_replace(fx, cup.dart_u);
    w.ring_replace(fy, cup.dart_v);
    w.delete_edge(ei);
    w.delete_edge(ej);
    return;
  }
  if (ei == ej) fail(Err::Internal, "strand joins two outward boundary points");
  if (!w.oriented_out(di) || !w.oriented_out(dj))
    fail(Err::InvalidArgument, "boundary strands must leave the axis");
  int fx = twin(di), fy = twin(dj);
  int sink = w.add_internal_vertex();
  int source = w.add_internal_vertex();
  auto e1 = w.alloc_edge(true);  // i -> sink
  auto e2 = w.alloc_edge(true);  // i+1 -> sink
  auto e3 = w.alloc_edge(true);  // source -> sink
  auto e4 = w.alloc_edge(true);  // source -> old strand of i
  auto e5 = w.alloc_edge(true);  // source -> old strand of i+1
  w.ring_replace(di, e1.dart_u);
  w.ring_replace(dj, e2.dart_u);
  w.ring_replace(fx, e4.dart_v);
  w.ring_replace(fy, e5.dart_v);
  w.ring_set(sink, {e3.dart_v, e1.dart_v, e2.dart_v});
  w.ring_set(source, {e5.dart_u, e4.dart_u, e3.dart_u});
  w.delete_edge(ei);
  w.delete_edge(ej);
}

WebCombo s_action(const Shape& shape, int i, int64_t index, const tableaux::Ranker& ranker,
                  std::mt19937* rng) {
  PlaneWeb w = basis_web(shape, ranker.unrank(index));
  insert_smoothing(w, i);
  w.validate();
  WebCombo combo = reduce(std::move(w), ranker, rng);
  combo.kind = shape.kind();
  combo.shape = shape;
  combo.add(index, 1);
  return combo;
}

WebCombo s_action_combo(const Shape& shape, int i, const WebCombo& combo,
                        const tableaux::Ranker& ranker) {
  WebCombo out{combo.kind, combo.shape, {}};
  for (auto& [idx, coeff] : combo.terms) out += scaled(s_action(shape, i, idx, ranker), coeff);
  return out;
}

}  // namespace weblab::skein
