#include "webgraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace weblab::webgraph {

PlaneWeb PlaneWeb::with_boundary(Kind kind, int m) {
  PlaneWeb w;
  w.kind = kind;
  w.m = m;
  w.vtype_.assign(m + 2, kBoundary);
  w.vtype_[0] = w.vtype_[m + 1] = kVirtual;
  w.vdart_.assign(m + 2, -1);
  w.live_vertices_ = m + 2;
  // Floor edges k = 0..m join axis vertices k and k+1; east dart 2k sits at k.
  int ndarts = 2 * (m + 1);
  w.origin_.resize(ndarts);
  w.next_.resize(ndarts);
  w.prev_.resize(ndarts);
  w.floor_.assign(ndarts, 1);
  w.out_.assign(ndarts, 0);
  for (int k = 0; k <= m; ++k) {
    w.origin_[2 * k] = k;
    w.origin_[2 * k + 1] = k + 1;
  }
  // Initial rings: virtual ends have one dart, boundary vertices the two
  // floor darts (east first, then west; the web dart lands between them).
  auto link = [&](const std::vector<int>& ring) {
    int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) {
      w.next_[ring[i]] = ring[(i + 1) % n];
      w.prev_[ring[i]] = ring[(i + n - 1) % n];
    }
    w.vdart_[w.origin_[ring[0]]] = ring[0];
  };
  link({w.floor_east_dart(0)});
  for (int v = 1; v <= m; ++v) link({2 * v /*east*/, 2 * (v - 1) + 1 /*west*/});
  link({2 * m + 1});
  return w;
}

PlaneWeb PlaneWeb::closed(Kind kind) {
  PlaneWeb w;
  w.kind = kind;
  w.m = 0;
  // No axis: closed diagrams start with no vertices at all. Note with m == 0
  // with_boundary would still create the two virtual ends; closed() does not.
  return w;
}

int PlaneWeb::internal_count() const {
  int n = 0;
  for (int8_t t : vtype_)
    if (t == kInternal) ++n;
  return n;
}

int PlaneWeb::add_internal_vertex() {
  vtype_.push_back(kInternal);
  vdart_.push_back(-1);
  ++live_vertices_;
  return static_cast<int>(vtype_.size()) - 1;
}

int PlaneWeb::alloc_edge_slot() {
  if (!free_edges_.empty()) {
    int e = free_edges_.back();
    free_edges_.pop_back();
    return e;
  }
  int e = static_cast<int>(origin_.size()) / 2;
  origin_.resize(origin_.size() + 2, -1);
  next_.resize(origin_.size(), -1);
  prev_.resize(origin_.size(), -1);
  floor_.resize(origin_.size(), 0);
  out_.resize(origin_.size(), 0);
  return e;
}

PlaneWeb::NewEdge PlaneWeb::alloc_edge(bool out_of_u) {
  int e = alloc_edge_slot();
  int du = 2 * e, dv = 2 * e + 1;
  origin_[du] = origin_[dv] = -2;  // allocated, unattached
  next_[du] = prev_[du] = next_[dv] = prev_[dv] = -1;
  floor_[du] = floor_[dv] = 0;
  out_[du] = out_of_u ? 1 : 0;
  out_[dv] = out_of_u ? 0 : 1;
  ++live_web_edges_;
  return {e, du, dv};
}

void PlaneWeb::ring_set(int vertex, const std::vector<int>& darts_ccw) {
  if (darts_ccw.empty()) {
    vdart_[vertex] = -1;
    return;
  }
  int n = static_cast<int>(darts_ccw.size());
  for (int i = 0; i < n; ++i) {
    int d = darts_ccw[i];
    origin_[d] = vertex;
    next_[d] = darts_ccw[(i + 1) % n];
    prev_[d] = darts_ccw[(i + n - 1) % n];
  }
  vdart_[vertex] = darts_ccw[0];
}

void PlaneWeb::ring_attach_only(int dart, int vertex) {
  origin_[dart] = vertex;
  next_[dart] = prev_[dart] = dart;
  vdart_[vertex] = dart;
}

void PlaneWeb::ring_insert_after(int dart, int vertex, int after) {
  origin_[dart] = vertex;
  int nxt = next_[after];
  next_[after] = dart;
  prev_[dart] = after;
  next_[dart] = nxt;
  prev_[nxt] = dart;
}

void PlaneWeb::ring_replace(int old_dart, int new_dart) {
  int v = origin_[old_dart];
  if (next_[old_dart] == old_dart) {
    ring_attach_only(new_dart, v);
  } else {
    origin_[new_dart] = v;
    next_[new_dart] = next_[old_dart];
    prev_[new_dart] = prev_[old_dart];
    next_[prev_[old_dart]] = new_dart;
    prev_[next_[old_dart]] = new_dart;
    if (vdart_[v] == old_dart) vdart_[v] = new_dart;
  }
  origin_[old_dart] = -2;
}

void PlaneWeb::ring_remove(int dart) {
  int v = origin_[dart];
  if (next_[dart] == dart) {
    vdart_[v] = -1;
  } else {
    next_[prev_[dart]] = next_[dart];
    prev_[next_[dart]] = prev_[dart];
    if (vdart_[v] == dart) vdart_[v] = next_[dart];
  }
  origin_[dart] = -2;
}

void PlaneWeb::delete_edge(int edge) {
  int du = 2 * edge, dv = 2 * edge + 1;
  if (origin_[du] >= 0) ring_remove(du);
  if (origin_[dv] >= 0) ring_remove(dv);
  origin_[du] = origin_[dv] = -1;
  free_edges_.push_back(edge);
  --live_web_edges_;
}

void PlaneWeb::delete_vertex(int vertex) {
  if (vdart_[vertex] != -1) fail(Err::Internal, "deleting vertex with live darts");
  vtype_[vertex] = -1;
  --live_vertices_;
}

int PlaneWeb::degree(int v) const {
  int d0 = vdart_[v];
  if (d0 < 0) return 0;
  int n = 0, d = d0;
  do {
    ++n;
    d = next_[d];
  } while (d != d0);
  return n;
}

int PlaneWeb::boundary_dart(int v) const {
  int d0 = vdart_[v];
  if (d0 < 0) return -1;
  int d = d0;
  do {
    if (!floor_[d]) return d;
    d = next_[d];
  } while (d != d0);
  return -1;
}

void PlaneWeb::validate() const {
  int live_darts = 0;
  for (int d = 0; d < dart_limit(); ++d) {
    if (origin_[d] == -2) fail(Err::InvalidEmbedding, "unattached dart left behind");
    if (origin_[d] < 0) continue;
    ++live_darts;
    if (origin_[twin(d)] < 0) fail(Err::InvalidEmbedding, "half-deleted edge");
    if (next_[prev_[d]] != d || prev_[next_[d]] != d)
      fail(Err::InvalidEmbedding, "rotation links broken");
    if (origin_[next_[d]] != origin_[d]) fail(Err::InvalidEmbedding, "ring spans vertices");
  }
  int live_verts = 0;
  for (int v = 0; v < vertex_limit(); ++v) {
    if (vtype_[v] < 0) continue;
    ++live_verts;
    int deg = degree(v);
    if (vtype_[v] == kBoundary) {
      int web = 0, d0 = vdart_[v], d = d0;
      do {
        if (!floor_[d]) ++web;
        d = next_[d];
      } while (d != d0);
      if (web > 1) fail(Err::InvalidEmbedding, "boundary vertex of web degree > 1");
    } else if (vtype_[v] == kInternal) {
      if (deg != 3) fail(Err::InvalidEmbedding, "internal vertex not trivalent");
      if (kind == Kind::SL3) {
        int d0 = vdart_[v], d = d0;
        int outs = 0;
        do {
          outs += out_[d] ? 1 : 0;
          d = next_[d];
        } while (d != d0);
        if (outs != 0 && outs != 3)
          fail(Err::InvalidEmbedding, "internal vertex neither source nor sink");
      }
    }
  }
  if (live_verts != live_vertices_) fail(Err::InvalidEmbedding, "vertex count drifted");
  // Euler characteristic of the closure (only meaningful when connected,
  // which holds because detached pieces are extracted eagerly).
  if (live_verts > 0) {
    Faces f = trace_faces(*this);
    int e = live_darts / 2;
    if (live_verts - e + f.nfaces != 2)
      fail(Err::InvalidEmbedding, "Euler count violated; rotations are inconsistent");
  }
}

Faces trace_faces(const PlaneWeb& w) {
  Faces f;
  f.face_of.assign(w.dart_limit(), -1);
  for (int d0 = 0; d0 < w.dart_limit(); ++d0) {
    if (!w.dart_live(d0) || f.face_of[d0] >= 0) continue;
    int id = f.nfaces++;
    f.web_sides.push_back(0);
    f.on_floor.push_back(0);
    f.first_dart.push_back(d0);
    int d = d0;
    do {
      f.face_of[d] = id;
      if (w.is_floor(d)) f.on_floor[id] = 1;
      else ++f.web_sides[id];
      d = w.prev_at_vertex(twin(d));  // face kept on the left
    } while (d != d0);
  }
  if (w.dart_limit() > 0 && w.dart_live(0) && w.is_floor(0))
    f.unbounded = f.face_of[w.floor_east_dart(0)];
  return f;
}

void compute_depths(const PlaneWeb& w, Faces& f) {
  f.depth.assign(f.nfaces, -1);
  if (f.unbounded < 0) fail(Err::Internal, "depths need the axis");
  std::vector<std::vector<int>> adj(f.nfaces);
  for (int d = 0; d < w.dart_limit(); d += 2) {
    if (!w.dart_live(d) || w.is_floor(d)) continue;
    int a = f.face_of[d], b = f.face_of[twin(d)];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::deque<int> queue;
  f.depth[f.unbounded] = 0;
  queue.push_back(f.unbounded);
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b : adj[a]) {
      if (f.depth[b] < 0) {
        f.depth[b] = f.depth[a] + 1;
        queue.push_back(b);
      }
    }
  }
  for (int i = 0; i < f.nfaces; ++i)
    if (f.depth[i] < 0) fail(Err::InvalidEmbedding, "face unreachable in the dual");
}

FaceDecomposition faces(const PlaneWeb& w) {
  FaceDecomposition f;
  static_cast<Faces&>(f) = trace_faces(w);
  compute_depths(w, f);
  return f;
}

matchdiag::DepthProfile boundary_profile(const PlaneWeb& w, const Faces& f) {
  matchdiag::DepthProfile p;
  p.depths.resize(w.m + 1);
  for (int k = 0; k <= w.m; ++k) p.depths[k] = f.depth[f.face_of[w.floor_east_dart(k)]];
  return p;
}

std::string boundary_word_of_web(const PlaneWeb& w, const Faces& f) {
  auto p = boundary_profile(w, f);
  return matchdiag::word_of_profile(p);
}

matchdiag::DepthProfile boundary_profile(const PlaneWeb& w) {
  auto f = faces(w);
  return boundary_profile(w, f);
}

std::string boundary_word_of_web(const PlaneWeb& w) {
  auto f = faces(w);
  return boundary_word_of_web(w, f);
}

matchdiag::BandDiagram band_arcs(const PlaneWeb& w, const Faces& f) {
  matchdiag::BandDiagram band;
  std::vector<uint8_t> is_band(w.dart_limit(), 0);
  for (int d = 0; d < w.dart_limit(); d += 2) {
    if (!w.dart_live(d) || w.is_floor(d)) continue;
    int da = f.depth[f.face_of[d]], db = f.depth[f.face_of[twin(d)]];
    if (std::abs(da - db) > 1) fail(Err::InvalidEmbedding, "adjacent face depths differ by > 1");
    if (da != db) is_band[d] = is_band[twin(d)] = 1;
  }
  // Band edges touch each vertex 0 or 2 times (1 at a boundary endpoint).
  std::vector<int> band_deg(w.vertex_limit(), 0);
  for (int d = 0; d < w.dart_limit(); ++d)
    if (w.dart_live(d) && is_band[d]) ++band_deg[w.origin(d)];
  for (int v = 0; v < w.vertex_limit(); ++v) {
    if (!w.vertex_live(v)) continue;
    if (w.vertex_type(v) == PlaneWeb::kInternal && band_deg[v] != 0 && band_deg[v] != 2)
      fail(Err::NotManifold, "band meets a vertex an odd number of times");
  }
  std::vector<uint8_t> used(w.dart_limit(), 0);
  auto walk = [&](int start_dart) {
    // Follow band darts until hitting a boundary vertex; returns it.
    int d = start_dart;
    while (true) {
      used[d] = used[twin(d)] = 1;
      int v = w.head(d);
      if (w.vertex_type(v) != PlaneWeb::kInternal) return v;
      int dn = w.some_dart(v), chosen = -1;
      int d0 = dn;
      do {
        if (is_band[dn] && !used[dn] && dn != twin(d)) chosen = dn;
        dn = w.next_at_vertex(dn);
      } while (dn != d0);
      if (chosen < 0) return -1;  // closed back on itself
      d = chosen;
    }
  };
  for (int v = 1; v <= w.m; ++v) {
    int d = w.boundary_dart(v);
    if (d < 0 || !is_band[d] || used[d]) continue;
    int other = walk(d);
    if (other < 0) fail(Err::NotManifold, "band path returned to its interior");
    band.arcs.arcs.push_back({std::min(v, other), std::max(v, other)});
  }
  for (int d = 0; d < w.dart_limit(); d += 2) {
    if (!w.dart_live(d) || !is_band[d] || used[d]) continue;
    // Remaining band component: a closed loop.
    int cur = d;
    while (!used[cur]) {
      used[cur] = used[twin(cur)] = 1;
      int v = w.head(cur);
      int dn = w.some_dart(v), d0 = dn, chosen = -1;
      do {
        if (is_band[dn] && dn != twin(cur) && !used[dn]) chosen = dn;
        dn = w.next_at_vertex(dn);
      } while (dn != d0);
      if (chosen < 0) break;
      cur = chosen;
    }
    ++band.closed_loops;
  }
  std::sort(band.arcs.arcs.begin(), band.arcs.arcs.end());
  return band;
}

matchdiag::BandDiagram band_arcs(const PlaneWeb& w) {
  auto f = faces(w);
  return band_arcs(w, f);
}

bool is_reduced(const PlaneWeb& w, const Faces& f) {
  if (w.free_loops > 0) return false;
  if (w.kind == Kind::SL2) return true;  // matchings carry no internal faces
  for (int i = 0; i < f.nfaces; ++i)
    if (!f.on_floor[i] && f.web_sides[i] < 6) return false;
  return true;
}

bool is_reduced(const PlaneWeb& w) {
  auto f = trace_faces(w);
  return is_reduced(w, f);
}

PlaneWeb from_drawing(Kind kind, int m, const std::vector<std::pair<double, double>>& internal_coords,
                      std::vector<DrawnEdge> edges) {
  PlaneWeb w = PlaneWeb::with_boundary(kind, m);
  std::vector<int> vid(m + 1 + internal_coords.size() + 1, -1);
  for (int i = 1; i <= m; ++i) vid[i] = i;
  for (size_t i = 0; i < internal_coords.size(); ++i) vid[m + 1 + i] = w.add_internal_vertex();

  auto coord = [&](int drawn) -> std::pair<double, double> {
    if (drawn <= m) return {static_cast<double>(drawn), 0.0};
    return internal_coords[drawn - m - 1];
  };

  struct Slot {
    double angle;
    int dart;
  };
  std::vector<std::vector<Slot>> rings(vid.size());
  for (const DrawnEdge& e : edges) {
    auto ne = w.alloc_edge(e.out_of_u);
    auto [ux, uy] = coord(e.u);
    auto [vx, vy] = coord(e.v);
    double aux = e.has_via ? e.via_u_x : vx, auy = e.has_via ? e.via_u_y : vy;
    double avx = e.has_via ? e.via_v_x : ux, avy = e.has_via ? e.via_v_y : uy;
    rings[e.u].push_back({std::atan2(auy - uy, aux - ux), ne.dart_u});
    rings[e.v].push_back({std::atan2(avy - vy, avx - vx), ne.dart_v});
  }
  for (size_t dv = 1; dv < rings.size(); ++dv) {
    if (rings[dv].empty()) continue;
    std::sort(rings[dv].begin(), rings[dv].end(),
              [](const Slot& a, const Slot& b) { return a.angle < b.angle; });
    if (static_cast<int>(dv) <= m) {
      if (rings[dv].size() != 1) fail(Err::InvalidEmbedding, "boundary vertex drawn with degree != 1");
      // Place between the east and west floor darts.
      int east = 2 * static_cast<int>(dv);
      w.ring_insert_after(rings[dv][0].dart, vid[dv], east);
    } else {
      std::vector<int> order;
      for (const Slot& s : rings[dv]) order.push_back(s.dart);
      w.ring_set(vid[dv], order);
    }
  }
  w.validate();
  return w;
}

}  // namespace weblab::webgraph
