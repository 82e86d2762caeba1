#pragma once

#include <string>
#include <vector>

#include "common.hpp"
#include "matchdiag.hpp"

namespace weblab::webgraph {

// Dart-based embedded multigraph in the closed upper half-plane.
//
// Vertices 0 and m+1 are virtual endpoints of the axis; 1..m are the boundary
// vertices; internal vertices follow. "Floor" edges join consecutive axis
// vertices. They make the structure connected, give the unbounded face a
// boundary, and are never crossable when measuring depth. Edge e owns darts
// 2e and 2e+1 (twins); rotations are counterclockwise. A web with m == 0 is a
// closed diagram with no axis at all (used while reducing detached pieces).
//

inline int twin(int dart) { return dart ^ 1; }

class PlaneWeb {
 public:
  static constexpr int kVirtual = 0, kBoundary = 1, kInternal = 2;

  PlaneWeb() = default;
  static PlaneWeb with_boundary(Kind kind, int m);
  static PlaneWeb closed(Kind kind);

  Kind kind = Kind::SL2;
  int m = 0;
  int free_loops = 0;

  int vertex_count() const { return live_vertices_; }
  int web_edge_count() const { return live_web_edges_; }
  int internal_count() const;

  int add_internal_vertex();

  // Allocates a web edge; darts are returned but not yet placed in any
  // rotation. `out_of_u` records the orientation at the first dart.
  struct NewEdge {
    int edge, dart_u, dart_v;
  };
  NewEdge alloc_edge(bool out_of_u);

  // Rotation surgery.
  void ring_set(int vertex, const std::vector<int>& darts_ccw);  // build mode
  void ring_attach_only(int dart, int vertex);
  void ring_insert_after(int dart, int vertex, int after);
  void ring_replace(int old_dart, int new_dart);  // same vertex, same slot
  void ring_remove(int dart);

  void delete_edge(int edge);
  void delete_vertex(int vertex);  // ring must be empty

  bool dart_live(int d) const { return d >= 0 && d < static_cast<int>(origin_.size()) && origin_[d] >= 0; }
  int origin(int d) const { return origin_[d]; }
  int head(int d) const { return origin_[twin(d)]; }
  int next_at_vertex(int d) const { return next_[d]; }
  int prev_at_vertex(int d) const { return prev_[d]; }
  bool is_floor(int d) const { return floor_[d] != 0; }
  bool oriented_out(int d) const { return out_[d] != 0; }
  void set_oriented_out(int d, bool v) { out_[d] = v ? 1 : 0; }
  int vertex_type(int v) const { return vtype_[v]; }
  bool vertex_live(int v) const { return v >= 0 && v < static_cast<int>(vtype_.size()) && vtype_[v] >= 0; }
  int some_dart(int v) const { return vdart_[v]; }
  int degree(int v) const;

  int dart_limit() const { return static_cast<int>(origin_.size()); }
  int vertex_limit() const { return static_cast<int>(vtype_.size()); }
  int floor_east_dart(int k) const { return 2 * k; }  // floor edge k = (k, k+1)

  // The unique web dart at a boundary vertex, -1 if none.
  int boundary_dart(int boundary_vertex) const;

  // Structural checks: ring integrity, degrees, orientation discipline,
  // Euler count (V - E + F == 2 for the connected closure). Throws
  // InvalidEmbedding on failure.
  void validate() const;

 private:
  std::vector<int8_t> vtype_;  // -1 deleted
  std::vector<int> vdart_;
  std::vector<int> origin_;  // -1 deleted
  std::vector<int> next_, prev_;
  std::vector<uint8_t> floor_, out_;
  std::vector<int> free_edges_;
  int live_vertices_ = 0;
  int live_web_edges_ = 0;

  int alloc_edge_slot();
  friend struct Faces;
};

struct Faces {
  int nfaces = 0;
  std::vector<int> face_of;         // per dart, -1 for dead darts
  std::vector<int> web_sides;       // number of web darts on each face
  std::vector<uint8_t> on_floor;    // face touches a floor edge
  std::vector<int> first_dart;      // representative per face
  std::vector<int> depth;           // filled by compute_depths
  int unbounded = -1;

  int face_at(int dart) const { return face_of[dart]; }
};

Faces trace_faces(const PlaneWeb& w);
void compute_depths(const PlaneWeb& w, Faces& f);  // BFS in the dual, floor uncrossable

struct FaceDecomposition : Faces {};
FaceDecomposition faces(const PlaneWeb& w);        // trace + depths

matchdiag::DepthProfile boundary_profile(const PlaneWeb& w, const Faces& f);
std::string boundary_word_of_web(const PlaneWeb& w, const Faces& f);
matchdiag::DepthProfile boundary_profile(const PlaneWeb& w);
std::string boundary_word_of_web(const PlaneWeb& w);

// Edges separating faces whose depths differ by one, grouped into anchored
// arcs and closed loops. Throws NotManifold if any vertex meets an odd number
// of band edges.
matchdiag::BandDiagram band_arcs(const PlaneWeb& w, const Faces& f);
matchdiag::BandDiagram band_arcs(const PlaneWeb& w);

bool is_reduced(const PlaneWeb& w, const Faces& f);
bool is_reduced(const PlaneWeb& w);

// Constructs a web from a drawing: explicit coordinates for internal
// vertices, straight or via-point edges; rotations are recovered from angles.
struct DrawnEdge {
  int u, v;          // 1..m boundary, or m+1.. internal ids mapped by caller
  bool out_of_u;     // orientation (ignored for SL2)
  double via_u_x = 0, via_u_y = 0;  // optional bend control near u
  double via_v_x = 0, via_v_y = 0;  // optional bend control near v
  bool has_via = false;
};

PlaneWeb from_drawing(Kind kind, int m, const std::vector<std::pair<double, double>>& internal_coords,
                      std::vector<DrawnEdge> edges);

}  // namespace weblab::webgraph
