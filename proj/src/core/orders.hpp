#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "context.hpp"

namespace weblab::orders {

enum class OrderKind { Tableau, Shadow };

// Queryable partial order on the reduced webs of one shape. The tableau
// order answers through reachability in the covering digraph (cached
// transitive closure for small shapes, bounded search beyond); the shadow
// order compares depth profiles pointwise.
class OrderRelation {
 public:
  OrderRelation(Context& ctx, OrderKind kind);

  OrderKind order_kind() const { return kind_; }
  const Shape& shape() const { return shape_; }
  int64_t size() const { return n_; }

  bool leq(int64_t a, int64_t b) const;
  bool lt(int64_t a, int64_t b) const { return a != b && leq(a, b); }

  // Covering edges (as pairs), for Hasse output and refinement checks.
  std::vector<std::pair<int64_t, int64_t>> hasse_edges() const;

 private:
  Context& ctx_;
  OrderKind kind_;
  Shape shape_;
  int64_t n_;
  std::vector<matchdiag::DepthProfile> profiles_;               // shadow
  std::vector<std::vector<uint64_t>> closure_;                  // tableau, small shapes
  const tableaux::TableauPoset* poset_ = nullptr;
  bool closure_built_ = false;

  bool reach_search(int64_t a, int64_t b) const;
};

struct Extension {
  std::vector<int64_t> order;  // position -> tableau index
  std::vector<int64_t> pos;    // tableau index -> position
};

// Deterministic completion: Kahn's algorithm, preferring lower breadth-first
// rank then lower index among available elements. (A plain rank-major sort
// is not a valid completion of the shadow order once rank inversions exist.)
Extension linear_extension(Context& ctx, const OrderRelation& rel);

struct Report {
  std::string check;
  Shape shape;
  bool passed = false;
  std::vector<std::string> witnesses;
  std::map<std::string, int64_t> stats;
};

// Exhaustive comparison of the two orders: the transposition order implies
// shadow containment, covering pairs stay covering (nothing strictly
// between), and for two-row shapes the orders coincide.
Report refinement_check(Context& ctx);

struct ScanWitness {
  int64_t dominated = 0, dominating = 0;
  int rank_dominated = 0, rank_dominating = 0;
  int cross_dominated = 0, cross_dominating = 0;
};

struct ScanResult {
  int n = 0;
  int64_t webs = 0;
  int64_t pairs = 0;      // strict shadow containment with inverted rank
  int64_t filtered = 0;   // of those, crossings within one of the dominating web
  std::vector<ScanWitness> witnesses;
  bool witnesses_complete = true;
  double seconds = 0;
};

// Pairwise dominance scan over all three-row tableaux of size n, bucketed by
// profile weight, bitset containment test per pair. Deterministic output for
// any thread count.
ScanResult scan_rank_inversions(int n, int threads, size_t witness_cap = 100000);

// The 18-point pair with shadow containment but inverted ranks, checked from
// scratch: containment, ranks, crossing numbers, and absence from every
// transposition expansion of the larger web.
Report large_witness_pair();

}  // namespace weblab::orders
