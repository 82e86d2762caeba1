#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "context.hpp"
#include "orders.hpp"

namespace weblab::reps {

struct IMat {
  int rows = 0, cols = 0;
  std::vector<int64_t> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  static IMat identity(int n);
  bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IMat mul(const IMat& x, const IMat& y);  // checked arithmetic

struct TransitionMatrix {
  Shape shape;
  orders::Extension basis;                        // shadow-order completion
  std::vector<std::map<int64_t, int64_t>> cols;   // tableau index -> web expansion
  IMat mat;                                       // positions per `basis`
};

// Propagates the base column up the covering digraph along the lowest-index
// incoming edge of each tableau.
TransitionMatrix transition_matrix(Context& ctx);

// Recomputes every column along every incoming edge; throws PathInconsistent
// on any mismatch.
void check_path_independence(Context& ctx, const TransitionMatrix& tm);

// Action of the transposition (i, i+1) on the web basis, columns indexed by
// canonical tableau index.
IMat web_action_matrix(Context& ctx, int i);

// --- Specht module in tabloid coordinates -------------------------------

// Row assignment of each value, packed two bits per value.
using TabloidKey = uint32_t;
TabloidKey tabloid_key(const tableaux::RowSeq& row_of_value);
TabloidKey tabloid_swap(const Shape& shape, TabloidKey key, int i);
std::string tabloid_text(const Shape& shape, TabloidKey key);

struct SpechtVector {
  std::map<TabloidKey, int64_t> terms;
  void add(TabloidKey k, int64_t c);
};

SpechtVector polytabloid(const tableaux::StandardTableau& t);

struct SpechtBasis {
  Shape shape;
  std::vector<SpechtVector> e;        // per canonical tableau index
  std::vector<TabloidKey> lead;       // key of {T}
  std::vector<int64_t> peel_order;    // dominance-descending tableau indices
};

SpechtBasis specht_basis(Context& ctx);

// Coordinates of `v` over the standard polytabloids; throws SolveFailed if
// the vector is not in their span.
std::vector<int64_t> straighten(const SpechtBasis& basis, SpechtVector v);

IMat specht_action_matrix(Context& ctx, const SpechtBasis& basis, int i);

// --- verification reports ------------------------------------------------

struct Witness {
  std::string what;
};

struct Report {
  std::string check;
  Shape shape;
  Kind kind;
  bool passed = false;
  std::vector<Witness> witnesses;
  std::map<std::string, int64_t> stats;
};

Report verify_equivariance(Context& ctx);

enum class OrderChoice { Shadow, Tableau };
// Diagonal must be one; entries below the diagonal (under any completion of
// the chosen partial order) must vanish. With `assert_nonnegative`, negative
// entries are violations too.
Report check_unitriangular(Context& ctx, const TransitionMatrix& tm, OrderChoice order,
                           bool assert_violations, bool assert_nonnegative = false);

}  // namespace weblab::reps
