#include "reps.hpp"

#include <algorithm>
#include <array>

namespace weblab::reps {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat mul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) fail(Err::InvalidArgument, "matrix shape mismatch");
  IMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) z.at(i, j) = checked_add(z.at(i, j), checked_mul(v, y.at(k, j)));
    }
  return z;
}

TransitionMatrix transition_matrix(Context& ctx) {
  TransitionMatrix tm;
  tm.shape = ctx.shape();
  orders::OrderRelation shadow(ctx, orders::OrderKind::Shadow);
  tm.basis = orders::linear_extension(ctx, shadow);

  const auto& poset = ctx.poset();
  int64_t n = ctx.count();
  tm.cols.assign(n, {});
  tm.cols[poset.minimum][poset.minimum] = 1;

  std::vector<int64_t> by_rank(n);
  for (int64_t i = 0; i < n; ++i) by_rank[i] = i;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int64_t a, int64_t b) { return poset.rank[a] < poset.rank[b]; });
  for (int64_t t : by_rank) {
    if (t == poset.minimum) continue;
    auto in = poset.in_edges[t];
    std::sort(in.begin(), in.end());
    auto [i, src] = in.front();
    skein::WebCombo col{ctx.kind(), ctx.shape(), {}};
    col.terms = tm.cols[src];
    tm.cols[t] = ctx.s_action_combo(i, col).terms;
    if (!tm.cols[t].count(t) || tm.cols[t][t] != 1)
      fail(Err::Internal, "propagated column misses its own web with coefficient one");
  }

  tm.mat = IMat(static_cast<int>(n), static_cast<int>(n));
  for (int64_t t = 0; t < n; ++t)
    for (auto& [webidx, c] : tm.cols[t])
      tm.mat.at(static_cast<int>(tm.basis.pos[webidx]), static_cast<int>(tm.basis.pos[t])) = c;
  return tm;
}

void check_path_independence(Context& ctx, const TransitionMatrix& tm) {
  const auto& poset = ctx.poset();
  for (int64_t t = 0; t < ctx.count(); ++t) {
    for (auto& [i, src] : poset.in_edges[t]) {
      skein::WebCombo col{ctx.kind(), ctx.shape(), {}};
      col.terms = tm.cols[src];
      if (ctx.s_action_combo(i, col).terms != tm.cols[t])
        fail(Err::PathInconsistent,
             "incoming edges disagree at " + ctx.tableau_text(t) + " (position " +
                 std::to_string(i) + ")");
    }
  }
}

IMat web_action_matrix(Context& ctx, int i) {
  int n = static_cast<int>(ctx.count());
  IMat m(n, n);
  for (int64_t t = 0; t < n; ++t)
    for (auto& [w, c] : ctx.s_action(i, t).terms) m.at(static_cast<int>(w), static_cast<int>(t)) = c;
  return m;
}

TabloidKey tabloid_key(const tableaux::RowSeq& row_of_value) {
  TabloidKey k = 0;
  for (size_t v = 0; v < row_of_value.size(); ++v)
    k |= static_cast<TabloidKey>(row_of_value[v] & 3) << (2 * v);
  return k;
}

TabloidKey tabloid_swap(const Shape& shape, TabloidKey key, int i) {
  (void)shape;
  int a = 2 * (i - 1), b = 2 * i;
  TabloidKey ra = (key >> a) & 3, rb = (key >> b) & 3;
  key &= ~((TabloidKey{3} << a) | (TabloidKey{3} << b));
  return key | (rb << a) | (ra << b);
}

std::string tabloid_text(const Shape& shape, TabloidKey key) {
  std::vector<std::vector<int>> rows(shape.rows);
  for (int v = 1; v <= shape.size(); ++v) rows[(key >> (2 * (v - 1))) & 3].push_back(v);
  std::string out;
  for (int r = 0; r < shape.rows; ++r) {
    out += '{';
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows[r][c]);
    }
    out += '}';
  }
  return out;
}

void SpechtVector::add(TabloidKey k, int64_t c) {
  if (c == 0) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

SpechtVector polytabloid(const tableaux::StandardTableau& t) {
  const Shape& shape = t.shape();
  auto grid = t.grid();
  int r = shape.rows, n = shape.cols;
  // Signed permutations of each column, combined by an odometer.
  static const std::array<std::array<int, 3>, 6> perm3{{{0, 1, 2},
                                                        {1, 0, 2},
                                                        {0, 2, 1},
                                                        {2, 1, 0},
                                                        {1, 2, 0},
                                                        {2, 0, 1}}};
  static const std::array<int, 6> sign3{1, -1, -1, -1, 1, 1};
  int per_col = r == 2 ? 2 : 6;
  SpechtVector out;
  std::vector<int> odo(n, 0);
  tableaux::RowSeq rows(shape.size());
  while (true) {
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      int p = odo[c];
      if (r == 2) {
        rows[grid[0][c] - 1] = static_cast<uint8_t>(p);
        rows[grid[1][c] - 1] = static_cast<uint8_t>(1 - p);
        sign *= p ? -1 : 1;
      } else {
        for (int k = 0; k < 3; ++k) rows[grid[k][c] - 1] = static_cast<uint8_t>(perm3[p][k]);
        sign *= sign3[p];
      }
    }
    out.add(tabloid_key(rows), sign);
    int c = 0;
    while (c < n && ++odo[c] == per_col) odo[c++] = 0;
    if (c == n) break;
  }
  return out;
}

namespace {

// Cumulative occupancy vector used to order tabloids: entry (v, r) counts
// the values <= v placed in rows <= r. Rearranging a column downward only
// lowers it, so every polytabloid is supported below its own tabloid.
std::vector<int> cum_vector(const Shape& shape, TabloidKey key) {
  std::vector<int> cum;
  cum.reserve(shape.size() * (shape.rows - 1));
  std::vector<int> count(shape.rows, 0);
  for (int v = 1; v <= shape.size(); ++v) {
    ++count[(key >> (2 * (v - 1))) & 3];
    int acc = 0;
    for (int r = 0; r < shape.rows - 1; ++r) {
      acc += count[r];
      cum.push_back(acc);
    }
  }
  return cum;
}

}  // namespace

SpechtBasis specht_basis(Context& ctx) {
  SpechtBasis basis;
  basis.shape = ctx.shape();
  int64_t n = ctx.count();
  basis.e.resize(n);
  basis.lead.resize(n);
  for (int64_t t = 0; t < n; ++t) {
    auto tab = ctx.tableau(t);
    basis.e[t] = polytabloid(tab);
    basis.lead[t] = tabloid_key(tab.rows());
    if (!basis.e[t].terms.count(basis.lead[t]) || basis.e[t].terms[basis.lead[t]] != 1)
      fail(Err::Internal, "polytabloid lead coefficient is not one");
  }
  basis.peel_order.resize(n);
  for (int64_t t = 0; t < n; ++t) basis.peel_order[t] = t;
  std::vector<std::vector<int>> cums(n);
  for (int64_t t = 0; t < n; ++t) cums[t] = cum_vector(basis.shape, basis.lead[t]);
  std::sort(basis.peel_order.begin(), basis.peel_order.end(),
            [&](int64_t a, int64_t b) { return cums[a] > cums[b]; });
  return basis;
}

std::vector<int64_t> straighten(const SpechtBasis& basis, SpechtVector v) {
  std::vector<int64_t> coords(basis.e.size(), 0);
  for (int64_t t : basis.peel_order) {
    auto it = v.terms.find(basis.lead[t]);
    if (it == v.terms.end()) continue;
    int64_t c = it->second;
    coords[t] = c;
    for (auto& [k, x] : basis.e[t].terms) v.add(k, checked_mul(-c, x));
  }
  if (!v.terms.empty())
    fail(Err::SolveFailed, "vector is outside the span of the standard polytabloids");
  return coords;
}

IMat specht_action_matrix(Context& ctx, const SpechtBasis& basis, int i) {
  int n = static_cast<int>(ctx.count());
  IMat m(n, n);
  for (int64_t t = 0; t < n; ++t) {
    SpechtVector moved;
    for (auto& [k, c] : basis.e[t].terms) moved.add(tabloid_swap(ctx.shape(), k, i), c);
    auto coords = straighten(basis, std::move(moved));
    for (int64_t r = 0; r < n; ++r) m.at(static_cast<int>(r), static_cast<int>(t)) = coords[r];
  }
  return m;
}

Report verify_equivariance(Context& ctx) {
  Report rep;
  rep.check = "equivariance";
  rep.shape = ctx.shape();
  rep.kind = ctx.kind();
  TransitionMatrix tm = transition_matrix(ctx);
  SpechtBasis basis = specht_basis(ctx);
  int n = static_cast<int>(ctx.count());

  // Move the transition matrix into canonical-index coordinates so all three
  // factors are indexed the same way.
  IMat phi(n, n);
  for (int64_t t = 0; t < n; ++t)
    for (auto& [w, c] : tm.cols[t]) phi.at(static_cast<int>(w), static_cast<int>(t)) = c;

  for (int i = 1; i < ctx.shape().size(); ++i) {
    IMat lhs = mul(web_action_matrix(ctx, i), phi);
    IMat rhs = mul(phi, specht_action_matrix(ctx, basis, i));
    if (!(lhs == rhs))
      rep.witnesses.push_back({"intertwining fails for position " + std::to_string(i)});
  }
  rep.stats["generators"] = ctx.shape().size() - 1;
  rep.passed = rep.witnesses.empty();
  return rep;
}

Report check_unitriangular(Context& ctx, const TransitionMatrix& tm, OrderChoice order,
                           bool assert_violations, bool assert_nonnegative) {
  Report rep;
  rep.check = order == OrderChoice::Shadow ? "unitriangular-shadow" : "unitriangular-tableau";
  rep.shape = ctx.shape();
  rep.kind = ctx.kind();
  orders::OrderRelation rel(
      ctx, order == OrderChoice::Shadow ? orders::OrderKind::Shadow : orders::OrderKind::Tableau);
  int64_t n = ctx.count();
  int64_t nonzero = 0, negatives = 0, violations = 0;
  for (int64_t t = 0; t < n; ++t) {
    auto it = tm.cols[t].find(t);
    if (it == tm.cols[t].end() || it->second != 1) {
      rep.witnesses.push_back({"diagonal entry not one at " + ctx.tableau_text(t)});
    }
    for (auto& [w, c] : tm.cols[t]) {
      if (c == 0) continue;
      ++nonzero;
      if (c < 0) ++negatives;
      if (w != t && !rel.lt(w, t)) {
        ++violations;
        rep.witnesses.push_back(
            {"entry (" + ctx.tableau_text(w) + ", " + ctx.tableau_text(t) + ") = " +
             std::to_string(c) + " without order relation"});
      }
    }
  }
  rep.stats["nonzero"] = nonzero;
  rep.stats["negative"] = negatives;
  rep.stats["violations"] = violations;
  rep.passed = true;
  if (assert_violations) rep.passed = rep.witnesses.empty();
  if (assert_nonnegative && negatives > 0) rep.passed = false;
  return rep;
}

}  // namespace weblab::reps
