#include "emit.hpp"

#include <json.hpp>

namespace weblab::emit {

using ordered_json = nlohmann::ordered_json;
using webgraph::PlaneWeb;
using webgraph::twin;

std::string shape_text(const Shape& s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

Shape parse_shape(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) fail(Err::InvalidArgument, "shape must look like 3x4");
  Shape s;
  try {
    s.rows = std::stoi(text.substr(0, x));
    s.cols = std::stoi(text.substr(x + 1));
  } catch (const std::exception&) {
    fail(Err::InvalidArgument, "shape must look like 3x4");
  }
  if (!s.valid()) fail(Err::InvalidArgument, "shape rows must be 2 or 3, columns at least 1");
  return s;
}

std::string enumerate_csv(Context& ctx) {
  std::string out = "index,tableau,word\n";
  for (int64_t t = 0; t < ctx.count(); ++t)
    out += std::to_string(t) + "," + ctx.tableau_text(t) + "," + ctx.word(t) + "\n";
  return out;
}

std::string enumerate_json(Context& ctx) {
  ordered_json arr = ordered_json::array();
  for (int64_t t = 0; t < ctx.count(); ++t)
    arr.push_back({{"index", t}, {"tableau", ctx.tableau_text(t)}, {"word", ctx.word(t)}});
  ordered_json j{{"shape", shape_text(ctx.shape())},
                 {"kind", kind_name(ctx.kind())},
                 {"count", ctx.count()},
                 {"tableaux", arr}};
  return j.dump(2) + "\n";
}

namespace {

// Web darts renumbered densely, floor structure dropped; boundary vertices
// keep ids 1..m, internal ones follow.
struct WebIds {
  std::vector<int> vid, did;
  std::vector<int> verts, darts;  // reverse maps
};

WebIds number_web(const PlaneWeb& w) {
  WebIds ids;
  ids.vid.assign(w.vertex_limit(), -1);
  ids.did.assign(w.dart_limit(), -1);
  for (int v = 1; v <= w.m; ++v) {
    ids.vid[v] = v;
    ids.verts.push_back(v);
  }
  int next = w.m + 1;
  for (int v = 0; v < w.vertex_limit(); ++v)
    if (w.vertex_live(v) && w.vertex_type(v) == PlaneWeb::kInternal) {
      ids.vid[v] = next++;
      ids.verts.push_back(v);
    }
  for (int d = 0; d < w.dart_limit(); ++d)
    if (w.dart_live(d) && !w.is_floor(d)) {
      ids.did[d] = static_cast<int>(ids.darts.size());
      ids.darts.push_back(d);
    }
  return ids;
}

int next_web_dart(const PlaneWeb& w, int d) {
  int e = w.next_at_vertex(d);
  while (w.is_floor(e)) e = w.next_at_vertex(e);
  return e;
}

}  // namespace

std::string web_json(const PlaneWeb& w) {
  WebIds ids = number_web(w);
  ordered_json verts = ordered_json::array();
  for (int v : ids.verts)
    verts.push_back({{"id", ids.vid[v]},
                     {"type", w.vertex_type(v) == PlaneWeb::kBoundary ? "boundary" : "internal"}});
  ordered_json darts = ordered_json::array();
  for (int d : ids.darts)
    darts.push_back({{"edge", ids.did[d] / 2},
                     {"vertex", ids.vid[w.origin(d)]},
                     {"next_at_vertex", ids.did[next_web_dart(w, d)]},
                     {"twin", ids.did[twin(d)]},
                     {"oriented_out", w.kind == Kind::SL3 ? w.oriented_out(d) : false}});
  ordered_json j{{"m", w.m},
                 {"kind", kind_name(w.kind)},
                 {"vertices", verts},
                 {"darts", darts},
                 {"loops", w.free_loops}};
  return j.dump(2) + "\n";
}

std::string web_json(Context& ctx, int64_t index) {
  return web_json(skein::basis_web(ctx.shape(), ctx.ranker().unrank(index)));
}

std::string web_dot(const PlaneWeb& w) {
  WebIds ids = number_web(w);
  std::string out = "graph web {\n  rankdir=BT;\n";
  for (int v : ids.verts) {
    bool b = w.vertex_type(v) == PlaneWeb::kBoundary;
    out += "  v" + std::to_string(ids.vid[v]) + " [shape=" + (b ? "plaintext" : "point") +
           (b ? ",label=\"" + std::to_string(ids.vid[v]) + "\"" : ",label=\"\"") + "];\n";
  }
  for (size_t k = 0; k < ids.darts.size(); ++k) {
    int d = ids.darts[k];
    if (d > twin(d)) continue;
    std::string a = "v" + std::to_string(ids.vid[w.origin(d)]);
    std::string b = "v" + std::to_string(ids.vid[w.origin(twin(d))]);
    if (w.kind == Kind::SL3)
      out += "  " + (w.oriented_out(d) ? a + " -- " + b + " [dir=forward]"
                                       : b + " -- " + a + " [dir=forward]") + ";\n";
    else
      out += "  " + a + " -- " + b + ";\n";
  }
  out += "}\n";
  return out;
}

std::string combo_json(Context& ctx, const skein::WebCombo& combo) {
  ordered_json terms = ordered_json::array();
  for (auto& [idx, c] : combo.terms)
    terms.push_back({{"tableau", ctx.tableau_text(idx)}, {"coeff", c}});
  ordered_json j{{"kind", kind_name(combo.kind)},
                 {"shape", shape_text(combo.shape)},
                 {"terms", terms}};
  return j.dump(2) + "\n";
}

std::string matching_json(const matchdiag::Matching& m) {
  ordered_json arr = ordered_json::array();
  for (auto& a : m.arcs) arr.push_back({a.l, a.r});
  return arr.dump() + "\n";
}

std::string profile_json(const matchdiag::DepthProfile& p) {
  return ordered_json(p.depths).dump() + "\n";
}

std::string poset_json(Context& ctx) {
  const auto& poset = ctx.poset();
  ordered_json nodes = ordered_json::array();
  for (int64_t t = 0; t < poset.n; ++t)
    nodes.push_back({{"index", t}, {"tableau", ctx.tableau_text(t)}, {"rank", poset.rank[t]}});
  ordered_json edges = ordered_json::array();
  for (int64_t t = 0; t < poset.n; ++t)
    for (auto& [i, u] : poset.out_edges[t]) edges.push_back({{"from", t}, {"i", i}, {"to", u}});
  ordered_json j{{"shape", shape_text(ctx.shape())},
                 {"kind", kind_name(ctx.kind())},
                 {"minimum", poset.minimum},
                 {"maximum", poset.maximum},
                 {"max_rank", poset.max_rank},
                 {"nodes", nodes},
                 {"edges", edges}};
  return j.dump(2) + "\n";
}

std::string hasse_dot(Context& ctx, orders::OrderKind kind) {
  orders::OrderRelation rel(ctx, kind);
  auto edges = rel.hasse_edges();
  const auto& poset = ctx.poset();
  // Minimal element on top, edges pointing down the page.
  std::string out = "digraph hasse {\n  rankdir=TB;\n  node [shape=box];\n";
  for (int64_t t = 0; t < ctx.count(); ++t)
    out += "  t" + std::to_string(t) + " [label=\"" + ctx.tableau_text(t) + "\"];\n";
  for (int r = 0; r <= poset.max_rank; ++r) {
    std::string rank_line = "  { rank=same;";
    bool any = false;
    for (int64_t t = 0; t < ctx.count(); ++t)
      if (poset.rank[t] == r) {
        rank_line += " t" + std::to_string(t) + ";";
        any = true;
      }
    if (any) out += rank_line + " }\n";
  }
  for (auto& [a, b] : edges)
    out += "  t" + std::to_string(a) + " -> t" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string transition_csv(Context& ctx, const reps::TransitionMatrix& tm) {
  int n = static_cast<int>(ctx.count());
  std::string out = "web\\tableau";
  for (int c = 0; c < n; ++c) out += "," + ctx.tableau_text(tm.basis.order[c]);
  out += "\n";
  for (int r = 0; r < n; ++r) {
    out += ctx.tableau_text(tm.basis.order[r]);
    for (int c = 0; c < n; ++c) out += "," + std::to_string(tm.mat.at(r, c));
    out += "\n";
  }
  return out;
}

std::string transition_json(Context& ctx, const reps::TransitionMatrix& tm) {
  int n = static_cast<int>(ctx.count());
  ordered_json basis = ordered_json::array();
  for (int64_t t : tm.basis.order) basis.push_back(ctx.tableau_text(t));
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < n; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < n; ++c) row.push_back(tm.mat.at(r, c));
    rows.push_back(row);
  }
  ordered_json j{{"kind", kind_name(ctx.kind())},
                 {"shape", shape_text(ctx.shape())},
                 {"basis", basis},
                 {"matrix", rows}};
  return j.dump(2) + "\n";
}

std::string scan_summary_json(const orders::ScanResult& r) {
  ordered_json j{{"n", r.n},
                 {"webs", r.webs},
                 {"pairs", r.pairs},
                 {"filtered", r.filtered},
                 {"witnesses_complete", r.witnesses_complete},
                 {"seconds", r.seconds}};
  return j.dump(2) + "\n";
}

std::string scan_witness_csv(Context& ctx, const orders::ScanResult& r) {
  std::string out = "n,tableau_a,tableau_b,rank_a,rank_b,crossings_a,crossings_b\n";
  for (const auto& w : r.witnesses)
    out += std::to_string(r.n) + "," + ctx.tableau_text(w.dominated) + "," +
           ctx.tableau_text(w.dominating) + "," + std::to_string(w.rank_dominated) + "," +
           std::to_string(w.rank_dominating) + "," + std::to_string(w.cross_dominated) + "," +
           std::to_string(w.cross_dominating) + "\n";
  return out;
}

namespace {

template <typename R>
ordered_json report_body(const R& r) {
  ordered_json stats = ordered_json::object();
  for (auto& [k, v] : r.stats) stats[k] = v;
  ordered_json wit = ordered_json::array();
  return ordered_json{{"check", r.check},
                      {"shape", shape_text(r.shape)},
                      {"passed", r.passed},
                      {"stats", stats}};
}

}  // namespace

std::string report_json(const reps::Report& r) {
  ordered_json j = report_body(r);
  j["kind"] = kind_name(r.kind);
  ordered_json wit = ordered_json::array();
  for (auto& w : r.witnesses) wit.push_back(w.what);
  j["witnesses"] = wit;
  return j.dump(2) + "\n";
}

std::string report_json(const orders::Report& r) {
  ordered_json j = report_body(r);
  ordered_json wit = ordered_json::array();
  for (auto& w : r.witnesses) wit.push_back(w);
  j["witnesses"] = wit;
  return j.dump(2) + "\n";
}

}  // namespace weblab::emit
