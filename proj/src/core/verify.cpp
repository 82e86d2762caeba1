#include "verify.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <random>

#include "emit.hpp"
#include "orders.hpp"
#include "reps.hpp"
#include "skein.hpp"

namespace weblab::verify {

using matchdiag::profile_leq;
using matchdiag::profile_lt;

webgraph::PlaneWeb tripod_with_doubled_edge() {
  using webgraph::DrawnEdge;
  std::vector<std::pair<double, double>> coords{{2, 0.5}, {2, 1.25}, {2, 2}};
  int A = 4, B = 5, C = 6;  // drawn ids after the 3 boundary vertices
  std::vector<DrawnEdge> edges{
      {1, C, true},
      {3, C, true},
      {2, A, true},
      {B, C, true},
      {B, A, true, 1.75, 0.9, 1.75, 0.9, true},
      {B, A, true, 2.25, 0.9, 2.25, 0.9, true},
  };
  return webgraph::from_drawing(Kind::SL3, 3, coords, edges);
}

webgraph::PlaneWeb nine_point_unreduced_web() {
  using webgraph::DrawnEdge;
  std::vector<std::pair<double, double>> coords{
      {4.5, 0.5}, {4.5, 1}, {4, 1.5}, {5, 1.5}, {4.5, 2}, {4.5, 2.5},
      {5.5, 2},   {5.5, 2.5}, {5, 3}, {5, 3.5}, {6.5, 0.5}};
  int A = 10, B = 11, C = 12, D = 13, E = 14, F = 15, G = 16, H = 17, I = 18, J = 19, K = 20;
  std::vector<DrawnEdge> edges{
      {3, C, true}, {4, A, true}, {5, A, true}, {B, A, true}, {B, C, true}, {B, D, true},
      {E, C, true}, {E, D, true}, {E, F, true}, {G, D, true}, {G, H, true}, {G, K, true},
      {6, K, true}, {7, K, true}, {I, F, true}, {I, H, true}, {I, J, true}, {2, F, true},
      {8, H, true}, {1, J, true}, {9, J, true},
  };
  return webgraph::from_drawing(Kind::SL3, 9, coords, edges);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Fail {
  std::vector<std::string>& notes;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 40) notes.push_back(what);
    }
  }
};

int capped(int wanted, const Options& opt) {
  return opt.max_n > 0 ? std::min(wanted, opt.max_n) : wanted;
}

void check_enumeration(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  const int64_t three_row[] = {1, 5, 42, 462, 6006, 87516};
  const int64_t two_row[] = {1, 2, 5, 14, 42, 132};
  auto t0 = Clock::now();
  for (int n = 1; n <= capped(6, opt); ++n) {
    int64_t c3 = tableaux::count_syt(Shape{3, n});
    f.require(c3 == three_row[n - 1], "three-row count at n=" + std::to_string(n) + " was " +
                                          std::to_string(c3));
    int64_t c2 = tableaux::count_syt(Shape{2, n});
    f.require(c2 == two_row[n - 1],
              "two-row count at n=" + std::to_string(n) + " was " + std::to_string(c2));
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  notes.push_back("enumerated both families in " + std::to_string(secs) + " s");
  f.require(secs < 60.0, "enumeration exceeded 60 s");
}

void check_geometry(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  int64_t webs = 0;
  for (int n = 1; n <= capped(3, opt); ++n) {
    Shape shape{3, n};
    tableaux::for_each_syt(shape, [&](const tableaux::RowSeq& rows) {
      ++webs;
      std::string word = tableaux::word_of(shape, rows);
      webgraph::PlaneWeb w = skein::basis_web(shape, rows);
      auto fd = webgraph::faces(w);
      f.require(webgraph::is_reduced(w, fd), "constructed web unreduced: " + word);
      f.require(boundary_profile(w, fd) == matchdiag::depth_profile(word),
                "geometric profile differs from prefix sums: " + word);
      auto band = webgraph::band_arcs(w, fd);
      f.require(band.closed_loops == 0, "band diagram not anchored: " + word);
      f.require(band.arcs == matchdiag::matching_from_word(word, '+', '-'),
                "band arcs differ from the outer matching: " + word);
    });
  }
  notes.push_back("checked " + std::to_string(webs) + " webs");
}

void check_rank_formulas(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  for (int n = 1; n <= capped(4, opt); ++n) {
    Context ctx(Shape{3, n});
    for (int64_t t = 0; t < ctx.count(); ++t) {
      std::string word = ctx.word(t);
      int bfs = ctx.bfs_rank(t);
      auto md = matchdiag::m_diagram_of_word(word);
      auto band = matchdiag::band_from_word(word);
      f.require(bfs == matchdiag::rank_formula_m(md), "arc-statistic rank differs: " + word);
      f.require(bfs == matchdiag::rank_formula_band(band, word), "band rank differs: " + word);
    }
  }
  for (int n = 1; n <= capped(6, opt); ++n) {
    Context ctx(Shape{2, n});
    for (int64_t t = 0; t < ctx.count(); ++t) {
      auto m = matchdiag::matching_from_word(ctx.word(t), '+', '-');
      f.require(ctx.bfs_rank(t) == matchdiag::nesting_number(m),
                "nesting rank differs: " + ctx.word(t));
    }
  }
  notes.push_back("rank functions agree on both families");
}

void check_orders(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  for (int n = 1; n <= capped(6, opt); ++n) {
    Context ctx(Shape{2, n});
    auto rep = orders::refinement_check(ctx);
    f.require(rep.passed && rep.stats["coincide_failures"] == 0,
              "two-row orders differ at n=" + std::to_string(n));
  }
  for (int n = 1; n <= capped(4, opt); ++n) {
    Context ctx(Shape{3, n});
    auto rep = orders::refinement_check(ctx);
    f.require(rep.passed, "three-row refinement fails at n=" + std::to_string(n));
    f.require(rep.stats["between"] == 0, "web strictly between a covering pair");
  }
  notes.push_back("refinement and coincidence verified");
}

void check_scan(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  for (int n = 1; n <= capped(5, opt); ++n) {
    auto r = orders::scan_rank_inversions(n, opt.threads);
    f.require(r.pairs == 0 && r.filtered == 0,
              "unexpected inversion pairs at n=" + std::to_string(n));
  }
  if (capped(6, opt) >= 6) {
    auto r = orders::scan_rank_inversions(6, opt.threads);
    f.require(r.pairs == 660, "pair count at n=6 was " + std::to_string(r.pairs));
    f.require(r.filtered == 446, "filtered count at n=6 was " + std::to_string(r.filtered));
    notes.push_back("n=6 scan: " + std::to_string(r.pairs) + " pairs, " +
                    std::to_string(r.filtered) + " filtered, " + std::to_string(r.seconds) + " s");
    f.require(r.seconds < 600.0, "n=6 scan exceeded 10 minutes");
  }
  if (opt.stretch) {
    auto r = orders::scan_rank_inversions(7, opt.threads);
    f.require(r.pairs == 62147, "pair count at n=7 was " + std::to_string(r.pairs));
    f.require(r.filtered == 40865, "filtered count at n=7 was " + std::to_string(r.filtered));
    notes.push_back("n=7 scan: " + std::to_string(r.pairs) + " pairs, " +
                    std::to_string(r.filtered) + " filtered, " + std::to_string(r.seconds) + " s");
  }
}

void check_witness_pair(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  auto rep = orders::large_witness_pair();
  for (auto& w : rep.witnesses) f.require(false, w);
  f.require(rep.passed, "witness pair report failed");
  notes.push_back("formula ranks " + std::to_string(rep.stats["rank_dominated"]) + " vs " +
                  std::to_string(rep.stats["rank_dominating"]));
  if (capped(6, opt) >= 6) {
    // Cross-check the two ranks against breadth-first distances.
    Context ctx(Shape{3, 6});
    int64_t a = ctx.ranker().rank_word("+++++00000---+0---");
    int64_t b = ctx.ranker().rank_word("+++++000+---000---");
    f.require(ctx.bfs_rank(a) == 34 && ctx.bfs_rank(b) == 33,
              "breadth-first ranks disagree with the arc statistics");
  }
}

void check_skein(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  // Doubled-edge tripod collapses to -2 x tripod.
  {
    Context ctx(Shape{3, 1});
    auto combo = skein::reduce(tripod_with_doubled_edge(), ctx.ranker());
    f.require(combo.terms.size() == 1 && combo.terms.count(0) && combo.terms.at(0) == -2,
              "doubled-edge tripod did not reduce to -2 x tripod");
  }
  // The worked three-row expansion at position 2.
  {
    Context ctx(Shape{3, 2});
    int64_t t = ctx.ranker().rank_word("+0+-0-");
    auto combo = ctx.s_action(2, t);
    std::map<int64_t, int64_t> expect{
        {ctx.ranker().rank_word("+0+-0-"), 1},
        {ctx.ranker().rank_word("+0-+0-"), 1},
        {ctx.ranker().rank_word("++0-0-"), 1},
    };
    f.require(combo.terms == expect, "three-term expansion not reproduced");
  }
  // Confluence under randomized rewrite strategies, with the shadow of every
  // summand inside the shadow of the unreduced web.
  {
    std::mt19937 gen(20240811);
    const std::vector<Shape> shapes{{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}};
    std::vector<std::unique_ptr<Context>> ctxs;
    for (auto& s : shapes) ctxs.push_back(std::make_unique<Context>(s));
    int webs = opt.max_n > 0 && opt.max_n < 3 ? 40 : 200;
    for (int k = 0; k < webs; ++k) {
      size_t si = gen() % shapes.size();
      Context& ctx = *ctxs[si];
      Shape shape = shapes[si];
      int64_t idx = static_cast<int64_t>(gen() % ctx.count());
      webgraph::PlaneWeb w = skein::basis_web(shape, ctx.ranker().unrank(idx));
      int inserts = 1 + gen() % 3;
      for (int j = 0; j < inserts; ++j) skein::insert_smoothing(w, 1 + gen() % (shape.size() - 1));
      w.free_loops += gen() % 2;
      w.validate();
      auto unreduced_profile = webgraph::boundary_profile(w);
      auto reference = skein::reduce(w, ctx.ranker());
      for (auto& [t, c] : reference.terms) {
        (void)c;
        f.require(profile_leq(ctx.profile(t), unreduced_profile),
                  "summand shadow escapes the unreduced shadow");
      }
      for (int trial = 0; trial < 20; ++trial) {
        std::mt19937 rng(1000003u * k + trial);
        auto got = skein::reduce(w, ctx.ranker(), &rng);
        f.require(got == reference, "randomized strategy changed the expansion");
        if (got.terms != reference.terms) break;
      }
    }
    notes.push_back("confluence corpus: " + std::to_string(webs) + " webs x 20 strategies");
  }
  // Involutions, braid and commutation relations on the action matrices.
  {
    auto relations = [&](Shape shape) {
      Context ctx(shape);
      int n = static_cast<int>(ctx.count());
      std::vector<reps::IMat> gens;
      for (int i = 1; i < shape.size(); ++i) gens.push_back(reps::web_action_matrix(ctx, i));
      reps::IMat id = reps::IMat::identity(n);
      for (size_t i = 0; i < gens.size(); ++i) {
        f.require(reps::mul(gens[i], gens[i]) == id,
                  "involution fails at " + emit::shape_text(shape));
        if (i + 1 < gens.size())
          f.require(reps::mul(gens[i], reps::mul(gens[i + 1], gens[i])) ==
                        reps::mul(gens[i + 1], reps::mul(gens[i], gens[i + 1])),
                    "braid relation fails at " + emit::shape_text(shape));
        for (size_t j = i + 2; j < gens.size(); ++j)
          f.require(reps::mul(gens[i], gens[j]) == reps::mul(gens[j], gens[i]),
                    "commutation fails at " + emit::shape_text(shape));
      }
    };
    for (int n = 1; n <= capped(3, opt); ++n) relations(Shape{3, n});
    for (int n = 1; n <= capped(5, opt); ++n) relations(Shape{2, n});
  }
}

void check_transition(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  for (int n = 1; n <= capped(4, opt); ++n) {
    auto t0 = Clock::now();
    Context ctx(Shape{3, n});
    auto tm = reps::transition_matrix(ctx);
    auto rep = reps::check_unitriangular(ctx, tm, reps::OrderChoice::Shadow, true);
    f.require(rep.passed, "shadow-order vanishing fails at n=" + std::to_string(n));
    reps::check_path_independence(ctx, tm);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (n == 4) {
      notes.push_back("three-row n=4 matrix and path check: " + std::to_string(secs) + " s");
      f.require(secs < 300.0, "three-row n=4 matrix exceeded 5 minutes");
    }
  }
  for (int n = 1; n <= capped(5, opt); ++n) {
    Context ctx(Shape{2, n});
    auto tm = reps::transition_matrix(ctx);
    auto rep = reps::check_unitriangular(ctx, tm, reps::OrderChoice::Tableau, true, true);
    f.require(rep.passed, "two-row matrix not unitriangular nonnegative at n=" + std::to_string(n));
    reps::check_path_independence(ctx, tm);
  }
}

void check_equivariance(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  for (int n = 1; n <= capped(3, opt); ++n) {
    Context ctx(Shape{3, n});
    auto rep = reps::verify_equivariance(ctx);
    f.require(rep.passed, "three-row equivariance fails at n=" + std::to_string(n));
  }
  for (int n = 1; n <= capped(4, opt); ++n) {
    Context ctx(Shape{2, n});
    auto rep = reps::verify_equivariance(ctx);
    f.require(rep.passed, "two-row equivariance fails at n=" + std::to_string(n));
  }
  notes.push_back("intertwining exact for every generator");
}

void check_lemmas(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  int64_t expansions = 0;
  for (int n = 1; n <= capped(3, opt); ++n) {
    Shape shape{3, n};
    Context ctx(shape);
    int m = shape.size();
    std::vector<matchdiag::DepthProfile> prof;
    std::vector<int> cross;
    for (int64_t t = 0; t < ctx.count(); ++t) {
      prof.push_back(ctx.profile(t));
      cross.push_back(ctx.crossings(t));
    }
    const auto& poset = ctx.poset();
    for (int64_t t = 0; t < ctx.count(); ++t) {
      std::string word = ctx.word(t);
      for (int i = 1; i < m; ++i) {
        std::string pair = word.substr(i - 1, 2);
        const auto& combo = ctx.s_action(i, t);
        ++expansions;
        bool fixing = pair == "+-" || pair == "+0" || pair == "0-";
        bool level = pair == "++" || pair == "00" || pair == "--";
        bool raising = pair == "-+" || pair == "-0" || pair == "0+";
        if (fixing) {
          f.require(combo.terms.size() == 1 && combo.terms.count(t) && combo.terms.at(t) == -1,
                    "action should negate the web at " + word + " i=" + std::to_string(i));
        } else if (level) {
          for (auto& [s, c] : combo.terms) {
            (void)c;
            if (s != t)
              f.require(profile_lt(prof[s], prof[t]),
                        "level-pair summand escapes the shadow at " + word);
          }
        } else if (raising) {
          tableaux::RowSeq up = ctx.ranker().unrank(t);
          std::swap(up[i - 1], up[i]);
          int64_t tprime = ctx.ranker().rank(up);
          for (auto& [s, c] : combo.terms) {
            (void)c;
            f.require(profile_leq(prof[s], prof[tprime]),
                      "raising-pair summand escapes the target shadow at " + word);
          }
        }
        // Crossing bound with its equality characterisation.
        bool two_term = combo.terms.size() == 2 && combo.terms.count(t) && combo.terms.at(t) == 1;
        for (auto& [s, c] : combo.terms) {
          if (s == t) continue;
          f.require(cross[s] <= cross[t] + 1, "crossing bound fails at " + word);
          bool eq = cross[s] == cross[t] + 1;
          bool tabled = false;
          if (two_term && c == 1) {
            std::string ws = ctx.word(s);
            std::string spair = ws.substr(i - 1, 2);
            bool elsewhere = false;
            for (int k = 0; k < m; ++k)
              if (k != i - 1 && k != i && ws[k] != word[k]) elsewhere = true;
            if (pair == "0+" && spair == "+0" && !elsewhere) tabled = true;
            if (pair == "-0" && spair == "0-" && !elsewhere) tabled = true;
            if (pair == "-+" && spair == "+-" && !elsewhere) tabled = true;
            if (pair == "++" && spair == "+0" && elsewhere) tabled = true;
            if (pair == "--" && spair == "0-" && elsewhere) tabled = true;
          }
          f.require(eq == tabled, "crossing equality cases mismatch at " + word + " i=" +
                                      std::to_string(i) + " -> " + ctx.word(s));
        }
      }
      // Lowest incoming edge: target plus source plus strictly smaller terms.
      if (t != poset.minimum) {
        auto in = poset.in_edges[t];
        std::sort(in.begin(), in.end());
        auto [i, src] = in.front();
        const auto& combo = ctx.s_action(i, src);
        f.require(combo.terms.count(src) && combo.terms.at(src) == 1 && combo.terms.count(t) &&
                      combo.terms.at(t) == 1,
                  "lowest-edge expansion misses its endpoints at " + ctx.word(t));
        for (auto& [s, c] : combo.terms) {
          (void)c;
          if (s != src && s != t)
            f.require(profile_lt(prof[s], prof[src]),
                      "lowest-edge residual term escapes the source shadow");
        }
      }
    }
    // Covering-edge word table: symbols swap one of three ways, depths jump
    // only on the inner interval.
    for (int64_t t = 0; t < ctx.count(); ++t) {
      std::string wt = ctx.word(t);
      for (auto& [i, u] : poset.out_edges[t]) {
        std::string wu = ctx.word(u);
        for (int k = 0; k < m; ++k)
          if (k != i - 1 && k != i)
            f.require(wt[k] == wu[k], "covering edge changes a distant symbol");
        std::string from = wt.substr(i - 1, 2), to = wu.substr(i - 1, 2);
        int jump = prof[u].depths[i] - prof[t].depths[i];
        bool case1 = from == "0+" && to == "+0" && jump == 1;
        bool case2 = from == "-0" && to == "0-" && jump == 1;
        bool case3 = from == "-+" && to == "+-" && jump == 2;
        f.require(case1 || case2 || case3, "covering edge outside the word table");
        for (int k = 0; k <= m; ++k)
          if (k != i)
            f.require(prof[t].depths[k] == prof[u].depths[k],
                      "covering edge changes a distant depth");
      }
    }
    // Diamond property over every covering edge.
    for (int64_t mid = 0; mid < ctx.count(); ++mid) {
      for (auto& [i, tgt] : poset.out_edges[mid]) {
        for (int64_t w = 0; w < ctx.count(); ++w) {
          if (!profile_lt(prof[w], prof[mid])) continue;
          for (auto& [s, c] : ctx.s_action(i, w).terms) {
            (void)c;
            f.require(profile_lt(prof[s], prof[tgt]), "diamond property fails");
          }
        }
      }
    }
  }
  notes.push_back("local case analysis over " + std::to_string(expansions) + " expansions");
}

void check_conjectures(const Options& opt, Fail& f, std::vector<std::string>& notes) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int n = 1; n <= capped(4, opt); ++n) {
    Shape shape{3, n};
    Context ctx(shape);
    auto tm = reps::transition_matrix(ctx);
    orders::OrderRelation tab(ctx, orders::OrderKind::Tableau);
    std::vector<int> rank(ctx.count());
    for (int64_t t = 0; t < ctx.count(); ++t) rank[t] = ctx.bfs_rank(t);
    int64_t c1 = 0, c2 = 0, c3 = 0, negatives = 0, nonzero = 0;
    for (int64_t t = 0; t < ctx.count(); ++t)
      for (auto& [w, c] : tm.cols[t]) {
        if (w == t) continue;
        ++nonzero;
        if (c < 0) ++negatives;
        if (!tab.lt(w, t)) ++c1;
        if (rank[w] >= rank[t]) ++c2;
      }
    std::vector<matchdiag::DepthProfile> prof;
    for (int64_t t = 0; t < ctx.count(); ++t) prof.push_back(ctx.profile(t));
    for (int64_t t = 0; t < ctx.count(); ++t)
      for (int i = 1; i < shape.size(); ++i)
        for (auto& [s, c] : ctx.s_action(i, t).terms) {
          (void)c;
          if (rank[s] > rank[t] + 1) ++c3;
          if (profile_leq(prof[s], prof[t]) && rank[s] > rank[t]) ++c3;
        }
    out.push_back({{"shape", emit::shape_text(shape)},
                   {"offdiagonal_nonzero", nonzero},
                   {"negative_entries", negatives},
                   {"transposition_order_violations", c1},
                   {"rank_drop_violations", c2},
                   {"summand_rank_violations", c3}});
  }
  notes.push_back(out.dump());
  (void)f;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const Options& opt) {
  using CheckFn = std::function<void(const Options&, Fail&, std::vector<std::string>&)>;
  struct Entry {
    int number;
    const char* name;
    CheckFn fn;
  };
  const std::vector<Entry> entries{
      {1, "enumeration-counts", check_enumeration},
      {2, "geometry-agreement", check_geometry},
      {3, "rank-formulas", check_rank_formulas},
      {4, "order-comparison", check_orders},
      {5, "inversion-scan", check_scan},
      {6, "witness-pair", check_witness_pair},
      {7, "skein-engine", check_skein},
      {8, "transition-matrix", check_transition},
      {9, "equivariance", check_equivariance},
      {10, "local-lemmas", check_lemmas},
      {11, "conjecture-reports", check_conjectures},
  };
  std::vector<CheckResult> results;
  for (const auto& e : entries) {
    if (opt.suite != "all" && opt.suite != e.name) continue;
    CheckResult r;
    r.number = e.number;
    r.name = e.name;
    auto t0 = Clock::now();
    Fail f{r.notes};
    try {
      e.fn(opt, f, r.notes);
      r.passed = f.ok;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.notes.push_back(std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

std::string results_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json notes = nlohmann::ordered_json::array();
    for (auto& n : r.notes)
      if (!n.empty()) notes.push_back(n);
    arr.push_back({{"number", r.number},
                   {"check", r.name},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"notes", notes}});
  }
  nlohmann::ordered_json j{{"version", version_string()}, {"checks", arr},
                           {"passed", all_passed(results)}};
  return j.dump(2) + "\n";
}

}  // namespace weblab::verify
