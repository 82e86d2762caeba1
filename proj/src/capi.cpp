#include "weblab/weblab.h"

#include <cstring>
#include <memory>
#include <sstream>

#include "core/context.hpp"
#include "core/emit.hpp"
#include "core/orders.hpp"
#include "core/reps.hpp"
#include "core/verify.hpp"

struct weblab_context {
  weblab::Context ctx;
  std::string last_error;
  explicit weblab_context(weblab::Shape s) : ctx(s) {}
};

namespace {

thread_local std::string g_last_error;

weblab_status status_of(const weblab::Error& e) {
  using weblab::Err;
  switch (e.code()) {
    case Err::InvalidArgument:
      return WEBLAB_E_INVALID;
    case Err::MalformedWord:
    case Err::MalformedTableau:
      return WEBLAB_E_MALFORMED;
    case Err::Unbalanced:
    case Err::YamanouchiViolation:
      return WEBLAB_E_DOMAIN;
    case Err::Overflow:
      return WEBLAB_E_OVERFLOW;
    case Err::Capacity:
      return WEBLAB_E_CAPACITY;
    default:
      return WEBLAB_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
weblab_status guarded(weblab_context* ctx, Fn&& fn) {
  std::string* err = ctx ? &ctx->last_error : &g_last_error;
  err->clear();
  try {
    fn();
    return WEBLAB_OK;
  } catch (const weblab::Error& e) {
    *err = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    *err = e.what();
    return WEBLAB_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* weblab_version(void) { return weblab::version_string(); }

const char* weblab_last_error(const weblab_context* ctx) {
  return ctx ? ctx->last_error.c_str() : g_last_error.c_str();
}

weblab_status weblab_context_create(int32_t rows, int32_t cols, weblab_context** out) {
  if (!out) return WEBLAB_E_INVALID;
  *out = nullptr;
  return guarded(nullptr, [&] {
    weblab::Shape shape{rows, cols};
    if (!shape.valid()) weblab::fail(weblab::Err::InvalidArgument, "shape rows must be 2 or 3");
    *out = new weblab_context(shape);
  });
}

void weblab_context_destroy(weblab_context* ctx) { delete ctx; }

void weblab_free(char* s) { std::free(s); }

int64_t weblab_tableau_count(weblab_context* ctx) { return ctx->ctx.count(); }

weblab_status weblab_tableau_index(weblab_context* ctx, const char* text, int64_t* out) {
  return guarded(ctx, [&] {
    auto t = weblab::tableaux::parse_tableau(text);
    if (!(t.shape() == ctx->ctx.shape()))
      weblab::fail(weblab::Err::InvalidArgument, "tableau shape differs from the context");
    *out = ctx->ctx.ranker().rank(t.rows());
  });
}

weblab_status weblab_tableau_text(weblab_context* ctx, int64_t index, char** out) {
  return guarded(ctx, [&] {
    ctx->ctx.ranker().unrank(index);
    *out = dup_string(ctx->ctx.tableau_text(index));
  });
}

weblab_status weblab_tableau_word(weblab_context* ctx, int64_t index, char** out) {
  return guarded(ctx, [&] { *out = dup_string(ctx->ctx.word(index)); });
}

weblab_status weblab_word_index(weblab_context* ctx, const char* word, int64_t* out) {
  return guarded(ctx, [&] { *out = ctx->ctx.ranker().rank_word(word); });
}

weblab_status weblab_tableau_rank(weblab_context* ctx, int64_t index, int32_t* out) {
  return guarded(ctx, [&] {
    ctx->ctx.ranker().unrank(index);
    *out = ctx->ctx.bfs_rank(index);
  });
}

weblab_status weblab_enumerate_csv(weblab_context* ctx, char** out) {
  return guarded(ctx, [&] { *out = dup_string(weblab::emit::enumerate_csv(ctx->ctx)); });
}

weblab_status weblab_enumerate_json(weblab_context* ctx, char** out) {
  return guarded(ctx, [&] { *out = dup_string(weblab::emit::enumerate_json(ctx->ctx)); });
}

weblab_status weblab_web_json(weblab_context* ctx, int64_t index, char** out) {
  return guarded(ctx, [&] { *out = dup_string(weblab::emit::web_json(ctx->ctx, index)); });
}

weblab_status weblab_web_dot(weblab_context* ctx, int64_t index, char** out) {
  return guarded(ctx, [&] {
    auto w = weblab::skein::basis_web(ctx->ctx.shape(), ctx->ctx.ranker().unrank(index));
    *out = dup_string(weblab::emit::web_dot(w));
  });
}

weblab_status weblab_poset_json(weblab_context* ctx, char** out) {
  return guarded(ctx, [&] { *out = dup_string(weblab::emit::poset_json(ctx->ctx)); });
}

namespace {

weblab::orders::OrderKind order_of(const char* name) {
  std::string s = name ? name : "";
  if (s == "tableau") return weblab::orders::OrderKind::Tableau;
  if (s == "shadow") return weblab::orders::OrderKind::Shadow;
  weblab::fail(weblab::Err::InvalidArgument, "order must be tableau or shadow");
}

}  // namespace

weblab_status weblab_hasse_dot(weblab_context* ctx, const char* order, char** out) {
  return guarded(ctx, [&] { *out = dup_string(weblab::emit::hasse_dot(ctx->ctx, order_of(order))); });
}

weblab_status weblab_order_leq(weblab_context* ctx, const char* order, int64_t a, int64_t b,
                               int32_t* out) {
  return guarded(ctx, [&] {
    ctx->ctx.ranker().unrank(a);
    ctx->ctx.ranker().unrank(b);
    weblab::orders::OrderRelation rel(ctx->ctx, order_of(order));
    *out = rel.leq(a, b) ? 1 : 0;
  });
}

weblab_status weblab_action_json(weblab_context* ctx, int32_t i, int64_t index, char** out) {
  return guarded(ctx, [&] {
    *out = dup_string(weblab::emit::combo_json(ctx->ctx, ctx->ctx.s_action(i, index)));
  });
}

weblab_status weblab_transition_csv(weblab_context* ctx, char** out) {
  return guarded(ctx, [&] {
    auto tm = weblab::reps::transition_matrix(ctx->ctx);
    *out = dup_string(weblab::emit::transition_csv(ctx->ctx, tm));
  });
}

weblab_status weblab_transition_json(weblab_context* ctx, char** out) {
  return guarded(ctx, [&] {
    auto tm = weblab::reps::transition_matrix(ctx->ctx);
    *out = dup_string(weblab::emit::transition_json(ctx->ctx, tm));
  });
}

weblab_status weblab_scan(int32_t n, int32_t threads, char** summary_json, char** witness_csv) {
  return guarded(nullptr, [&] {
    auto r = weblab::orders::scan_rank_inversions(n, threads);
    if (summary_json) *summary_json = dup_string(weblab::emit::scan_summary_json(r));
    if (witness_csv) {
      weblab::Context ctx(weblab::Shape{3, n});
      *witness_csv = dup_string(weblab::emit::scan_witness_csv(ctx, r));
    }
  });
}

weblab_status weblab_verify(int32_t max_n, const char* suite, int32_t threads, int32_t stretch,
                            char** log, char** report_json, int32_t* passed) {
  return guarded(nullptr, [&] {
    weblab::verify::Options opt;
    opt.max_n = max_n;
    opt.suite = suite && *suite ? suite : "all";
    opt.threads = threads;
    opt.stretch = stretch != 0;
    auto results = weblab::verify::run_acceptance(opt);
    if (results.empty()) weblab::fail(weblab::Err::InvalidArgument, "unknown suite name");
    if (log) {
      std::ostringstream os;
      for (const auto& r : results) {
        os << "[" << r.number << "/11] " << r.name;
        for (size_t pad = r.name.size(); pad < 24; ++pad) os << ' ';
        os << (r.passed ? "PASS" : "FAIL") << "  (" << r.seconds << " s)\n";
        if (!r.passed)
          for (const auto& note : r.notes) os << "        " << note << "\n";
      }
      *log = dup_string(os.str());
    }
    if (report_json) *report_json = dup_string(weblab::verify::results_json(results));
    if (passed) *passed = weblab::verify::all_passed(results) ? 1 : 0;
  });
}

}  // extern "C"
