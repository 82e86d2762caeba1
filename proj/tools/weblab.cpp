// weblab: enumerate tableaux, emit webs and Hasse diagrams, compute the
// Specht-to-web transition matrix, run dominance scans, and verify the whole
// stack. Talks to the engine exclusively through the C API.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "weblab/weblab.h"

namespace fs = std::filesystem;

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Managed {
  char* p = nullptr;
  ~Managed() { weblab_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Ctx {
  weblab_context* p = nullptr;
  ~Ctx() { weblab_context_destroy(p); }
};

void check(weblab_status st, weblab_context* ctx, const std::string& doing) {
  if (st == WEBLAB_OK) return;
  throw CliError(doing + ": " + weblab_last_error(ctx));
}

Ctx open_context(const std::string& shape_text) {
  auto x = shape_text.find('x');
  if (x == std::string::npos) throw CliError("--shape must look like 3x4");
  int rows = 0, cols = 0;
  try {
    rows = std::stoi(shape_text.substr(0, x));
    cols = std::stoi(shape_text.substr(x + 1));
  } catch (const std::exception&) {
    throw CliError("--shape must look like 3x4");
  }
  Ctx c;
  weblab_status st = weblab_context_create(rows, cols, &c.p);
  if (st != WEBLAB_OK) throw CliError(std::string("bad shape: ") + weblab_last_error(nullptr));
  return c;
}

// Byte cache keyed by artifact name, validated by content hash and version.
class Cache {
 public:
  Cache() {
    const char* env = std::getenv("WEBLAB_CACHE");
    dir_ = env && *env ? fs::path(env) : fs::path(".weblab-cache");
  }

  std::optional<std::string> load(const std::string& name) {
    fs::path file = dir_ / name;
    fs::path meta = dir_ / (name + ".meta");
    std::ifstream mf(meta);
    if (!mf) return std::nullopt;
    std::string version, hash;
    mf >> version >> hash;
    if (version != weblab_version()) return std::nullopt;
    std::ifstream f(file, std::ios::binary);
    if (!f) return std::nullopt;
    std::ostringstream os;
    os << f.rdbuf();
    std::string bytes = os.str();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    if (hash != buf) return std::nullopt;
    return bytes;
  }

  void store(const std::string& name, const std::string& bytes) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;  // cache is best effort
    std::ofstream f(dir_ / name, std::ios::binary);
    f << bytes;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    std::ofstream mf(dir_ / (name + ".meta"));
    mf << weblab_version() << "\n" << buf << "\n";
  }

 private:
  fs::path dir_;
};

std::string cached(Cache& cache, const std::string& name, const std::function<std::string()>& make) {
  if (auto hit = cache.load(name)) return *hit;
  std::string bytes = make();
  cache.store(name, bytes);
  return bytes;
}

void deliver(const std::string& bytes, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw CliError("cannot write " + out_file);
  f << bytes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"webs, tableaux and transition matrices"};
  app.require_subcommand(1);
  std::string out_file;
  app.add_option("--out", out_file, "write output to a file instead of stdout");
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: hardware)");

  std::string shape = "3x2", kind, emit_kind, order = "tableau", tableau_text;
  int scan_n = 2;
  bool stretch = false;
  int max_n = 0;
  std::string suite = "all";

  auto* c_enum = app.add_subcommand("enumerate", "list the standard fillings of a shape");
  c_enum->add_option("--shape", shape, "RxN, rows 2 or 3")->required();
  c_enum->add_option("--emit", emit_kind, "csv or json");

  auto* c_web = app.add_subcommand("web", "emit the reduced web of a tableau");
  c_web->add_option("--tableau", tableau_text, "rows joined by '/', entries by ','")->required();
  c_web->add_option("--emit", emit_kind, "json or dot");

  auto* c_hasse = app.add_subcommand("hasse", "covering diagram of a partial order");
  c_hasse->add_option("--shape", shape)->required();
  c_hasse->add_option("--order", order, "tableau or shadow");
  c_hasse->add_option("--emit", emit_kind, "dot");

  auto* c_tr = app.add_subcommand("transition", "Specht-to-web transition matrix");
  c_tr->add_option("--shape", shape)->required();
  c_tr->add_option("--kind", kind, "sl2 or sl3 (inferred from the shape)");
  c_tr->add_option("--emit", emit_kind, "csv or json");

  auto* c_scan = app.add_subcommand("scan", "dominance pairs with inverted ranks");
  c_scan->add_option("--n", scan_n, "columns of the three-row shape")->required();
  c_scan->add_flag("--stretch", stretch, "allow the seven-column scan");

  auto* c_verify = app.add_subcommand("verify", "run the acceptance checks");
  c_verify->add_option("--max-n", max_n, "cap the exhaustive depth (0 = full)");
  c_verify->add_option("--suite", suite, "all or a single check name");
  c_verify->add_flag("--stretch", stretch, "include the seven-column scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    Cache cache;
    if (*c_enum) {
      auto ctx = open_context(shape);
      bool json = emit_kind == "json";
      std::string name = "enumerate_" + shape + (json ? ".json" : ".csv");
      deliver(cached(cache, name,
                     [&] {
                       Managed s;
                       check(json ? weblab_enumerate_json(ctx.p, &s.p)
                                  : weblab_enumerate_csv(ctx.p, &s.p),
                             ctx.p, "enumerate");
                       return s.str();
                     }),
              out_file);
    } else if (*c_web) {
      // Shape comes from the tableau text itself.
      int rows = 1;
      for (char c : tableau_text)
        if (c == '/') ++rows;
      int entries = 1;
      for (char c : tableau_text)
        if (c == ',' || c == '/') ++entries;
      if (rows < 2 || entries % rows != 0) throw CliError("malformed tableau text");
      Ctx ctx;
      weblab_status st = weblab_context_create(rows, entries / rows, &ctx.p);
      if (st != WEBLAB_OK) throw CliError(std::string("bad tableau: ") + weblab_last_error(nullptr));
      int64_t index = 0;
      check(weblab_tableau_index(ctx.p, tableau_text.c_str(), &index), ctx.p, "parse tableau");
      Managed s;
      if (emit_kind == "dot") check(weblab_web_dot(ctx.p, index, &s.p), ctx.p, "emit web");
      else check(weblab_web_json(ctx.p, index, &s.p), ctx.p, "emit web");
      deliver(s.str(), out_file);
    } else if (*c_hasse) {
      auto ctx = open_context(shape);
      std::string name = "hasse_" + order + "_" + shape + ".dot";
      deliver(cached(cache, name,
                     [&] {
                       Managed s;
                       check(weblab_hasse_dot(ctx.p, order.c_str(), &s.p), ctx.p, "hasse");
                       return s.str();
                     }),
              out_file);
    } else if (*c_tr) {
      auto ctx = open_context(shape);
      if (!kind.empty() && kind != "sl2" && kind != "sl3") throw CliError("--kind must be sl2 or sl3");
      if (kind == "sl2" && shape[0] != '2') throw CliError("--kind sl2 needs a two-row shape");
      if (kind == "sl3" && shape[0] != '3') throw CliError("--kind sl3 needs a three-row shape");
      bool json = emit_kind == "json";
      std::string name = "transition_" + shape + (json ? ".json" : ".csv");
      deliver(cached(cache, name,
                     [&] {
                       Managed s;
                       check(json ? weblab_transition_json(ctx.p, &s.p)
                                  : weblab_transition_csv(ctx.p, &s.p),
                             ctx.p, "transition");
                       return s.str();
                     }),
              out_file);
    } else if (*c_scan) {
      if (scan_n == 7 && !stretch) throw CliError("the seven-column scan needs --stretch");
      std::string name = "scan_" + std::to_string(scan_n) + ".json";
      std::string witness_name = "scan_" + std::to_string(scan_n) + ".csv";
      Managed summary, witness;
      check(weblab_scan(scan_n, threads, &summary.p, &witness.p), nullptr, "scan");
      cache.store(witness_name, witness.str());
      deliver(summary.str(), out_file);
    } else if (*c_verify) {
      Managed log, report;
      int32_t passed = 0;
      check(weblab_verify(max_n, suite.c_str(), threads, stretch ? 1 : 0, &log.p, &report.p,
                          &passed),
            nullptr, "verify");
      std::cout << log.str();
      if (!out_file.empty()) deliver(report.str(), out_file);
      else std::cout << report.str();
      return passed ? 0 : 1;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
