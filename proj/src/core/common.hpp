#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weblab {

enum class Kind { SL2, SL3 };

inline const char* kind_name(Kind k) { return k == Kind::SL2 ? "sl2" : "sl3"; }

// Rectangular shape: `rows` in {2,3}, `cols` columns, m = rows*cols cells.
struct Shape {
  int rows = 0;
  int cols = 0;

  int size() const { return rows * cols; }
  Kind kind() const { return rows == 2 ? Kind::SL2 : Kind::SL3; }
  bool valid() const { return (rows == 2 || rows == 3) && cols >= 1; }
  bool operator==(const Shape& o) const { return rows == o.rows && cols == o.cols; }
};

enum class Err {
  InvalidArgument,
  MalformedWord,
  MalformedTableau,
  Unbalanced,
  YamanouchiViolation,
  NotGraded,
  NotManifold,
  InvalidEmbedding,
  Overflow,
  PathInconsistent,
  SolveFailed,
  CycleDetected,
  Capacity,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "integer overflow in addition");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "integer overflow in multiplication");
  return r;
}

// FNV-1a, used for cache validation.
inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline const char* version_string() { return "0.3.0"; }

}  // namespace weblab
