#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnp {

// Token counts; the maximum value doubles as the omega symbol of the
// omega-extension, with saturating arithmetic (w + n = w, w - n = w).
using Val = long long;
using Vec = std::vector<Val>;

inline constexpr Val omega = std::numeric_limits<Val>::max();

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Val sat_add(Val a, Val b) {
  if (a == omega || b == omega) return omega;
  return a + b;
}

// b must be finite; callers only subtract pre-vectors (0/1 entries).
inline Val sat_sub(Val a, Val b) {
  if (a == omega) return omega;
  return a - b;
}

inline void check_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw dimension_error("vector dimension mismatch");
}

inline bool leq(const Vec& a, const Vec& b) {
  check_dim(a, b);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool is_finite(const Vec& v) {
  for (Val x : v)
    if (x == omega) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  check_dim(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sat_add(a[i], b[i]);
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  check_dim(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sat_sub(a[i], b[i]);
  return r;
}

inline Vec vec_max(const Vec& a, const Vec& b) {
  check_dim(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline Vec vec_min(const Vec& a, const Vec& b) {
  check_dim(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

// Text form used everywhere: comma-separated coordinates, "w" for omega.
inline std::string show(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i] == omega ? "w" : std::to_string(v[i]);
  }
  return s;
}

struct VecHash {
  size_t operator()(const Vec& v) const {
    size_t h = 1469598103934665603ull;
    for (Val x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace pnp
