#pragma once

#include <algorithm>
#include <vector>

#include "pnpersist/vec.hpp"

namespace pnp {

// Keeps exactly the <=-minimal elements, deduplicated.
inline std::vector<Vec> min_antichain(std::vector<Vec> vs) {
  for (size_t i = 1; i < vs.size(); ++i) check_dim(vs[0], vs[i]);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Vec> out;
  for (const Vec& v : vs) {
    bool dominated = false;
    for (const Vec& u : vs)
      if (u != v && leq(u, v)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(v);
  }
  return out;
}

inline std::vector<Vec> max_antichain(std::vector<Vec> vs) {
  for (size_t i = 1; i < vs.size(); ++i) check_dim(vs[0], vs[i]);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Vec> out;
  for (const Vec& v : vs) {
    bool dominated = false;
    for (const Vec& u : vs)
      if (u != v && leq(v, u)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(v);
  }
  return out;
}

// Right-closed subset of N^k, stored by its finite antichain of minimal
// generators. No generators = the empty set; generator 0 = the full set.
struct UpSet {
  size_t dim = 0;
  std::vector<Vec> generators;

  UpSet() = default;
  UpSet(size_t k, std::vector<Vec> gens) : dim(k), generators(min_antichain(std::move(gens))) {
    for (const Vec& g : generators)
      if (g.size() != dim) throw dimension_error("UpSet generator dimension mismatch");
  }
  static UpSet empty(size_t k) { return UpSet(k, {}); }
  static UpSet full(size_t k) { return UpSet(k, {Vec(k, 0)}); }

  bool member(const Vec& z) const {
    if (z.size() != dim) throw dimension_error("UpSet membership dimension mismatch");
    for (const Vec& g : generators)
      if (leq(g, z)) return true;
    return false;
  }
};

// Left-closed subset of N^k, stored by pairwise-incomparable omega-vector
// ideal bounds. No bounds = the empty set; bound (w,...,w) = the full set.
struct DownSet {
  size_t dim = 0;
  std::vector<Vec> bounds;

  DownSet() = default;
  DownSet(size_t k, std::vector<Vec> bs) : dim(k), bounds(max_antichain(std::move(bs))) {
    for (const Vec& b : bounds)
      if (b.size() != dim) throw dimension_error("DownSet bound dimension mismatch");
  }
  static DownSet empty(size_t k) { return DownSet(k, {}); }
  static DownSet full(size_t k) { return DownSet(k, {Vec(k, omega)}); }

  bool member(const Vec& z) const {
    if (z.size() != dim) throw dimension_error("DownSet membership dimension mismatch");
    for (const Vec& b : bounds)
      if (leq(z, b)) return true;
    return false;
  }
};

inline UpSet upset_intersect(const UpSet& x, const UpSet& y) {
  if (x.dim != y.dim) throw dimension_error("upset_intersect dimension mismatch");
  std::vector<Vec> gens;
  for (const Vec& g : x.generators)
    for (const Vec& h : y.generators) gens.push_back(vec_max(g, h));
  return UpSet(x.dim, std::move(gens));
}

inline DownSet downset_intersect(const DownSet& x, const DownSet& y) {
  if (x.dim != y.dim) throw dimension_error("downset_intersect dimension mismatch");
  std::vector<Vec> bs;
  for (const Vec& b : x.bounds)
    for (const Vec& c : y.bounds) bs.push_back(vec_min(b, c));
  return DownSet(x.dim, std::move(bs));
}

// Complement of an up-set is left-closed; the complement of a single
// generator g is the union over coordinates i with g[i] > 0 of the ideal
// with bound g[i]-1 at i and omega elsewhere. Generators intersect.
inline DownSet upset_complement(const UpSet& x) {
  DownSet result = DownSet::full(x.dim);
  for (const Vec& g : x.generators) {
    std::vector<Vec> bs;
    for (size_t i = 0; i < x.dim; ++i) {
      if (g[i] > 0) {
        Vec b(x.dim, omega);
        b[i] = g[i] - 1;
        bs.push_back(std::move(b));
      }
    }
    result = downset_intersect(result, DownSet(x.dim, std::move(bs)));
  }
  return result;
}

// Dual construction; only finite coordinates of a bound constrain.
inline UpSet downset_complement(const DownSet& x) {
  UpSet result = UpSet::full(x.dim);
  for (const Vec& b : x.bounds) {
    std::vector<Vec> gens;
    for (size_t i = 0; i < x.dim; ++i) {
      if (b[i] != omega) {
        Vec g(x.dim, 0);
        g[i] = b[i] + 1;
        gens.push_back(std::move(g));
      }
    }
    result = upset_intersect(result, UpSet(x.dim, std::move(gens)));
  }
  return result;
}

// Order-convex set: intersection of a right-closed and a left-closed set.
struct ConvexSet {
  UpSet lower;
  DownSet upper;

  ConvexSet() = default;
  ConvexSet(UpSet lo, DownSet up) : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.dim != upper.dim) throw dimension_error("ConvexSet dimension mismatch");
  }
  static ConvexSet full(size_t k) { return ConvexSet(UpSet::full(k), DownSet::full(k)); }
  static ConvexSet singleton(const Vec& v) {
    return ConvexSet(UpSet(v.size(), {v}), DownSet(v.size(), {v}));
  }

  size_t dim() const { return lower.dim; }
  bool member(const Vec& z) const { return lower.member(z) && upper.member(z); }
};

inline bool convex_member(const ConvexSet& x, const Vec& z) { return x.member(z); }

}  // namespace pnp
