#pragma once

#include <functional>

#include "pnpersist/reach_oracle.hpp"

namespace pnp {

struct oracle_contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// RES-property oracle for a right-closed X: query(v) answers "does the
// down-closure of the omega-vector v intersect X?". Must be monotone in v.
struct ResOracle {
  size_t dim = 0;
  std::function<Verdict(const Vec&)> query;
};

struct MinBasis {
  Outcome status = Outcome::Unknown;  // Holds = computed exactly
  std::vector<Vec> minima;
  std::string note;
};

namespace detail {

// Observed query results; cross-checked so that a Violated above a Holds
// (or vice versa) surfaces as a contract violation instead of a wrong basis.
struct QueryLog {
  std::vector<std::pair<Vec, bool>> seen;
  void record(const Vec& v, bool holds) {
    for (const auto& [u, h] : seen) {
      if (h && !holds && leq(u, v))
        throw oracle_contract_error("non-monotone RES oracle: Holds at " + show(u) +
                                    ", Violated at " + show(v));
      if (!h && holds && leq(v, u))
        throw oracle_contract_error("non-monotone RES oracle: Violated at " + show(u) +
                                    ", Holds at " + show(v));
    }
    seen.emplace_back(v, holds);
  }
};

}  // namespace detail

// Residual-descent computation of Min(X): repeatedly pick a residual ideal
// bound whose query holds, extract one minimal element of X inside it by
// coordinatewise minimization (galloping then binary search), and subtract
// its up-closure from the residual. Any Unknown aborts the whole run.
inline MinBasis compute_min(const ResOracle& oracle, long long round_cap = 10000) {
  constexpr Val gallop_cap = 1ll << 40;
  detail::QueryLog log;
  bool unknown = false;
  std::string unknown_note;
  auto ask = [&](const Vec& v) -> std::optional<bool> {
    Verdict r = oracle.query(v);
    if (r.outcome == Outcome::Unknown) {
      unknown = true;
      unknown_note = r.note;
      return std::nullopt;
    }
    bool holds = r.outcome == Outcome::Holds;
    log.record(v, holds);
    return holds;
  };

  std::vector<Vec> minima;
  DownSet residual = DownSet::full(oracle.dim);
  for (long long round = 0;; ++round) {
    if (round > round_cap)
      throw oracle_contract_error("residual descent exceeded the round cap");
    std::optional<Vec> pick;
    for (const Vec& b : residual.bounds) {
      auto r = ask(b);
      if (!r) return {Outcome::Unknown, {}, unknown_note};
      if (*r) {
        pick = b;
        break;
      }
    }
    if (!pick) break;  // all residual bounds answer Violated
    Vec z = *pick;
    for (size_t i = 0; i < z.size(); ++i) {
      if (z[i] == 0) continue;
      // least value of coordinate i keeping the query alive
      auto holds_at = [&](Val n) -> std::optional<bool> {
        Vec probe = z;
        probe[i] = n;
        return ask(probe);
      };
      Val lo = -1, hi = -1;
      for (Val step = 0;; step = step == 0 ? 1 : step * 2) {
        Val candidate = step;
        if (z[i] != omega && candidate >= z[i]) {
          hi = z[i];  // query already holds at z itself
          break;
        }
        if (candidate > gallop_cap)
          throw oracle_contract_error(
              "no finite value satisfies the RES query in coordinate " +
              std::to_string(i));
        auto r = holds_at(candidate);
        if (!r) return {Outcome::Unknown, {}, unknown_note};
        if (*r) {
          hi = candidate;
          break;
        }
        lo = candidate;
      }
      while (hi - lo > 1) {
        Val mid = lo + (hi - lo) / 2;
        auto r = holds_at(mid);
        if (!r) return {Outcome::Unknown, {}, unknown_note};
        if (*r)
          hi = mid;
        else
          lo = mid;
      }
      z[i] = hi;
    }
    minima.push_back(z);
    residual = downset_intersect(residual, upset_complement(UpSet(oracle.dim, {z})));
  }
  return {Outcome::Holds, min_antichain(std::move(minima)), {}};
}

// RES oracle for the up-closure of the reachable markings co-enabling a and
// b: the down-closure of v meets it iff some reachable marking lies between
// the minimal co-enabling marking and v.
inline ResOracle res_re(const Net& net, const std::string& a, const std::string& b,
                        const OracleConfig& cfg) {
  if (a == b) throw std::invalid_argument("res_re requires a != b");
  if (!net.pure) throw unsupported_error("res_re is unsupported on inhibitor nets");
  int ai = net.tindex(a), bi = net.tindex(b);
  Vec min_enabling = vec_max(net.pre[ai], net.pre[bi]);
  size_t dim = net.num_places();
  return {dim, [=, &net](const Vec& v) -> Verdict {
            if (!leq(min_enabling, v)) return Verdict::violated("bound below the co-enabling minimum");
            return set_reachable(
                net, ConvexSet(UpSet(dim, {min_enabling}), DownSet(dim, {v})), cfg);
          }};
}

// RES oracle for the markings from which firing a leaves b reachable within
// k further steps. Decided exactly through the depth-bounded omega tree.
inline ResOracle res_eakb(const Net& net, const std::string& a, const std::string& b,
                          long long k) {
  if (a == b) throw std::invalid_argument("res_eakb requires a != b");
  if (!net.pure) throw unsupported_error("res_eakb is unsupported on inhibitor nets");
  int ai = net.tindex(a), bi = net.tindex(b);
  return {net.num_places(), [=, &net](const Vec& v) -> Verdict {
            if (!leq(net.pre[ai], v)) return Verdict::violated("a not enabled below the bound");
            Vec after = vec_add(vec_sub(v, net.pre[ai]), net.post[ai]);
            return occurs_within(net, after, bi, k + 1)
                       ? Verdict::holds()
                       : Verdict::violated("b unreachable within the bound");
          }};
}

}  // namespace pnp
