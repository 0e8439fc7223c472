#pragma once

#include <memory>
#include <numeric>
#include <optional>

#include "pnpersist/omega_sets.hpp"
#include "pnpersist/state_space.hpp"

namespace pnp {

struct exactness_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Outcome { Holds, Violated, Unknown };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Violated: return "violated";
    default: return "unknown";
  }
}

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<Marking> witness_marking;
  std::optional<FiringWord> witness_word;
  std::string note;
  long long states_explored = 0;
  bool exact = true;

  static Verdict holds(std::string note = {}) { return {Outcome::Holds, {}, {}, std::move(note)}; }
  static Verdict violated(std::string note = {}) {
    return {Outcome::Violated, {}, {}, std::move(note)};
  }
  static Verdict unknown(std::string note) {
    Verdict v{Outcome::Unknown, {}, {}, std::move(note)};
    v.exact = false;
    return v;
  }
};

// Shared breadth-first exploration of [M0>, reused across oracle queries.
struct ReachCache {
  std::vector<Marking> markings;  // BFS order, [0] = M0
  std::unordered_map<Vec, int, VecHash> index;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> via;
  std::vector<std::array<int, 3>> edges;  // only among stored markings
  bool complete = false;
  long long budget_used = 0;
  // lazily computed per transition: markings from which t is live
  std::unordered_map<int, std::vector<char>> live;

  FiringWord word_to(const Net& net, int i) const {
    FiringWord w;
    for (int cur = i; parent[cur] >= 0; cur = parent[cur])
      w.push_back(net.transitions[via[cur]]);
    std::reverse(w.begin(), w.end());
    return w;
  }
};

struct OracleConfig {
  long long state_budget = 1000000;
  bool require_exact = false;
  std::shared_ptr<ReachCache> cache = std::make_shared<ReachCache>();
};

inline ReachCache& ensure_cache(const Net& net, const OracleConfig& cfg) {
  ReachCache& c = *cfg.cache;
  if (!c.markings.empty() && (c.complete || c.budget_used >= cfg.state_budget)) return c;
  c = ReachCache{};
  c.budget_used = cfg.state_budget;
  c.markings.push_back(net.initial);
  c.index.emplace(net.initial, 0);
  c.parent.push_back(-1);
  c.via.push_back(-1);
  c.complete = true;
  for (size_t i = 0; i < c.markings.size(); ++i) {
    Vec m = c.markings[i];
    for (int t = 0; t < (int)net.num_transitions(); ++t) {
      if (!enabled(net, m, t)) continue;
      Vec next = fire(net, m, t);
      auto it = c.index.find(next);
      if (it != c.index.end()) {
        c.edges.push_back({(int)i, t, it->second});
        continue;
      }
      if ((long long)c.markings.size() >= cfg.state_budget) {
        c.complete = false;
        continue;
      }
      int ni = (int)c.markings.size();
      c.index.emplace(next, ni);
      c.markings.push_back(std::move(next));
      c.parent.push_back((int)i);
      c.via.push_back(t);
      c.edges.push_back({(int)i, t, ni});
    }
  }
  return c;
}

// Backward closure, over the complete reachability graph, of the markings
// enabling t: exactly the markings from which t is live.
inline const std::vector<char>& live_set(const Net& net, ReachCache& cache, int t) {
  auto it = cache.live.find(t);
  if (it != cache.live.end()) return it->second;
  std::vector<char> live(cache.markings.size(), 0);
  std::deque<int> q;
  for (size_t i = 0; i < cache.markings.size(); ++i)
    if (enabled(net, cache.markings[i], t)) {
      live[i] = 1;
      q.push_back((int)i);
    }
  // predecessor lists
  std::vector<std::vector<int>> preds(cache.markings.size());
  for (const auto& e : cache.edges) preds[e[2]].push_back(e[0]);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int p : preds[v])
      if (!live[p]) {
        live[p] = 1;
        q.push_back(p);
      }
  }
  return cache.live.emplace(t, std::move(live)).first->second;
}

namespace detail {

// Sound unreachability refuter: a reachable target satisfies
// target - M0 = C x for the incidence matrix C and some rational x.
// Rational Gaussian elimination over long long pairs; dimensions are tiny.
inline bool state_equation_consistent(const Net& net, const Marking& target) {
  size_t np = net.num_places(), nt = net.num_transitions();
  // augmented matrix [C | target - M0], rows = places
  std::vector<std::vector<long long>> num(np, std::vector<long long>(nt + 1));
  std::vector<std::vector<long long>> den(np, std::vector<long long>(nt + 1, 1));
  for (size_t p = 0; p < np; ++p) {
    for (size_t t = 0; t < nt; ++t) num[p][t] = net.post[t][p] - net.pre[t][p];
    num[p][nt] = target[p] - net.initial[p];
  }
  auto set = [&](size_t r, size_t c, long long n, long long d) {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num[r][c] = n;
    den[r][c] = d == 0 ? 1 : d;
  };
  size_t row = 0;
  for (size_t col = 0; col < nt && row < np; ++col) {
    size_t piv = row;
    while (piv < np && num[piv][col] == 0) ++piv;
    if (piv == np) continue;
    std::swap(num[piv], num[row]);
    std::swap(den[piv], den[row]);
    for (size_t r = 0; r < np; ++r) {
      if (r == row || num[r][col] == 0) continue;
      // r := r - (r[col]/row[col]) * row
      long long fn = num[r][col] * den[row][col];
      long long fd = den[r][col] * num[row][col];
      for (size_t c2 = col; c2 <= nt; ++c2) {
        // r[c2] - f * row[c2]
        long long an = num[r][c2] * fd * den[row][c2] - fn * num[row][c2] * den[r][c2];
        long long ad = den[r][c2] * fd * den[row][c2];
        set(r, c2, an, ad);
      }
    }
    ++row;
  }
  // inconsistent iff a zero row of C has nonzero right-hand side
  for (size_t r = 0; r < np; ++r) {
    bool zero = true;
    for (size_t t = 0; t < nt; ++t)
      if (num[r][t] != 0) {
        zero = false;
        break;
      }
    if (zero && num[r][nt] != 0) return false;
  }
  return true;
}

}  // namespace detail

// "Is some member of x reachable?" Exact whenever the breadth-first closure
// completes within budget; a coverability pre-check on the lower generators
// can refute without completing; honest Unknown otherwise.
inline Verdict set_reachable(const Net& net, const ConvexSet& x, const OracleConfig& cfg) {
  if (!net.pure)
    throw unsupported_error("set_reachable is unsupported on inhibitor nets");
  if (x.dim() != net.num_places())
    throw dimension_error("set dimension does not match the net");
  if (x.lower.generators.empty() || x.upper.bounds.empty())
    return Verdict::violated("the set is empty");
  ReachCache& cache = ensure_cache(net, cfg);
  for (size_t i = 0; i < cache.markings.size(); ++i) {
    if (x.member(cache.markings[i])) {
      Verdict v = Verdict::holds("member reachable");
      v.witness_marking = cache.markings[i];
      v.witness_word = cache.word_to(net, (int)i);
      v.states_explored = (long long)cache.markings.size();
      v.exact = true;
      return v;
    }
  }
  if (cache.complete) {
    Verdict v = Verdict::violated("enumeration complete, no member reachable");
    v.states_explored = (long long)cache.markings.size();
    return v;
  }
  // coverability pre-check: a reachable member would cover some generator
  bool some_coverable = false;
  for (const Vec& g : x.lower.generators)
    if (is_coverable(net, net.initial, g)) {
      some_coverable = true;
      break;
    }
  if (!some_coverable) {
    Verdict v = Verdict::violated("no lower generator coverable");
    v.states_explored = (long long)cache.markings.size();
    return v;
  }
  if (cfg.require_exact)
    throw exactness_error("exact verdict required but state budget exhausted");
  Verdict v = Verdict::unknown("state budget exhausted at " +
                               std::to_string(cache.markings.size()) + " markings");
  v.states_explored = (long long)cache.markings.size();
  return v;
}

inline Verdict marking_reachable(const Net& net, const Marking& m, const OracleConfig& cfg) {
  if (!net.pure)
    throw unsupported_error("marking_reachable is unsupported on inhibitor nets");
  check_dim(m, net.initial);
  if (!detail::state_equation_consistent(net, m))
    return Verdict::violated("state equation refutes reachability");
  return set_reachable(net, ConvexSet::singleton(m), cfg);
}

}  // namespace pnp
