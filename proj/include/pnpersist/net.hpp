#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pnpersist/vec.hpp"

namespace pnp {

struct identifier_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct firing_error : std::runtime_error {
  size_t position;
  std::string transition;
  Vec marking;
  firing_error(size_t pos, std::string t, Vec m)
      : std::runtime_error("transition '" + t + "' not enabled at " + show(m) +
                           " (position " + std::to_string(pos) + ")"),
        position(pos),
        transition(std::move(t)),
        marking(std::move(m)) {}
};

using Marking = Vec;
using FiringWord = std::vector<std::string>;

// Immutable p/t-net or inhibitor net. Arcs are unweighted: every pre/post
// entry is 0 or 1. `pure` is true iff no transition has inhibitor entries;
// analyses that rely on monotonicity refuse impure nets explicitly.
struct Net {
  std::string name;
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  std::vector<Vec> pre;      // per transition, dimension |P|
  std::vector<Vec> post;     // per transition, dimension |P|
  std::vector<Vec> inhibit;  // per transition, 0/1 flags over places
  Marking initial;
  bool pure = true;

  std::unordered_map<std::string, int> place_idx;
  std::unordered_map<std::string, int> trans_idx;

  size_t num_places() const { return places.size(); }
  size_t num_transitions() const { return transitions.size(); }

  int pindex(const std::string& id) const {
    auto it = place_idx.find(id);
    if (it == place_idx.end()) throw identifier_error("unknown place '" + id + "'");
    return it->second;
  }
  int tindex(const std::string& id) const {
    auto it = trans_idx.find(id);
    if (it == trans_idx.end())
      throw identifier_error("unknown transition '" + id + "'");
    return it->second;
  }
};

struct TransSpec {
  std::string id;
  std::vector<std::string> in, out, inhibit;
};

inline Net make_net(std::string name, std::vector<std::string> places,
                    const std::vector<TransSpec>& transitions, Marking initial) {
  Net n;
  n.name = std::move(name);
  n.places = std::move(places);
  for (size_t i = 0; i < n.places.size(); ++i) {
    if (!n.place_idx.emplace(n.places[i], (int)i).second)
      throw identifier_error("duplicate place '" + n.places[i] + "'");
  }
  if (initial.size() != n.places.size())
    throw dimension_error("initial marking dimension mismatch");
  for (Val x : initial)
    if (x < 0) throw std::invalid_argument("negative initial token count");
  n.initial = std::move(initial);
  for (const auto& t : transitions) {
    if (n.place_idx.count(t.id))
      throw identifier_error("identifier '" + t.id + "' used for place and transition");
    if (!n.trans_idx.emplace(t.id, (int)n.transitions.size()).second)
      throw identifier_error("duplicate transition '" + t.id + "'");
    n.transitions.push_back(t.id);
    Vec pre(n.places.size(), 0), post(n.places.size(), 0), inh(n.places.size(), 0);
    for (const auto& p : t.in) pre[n.pindex(p)] = 1;
    for (const auto& p : t.out) post[n.pindex(p)] = 1;
    for (const auto& p : t.inhibit) {
      inh[n.pindex(p)] = 1;
      n.pure = false;
    }
    n.pre.push_back(std::move(pre));
    n.post.push_back(std::move(post));
    n.inhibit.push_back(std::move(inh));
  }
  return n;
}

inline bool enabled(const Net& net, const Marking& m, int t) {
  check_dim(m, net.initial);
  if (!leq(net.pre[t], m)) return false;
  if (!net.pure) {
    const Vec& inh = net.inhibit[t];
    for (size_t i = 0; i < m.size(); ++i)
      if (inh[i] && m[i] != 0) return false;
  }
  return true;
}

inline bool enabled(const Net& net, const Marking& m, const std::string& t) {
  return enabled(net, m, net.tindex(t));
}

inline Marking fire(const Net& net, const Marking& m, int t) {
  if (!enabled(net, m, t)) throw firing_error(0, net.transitions[t], m);
  return vec_add(vec_sub(m, net.pre[t]), net.post[t]);
}

inline Marking fire(const Net& net, const Marking& m, const std::string& t) {
  return fire(net, m, net.tindex(t));
}

inline Marking fire_word(const Net& net, const Marking& m, const FiringWord& w) {
  Marking cur = m;
  for (size_t i = 0; i < w.size(); ++i) {
    int t = net.tindex(w[i]);
    if (!enabled(net, cur, t)) throw firing_error(i, w[i], cur);
    cur = vec_add(vec_sub(cur, net.pre[t]), net.post[t]);
  }
  return cur;
}

inline Vec parikh(const FiringWord& w, const Net& net) {
  Vec counts(net.num_transitions(), 0);
  for (const auto& t : w) ++counts[net.tindex(t)];
  return counts;
}

inline bool disables_at(const Net& net, const Marking& m, const std::string& a,
                        const std::string& b) {
  if (a == b) throw std::invalid_argument("disables_at requires a != b");
  int ai = net.tindex(a), bi = net.tindex(b);
  if (!enabled(net, m, ai)) throw firing_error(0, a, m);
  return enabled(net, m, bi) && !enabled(net, fire(net, m, ai), bi);
}

}  // namespace pnp
