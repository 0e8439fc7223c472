#include <catch2/catch_amalgamated.hpp>

#include "brute.hpp"
#include "corpus.hpp"
#include "pnpersist/reach_oracle.hpp"

using namespace pnp;

TEST_CASE("set_reachable") {
  Net net1 = corpus::n1(), net2 = corpus::n2(), net5 = corpus::n5();
  OracleConfig cfg;

  Verdict v = set_reachable(net1, ConvexSet(UpSet(1, {{1}}), DownSet::full(1)), cfg);
  CHECK(v.outcome == Outcome::Holds);
  REQUIRE(v.witness_marking);
  CHECK(*v.witness_marking == Marking{1});

  OracleConfig cfg2;
  Verdict w = set_reachable(net2, ConvexSet(UpSet(2, {{1, 1}}), DownSet::full(2)), cfg2);
  CHECK(w.outcome == Outcome::Violated);

  OracleConfig small;
  small.state_budget = 3;
  Verdict u = set_reachable(net5, ConvexSet(UpSet(2, {{0, 5}}), DownSet(2, {{0, 5}})), small);
  CHECK(u.outcome == Outcome::Unknown);
  CHECK_FALSE(u.exact);

  small.require_exact = true;
  small.cache = std::make_shared<ReachCache>();
  CHECK_THROWS_AS(
      set_reachable(net5, ConvexSet(UpSet(2, {{0, 5}}), DownSet(2, {{0, 5}})), small),
      exactness_error);

  CHECK_THROWS_AS(set_reachable(net2, ConvexSet(UpSet(1, {{1}}), DownSet::full(1)), cfg2),
                  dimension_error);
  CHECK_THROWS_AS(
      set_reachable(corpus::n6(), ConvexSet(UpSet(2, {{1, 1}}), DownSet::full(2)), cfg),
      unsupported_error);
  CHECK(set_reachable(net2, ConvexSet(UpSet::empty(2), DownSet::full(2)), cfg2).outcome ==
        Outcome::Violated);
}

TEST_CASE("marking_reachable") {
  Net net2 = corpus::n2(), net5 = corpus::n5();
  OracleConfig cfg2;
  CHECK(marking_reachable(net2, {0, 1}, cfg2).outcome == Outcome::Holds);
  CHECK(marking_reachable(net2, {1, 1}, cfg2).outcome == Outcome::Violated);

  // refuted by the state equation even though p2 alone can grow past any bound
  OracleConfig small;
  small.state_budget = 3;
  Verdict v = marking_reachable(net5, {0, 1}, small);
  CHECK(v.outcome == Outcome::Violated);
}

TEST_CASE("positive verdicts carry replayable witnesses") {
  for (const Net& net : {corpus::n2(), corpus::n3(), corpus::n4(), corpus::figure_net()}) {
    auto reach = brute::reachable(net);
    REQUIRE(reach);
    OracleConfig cfg;
    for (const Marking& m : *reach) {
      Verdict v = marking_reachable(net, m, cfg);
      REQUIRE(v.outcome == Outcome::Holds);
      REQUIRE(v.witness_marking);
      REQUIRE(v.witness_word);
      CHECK(fire_word(net, net.initial, *v.witness_word) == m);
      CHECK(*v.witness_marking == m);
    }
  }
}

TEST_CASE("violated agrees with brute force on bounded nets") {
  brute::RandomNets gen(101);
  for (int i = 0; i < 25; ++i) {
    auto [net, reach] = gen.next_bounded();
    std::unordered_set<Vec, VecHash> set(reach.begin(), reach.end());
    OracleConfig cfg;
    // probe every reachable marking plus small perturbations of each
    std::vector<Marking> probes = reach;
    for (const Marking& m : reach) {
      Marking up = m;
      up[0] += 1;
      probes.push_back(up);
    }
    for (const Marking& m : probes) {
      Verdict v = marking_reachable(net, m, cfg);
      REQUIRE(v.outcome != Outcome::Unknown);
      CHECK((v.outcome == Outcome::Holds) == (set.count(m) > 0));
    }
  }
}

TEST_CASE("budget growth only resolves Unknown") {
  Net net5 = corpus::n5();
  ConvexSet x(UpSet(2, {{1, 4}}), DownSet::full(2));
  for (long long budget : {2ll, 3ll, 8ll, 50ll}) {
    OracleConfig cfg;
    cfg.state_budget = budget;
    Verdict v = set_reachable(net5, x, cfg);
    // [1,4] is reachable; small budgets may miss it but must never refute
    CHECK(v.outcome != Outcome::Violated);
    if (budget >= 5) CHECK(v.outcome == Outcome::Holds);
  }
}

TEST_CASE("coverability pre-check refutes without exhausting the budget") {
  Net net5 = corpus::n5();
  OracleConfig cfg;
  cfg.state_budget = 3;
  // any member needs 2 tokens in p1, never coverable
  Verdict v = set_reachable(net5, ConvexSet(UpSet(2, {{2, 0}}), DownSet::full(2)), cfg);
  CHECK(v.outcome == Outcome::Violated);
}

TEST_CASE("the shared cache is reused across queries") {
  Net net4 = corpus::n4();
  OracleConfig cfg;
  Verdict a = marking_reachable(net4, {0, 1, 0, 0}, cfg);
  ReachCache* before = cfg.cache.get();
  Verdict b = marking_reachable(net4, {0, 0, 0, 1}, cfg);
  CHECK(a.outcome == Outcome::Holds);
  CHECK(b.outcome == Outcome::Holds);
  CHECK(cfg.cache.get() == before);
  CHECK(cfg.cache->complete);
}
