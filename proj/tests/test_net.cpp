#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brute.hpp"
#include "corpus.hpp"

using namespace pnp;

TEST_CASE("enabled") {
  Net net1 = corpus::n1(), net3 = corpus::n3(), net6 = corpus::n6();
  CHECK(enabled(net1, {1}, "a"));
  CHECK_FALSE(enabled(net3, {0, 1}, "b"));
  CHECK_FALSE(enabled(net6, {1, 1}, "b"));  // inhibitor entry q marked
  CHECK(enabled(net6, {1, 0}, "b"));
  CHECK_THROWS_AS(enabled(net1, {1}, "zz"), identifier_error);
}

TEST_CASE("fire") {
  Net net2 = corpus::n2(), net3 = corpus::n3(), net5 = corpus::n5();
  CHECK(fire(net2, {1, 0}, "a") == Marking{0, 1});
  CHECK(fire(net3, {1, 0}, "b") == Marking{1, 0});  // self-loop identity
  CHECK(fire(net5, {1, 0}, "a") == Marking{1, 1});
  Marking m{1, 0};
  fire(net2, m, "a");
  CHECK(m == Marking{1, 0});  // input unmodified
  CHECK_THROWS_AS(fire(net2, {0, 0}, "a"), firing_error);
}

TEST_CASE("fire_word") {
  Net net2 = corpus::n2(), net4 = corpus::n4();
  CHECK(fire_word(net2, {1, 0}, {"a", "b"}) == Marking{1, 0});
  CHECK(fire_word(net2, {1, 0}, {}) == Marking{1, 0});
  CHECK(fire_word(net4, {1, 0, 0, 0}, {"a", "c", "d", "e"}) == Marking{1, 0, 0, 0});
  try {
    fire_word(net2, {1, 0}, {"a", "a"});
    FAIL("expected firing_error");
  } catch (const firing_error& e) {
    CHECK(e.position == 1);
    CHECK(e.transition == "a");
    CHECK(e.marking == Marking{0, 1});
  }
}

TEST_CASE("parikh") {
  Net net2 = corpus::n2(), net4 = corpus::n4();
  CHECK(parikh({"a", "b", "a"}, net2) == Vec{2, 1});
  CHECK(parikh({}, net2) == Vec{0, 0});
  CHECK(parikh({"a", "c", "d", "e"}, net4) == Vec{1, 0, 1, 1, 1});
}

TEST_CASE("disables_at") {
  Net net1 = corpus::n1(), net2 = corpus::n2(), net3 = corpus::n3();
  CHECK(disables_at(net1, {1}, "a", "b"));
  CHECK_FALSE(disables_at(net3, {1, 0}, "b", "a"));
  CHECK_FALSE(disables_at(net2, {1, 0}, "a", "b"));  // b not enabled at all
  CHECK_THROWS_AS(disables_at(net1, {1}, "a", "a"), std::invalid_argument);
}

namespace {

// All words of length len firable from m.
void firable_words(const Net& net, const Marking& m, int len, FiringWord& cur,
                   std::vector<FiringWord>& out) {
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  for (const auto& t : net.transitions) {
    if (!enabled(net, m, t)) continue;
    cur.push_back(t);
    firable_words(net, fire(net, m, t), len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("diamond and big diamond properties") {
  for (const Net& net : {corpus::n2(), corpus::n3(), corpus::n4(), corpus::figure_net()}) {
    auto reach = brute::reachable(net);
    REQUIRE(reach);
    for (const Marking& m : *reach) {
      // diamond
      for (const auto& a : net.transitions)
        for (const auto& b : net.transitions) {
          if (a == b || !enabled(net, m, a) || !enabled(net, m, b)) continue;
          bool ab = true, ba = true;
          Marking mab, mba;
          try {
            mab = fire_word(net, m, {a, b});
          } catch (const firing_error&) {
            ab = false;
          }
          try {
            mba = fire_word(net, m, {b, a});
          } catch (const firing_error&) {
            ba = false;
          }
          if (ab && ba) CHECK(mab == mba);
        }
      // big diamond: all Parikh-equivalent firable permutations agree
      FiringWord cur;
      std::vector<FiringWord> words;
      firable_words(net, m, 3, cur, words);
      for (const auto& u : words)
        for (const auto& v : words)
          if (parikh(u, net) == parikh(v, net))
            CHECK(fire_word(net, m, u) == fire_word(net, m, v));
    }
  }
}

TEST_CASE("monotonicity of pure nets") {
  std::mt19937 rng(7);
  brute::RandomNets gen(11);
  for (int i = 0; i < 30; ++i) {
    auto [net, reach] = gen.next_bounded();
    std::uniform_int_distribution<size_t> pick(0, reach.size() - 1);
    Marking m = reach[pick(rng)];
    FiringWord cur;
    std::vector<FiringWord> words;
    firable_words(net, m, 3, cur, words);
    Marking bigger = m;
    for (auto& x : bigger) x += std::uniform_int_distribution<Val>(0, 2)(rng);
    for (const auto& w : words) CHECK_NOTHROW(fire_word(net, bigger, w));
  }
}

TEST_CASE("inhibitor nets are not monotone") {
  Net net6 = corpus::n6();
  Marking m{1, 0}, bigger{1, 1};
  CHECK(leq(m, bigger));
  CHECK(enabled(net6, m, "b"));
  CHECK_FALSE(enabled(net6, bigger, "b"));
}

TEST_CASE("firing basics") {
  brute::RandomNets gen(23);
  for (int i = 0; i < 20; ++i) {
    auto [net, reach] = gen.next_bounded();
    for (const Marking& m : reach)
      for (const auto& t : net.transitions) {
        if (!enabled(net, m, t)) continue;
        Marking next = fire(net, m, t);
        for (Val x : next) CHECK(x >= 0);
        CHECK(fire_word(net, m, {t}) == next);
      }
  }
}

TEST_CASE("make_net validation") {
  CHECK_THROWS_AS(make_net("x", {"p", "p"}, {}, {0, 0}), identifier_error);
  CHECK_THROWS_AS(make_net("x", {"p"}, {{"p", {}, {}, {}}}, {0}), identifier_error);
  CHECK_THROWS_AS(make_net("x", {"p"}, {}, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(make_net("x", {"p"}, {}, {0, 0}), dimension_error);
  Net n = make_net("x", {"p"}, {{"t", {"p"}, {"p"}, {}}}, {1});
  CHECK(n.pure);
  Net i = make_net("x", {"p"}, {{"t", {}, {}, {"p"}}}, {1});
  CHECK_FALSE(i.pure);
}
