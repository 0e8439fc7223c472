#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "pnpersist/cli.hpp"
#include "pnpersist/net_format.hpp"

using namespace pnp;

namespace {

const char* n2_text = R"(# token bounce
net n2
place p1 init 1
place p2
trans a in p1 out p2
trans b in p2 out p1
)";

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string(std::tmpnam(nullptr)) + ".pn";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("parse_net") {
  Net net = parse_net(n2_text);
  CHECK(net.name == "n2");
  CHECK(net.places == std::vector<std::string>{"p1", "p2"});
  CHECK(net.transitions == std::vector<std::string>{"a", "b"});
  CHECK(net.initial == Marking{1, 0});
  CHECK(net.pure);

  Net loop = parse_net("net x\nplace p init 1\ntrans a in p out p\n");
  CHECK(fire(loop, {1}, "a") == Marking{1});

  Net inh = parse_net("net x\nplace p init 1\nplace q\ntrans a in p inhibit q\n");
  CHECK_FALSE(inh.pure);
}

TEST_CASE("parse_net error contracts") {
  try {
    parse_net("net x\nplace p\ntrans a in nosuch\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("nosuch") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_net("net x\nplace p\nplace p\n"), parse_error);
  CHECK_THROWS_AS(parse_net("net x\nplace p init -2\n"), parse_error);
  CHECK_THROWS_AS(parse_net("net x\nplace p\nbogus q\n"), parse_error);
  CHECK_THROWS_AS(parse_net("place p\n"), parse_error);
}

TEST_CASE("print_net round-trips") {
  for (const Net& net : {corpus::n2(), corpus::n4(), corpus::n6(), corpus::n7(),
                         corpus::figure_net()}) {
    Net back = parse_net(print_net(net));
    CHECK(back.places == net.places);
    CHECK(back.transitions == net.transitions);
    CHECK(back.initial == net.initial);
    CHECK(back.pre == net.pre);
    CHECK(back.post == net.post);
    CHECK(back.inhibit == net.inhibit);
    CHECK(print_net(back) == print_net(net));
  }
}

TEST_CASE("parse_vector") {
  CHECK(parse_vector("1,0,3", 3) == Vec{1, 0, 3});
  CHECK(parse_vector("1, w ,0", 3) == Vec{1, omega, 0});
  CHECK_THROWS_AS(parse_vector("1,2", 3), dimension_error);
  CHECK_THROWS_AS(parse_vector("1,x", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector("1,-2", 2), std::invalid_argument);
}

TEST_CASE("check command exit codes match verdicts") {
  TempFile n3(print_net(corpus::n3())), n1(print_net(corpus::n1()));
  CHECK(run({"check", "--file", n3.path, "--property", "el-k", "--k", "1"}) == 0);
  CHECK(run({"check", "--file", n3.path, "--property", "el-k", "--k", "0"}) == 1);
  std::string report;
  CHECK(run({"check", "--file", n1.path, "--property", "el", "--json"}, &report) == 1);
  auto j = nlohmann::json::parse(report);
  CHECK(j["verdict"] == "violated");
  CHECK(j["net"] == "n1");
  CHECK(j["note"].get<std::string>().find("(a,b)") != std::string::npos);
}

TEST_CASE("check command marking and step levels") {
  TempFile n3(print_net(corpus::n3()));
  CHECK(run({"check", "--file", n3.path, "--property", "el-k", "--k", "1", "--marking",
             "1,0"}) == 0);
  CHECK(run({"check", "--file", n3.path, "--property", "el-k", "--k", "0", "--marking",
             "1,0"}) == 1);
  CHECK(run({"check", "--file", n3.path, "--property", "el-k", "--k", "0", "--marking",
             "1,0", "--step", "b"}) == 0);
}

TEST_CASE("classify and k-ab commands") {
  TempFile n4(print_net(corpus::n4())), n1(print_net(corpus::n1()));
  std::string report;
  CHECK(run({"classify", "--file", n4.path, "--json"}, &report) == 0);
  auto j = nlohmann::json::parse(report);
  CHECK(j["k"] == 3);
  CHECK(run({"classify", "--file", n1.path}) == 1);
  CHECK(run({"k-ab", "--file", n4.path, "a", "b", "--json"}, &report) == 0);
  CHECK(nlohmann::json::parse(report)["k"] == 3);
  CHECK(run({"k-ab", "--file", n1.path, "a", "b"}) == 1);
}

TEST_CASE("min-re command") {
  TempFile fig(print_net(corpus::figure_net()));
  std::string report;
  CHECK(run({"min-re", "--file", fig.path, "a", "b", "--json"}, &report) == 0);
  auto j = nlohmann::json::parse(report);
  std::set<std::string> minima(j["minima"].begin(), j["minima"].end());
  CHECK(minima == std::set<std::string>{"1,1,1", "2,0,1"});
}

TEST_CASE("coverability command with DOT export") {
  TempFile n5(print_net(corpus::n5()));
  std::string dot_path = std::string(std::tmpnam(nullptr)) + ".dot";
  CHECK(run({"coverability", "--file", n5.path, "--dot", dot_path, "--cover", "1,3"}) == 0);
  CHECK(run({"coverability", "--file", n5.path, "--cover", "2,0"}) == 1);
  std::ifstream dot(dot_path);
  std::stringstream buf;
  buf << dot.rdbuf();
  CHECK(buf.str().find("1,w") != std::string::npos);
  std::remove(dot_path.c_str());
}

TEST_CASE("reach-tree command") {
  TempFile n2(print_net(corpus::n2()));
  std::string report;
  CHECK(run({"reach-tree", "--file", n2.path, "--depth", "2", "--json"}, &report) == 0);
  CHECK(nlohmann::json::parse(report)["nodes"] == 3);
}

TEST_CASE("usage and input errors exit 3") {
  CHECK(run({"check", "--property", "el"}) == 3);  // missing --file
  CHECK(run({"frobnicate"}) == 3);
  TempFile n3(print_net(corpus::n3()));
  CHECK(run({"check", "--file", n3.path, "--property", "zz"}) == 3);
  CHECK(run({"check", "--file", n3.path, "--property", "el-k"}) == 3);  // missing --k
  CHECK(run({"check", "--file", "/nonexistent.pn", "--property", "el"}) == 3);
}

TEST_CASE("budget flag produces honest unknowns") {
  TempFile n5(print_net(corpus::n5()));
  // a single-transition net has no pairs: classification is exact regardless
  CHECK(run({"classify", "--file", n5.path, "--budget", "3"}) == 0);
  // but a reachability question below the budget stays unknown
  std::string report;
  Net net5 = corpus::n5();
  OracleConfig cfg;
  cfg.state_budget = 3;
  Verdict v = set_reachable(net5, ConvexSet(UpSet(2, {{0, 5}}), DownSet(2, {{0, 5}})), cfg);
  CHECK(v.outcome == Outcome::Unknown);
}

TEST_CASE("sample net files parse and agree with the builders") {
  for (const char* name : {"n1", "n2", "n3", "n4", "n5", "n6", "n7", "figure"}) {
    std::ifstream in(std::string("nets/") + name + ".pn");
    if (!in.is_open()) in.open(std::string("../nets/") + name + ".pn");
    REQUIRE(in.is_open());
    std::stringstream buf;
    buf << in.rdbuf();
    Net net = parse_net(buf.str());
    CHECK(net.name == name);
  }
}
