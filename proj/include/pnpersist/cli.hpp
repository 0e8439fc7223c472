#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnpersist/net_format.hpp"
#include "pnpersist/persistence.hpp"

namespace pnp {

namespace detail {

inline Net load_net(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_net(buf.str());
}

inline nlohmann::json witness_json(const Verdict& v) {
  nlohmann::json w = nlohmann::json::object();
  if (v.witness_marking) w["marking"] = show(*v.witness_marking);
  if (v.witness_word) w["word"] = *v.witness_word;
  return w;
}

inline int verdict_exit(Outcome o) {
  switch (o) {
    case Outcome::Holds: return 0;
    case Outcome::Violated: return 1;
    default: return 2;
  }
}

struct Reporter {
  bool json = false;
  nlohmann::json report = nlohmann::json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void finish(std::ostream& out, const std::string& human) {
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (json)
      out << report.dump(2) << "\n";
    else
      out << human;
  }
};

inline std::string human_verdict(const Verdict& v) {
  std::string s = std::string(to_string(v.outcome));
  if (!v.note.empty()) s += ": " + v.note;
  s += "\n";
  if (v.witness_marking) s += "witness marking: " + show(*v.witness_marking) + "\n";
  if (v.witness_word) {
    s += "witness word:";
    for (const auto& t : *v.witness_word) s += " " + t;
    s += "\n";
  }
  return s;
}

inline void fill_verdict(nlohmann::json& report, const Verdict& v) {
  report["verdict"] = to_string(v.outcome);
  if (!v.note.empty()) report["note"] = v.note;
  auto w = witness_json(v);
  if (!w.empty()) report["witness"] = w;
  report["oracle"] = {{"states", v.states_explored}, {"exact", v.exact}};
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Petri-net persistence analyzer"};
  app.require_subcommand(1);

  long long default_budget = 1000000;
  if (const char* env = std::getenv("PNPERSIST_BUDGET")) default_budget = std::atoll(env);

  struct Common {
    std::string file;
    bool json = false;
    long long budget;
  };
  auto add_common = [&](CLI::App* sub, Common& c) {
    c.budget = default_budget;
    sub->add_option("--file", c.file, "net description file")->required();
    sub->add_flag("--json", c.json, "machine-readable report");
    sub->add_option("--budget", c.budget, "reachability state budget");
  };

  Common chk, cov, mre, kab, cls, rt;
  std::string property, marking_csv, step, cover_csv, dot_path, root_csv;
  long long k = -1, depth = 0;
  std::string mre_a, mre_b, kab_a, kab_b;

  CLI::App* c_check = app.add_subcommand("check", "decide a persistence property");
  add_common(c_check, chk);
  c_check->add_option("--property", property, "ee|ll|el|el-k")->required();
  c_check->add_option("--k", k, "postponement bound for el-k");
  c_check->add_option("--marking", marking_csv, "marking-level check at this marking");
  c_check->add_option("--step", step, "step-level check for this transition");

  CLI::App* c_cov = app.add_subcommand("coverability", "coverability graph and queries");
  add_common(c_cov, cov);
  c_cov->add_option("--dot", dot_path, "write the graph in DOT format");
  c_cov->add_option("--cover", cover_csv, "decide coverability of this marking");

  CLI::App* c_mre = app.add_subcommand("min-re", "minimal co-enabling reachable markings");
  add_common(c_mre, mre);
  c_mre->add_option("a", mre_a)->required();
  c_mre->add_option("b", mre_b)->required();

  CLI::App* c_kab = app.add_subcommand("k-ab", "minimal postponement bound for a pair");
  add_common(c_kab, kab);
  c_kab->add_option("a", kab_a)->required();
  c_kab->add_option("b", kab_b)->required();

  CLI::App* c_cls = app.add_subcommand("classify", "place the net in the e/l hierarchy");
  add_common(c_cls, cls);

  CLI::App* c_rt = app.add_subcommand("reach-tree", "depth-bounded reachability tree");
  add_common(c_rt, rt);
  c_rt->add_option("--depth", depth, "tree depth")->required();
  c_rt->add_option("--dot", dot_path, "write the tree in DOT format");
  c_rt->add_option("--root", root_csv, "root marking (defaults to the initial one)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 3;
  }

  try {
    detail::Reporter rep;
    if (c_check->parsed()) {
      Net net = detail::load_net(chk.file);
      rep.json = chk.json;
      rep.report["net"] = net.name;
      rep.report["command"] = "check";
      rep.report["parameters"] = {{"property", property}, {"budget", chk.budget}};
      if (k >= 0) rep.report["parameters"]["k"] = k;
      OracleConfig cfg;
      cfg.state_budget = chk.budget;
      Verdict v;
      if (property == "el-k") {
        if (k < 0) throw std::invalid_argument("el-k requires --k");
        if (!marking_csv.empty()) {
          Marking m = parse_vector(marking_csv, net.num_places());
          bool ok = step.empty() ? elk_marking(net, m, k) : elk_step(net, m, step, k);
          v = ok ? Verdict::holds("e/l-" + std::to_string(k) + "-persistent")
                 : Verdict::violated("not e/l-" + std::to_string(k) + "-persistent");
        } else {
          v = elk_net(net, k, cfg);
        }
      } else {
        if (!marking_csv.empty() || !step.empty())
          throw std::invalid_argument("--marking/--step apply to el-k only");
        PersistenceKind kind = property == "ee"   ? PersistenceKind::EE
                               : property == "ll" ? PersistenceKind::LL
                               : property == "el" ? PersistenceKind::EL
                                                  : throw std::invalid_argument(
                                                        "unknown property '" + property + "'");
        v = classic_net(net, kind, cfg);
      }
      detail::fill_verdict(rep.report, v);
      rep.finish(out, detail::human_verdict(v));
      return detail::verdict_exit(v.outcome);
    }
    if (c_cov->parsed()) {
      Net net = detail::load_net(cov.file);
      rep.json = cov.json;
      rep.report["net"] = net.name;
      rep.report["command"] = "coverability";
      CoverabilityGraph g = build_coverability_graph(net);
      rep.report["vertices"] = (long long)g.vertices.size();
      rep.report["edges"] = (long long)g.edges.size();
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        dot << to_dot(g, net, net.name);
      }
      Verdict v = Verdict::holds("graph built");
      if (!cover_csv.empty()) {
        Marking target = parse_vector(cover_csv, net.num_places());
        bool covered = false;
        for (const Vec& vert : g.vertices)
          if (leq(target, vert)) covered = true;
        v = covered ? Verdict::holds(show(target) + " is coverable")
                    : Verdict::violated(show(target) + " is not coverable");
      }
      detail::fill_verdict(rep.report, v);
      rep.finish(out, detail::human_verdict(v));
      return detail::verdict_exit(v.outcome);
    }
    if (c_mre->parsed()) {
      Net net = detail::load_net(mre.file);
      rep.json = mre.json;
      rep.report["net"] = net.name;
      rep.report["command"] = "min-re";
      rep.report["parameters"] = {{"a", mre_a}, {"b", mre_b}, {"budget", mre.budget}};
      OracleConfig cfg;
      cfg.state_budget = mre.budget;
      MinBasis basis = min_re(net, mre_a, mre_b, cfg);
      if (basis.status == Outcome::Unknown) {
        rep.report["verdict"] = "unknown";
        rep.report["note"] = basis.note;
        rep.finish(out, "unknown: " + basis.note + "\n");
        return 2;
      }
      rep.report["verdict"] = "holds";
      auto arr = nlohmann::json::array();
      std::string human;
      for (const Vec& m : basis.minima) {
        arr.push_back(show(m));
        human += show(m) + "\n";
      }
      rep.report["minima"] = arr;
      rep.finish(out, human.empty() ? "empty\n" : human);
      return 0;
    }
    if (c_kab->parsed()) {
      Net net = detail::load_net(kab.file);
      rep.json = kab.json;
      rep.report["net"] = net.name;
      rep.report["command"] = "k-ab";
      rep.report["parameters"] = {{"a", kab_a}, {"b", kab_b}, {"budget", kab.budget}};
      OracleConfig cfg;
      cfg.state_budget = kab.budget;
      KabResult r = k_ab(net, kab_a, kab_b, cfg);
      switch (r.status) {
        case KabResult::Status::Value:
          rep.report["verdict"] = "holds";
          rep.report["k"] = r.k;
          rep.finish(out, "k = " + std::to_string(r.k) + "\n");
          return 0;
        case KabResult::Status::Absent:
          rep.report["verdict"] = "violated";
          rep.report["note"] = r.reason;
          rep.finish(out, "absent: " + r.reason + "\n");
          return 1;
        default:
          rep.report["verdict"] = "unknown";
          rep.report["note"] = r.reason;
          rep.finish(out, "unknown: " + r.reason + "\n");
          return 2;
      }
    }
    if (c_cls->parsed()) {
      Net net = detail::load_net(cls.file);
      rep.json = cls.json;
      rep.report["net"] = net.name;
      rep.report["command"] = "classify";
      rep.report["parameters"] = {{"budget", cls.budget}};
      OracleConfig cfg;
      cfg.state_budget = cls.budget;
      Classification c = classify(net, cfg);
      switch (c.kind) {
        case Classification::Kind::ELK:
          rep.report["verdict"] = "holds";
          rep.report["class"] = "el-k";
          rep.report["k"] = c.k;
          rep.finish(out, "e/l-" + std::to_string(c.k) + "-persistent (k = " +
                              std::to_string(c.k) + ")\n");
          return 0;
        case Classification::Kind::NotEL:
          rep.report["verdict"] = "violated";
          rep.report["class"] = "not-el";
          rep.report["witness_pair"] = c.witness_pair;
          rep.finish(out, "not e/l-persistent: " + c.note + " at pair " + c.witness_pair + "\n");
          return 1;
        default:
          rep.report["verdict"] = "unknown";
          rep.report["note"] = c.note;
          rep.finish(out, "unknown: " + c.note + "\n");
          return 2;
      }
    }
    if (c_rt->parsed()) {
      Net net = detail::load_net(rt.file);
      rep.json = rt.json;
      rep.report["net"] = net.name;
      rep.report["command"] = "reach-tree";
      Vec root = root_csv.empty() ? net.initial : parse_vector(root_csv, net.num_places());
      ReachTree tree = build_k_component(net, root, depth);
      rep.report["nodes"] = (long long)tree.nodes.size();
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        dot << to_dot(tree, net, net.name);
      }
      rep.report["verdict"] = "holds";
      rep.finish(out, std::to_string(tree.nodes.size()) + " nodes\n");
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

}  // namespace pnp
