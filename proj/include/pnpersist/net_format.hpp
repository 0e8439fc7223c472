#pragma once

#include <sstream>

#include "pnpersist/net.hpp"

namespace pnp {

struct parse_error : std::runtime_error {
  int line, column;
  parse_error(int l, int c, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

namespace detail {

struct Token {
  std::string text;
  int column;
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (isspace((unsigned char)line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !isspace((unsigned char)line[j]) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), (int)i + 1});
    i = j;
  }
  return out;
}

}  // namespace detail

// Line-oriented net description:
//   net <name>
//   place <id> [init <n>]
//   trans <id> [in <id> ...] [out <id> ...] [inhibit <id> ...]
inline Net parse_net(const std::string& text) {
  std::string name;
  std::vector<std::string> places;
  std::vector<Val> init;
  std::unordered_map<std::string, int> seen_places;
  std::vector<TransSpec> specs;
  std::unordered_map<std::string, int> seen_trans;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_net = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "net") {
      if (toks.size() != 2) throw parse_error(lineno, toks[0].column, "expected: net <name>");
      name = toks[1].text;
      have_net = true;
    } else if (kw == "place") {
      if (toks.size() < 2) throw parse_error(lineno, toks[0].column, "expected: place <id>");
      const std::string& id = toks[1].text;
      if (seen_places.count(id) || seen_trans.count(id))
        throw parse_error(lineno, toks[1].column, "duplicate identifier '" + id + "'");
      Val tokens = 0;
      if (toks.size() > 2) {
        if (toks[2].text != "init" || toks.size() != 4)
          throw parse_error(lineno, toks[2].column, "expected: place <id> [init <n>]");
        try {
          size_t pos = 0;
          tokens = std::stoll(toks[3].text, &pos);
          if (pos != toks[3].text.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw parse_error(lineno, toks[3].column, "bad token count '" + toks[3].text + "'");
        }
        if (tokens < 0)
          throw parse_error(lineno, toks[3].column, "negative initial token count");
      }
      seen_places.emplace(id, (int)places.size());
      places.push_back(id);
      init.push_back(tokens);
    } else if (kw == "trans") {
      if (toks.size() < 2) throw parse_error(lineno, toks[0].column, "expected: trans <id>");
      TransSpec spec;
      spec.id = toks[1].text;
      if (seen_places.count(spec.id) || seen_trans.count(spec.id))
        throw parse_error(lineno, toks[1].column, "duplicate identifier '" + spec.id + "'");
      seen_trans.emplace(spec.id, (int)specs.size());
      std::vector<std::string>* target = nullptr;
      for (size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        if (t == "in")
          target = &spec.in;
        else if (t == "out")
          target = &spec.out;
        else if (t == "inhibit")
          target = &spec.inhibit;
        else {
          if (!target)
            throw parse_error(lineno, toks[i].column, "expected in/out/inhibit before '" + t + "'");
          if (!seen_places.count(t))
            throw parse_error(lineno, toks[i].column, "unknown place '" + t + "'");
          target->push_back(t);
        }
      }
      specs.push_back(std::move(spec));
    } else {
      throw parse_error(lineno, toks[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!have_net) throw parse_error(lineno, 1, "missing 'net <name>' line");
  if (places.empty()) throw parse_error(lineno, 1, "a net needs at least one place");
  return make_net(name, places, specs, init);
}

inline std::string print_net(const Net& net) {
  std::string s = "net " + net.name + "\n";
  for (size_t p = 0; p < net.num_places(); ++p) {
    s += "place " + net.places[p];
    if (net.initial[p] > 0) s += " init " + std::to_string(net.initial[p]);
    s += "\n";
  }
  for (size_t t = 0; t < net.num_transitions(); ++t) {
    s += "trans " + net.transitions[t];
    auto emit = [&](const char* kw, const Vec& flags) {
      bool first = true;
      for (size_t p = 0; p < net.num_places(); ++p) {
        if (!flags[p]) continue;
        if (first) {
          s += std::string(" ") + kw;
          first = false;
        }
        s += " " + net.places[p];
      }
    };
    emit("in", net.pre[t]);
    emit("out", net.post[t]);
    emit("inhibit", net.inhibit[t]);
    s += "\n";
  }
  return s;
}

inline Vec parse_vector(const std::string& text, size_t dim) {
  Vec v;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    // trim
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty vector component");
    cur = cur.substr(a, b - a + 1);
    if (cur == "w") {
      v.push_back(omega);
      continue;
    }
    size_t pos = 0;
    Val x = std::stoll(cur, &pos);
    if (pos != cur.size()) throw std::invalid_argument("bad vector component '" + cur + "'");
    if (x < 0) throw std::invalid_argument("negative vector component");
    v.push_back(x);
  }
  if (v.size() != dim)
    throw dimension_error("vector has " + std::to_string(v.size()) +
                          " components, expected " + std::to_string(dim));
  return v;
}

}  // namespace pnp
