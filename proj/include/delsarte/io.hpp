#pragma once

// JSON in and out. Groups are {"orders": [...], "normalization": ...}; sets
// are residue lists, coordinate-tuple lists, "empty", "all", or the interval
// shorthand "[lo,hi]". Emitted sets are sorted coordinate tuples.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "delsarte/density.hpp"
#include "delsarte/error.hpp"
#include "delsarte/group.hpp"
#include "json.hpp"

namespace delsarte::io {

using json = nlohmann::json;

// 1-based line and column of a byte offset.
inline std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the offset one past the offending byte.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, at);
    std::string msg = e.what();
    // Keep only the reason; the position is reported above.
    const auto pos = msg.find(": ", msg.find("parse error"));
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    fail(ErrorKind::invalid_input, what + ": malformed JSON at line " + std::to_string(line) +
                                       ", column " + std::to_string(col) + ": " + msg);
  }
}

inline long long as_integer(const json& v, const std::string& what) {
  require(v.is_number_integer(), ErrorKind::invalid_input, what + ": expected an integer");
  return v.get<long long>();
}

inline Measure parse_measure(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "probability") return Measure::probability();
    if (s == "counting") return Measure::counting();
    fail(ErrorKind::invalid_input, "normalization must be \"probability\", \"counting\" or {\"weight\": w}");
  }
  if (j.is_object() && j.contains("weight") && j["weight"].is_number()) {
    return Measure::with_weight(j["weight"].get<double>());
  }
  fail(ErrorKind::invalid_input, "normalization must be \"probability\", \"counting\" or {\"weight\": w}");
}

inline Group parse_group(const json& j) {
  require(j.is_object(), ErrorKind::invalid_input, "group must be a JSON object");
  require(j.contains("orders") && j["orders"].is_array(), ErrorKind::invalid_input,
          "group needs an \"orders\" array");
  std::vector<int> orders;
  for (const auto& v : j["orders"]) orders.push_back(static_cast<int>(as_integer(v, "orders")));
  const Measure m = j.contains("normalization") ? parse_measure(j["normalization"])
                                                : Measure::probability();
  return Group(orders, m);
}

inline json group_json(const Group& g) {
  json norm;
  switch (g.measure().kind) {
    case Normalization::probability: norm = "probability"; break;
    case Normalization::counting: norm = "counting"; break;
    case Normalization::weight: norm = json{{"weight", g.weight()}}; break;
  }
  return {{"orders", g.orders()}, {"normalization", norm}, {"size", g.size()}, {"weight", g.weight()}};
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace detail

inline Subset parse_set_json(const Group& g, const json& j, const std::string& what) {
  if (j.is_string()) {
    const std::string s = detail::trim(j.get<std::string>());
    if (s == "empty") return Subset::empty(g);
    if (s == "all" || s == "full") return Subset::full(g);
    // "[lo,hi]": every residue from lo to hi.
    const json inner = parse(s, what);
    require(inner.is_array() && inner.size() == 2, ErrorKind::invalid_input,
            what + ": interval shorthand is \"[lo,hi]\"");
    const long long lo = as_integer(inner[0], what);
    const long long hi = as_integer(inner[1], what);
    require(lo <= hi, ErrorKind::invalid_input, what + ": interval needs lo <= hi");
    require(hi - lo < 1000000, ErrorKind::invalid_input, what + ": interval too long");
    return Subset::interval(g, lo, hi);
  }
  if (j.is_object() && j.contains("interval")) return parse_set_json(g, json(j["interval"].dump()), what);
  require(j.is_array(), ErrorKind::invalid_input,
          what + ": a set is a list, \"empty\", \"all\" or \"[lo,hi]\"");
  Subset out(g);
  for (const auto& v : j) {
    if (v.is_array()) {
      require(static_cast<int>(v.size()) == g.rank(), ErrorKind::invalid_input,
              what + ": tuple length must equal the group rank");
      std::vector<long long> c;
      for (const auto& x : v) c.push_back(as_integer(x, what));
      out.insert(g.index_of(c));
    } else {
      require(g.rank() == 1, ErrorKind::invalid_input,
              what + ": bare residues need a cyclic group; use coordinate tuples");
      out.insert(g.index_of({as_integer(v, what)}));
    }
  }
  return out;
}

// `text` is either JSON or one of the bare words empty / all.
inline Subset parse_set(const Group& g, const std::string& text, const std::string& what) {
  const std::string t = detail::trim(text);
  if (t == "empty" || t == "all" || t == "full") return parse_set_json(g, json(t), what);
  return parse_set_json(g, parse(t, what), what);
}

// Symmetric set; asymmetric input is replaced by S n (-S) and a warning is
// appended.
inline SymSet parse_symset(const Group& g, const std::string& text, const std::string& what,
                           std::vector<std::string>& warnings) {
  const SymSet s = SymSet::symmetrize(parse_set(g, text, what));
  if (s.symmetrized()) {
    warnings.push_back(what + " was not 0-symmetric; replaced by its intersection with its negation");
  }
  return s;
}

inline json set_json(const Subset& s) {
  json out = json::array();
  for (int x : s.elements()) out.push_back(s.group().coords_of(x));
  return out;
}

inline json rational_json(const Rational& r) {
  return {{"num", r.num}, {"den", r.den}, {"text", r.str()}, {"value", r.value()}};
}

inline std::vector<Interval> parse_intervals(const json& j) {
  // [{"lo": -5, "hi": -3, "closed_lo": false, "closed_hi": false}, ...]
  require(j.is_array(), ErrorKind::invalid_input, "intervals must be a JSON array");
  std::vector<Interval> out;
  for (const auto& v : j) {
    require(v.is_object() && v.contains("lo") && v.contains("hi"), ErrorKind::invalid_input,
            "each interval needs \"lo\" and \"hi\"");
    auto bound = [](const json& x) -> double {
      if (x.is_number()) return x.get<double>();
      require(x.is_string(), ErrorKind::invalid_input, "interval bounds are numbers or \"p/q\"");
      const auto s = x.get<std::string>();
      const auto slash = s.find('/');
      try {
        if (slash == std::string::npos) return std::stod(s);
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))).value();
      } catch (const std::logic_error&) {
        fail(ErrorKind::invalid_input, "bad interval bound '" + s + "'");
      }
    };
    Interval iv{bound(v["lo"]), bound(v["hi"]), v.value("closed_lo", false), v.value("closed_hi", false)};
    out.push_back(iv);
  }
  return out;
}

}  // namespace delsarte::io
