#pragma once

// Packing, covering and tiling by translates, the packing-type condition, and
// asymptotic uniform upper densities where they have a closed form.
//
// Densities:
//   * Finite group with m_G(G) = 1: the a.u.u.d. of a finite Lambda is #Lambda
//     (take C = G for the upper bound and V = G for the lower bound).
//   * Periodic Lambda = R + pZ in Z: every window of length p contains exactly
//     #R points, so counts in any interval of length L differ from L #R / p by
//     at most #R, and both the lim sup and the inf-sup forms give #R / p.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "delsarte/error.hpp"
#include "delsarte/group.hpp"

namespace delsarte {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    require(d != 0, ErrorKind::invalid_input, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Lambda = residues + period * Z.
struct PeriodicSet {
  int period = 1;
  std::vector<int> residues;

  void validate() const {
    require(period >= 1, ErrorKind::invalid_input, "period must be positive");
    for (int r : residues) {
      require(r >= 0 && r < period, ErrorKind::invalid_input, "residue outside [0, period)");
    }
  }
};

inline bool packing_type(const Subset& w, const Subset& lambda) {
  const Group& g = w.group();
  require(g.same_elements(lambda.group()), ErrorKind::invalid_input,
          "packing_type: sets live on different groups");
  const auto pts = lambda.elements();
  for (int a : pts) {
    for (int b : pts) {
      const int d = g.sub(a, b);
      if (d != 0 && w.contains(d)) return false;
    }
  }
  return true;
}

// (Lambda - Lambda) intersect (H - H) contained in {0}.
inline bool packs_strict(const Subset& h, const Subset& lambda) {
  return packing_type(difference_set(h, h), lambda);
}

// count[x] = sum over lambda of chi_H(x - lambda).
inline std::vector<int> cover_counts(const Subset& h, const Subset& lambda) {
  const Group& g = h.group();
  require(g.same_elements(lambda.group()), ErrorKind::invalid_input,
          "cover_counts: sets live on different groups");
  std::vector<int> count(g.size(), 0);
  for (int l : lambda.elements()) {
    for (int x : h.elements()) ++count[g.add(x, l)];
  }
  return count;
}

inline bool covers(const Subset& h, const Subset& lambda) {
  const auto c = cover_counts(h, lambda);
  return std::all_of(c.begin(), c.end(), [](int v) { return v >= 1; });
}

inline bool tiles_strict(const Subset& h, const Subset& lambda) {
  return packs_strict(h, lambda) && covers(h, lambda);
}

inline Rational auud_finite(const Group& g, const Subset& lambda) {
  require(g.is_probability(), ErrorKind::invalid_input,
          "auud_finite needs a probability-normalized group");
  require(g.same_elements(lambda.group()), ErrorKind::invalid_input,
          "auud_finite: translation set lives on a different group");
  return Rational(lambda.count());
}

inline Rational auud_periodic(const PeriodicSet& s) {
  s.validate();
  std::vector<int> r = s.residues;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return Rational(static_cast<std::int64_t>(r.size()), s.period);
}

struct DensitySearchResult {
  Rational density;
  PeriodicSet witness;
  int max_period = 0;
  std::int64_t nodes_visited = 0;
};

namespace detail {

class PeriodicCliqueSearch {
 public:
  PeriodicCliqueSearch(int period, const std::vector<std::int64_t>& forbidden) : p_(period) {
    bad_.assign(p_, 0);
    for (std::int64_t d : forbidden) {
      bad_[static_cast<int>(d % p_)] = 1;
      bad_[static_cast<int>((p_ - d % p_) % p_)] = 1;
    }
  }

  // Largest residue set containing 0 whose differences avoid the forbidden
  // classes; the first maximum in lexicographic order is kept.
  std::vector<int> run(std::int64_t& nodes) {
    if (bad_[0]) return {};
    current_ = {0};
    best_ = current_;
    extend(1, nodes);
    return best_;
  }

 private:
  bool compatible(int r) const {
    for (int s : current_) {
      if (bad_[(r - s + p_) % p_]) return false;
    }
    return true;
  }

  void extend(int next, std::int64_t& nodes) {
    ++nodes;
    for (int r = next; r < p_; ++r) {
      if (static_cast<int>(current_.size()) + (p_ - r) <= static_cast<int>(best_.size())) return;
      if (!compatible(r)) continue;
      current_.push_back(r);
      if (current_.size() > best_.size()) best_ = current_;
      extend(r + 1, nodes);
      current_.pop_back();
    }
  }

  int p_;
  std::vector<char> bad_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace detail

inline constexpr int kMaxSearchPeriod = 24;

// Densest periodic L (period <= max_period) with (L - L) avoiding +-forbidden.
// Only periodic patterns up to the bound are certified.
inline DensitySearchResult max_density_search(std::span<const std::int64_t> forbidden,
                                              int max_period) {
  require(max_period >= 1 && max_period <= kMaxSearchPeriod, ErrorKind::invalid_input,
          "max_period must be in [1, 24]");
  DensitySearchResult res;
  res.max_period = max_period;
  std::vector<std::int64_t> f;
  for (std::int64_t d : forbidden) {
    require(d != 0, ErrorKind::invalid_input, "0 cannot be a forbidden difference");
    f.push_back(d < 0 ? -d : d);
  }
  if (f.empty()) {
    res.density = Rational(1);
    res.witness = {1, {0}};
    return res;
  }
  res.density = Rational(0);
  res.witness = {1, {}};
  for (int p = 1; p <= max_period; ++p) {
    detail::PeriodicCliqueSearch search(p, f);
    const auto r = search.run(res.nodes_visited);
    const Rational d(static_cast<std::int64_t>(r.size()), p);
    if (d > res.density) {
      res.density = d;
      res.witness = {p, r};
    }
  }
  return res;
}

struct Interval {
  double lo;
  double hi;
  bool closed_lo = false;
  bool closed_hi = false;
};

// Positive integers lying in a union of intervals (the integer differences a
// set in Z must avoid when its real difference set must avoid the union).
inline std::vector<std::int64_t> integer_shadow(std::span<const Interval> intervals) {
  std::vector<std::int64_t> out;
  for (const auto& iv : intervals) {
    require(iv.lo <= iv.hi, ErrorKind::invalid_input, "interval endpoints out of order");
    require(std::isfinite(iv.lo) && std::isfinite(iv.hi), ErrorKind::invalid_input,
            "interval endpoints must be finite");
    const auto first = static_cast<std::int64_t>(std::ceil(iv.lo));
    const auto last = static_cast<std::int64_t>(std::floor(iv.hi));
    for (std::int64_t v = first; v <= last; ++v) {
      if (v <= 0) continue;
      if (!iv.closed_lo && static_cast<double>(v) == iv.lo) continue;
      if (!iv.closed_hi && static_cast<double>(v) == iv.hi) continue;
      out.push_back(v);
    }
    // Negative members contribute their absolute values.
    for (std::int64_t v = first; v <= last; ++v) {
      if (v >= 0) continue;
      if (!iv.closed_lo && static_cast<double>(v) == iv.lo) continue;
      if (!iv.closed_hi && static_cast<double>(v) == iv.hi) continue;
      out.push_back(-v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct DensityBoundsReport {
  bool packs = false;
  bool covers = false;
  bool tiles = false;
  Rational density;          // a.u.u.d. of Lambda
  Rational inverse_measure;  // 1 / m_G(H)
  std::string relation;      // "<=", ">=", "=" or "none"
  bool pass = true;
};

// Packing gives D(Lambda) <= 1/m(H), covering gives >=, strict tiling gives =.
inline DensityBoundsReport density_bounds_check(const Group& g, const Subset& h,
                                                const Subset& lambda) {
  require(!h.is_empty(), ErrorKind::invalid_input, "density_bounds_check: H is empty");
  DensityBoundsReport rep;
  rep.packs = packs_strict(h, lambda);
  rep.covers = covers(h, lambda);
  rep.tiles = rep.packs && rep.covers;
  rep.density = auud_finite(g, lambda);
  rep.inverse_measure = Rational(g.size(), h.count());
  if (rep.tiles) {
    rep.relation = "=";
    rep.pass = rep.density == rep.inverse_measure;
  } else if (rep.packs) {
    rep.relation = "<=";
    rep.pass = rep.density <= rep.inverse_measure;
  } else if (rep.covers) {
    rep.relation = ">=";
    rep.pass = rep.density >= rep.inverse_measure;
  } else {
    rep.relation = "none";
    rep.pass = true;
  }
  return rep;
}

}  // namespace delsarte
