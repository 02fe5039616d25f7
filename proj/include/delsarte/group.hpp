#pragma once

// Finite abelian groups Z_{n1} x ... x Z_{nk} with a Haar weight per point,
// subsets, real functions and the discrete Fourier transform.
//
// Elements are indexed lexicographically over coordinate tuples with the
// first coordinate most significant: index = ((c0*n1 + c1)*n2 + c2)...
// Characters use the same indexing; character k is
//   chi_k(x) = exp(2 pi i sum_j k_j x_j / n_j).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "delsarte/error.hpp"

namespace delsarte {

enum class Normalization { probability, counting, weight };

struct Measure {
  Normalization kind = Normalization::probability;
  double weight = 1.0;  // only read when kind == weight

  static Measure probability() { return {Normalization::probability, 1.0}; }
  static Measure counting() { return {Normalization::counting, 1.0}; }
  static Measure with_weight(double w) { return {Normalization::weight, w}; }
};

class Group {
 public:
  Group() : Group(std::vector<int>{1}, Measure::counting()) {}

  Group(std::vector<int> orders, Measure measure) : orders_(std::move(orders)), measure_(measure) {
    require(!orders_.empty(), ErrorKind::invalid_input, "group needs at least one cyclic factor");
    size_ = 1;
    for (int n : orders_) {
      require(n >= 1, ErrorKind::invalid_input, "cyclic factor orders must be >= 1");
      require(size_ <= (1 << 24) / n, ErrorKind::invalid_input, "group too large");
      size_ *= n;
    }
    strides_.assign(orders_.size(), 1);
    for (int j = static_cast<int>(orders_.size()) - 2; j >= 0; --j) {
      strides_[j] = strides_[j + 1] * orders_[j + 1];
    }
    switch (measure_.kind) {
      case Normalization::probability: weight_ = 1.0 / size_; break;
      case Normalization::counting: weight_ = 1.0; break;
      case Normalization::weight:
        require(measure_.weight > 0 && std::isfinite(measure_.weight), ErrorKind::invalid_input,
                "Haar weight must be positive and finite");
        weight_ = measure_.weight;
        break;
    }
  }

  static Group cyclic(int n, Measure measure = Measure::probability()) {
    return Group({n}, measure);
  }

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int size() const { return size_; }
  double weight() const { return weight_; }
  const Measure& measure() const { return measure_; }
  double total_mass() const { return weight_ * size_; }
  bool is_probability() const { return std::abs(total_mass() - 1.0) <= 1e-12; }

  // Same group with a different Haar normalization.
  Group with_measure(Measure measure) const { return Group(orders_, measure); }

  int index_of(std::span<const long long> coords) const {
    require(coords.size() == orders_.size(), ErrorKind::invalid_input,
            "coordinate tuple has wrong length");
    int index = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      long long c = coords[j] % orders_[j];
      if (c < 0) c += orders_[j];
      index += static_cast<int>(c) * strides_[j];
    }
    return index;
  }

  int index_of(std::initializer_list<long long> coords) const {
    return index_of(std::span<const long long>(coords.begin(), coords.size()));
  }

  std::vector<int> coords_of(int index) const {
    std::vector<int> c(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      c[j] = (index / strides_[j]) % orders_[j];
    }
    return c;
  }

  int coord(int index, int j) const { return (index / strides_[j]) % orders_[j]; }

  int neg(int x) const {
    int r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      const int c = coord(x, static_cast<int>(j));
      r += ((orders_[j] - c) % orders_[j]) * strides_[j];
    }
    return r;
  }

  int add(int x, int y) const {
    int r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      const int jj = static_cast<int>(j);
      r += ((coord(x, jj) + coord(y, jj)) % orders_[j]) * strides_[j];
    }
    return r;
  }

  int sub(int x, int y) const { return add(x, neg(y)); }

  int scale(int x, long long m) const {
    int r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      long long c = (static_cast<long long>(coord(x, static_cast<int>(j))) * m) % orders_[j];
      if (c < 0) c += orders_[j];
      r += static_cast<int>(c) * strides_[j];
    }
    return r;
  }

  // Pairing <k, x> as a fraction of a full turn, in [0, 1).
  double pairing(int k, int x) const {
    double turns = 0.0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      const int jj = static_cast<int>(j);
      const long long p = static_cast<long long>(coord(k, jj)) * coord(x, jj) % orders_[j];
      turns += static_cast<double>(p) / orders_[j];
    }
    return turns - std::floor(turns);
  }

  // Representatives of the orbits {x, -x}, smallest index first, with sizes.
  struct Orbit {
    int rep;
    int partner;  // -rep
    int size;     // 1 or 2
  };

  std::vector<Orbit> orbits() const {
    std::vector<Orbit> out;
    for (int x = 0; x < size_; ++x) {
      const int nx = neg(x);
      if (nx < x) continue;
      out.push_back({x, nx, nx == x ? 1 : 2});
    }
    return out;
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.orders_ == b.orders_ && a.weight_ == b.weight_;
  }

  bool same_elements(const Group& other) const { return orders_ == other.orders_; }

 private:
  std::vector<int> orders_;
  Measure measure_;
  std::vector<int> strides_;
  int size_ = 1;
  double weight_ = 1.0;
};

inline Group make_group(std::vector<int> orders, Measure measure) {
  return Group(std::move(orders), measure);
}

// Product group G1 x G2; Haar weights multiply.
inline Group product_group(const Group& a, const Group& b) {
  std::vector<int> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  const bool prob = a.measure().kind == Normalization::probability &&
                    b.measure().kind == Normalization::probability;
  const bool count = a.measure().kind == Normalization::counting &&
                     b.measure().kind == Normalization::counting;
  if (prob) return Group(orders, Measure::probability());
  if (count) return Group(orders, Measure::counting());
  return Group(orders, Measure::with_weight(a.weight() * b.weight()));
}

// ---------------------------------------------------------------------------
// Subsets

class Subset {
 public:
  Subset() = default;
  explicit Subset(Group group) : group_(std::move(group)), mask_(group_.size(), 0) {}

  static Subset empty(const Group& g) { return Subset(g); }

  static Subset full(const Group& g) {
    Subset s(g);
    std::fill(s.mask_.begin(), s.mask_.end(), 1);
    return s;
  }

  static Subset of(const Group& g, std::span<const int> indices) {
    Subset s(g);
    for (int i : indices) {
      require(i >= 0 && i < g.size(), ErrorKind::invalid_input, "element index out of range");
      s.mask_[i] = 1;
    }
    return s;
  }

  static Subset of(const Group& g, std::initializer_list<int> indices) {
    return of(g, std::span<const int>(indices.begin(), indices.size()));
  }

  // Residues of a rank-1 group; negative values wrap.
  static Subset residues(const Group& g, std::span<const long long> values) {
    require(g.rank() == 1, ErrorKind::invalid_input, "residue lists need a cyclic group");
    Subset s(g);
    for (long long v : values) s.mask_[g.index_of({v})] = 1;
    return s;
  }

  static Subset residues(const Group& g, std::initializer_list<long long> values) {
    return residues(g, std::span<const long long>(values.begin(), values.size()));
  }

  // {lo, lo+1, ..., hi} in a cyclic group.
  static Subset interval(const Group& g, long long lo, long long hi) {
    require(g.rank() == 1, ErrorKind::invalid_input, "interval shorthand needs a cyclic group");
    Subset s(g);
    for (long long v = lo; v <= hi; ++v) s.mask_[g.index_of({v})] = 1;
    return s;
  }

  const Group& group() const { return group_; }
  bool contains(int x) const { return mask_[x] != 0; }
  void insert(int x) { mask_[x] = 1; }
  void erase(int x) { mask_[x] = 0; }

  int count() const { return static_cast<int>(std::count(mask_.begin(), mask_.end(), 1)); }
  bool is_empty() const { return count() == 0; }
  double measure() const { return count() * group_.weight(); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(mask_.size()); ++x) {
      if (mask_[x]) out.push_back(x);
    }
    return out;
  }

  Subset negated() const {
    Subset s(group_);
    for (int x = 0; x < group_.size(); ++x) {
      if (mask_[x]) s.mask_[group_.neg(x)] = 1;
    }
    return s;
  }

  Subset complement() const {
    Subset s(group_);
    for (std::size_t x = 0; x < mask_.size(); ++x) s.mask_[x] = mask_[x] ? 0 : 1;
    return s;
  }

  Subset intersect(const Subset& o) const {
    check_same(o);
    Subset s(group_);
    for (std::size_t x = 0; x < mask_.size(); ++x) s.mask_[x] = mask_[x] & o.mask_[x];
    return s;
  }

  Subset unite(const Subset& o) const {
    check_same(o);
    Subset s(group_);
    for (std::size_t x = 0; x < mask_.size(); ++x) s.mask_[x] = mask_[x] | o.mask_[x];
    return s;
  }

  bool is_subset_of(const Subset& o) const {
    check_same(o);
    for (std::size_t x = 0; x < mask_.size(); ++x) {
      if (mask_[x] && !o.mask_[x]) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    for (int x = 0; x < group_.size(); ++x) {
      if (mask_[x] != mask_[group_.neg(x)]) return false;
    }
    return true;
  }

  // Image under an element map (used for automorphisms and projections).
  Subset mapped(const Group& target, std::span<const int> map) const {
    Subset s(target);
    for (int x = 0; x < group_.size(); ++x) {
      if (mask_[x] && map[x] >= 0) s.mask_[map[x]] = 1;
    }
    return s;
  }

  const std::vector<char>& mask() const { return mask_; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.group_.same_elements(b.group_) && a.mask_ == b.mask_;
  }

 private:
  void check_same(const Subset& o) const {
    require(group_.same_elements(o.group_), ErrorKind::invalid_input,
            "subsets belong to different groups");
  }

  Group group_;
  std::vector<char> mask_;
};

// A 0-symmetric subset. Built either by checking or by intersecting with the
// negation; `symmetrized()` records whether elements had to be dropped.
class SymSet {
 public:
  SymSet() = default;

  static SymSet checked(const Subset& s) {
    require(s.is_symmetric(), ErrorKind::invalid_input, "set is not 0-symmetric");
    return SymSet(s, false);
  }

  static SymSet symmetrize(const Subset& s) {
    Subset sym = s.intersect(s.negated());
    const bool changed = !(sym == s);
    return SymSet(std::move(sym), changed);
  }

  static SymSet full(const Group& g) { return SymSet(Subset::full(g), false); }
  static SymSet empty(const Group& g) { return SymSet(Subset::empty(g), false); }

  const Subset& set() const { return set_; }
  const Group& group() const { return set_.group(); }
  bool contains(int x) const { return set_.contains(x); }
  bool symmetrized() const { return symmetrized_; }

 private:
  SymSet(Subset s, bool changed) : set_(std::move(s)), symmetrized_(changed) {}

  Subset set_;
  bool symmetrized_ = false;
};

// {a - b : a in A, b in B}. For A == B the result is 0-symmetric and contains
// 0 whenever A is nonempty.
inline Subset difference_set(const Subset& a, const Subset& b) {
  require(a.group().same_elements(b.group()), ErrorKind::invalid_input,
          "difference_set: subsets belong to different groups");
  const Group& g = a.group();
  Subset out(g);
  const auto as = a.elements();
  const auto bs = b.elements();
  for (int x : as) {
    for (int y : bs) out.insert(g.sub(x, y));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functions and spectra

class GroupFunction {
 public:
  GroupFunction() = default;
  explicit GroupFunction(Group group) : group_(std::move(group)), values_(group_.size(), 0.0) {}

  GroupFunction(Group group, std::vector<double> values)
      : group_(std::move(group)), values_(std::move(values)) {
    require(static_cast<int>(values_.size()) == group_.size(), ErrorKind::invalid_input,
            "function length does not match group size");
  }

  static GroupFunction constant(const Group& g, double c) {
    return GroupFunction(g, std::vector<double>(g.size(), c));
  }

  static GroupFunction delta(const Group& g, int at = 0, double value = 1.0) {
    GroupFunction f(g);
    f.values_[at] = value;
    return f;
  }

  static GroupFunction indicator(const Subset& s) {
    GroupFunction f(s.group());
    for (int x : s.elements()) f.values_[x] = 1.0;
    return f;
  }

  const Group& group() const { return group_; }
  double operator[](int x) const { return values_[x]; }
  double& operator[](int x) { return values_[x]; }
  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

  // Haar integral: weight * sum f(x).
  double integral() const {
    return group_.weight() * std::accumulate(values_.begin(), values_.end(), 0.0);
  }

  bool is_symmetric(double tol = 0.0) const {
    for (int x = 0; x < size(); ++x) {
      if (std::abs(values_[x] - values_[group_.neg(x)]) > tol) return false;
    }
    return true;
  }

 private:
  Group group_;
  std::vector<double> values_;
};

struct Spectrum {
  Group group;
  std::vector<std::complex<double>> values;  // indexed by character
};

namespace detail {

// Direct O(N^2) character sum:
//   out[k] = scale * sum_x in[x] * exp(sign * 2 pi i <k, x>).
// Per-factor root tables keep the phase exact modulo n_j.
inline std::vector<std::complex<double>> character_sum(const Group& g,
                                                       std::span<const std::complex<double>> in,
                                                       int sign, double scale) {
  const int n = g.size();
  const int r = g.rank();
  std::vector<std::vector<std::complex<double>>> roots(r);
  for (int j = 0; j < r; ++j) {
    const int nj = g.orders()[j];
    roots[j].resize(nj);
    for (int m = 0; m < nj; ++m) {
      const double angle = 2.0 * std::numbers::pi * m / nj;
      roots[j][m] = {std::cos(angle), sign * std::sin(angle)};
    }
  }
  std::vector<int> coords(static_cast<std::size_t>(n) * r);
  for (int x = 0; x < n; ++x) {
    for (int j = 0; j < r; ++j) coords[static_cast<std::size_t>(x) * r + j] = g.coord(x, j);
  }
  std::vector<std::complex<double>> out(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    const int* kc = &coords[static_cast<std::size_t>(k) * r];
    for (int x = 0; x < n; ++x) {
      if (in[x] == 0.0) continue;
      const int* xc = &coords[static_cast<std::size_t>(x) * r];
      std::complex<double> phase = 1.0;
      for (int j = 0; j < r; ++j) {
        const int nj = g.orders()[j];
        phase *= roots[j][(static_cast<long long>(kc[j]) * xc[j]) % nj];
      }
      acc += in[x] * phase;
    }
    out[k] = scale * acc;
  }
  return out;
}

}  // namespace detail

// f^(chi) = weight * sum_x f(x) conj(chi(x)).
inline Spectrum dft(const Group& g, std::span<const std::complex<double>> values) {
  require(static_cast<int>(values.size()) == g.size(), ErrorKind::invalid_input,
          "dft: length does not match group size");
  return {g, detail::character_sum(g, values, -1, g.weight())};
}

inline Spectrum dft(const GroupFunction& f) {
  std::vector<std::complex<double>> in(f.values().begin(), f.values().end());
  return dft(f.group(), in);
}

// Inverse of dft: f(x) = 1/(N weight) * sum_chi F(chi) chi(x).
inline std::vector<std::complex<double>> inverse_dft(const Spectrum& s) {
  const Group& g = s.group;
  require(static_cast<int>(s.values.size()) == g.size(), ErrorKind::invalid_input,
          "inverse_dft: length does not match group size");
  return detail::character_sum(g, s.values, +1, 1.0 / (g.size() * g.weight()));
}

// Real part of a spectrum, after checking the imaginary residue is below
// `tol` relative to the spectrum's scale.
inline std::vector<double> real_spectrum(const Spectrum& s, double tol = 1e-9) {
  double scale = 1.0;
  for (const auto& v : s.values) scale = std::max(scale, std::abs(v));
  std::vector<double> out(s.values.size());
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (std::abs(s.values[k].imag()) > tol * scale) {
      fail(ErrorKind::internal_error, "spectrum has imaginary residue " +
                                          std::to_string(s.values[k].imag()) +
                                          " at character " + std::to_string(k));
    }
    out[k] = s.values[k].real();
  }
  return out;
}

inline std::vector<double> real_spectrum(const GroupFunction& f, double tol = 1e-9) {
  return real_spectrum(dft(f), tol);
}

}  // namespace delsarte
