#pragma once

// Cyclic decompositions of subgroups and quotients of a finite abelian group.
//
// A subgroup K of G = Z_{n1} x ... x Z_{nk} is a lattice L_K in Z^k
// containing L_G = n1 Z x ... x nk Z. Both K = L_K / L_G and G/K = Z^k / L_K
// are presented as Z^k modulo the row space of an integer relation matrix,
// whose Smith form gives the invariant factors and an explicit coordinate
// change.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "delsarte/error.hpp"
#include "delsarte/group.hpp"

namespace delsarte {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Diagonalizes `rel` (r x k, rank k) by unimodular row and column operations.
// Returns the k diagonal entries (absolute values) and the accumulated column
// transform Q, so that x -> x Q maps Z^k / rowspace(rel) onto (+) Z/d_i.
inline std::pair<std::vector<std::int64_t>, IntMatrix> smith_diagonal(IntMatrix rel, int k) {
  const int r = static_cast<int>(rel.size());
  IntMatrix q(k, std::vector<std::int64_t>(k, 0));
  for (int i = 0; i < k; ++i) q[i][i] = 1;

  auto col_swap = [&](int a, int b) {
    for (auto& row : rel) std::swap(row[a], row[b]);
    for (auto& row : q) std::swap(row[a], row[b]);
  };
  // column b -= f * column a
  auto col_axpy = [&](int a, int b, std::int64_t f) {
    for (auto& row : rel) row[b] -= f * row[a];
    for (auto& row : q) row[b] -= f * row[a];
  };

  std::vector<std::int64_t> diag(k, 0);
  for (int t = 0; t < k; ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block
      int pr = -1, pc = -1;
      std::int64_t best = 0;
      for (int i = t; i < r; ++i) {
        for (int j = t; j < k; ++j) {
          const std::int64_t v = std::llabs(rel[i][j]);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      }
      require(pr >= 0, ErrorKind::internal_error, "relation matrix is rank deficient");
      std::swap(rel[t], rel[pr]);
      if (pc != t) col_swap(t, pc);

      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        const std::int64_t f = rel[i][t] / rel[t][t];
        if (f != 0) {
          for (int j = t; j < k; ++j) rel[i][j] -= f * rel[t][j];
        }
        if (rel[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < k; ++j) {
        const std::int64_t f = rel[t][j] / rel[t][t];
        if (f != 0) col_axpy(t, j, f);
        if (rel[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag[t] = std::llabs(rel[t][t]);
  }
  return {diag, q};
}

// Row-style Hermite basis of the lattice spanned by `rows` (full rank k):
// an upper-triangular k x k matrix with positive diagonal.
inline IntMatrix hermite_basis(IntMatrix rows, int k) {
  const int r = static_cast<int>(rows.size());
  int top = 0;
  for (int t = 0; t < k; ++t) {
    while (true) {
      int pr = -1;
      for (int i = top; i < r; ++i) {
        if (rows[i][t] != 0 && (pr < 0 || std::llabs(rows[i][t]) < std::llabs(rows[pr][t]))) {
          pr = i;
        }
      }
      require(pr >= 0, ErrorKind::internal_error, "lattice is not full rank");
      std::swap(rows[top], rows[pr]);
      bool clean = true;
      for (int i = top + 1; i < r; ++i) {
        const std::int64_t f = rows[i][t] / rows[top][t];
        if (f != 0) {
          for (int j = t; j < k; ++j) rows[i][j] -= f * rows[top][j];
        }
        if (rows[i][t] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][t] < 0) {
      for (auto& v : rows[top]) v = -v;
    }
    ++top;
  }
  rows.resize(k);
  return rows;
}

// Solves c * basis = v for integer c, basis upper triangular.
inline std::vector<std::int64_t> solve_upper(const IntMatrix& basis, std::vector<std::int64_t> v) {
  const int k = static_cast<int>(basis.size());
  std::vector<std::int64_t> c(k, 0);
  for (int t = 0; t < k; ++t) {
    require(v[t] % basis[t][t] == 0, ErrorKind::internal_error, "vector not in lattice");
    c[t] = v[t] / basis[t][t];
    for (int j = t; j < k; ++j) v[j] -= c[t] * basis[t][j];
  }
  return c;
}

struct CyclicCoordinates {
  std::vector<int> orders;           // invariant factors > 1
  std::vector<int> kept;             // which diagonal positions they came from
  IntMatrix transform;               // Q
};

inline CyclicCoordinates cyclic_coordinates(const std::vector<std::int64_t>& diag, IntMatrix q) {
  CyclicCoordinates cc;
  cc.transform = std::move(q);
  for (int i = 0; i < static_cast<int>(diag.size()); ++i) {
    if (diag[i] > 1) {
      cc.orders.push_back(static_cast<int>(diag[i]));
      cc.kept.push_back(i);
    }
  }
  if (cc.orders.empty()) cc.orders.push_back(1);
  return cc;
}

inline int apply_coordinates(const CyclicCoordinates& cc, const Group& target,
                             const std::vector<std::int64_t>& x) {
  if (cc.kept.empty()) return 0;
  std::vector<long long> y(cc.kept.size(), 0);
  for (std::size_t i = 0; i < cc.kept.size(); ++i) {
    const int col = cc.kept[i];
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      acc = floor_mod(acc + floor_mod(x[j] * cc.transform[j][col], cc.orders[i]), cc.orders[i]);
    }
    y[i] = acc;
  }
  return target.index_of(std::span<const long long>(y));
}

inline std::vector<std::int64_t> lift(const Group& g, int x) {
  const auto c = g.coords_of(x);
  return {c.begin(), c.end()};
}

}  // namespace detail

// A finite abelian group in cyclic form together with an element map from G.
// map[x] is the image of G-element x, or -1 where undefined.
struct Presentation {
  Group group;
  std::vector<int> map;
};

inline bool is_subgroup(const Subset& k) {
  const Group& g = k.group();
  if (!k.contains(0)) return false;
  const auto elems = k.elements();
  for (int x : elems) {
    for (int y : elems) {
      if (!k.contains(g.sub(x, y))) return false;
    }
  }
  return true;
}

// G/K with the natural projection.
inline Presentation quotient_presentation(const Subset& k, Measure measure) {
  require(is_subgroup(k), ErrorKind::invalid_input, "K is not a subgroup");
  const Group& g = k.group();
  const int rank = g.rank();
  IntMatrix rel;
  for (int j = 0; j < rank; ++j) {
    std::vector<std::int64_t> row(rank, 0);
    row[j] = g.orders()[j];
    rel.push_back(row);
  }
  for (int x : k.elements()) {
    if (x != 0) rel.push_back(detail::lift(g, x));
  }
  auto [diag, q] = detail::smith_diagonal(rel, rank);
  const auto cc = detail::cyclic_coordinates(diag, std::move(q));
  Presentation p{Group(cc.orders, measure), std::vector<int>(g.size(), -1)};
  for (int x = 0; x < g.size(); ++x) {
    p.map[x] = detail::apply_coordinates(cc, p.group, detail::lift(g, x));
  }
  return p;
}

// K in its own cyclic coordinates; map is -1 outside K.
inline Presentation subgroup_presentation(const Subset& k, Measure measure) {
  require(is_subgroup(k), ErrorKind::invalid_input, "K is not a subgroup");
  const Group& g = k.group();
  const int rank = g.rank();
  IntMatrix gens;
  for (int j = 0; j < rank; ++j) {
    std::vector<std::int64_t> row(rank, 0);
    row[j] = g.orders()[j];
    gens.push_back(row);
  }
  for (int x : k.elements()) {
    if (x != 0) gens.push_back(detail::lift(g, x));
  }
  const IntMatrix basis = detail::hermite_basis(gens, rank);
  IntMatrix rel;
  for (int j = 0; j < rank; ++j) {
    std::vector<std::int64_t> row(rank, 0);
    row[j] = g.orders()[j];
    rel.push_back(detail::solve_upper(basis, row));
  }
  auto [diag, q] = detail::smith_diagonal(rel, rank);
  const auto cc = detail::cyclic_coordinates(diag, std::move(q));
  Presentation p{Group(cc.orders, measure), std::vector<int>(g.size(), -1)};
  for (int x : k.elements()) {
    p.map[x] = detail::apply_coordinates(cc, p.group, detail::solve_upper(basis, detail::lift(g, x)));
  }
  return p;
}

// Subgroup generated by the given elements.
inline Subset generated_subgroup(const Group& g, std::span<const int> generators) {
  Subset k = Subset::of(g, {0});
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int s : generators) {
        const int y = g.add(x, s);
        if (!k.contains(y)) {
          k.insert(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return k;
}

}  // namespace delsarte
