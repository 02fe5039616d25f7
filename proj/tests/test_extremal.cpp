#include <gtest/gtest.h>

#include <functional>

#include "delsarte/extremal.hpp"
#include "delsarte/rng.hpp"

using namespace delsarte;

namespace {

SymSet sym(const Group& g, std::initializer_list<long long> residues) {
  return SymSet::checked(Subset::residues(g, residues));
}

SymSet random_symset(SplitMix64& rng, const Group& g, double p, bool with_zero) {
  Subset s(g);
  for (const auto& o : g.orbits()) {
    if (rng.bernoulli(p)) {
      s.insert(o.rep);
      s.insert(o.partner);
    }
  }
  if (with_zero) s.insert(0);
  return SymSet::checked(s);
}

// Largest m_G(A) over A containing 0 with A - A inside omega (exhaustive).
double best_difference_witness(const Group& g, const Subset& omega) {
  int best = 0;
  std::vector<int> chosen{0};
  std::function<void(int)> rec = [&](int next) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int x = next; x < g.size(); ++x) {
      bool ok = true;
      for (int y : chosen) {
        if (!omega.contains(g.sub(x, y)) || !omega.contains(g.sub(y, x))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(x);
      rec(x + 1);
      chosen.pop_back();
    }
  };
  if (omega.contains(0)) rec(1);
  return best * g.weight();
}

void expect_optimizer_invariants(const ExtremalResult& r, const SymSet& plus, const SymSet& minus) {
  const GroupFunction& f = r.optimizer;
  const Group& g = f.group();
  EXPECT_NEAR(f[0], 1.0, 1e-12);
  EXPECT_TRUE(f.is_symmetric(0.0));
  for (double v : r.spectrum) EXPECT_GE(v, -1e-9);
  for (int x = 0; x < g.size(); ++x) {
    if (!plus.contains(x)) {
      EXPECT_LE(f[x], 1e-9);
    }
    if (!minus.contains(x)) {
      EXPECT_GE(f[x], -1e-9);
    }
  }
  EXPECT_NEAR(r.value, f.integral(), 1e-10);
  EXPECT_NEAR(r.value, r.dual_bound, 1e-8 * (1 + std::abs(r.value)));
}

}  // namespace

TEST(TwoSet, FullSetsGiveOne) {
  for (int n : {1, 2, 5, 9}) {
    const Group g = Group::cyclic(n);
    const auto r = two_set_constant(g, SymSet::full(g), SymSet::full(g));
    EXPECT_NEAR(r.value, 1.0, 1e-10);
  }
}

TEST(TwoSet, SingletonPlusGivesOneOverN) {
  for (int n : {2, 3, 7, 10}) {
    const Group g = Group::cyclic(n);
    const SymSet zero = sym(g, {0});
    EXPECT_NEAR(two_set_constant(g, zero, SymSet::full(g)).value, 1.0 / n, 1e-10);
    EXPECT_NEAR(turan(g, zero).value, 1.0 / n, 1e-10);
    EXPECT_NEAR(delsarte_constant(g, zero).value, 1.0 / n, 1e-10);
  }
}

TEST(TwoSet, TileCaseZ6) {
  const Group g = Group::cyclic(6);
  const SymSet plus = sym(g, {5, 0, 1});
  const auto r = two_set_constant(g, plus, SymSet::empty(g));
  EXPECT_NEAR(r.value, 1.0 / 3, 1e-10);
  expect_optimizer_invariants(r, plus, SymSet::empty(g));
  EXPECT_NEAR(delsarte_constant(g, plus).value, 1.0 / 3, 1e-10);
}

TEST(Turan, IntervalInZ12) {
  const Group g = Group::cyclic(12);
  const SymSet omega = SymSet::checked(Subset::interval(g, -3, 3));
  EXPECT_NEAR(turan(g, omega).value, 1.0 / 3, 1e-10);
  EXPECT_NEAR(turan(g, SymSet::full(g)).value, 1.0, 1e-10);
}

TEST(Delsarte, NonTileOrdering) {
  const Group g = Group::cyclic(5);
  const SymSet omega = sym(g, {-1, 0, 1});
  EXPECT_GE(delsarte_constant(g, omega).value, turan(g, omega).value - 1e-9);
}

TEST(TwoSet, InfeasibleZero) {
  const Group g = Group::cyclic(6);
  const auto r = two_set_constant(g, sym(g, {1, 5}), SymSet::full(g));
  EXPECT_EQ(r.status, ExtremalStatus::infeasible_zero);
  EXPECT_EQ(r.value, 0.0);
}

TEST(TileTheorem, Examples) {
  const Group z6 = Group::cyclic(6);
  const auto a = verify_tile_theorem(z6, Subset::of(z6, {0, 1}), Subset::of(z6, {0, 2, 4}),
                                     SymSet::empty(z6));
  EXPECT_TRUE(a.pass);
  EXPECT_NEAR(a.lhs, 1.0 / 3, 1e-10);
  EXPECT_NEAR(a.rhs, 1.0 / 3, 1e-15);
  const Group z8 = Group::cyclic(8);
  const auto b = verify_tile_theorem(z8, Subset::of(z8, {0, 1, 2, 3}), Subset::of(z8, {0, 4}),
                                     SymSet::full(z8));
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(b.lhs, 0.5, 1e-10);
}

TEST(TileTheorem, NotATile) {
  const Group z6 = Group::cyclic(6);
  for (int k = 1; k < 6; ++k) {
    try {
      verify_tile_theorem(z6, Subset::of(z6, {0, 1, 3}), Subset::of(z6, {0, k}),
                          SymSet::empty(z6));
      ADD_FAILURE() << "expected not-a-strict-tiling for k=" << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::not_a_strict_tiling);
    }
  }
}

TEST(MainTheorem, Examples) {
  const Group z6 = Group::cyclic(6);
  const auto a = verify_main_theorem(z6, sym(z6, {5, 0, 1}), Subset::of(z6, {0, 2, 4}));
  EXPECT_TRUE(a.pass);
  EXPECT_TRUE(a.tight);
  const Group z7 = Group::cyclic(7);
  const auto b = verify_main_theorem(z7, sym(z7, {-1, 0, 1}), Subset::of(z7, {0, 3}));
  EXPECT_TRUE(b.pass);
  EXPECT_LE(b.delsarte, 0.5 + 1e-8);
  try {
    verify_main_theorem(z6, sym(z6, {0, 2, 4}), Subset::of(z6, {0, 2, 4}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::condition_violated);
  }
  EXPECT_THROW(verify_main_theorem(Group::cyclic(6, Measure::counting()),
                                   sym(Group::cyclic(6, Measure::counting()), {0}),
                                   Subset::of(Group::cyclic(6, Measure::counting()), {0})),
               Error);
}

TEST(Homomorphism, Examples) {
  const Group z6 = Group::cyclic(6);
  const auto a = verify_homomorphism_bound(z6, Subset::of(z6, {0, 3}), sym(z6, {5, 0, 1}),
                                           SymSet::empty(z6));
  EXPECT_TRUE(a.pass);
  const Group z4 = Group::cyclic(4);
  const SymSet p4 = sym(z4, {-1, 0, 1});
  const auto b = verify_homomorphism_bound(z4, Subset::full(z4), p4, SymSet::empty(z4));
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(b.quotient, 1.0, 1e-12);
  EXPECT_NEAR(b.lhs, b.rhs, 1e-9);
  const Group v4({2, 2}, Measure::probability());
  const SymSet plus = SymSet::symmetrize(
      Subset::of(v4, {v4.index_of({0, 0}), v4.index_of({1, 0}), v4.index_of({0, 1})}));
  const auto c = verify_homomorphism_bound(v4, Subset::of(v4, {0, v4.index_of({1, 0})}), plus,
                                           SymSet::empty(v4));
  EXPECT_TRUE(c.pass);
  EXPECT_THROW(verify_homomorphism_bound(z6, Subset::of(z6, {0, 1}), sym(z6, {0}),
                                         SymSet::empty(z6)),
               Error);
}

TEST(Product, Examples) {
  const Group z2 = Group::cyclic(2), z3 = Group::cyclic(3);
  const auto a = verify_product_bound(z2, SymSet::full(z2), SymSet::full(z2), z3,
                                      SymSet::full(z3), SymSet::full(z3));
  EXPECT_TRUE(a.pass);
  EXPECT_NEAR(a.lhs, 1.0, 1e-10);
  const Group z4 = Group::cyclic(4);
  const auto b = verify_product_bound(z4, sym(z4, {-1, 0, 1}), SymSet::full(z4), z4,
                                      sym(z4, {-1, 0, 1}), SymSet::full(z4));
  EXPECT_TRUE(b.pass);
  const Group z6 = Group::cyclic(6);
  const auto c = verify_product_bound(z6, sym(z6, {-1, 0, 1}), SymSet::empty(z6), z6,
                                      sym(z6, {-2, -1, 0, 1, 2}), SymSet::empty(z6));
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(c.lhs, (2.0 / 6) * (3.0 / 6), 1e-9);
  EXPECT_NEAR(c.rhs, (2.0 / 6) * (3.0 / 6), 1e-9);
}

TEST(Automorphism, Examples) {
  const Group z5 = Group::cyclic(5);
  const auto a = verify_automorphism_invariance(z5, multiplication_map(z5, 2), sym(z5, {-1, 0, 1}),
                                                SymSet::full(z5));
  EXPECT_TRUE(a.pass);
  const auto id = verify_automorphism_invariance(z5, multiplication_map(z5, 1),
                                                 sym(z5, {-1, 0, 1}), SymSet::empty(z5));
  EXPECT_TRUE(id.pass);
  EXPECT_EQ(id.original, id.mapped);
  const Group z8 = Group::cyclic(8);
  const auto c = verify_automorphism_invariance(z8, multiplication_map(z8, 3), sym(z8, {-1, 0, 1}),
                                                sym(z8, {-3, 0, 3}));
  EXPECT_TRUE(c.pass);
  EXPECT_THROW(verify_automorphism_invariance(z8, multiplication_map(z8, 2), sym(z8, {0}),
                                              sym(z8, {0})),
               Error);
}

TEST(ExtremalProperty, OptimizerInvariants) {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const Group g = Group::cyclic(static_cast<int>(rng.uniform_int(1, 30)));
    const SymSet plus = random_symset(rng, g, 0.4, true);
    const SymSet minus = random_symset(rng, g, 0.5, false);
    expect_optimizer_invariants(two_set_constant(g, plus, minus), plus, minus);
  }
}

TEST(ExtremalProperty, MonotoneAndOrdered) {
  SplitMix64 rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const Group g = Group::cyclic(static_cast<int>(rng.uniform_int(1, 24)));
    const SymSet plus = random_symset(rng, g, 0.3, true);
    const SymSet minus = random_symset(rng, g, 0.3, false);
    const SymSet plus2 = SymSet::checked(plus.set().unite(random_symset(rng, g, 0.3, true).set()));
    const SymSet minus2 =
        SymSet::checked(minus.set().unite(random_symset(rng, g, 0.3, false).set()));
    EXPECT_LE(two_set_constant(g, plus, minus).value,
              two_set_constant(g, plus2, minus2).value + 1e-9);
    EXPECT_LE(turan(g, plus).value, delsarte_constant(g, plus).value + 1e-9);
    EXPECT_LE(delsarte_constant(g, plus).value, plus.set().measure() + 1e-9);
  }
}

TEST(ExtremalProperty, AutocorrelationLowerBound) {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const Group g = Group::cyclic(static_cast<int>(rng.uniform_int(1, 20)));
    const SymSet plus = random_symset(rng, g, 0.5, true);
    const double lower = best_difference_witness(g, plus.set());
    EXPECT_GE(two_set_constant(g, plus, SymSet::empty(g)).value, lower - 1e-9);
  }
}

TEST(ExtremalProperty, MeasureCovariance) {
  SplitMix64 rng(54);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 20));
    const Group g = Group::cyclic(n, Measure::counting());
    const double c = rng.uniform(0.1, 5.0);
    const Group gc = Group::cyclic(n, Measure::with_weight(c));
    const Subset p = random_symset(rng, g, 0.4, true).set();
    const double v1 = delsarte_constant(g, SymSet::checked(p)).value;
    const double v2 = delsarte_constant(gc, SymSet::checked(Subset::of(gc, p.elements()))).value;
    EXPECT_NEAR(v2, c * v1, 1e-9 * std::max(1.0, c * v1));
  }
}

TEST(ExtremalProperty, ProductGroups) {
  const Group g({3, 4}, Measure::probability());
  const SymSet plus = SymSet::symmetrize(
      Subset::of(g, {0, g.index_of({1, 0}), g.index_of({2, 0}), g.index_of({0, 1})}));
  const auto r = delsarte_constant(g, plus);
  expect_optimizer_invariants(r, plus, SymSet::full(g));
}
