#include <doctest.h>

#include <cmath>
#include <random>

#include "sprsim/grouping.hpp"

using namespace sprsim;

namespace {

CellGrouping counts(int center, int edge) {
  CellGrouping g;
  g.center_count = center;
  g.edge_count = edge;
  g.is_center.assign(center, true);
  g.is_center.insert(g.is_center.end(), edge, false);
  return g;
}

}  // namespace

TEST_SUITE("grouping") {

TEST_CASE("threshold and split on a two-user cell") {
  VecD beta(2);
  beta << 1.0, 0.1;  // squared gains 1 and 0.01
  CellGrouping g = classify_users(beta, 1.0);
  CHECK(g.threshold == doctest::Approx(0.505).epsilon(1e-12));
  CHECK(g.is_center[0]);
  CHECK_FALSE(g.is_center[1]);
  CHECK(g.center_count == 1);
  CHECK(g.edge_count == 1);
}

TEST_CASE("zero lambda sends everyone to the center group") {
  VecD beta(4);
  beta << 1e-6, 2.0, 0.3, 5.0;
  CellGrouping g = classify_users(beta, 0.0);
  CHECK(g.center_count == 4);
  CHECK(g.edge_count == 0);
}

TEST_CASE("exact threshold ties classify as edge") {
  VecD beta(3);
  beta << 2.0, 2.0, 2.0;  // squared gain 4 each; lambda=1 -> threshold 4
  CellGrouping g = classify_users(beta, 1.0);
  CHECK(g.threshold == doctest::Approx(4.0));
  CHECK(g.center_count == 0);
  CHECK(g.edge_count == 3);
}

TEST_CASE("edge membership grows monotonically with lambda") {
  std::mt19937_64 rng(77);
  std::lognormal_distribution<double> ln(0.0, 1.5);
  for (int rep = 0; rep < 20; ++rep) {
    VecD beta(9);
    for (int i = 0; i < 9; ++i) beta(i) = ln(rng);
    int prev = -1;
    for (double lam : {0.0, 0.05, 0.1, 0.3, 0.5, 0.8, 1.0, 2.0}) {
      CellGrouping g = classify_users(beta, lam);
      CHECK(g.edge_count >= prev);
      prev = g.edge_count;
      // monotone in the user gains too: every center user outranks every edge user
      double min_center = 1e300, max_edge = -1.0;
      for (int i = 0; i < 9; ++i) {
        double b2 = beta(i) * beta(i);
        if (g.is_center[i])
          min_center = std::min(min_center, b2);
        else
          max_edge = std::max(max_edge, b2);
      }
      if (g.center_count > 0 && g.edge_count > 0) CHECK(min_center > max_edge);
    }
  }
}

TEST_CASE("classification is invariant to uniform gain scaling") {
  VecD beta(5);
  beta << 0.3, 1.2, 0.01, 4.0, 0.4;
  for (double lam : {0.05, 0.3, 1.0}) {
    CellGrouping a = classify_users(beta, lam);
    CellGrouping b = classify_users((beta * 17.0).eval(), lam);
    CHECK(a.is_center == b.is_center);
  }
}

TEST_CASE("budget arithmetic on the worked three-cell example") {
  // K = (4,5,6), one edge user each
  std::vector<CellGrouping> cells = {counts(3, 1), counts(4, 1), counts(5, 1)};
  PilotBudgets b = pilot_budgets(cells);
  CHECK(b.k_cs == 6);
  CHECK(b.k_c == 5);
  CHECK(b.k_e == 3);
  CHECK(b.k_spr == 8);
  CHECK(b.k_os == 15);
}

TEST_CASE("soft-reuse budget never exceeds full reuse by more than the edge rows") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> users(1, 12);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<CellGrouping> cells;
    int n = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) {
      int k = users(rng);
      int e = static_cast<int>(rng() % (k + 1));
      cells.push_back(counts(k - e, e));
    }
    PilotBudgets b = pilot_budgets(cells);
    CHECK(b.k_spr - b.k_cs <= b.k_e);
    CHECK(b.k_spr >= b.k_c);
    CHECK(b.k_os >= b.k_cs);
  }
}

}  // TEST_SUITE
